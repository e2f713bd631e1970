#pragma once

#include <vector>

#include "pyramid/board.hpp"
#include "pyramid/solid.hpp"

namespace pyramid {

// Window-truncated dimer depiction of one half of a length-infinity
// configuration.  The upper half lives on vertex rows >= 0 plus the shared
// pendant edges {(x,-1),(x,0)}; the lower half is its mirror image across
// the seam.  Horizontal dimers of the upper half occupy the brickwork
// checkerboard x+y even; verticals are unconstrained.
struct HalfPlaneConfig {
    bool upper = true;
    Window win;                 // includes the pendant row
    std::vector<Dimer> dimers;  // sorted; pendant dimers included
    std::vector<int> pendants;  // columns whose pendant edge is occupied

    friend bool operator==(const HalfPlaneConfig&, const HalfPlaneConfig&) = default;
};

// Renders a super-rigid triple as two half-plane brickwork covers: the
// upper half depicts piInf, the lower half pi0 mirrored across the seam.
// The depiction is the standard view of a box stack along the space
// diagonal, sheared onto the square lattice with the asymptotic leg
// truncated beyond the window; it is injective on triples that fit the
// window (a window too small for the content is a usage error).
std::pair<HalfPlaneConfig, HalfPlaneConfig> phi_render_halfplanes(const SuperRigid& sr,
                                                                  int half_width, int height);

// Sorted symmetric difference between two equally sized half-plane covers.
std::vector<Dimer> halfplane_diff(const HalfPlaneConfig& a, const HalfPlaneConfig& b);

} // namespace pyramid
