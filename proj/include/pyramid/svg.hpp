#pragma once

#include <string>
#include <vector>

#include "pyramid/board.hpp"
#include "pyramid/phi.hpp"

namespace pyramid {

// SVG 1.1 picture of a (possibly deficient) cover: one rounded rectangle
// per dimer, one dot per vertex colored by the checkerboard coloring, and
// a shaded square per missing block.
std::string svg_of_cover(const Board& b, Coloring col, const std::vector<Vertex>& missing);

// Both halves of a length-infinity depiction, seam marked.
std::string svg_of_halfplanes(const HalfPlaneConfig& upper, const HalfPlaneConfig& lower);

} // namespace pyramid
