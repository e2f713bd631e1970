#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pyramid/lattice.hpp"
#include "pyramid/monomial.hpp"

namespace pyramid {

inline void internal_check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("internal invariant violated: ") + what);
}

enum class BlockState { VerticalPair, HorizontalPair, Other };

// Partial dimer cover of a window, stored as a mate table.  Only dimers
// with both endpoints inside the window are represented; vertices on the
// window edge may legitimately be uncovered (their dimer sticks out).
class Board {
public:
    Board() = default;
    explicit Board(Window w) : win_(w), mate_(w.size(), -1) {}

    const Window& window() const { return win_; }

    int index(Vertex v) const { return (v.x - win_.xmin) + win_.width() * (v.y - win_.ymin); }
    Vertex vertex(int idx) const {
        return {win_.xmin + idx % win_.width(), win_.ymin + idx / win_.width()};
    }

    bool covered(Vertex v) const { return win_.contains(v) && mate_[index(v)] >= 0; }
    Vertex mate(Vertex v) const { return vertex(mate_[index(v)]); }
    bool has(const Dimer& d) const {
        return covered(d.u) && mate_[index(d.u)] == index(d.v);
    }

    void add(const Dimer& d) {
        internal_check(win_.contains(d), "dimer outside board window");
        int iu = index(d.u), iv = index(d.v);
        internal_check(mate_[iu] < 0 && mate_[iv] < 0, "dimer overlaps existing cover");
        mate_[iu] = iv;
        mate_[iv] = iu;
    }
    void remove(const Dimer& d) {
        internal_check(has(d), "removing absent dimer");
        mate_[index(d.u)] = -1;
        mate_[index(d.v)] = -1;
    }

    // All dimers, each reported once, sorted.
    std::vector<Dimer> dimers() const;
    std::vector<Vertex> uncovered_in(Window region) const;

    BlockState block_state(Vertex corner) const;
    // Corners of blocks of the stated parity currently filled with an
    // aligned dimer pair.
    std::vector<Vertex> aligned_blocks(Parity p, Coloring col) const;

private:
    Window win_;
    std::vector<int32_t> mate_;
};

// ---- Brick model (length 1) -------------------------------------------

// Brick of the length-1 pyramid; dark bricks sit at even depth.  The apex
// dark brick is (0,0,0); a brick at (i,j) covers the vertex patch
// {i-1,i} x {j-1,j} and stencils two vertical (dark) or horizontal (light)
// dimers on its top face.
struct Brick {
    int i = 0, j = 0, d = 0;
    bool dark() const { return d % 2 == 0; }
    friend bool operator==(const Brick&, const Brick&) = default;
    friend bool operator<(const Brick& a, const Brick& b) {
        if (a.d != b.d) return a.d < b.d;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

bool brick_in_pyramid(const Brick& b);
// Bricks resting upon b (the bricks one layer up that b supports).
std::vector<Brick> bricks_resting_on(const Brick& b);
// Parent bricks that must be removed before b (those resting on it are the
// other direction: these are the bricks b rests upon, one layer shallower).
std::vector<Brick> brick_parents(const Brick& b);

struct RemovedSet {
    std::set<Brick> bricks;
    bool upward_closed() const;
    Monomial weight() const; // q0^{#dark} q1^{#light}
};

// Dimer cover seen from above after removing the given upward-closed set
// from the length-1 pyramid.
Board bricks_to_dimers(const RemovedSet& removed, Window w);

// ---- Empty rooms and configurations -----------------------------------

// The empty-room cover of length n on the given window.  n=1 comes from
// the brick model; larger n by repeated odd-block deletion and sliding,
// which is the defining recursion.
Board empty_room_board(int n, Window w);

// Full dimer cover asymptotic to the length-n empty room, stored as the
// two difference sets against it.
struct DimerConfig {
    int n = 1;
    Window win;
    std::vector<Dimer> added;   // dimers present here but not in eps_n
    std::vector<Dimer> removed; // eps_n dimers absent here

    static DimerConfig from_board(int n, const Board& b, const Board& eps);
    Board to_board(const Board& eps) const;

    // Deterministic identity: the sorted symmetric difference with eps_n.
    std::string canonical_key() const;
    // Smallest window enclosing the difference region (empty optional for
    // the empty room itself).
    std::optional<Window> support() const;
};

// Partial cover missing a finite set of same-parity blocks, stored as the
// vertical filling plus the missing corners (vertical edges weigh 1, so
// every weight function agrees between the two forms).
struct DeficientConfig {
    DimerConfig filled;
    std::vector<Vertex> missing; // sorted block corners
    Parity missing_parity = Parity::Odd;

    Coloring coloring() const { return Coloring::usual(filled.n); }
    Board to_board(const Board& eps) const;
    std::string canonical_key() const;
};

} // namespace pyramid
