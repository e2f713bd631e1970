#pragma once

#include <vector>

#include "pyramid/board.hpp"

namespace pyramid {

struct DeleteResult {
    Board board;                  // cover with the blocks removed
    std::vector<Vertex> corners;  // deleted block corners, sorted
    int horizontal_pairs = 0;     // how many deleted blocks held horizontal dimers
};

// Removes every block of the stated parity whose two dimers both lie
// inside it.  Same-parity aligned blocks are pairwise disjoint, so a
// single scan is exact.
DeleteResult delete_blocks(const Board& b, Parity p, Coloring col);

struct SlideResult {
    Board board;                 // window shrunk by one ring
    std::vector<Vertex> missing; // block corners uncovered after the slide
};

// The sliding map: every dimer replaced by the other dimer of its odd
// block under `col`.  Input must be odd-deficient w.r.t. col; the result
// is even-deficient under the flipped coloring.  Missing blocks must stay
// at least three rings away from the shrunk window's edge.
SlideResult slide(const Board& odd_deficient, Coloring col);

// All 2^k fillings of the missing blocks (bit i of mask set: fill block i
// of the sorted corner list with a horizontal pair, else vertical).
Board fill_blocks(const Board& deficient, const std::vector<Vertex>& corners, unsigned long mask);

// The full shuffle: delete odd blocks of a length-n configuration, slide,
// and emit every filling as a length-(n+1) configuration relative to
// eps_next (the empty room of length n+1 on the slid window).
std::vector<DimerConfig> shuffle_formal_sum(const DimerConfig& cfg, const Board& eps,
                                            const Board& eps_next);

} // namespace pyramid
