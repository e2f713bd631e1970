#pragma once

#include <utility>
#include <vector>

#include "pyramid/board.hpp"
#include "pyramid/series.hpp"

namespace pyramid {

struct Flip {
    Vertex corner;
    Parity parity; // Odd: vertical pair -> horizontal (factor q0);
                   // Even: horizontal pair -> vertical (factor q1)
};

// All weight-increasing elementary moves available on a configuration.
std::vector<Flip> increasing_flips(const Board& b, Coloring col);
void apply_flip(Board& b, const Flip& f);

struct Enumerated {
    int n = 1;
    int max_degree = 0;
    Window win;
    Board eps;
    // Every partition of weight degree <= D exactly once, sorted by
    // canonical key within each degree, degrees ascending.
    std::vector<std::pair<DimerConfig, Monomial>> items;
    Series sum = Series(SeriesVars::Q0Q1, TruncSpec::by_total(0));
};

// Breadth-first enumeration of length-n pyramid partitions up to total
// weight degree D.  Every elementary move raises the degree by exactly 1,
// so BFS level equals degree and the cut is sound.  `extra_pad` widens the
// window (the shuffling pipeline slides shrink it by one ring per step).
Enumerated enumerate_partitions(int n, int D, bool parallel = true, int extra_pad = 0);

// Straightforward reference implementation kept for testing the parallel
// kernel against.
Enumerated enumerate_partitions_serial(int n, int D, int extra_pad = 0);

} // namespace pyramid
