#include "pyramid/shuffle.hpp"

#include <algorithm>

namespace pyramid {

DeleteResult delete_blocks(const Board& b, Parity p, Coloring col) {
    DeleteResult res;
    res.board = b;
    res.corners = b.aligned_blocks(p, col);
    for (Vertex c : res.corners) {
        BlockState st = b.block_state(c);
        if (st == BlockState::HorizontalPair) {
            ++res.horizontal_pairs;
            res.board.remove(Dimer({c.x, c.y}, {c.x + 1, c.y}));
            res.board.remove(Dimer({c.x, c.y + 1}, {c.x + 1, c.y + 1}));
        } else {
            res.board.remove(Dimer({c.x, c.y}, {c.x, c.y + 1}));
            res.board.remove(Dimer({c.x + 1, c.y}, {c.x + 1, c.y + 1}));
        }
    }
    return res;
}

namespace {

// The uncovered vertices strictly inside the window must decompose into
// blocks of the stated parity (lex-least uncovered vertex of each block is
// its corner, which makes the decomposition unique when it exists).
bool holes_are_blocks_of(const Board& b, Window region, Parity p, Coloring col) {
    std::vector<Vertex> open = b.uncovered_in(region);
    std::vector<bool> used(open.size(), false);
    auto is_open = [&](Vertex v) { return b.window().contains(v) && !b.covered(v); };
    for (size_t i = 0; i < open.size(); ++i) {
        if (used[i]) continue;
        Vertex c = open[i];
        if (!is_open({c.x + 1, c.y}) || !is_open({c.x, c.y + 1}) || !is_open({c.x + 1, c.y + 1}))
            return false;
        if (block_parity(c, col) != p) return false;
        for (size_t j = i + 1; j < open.size(); ++j) {
            Vertex o = open[j];
            if (o.x >= c.x && o.x <= c.x + 1 && o.y >= c.y && o.y <= c.y + 1) used[j] = true;
        }
    }
    return true;
}

} // namespace

SlideResult slide(const Board& in, Coloring col) {
    // Domain: covers whose holes are odd blocks and whose odd blocks are
    // all deleted.  A remaining odd aligned pair would collide with the
    // images of the dimers that slide into its square.
    if (!holes_are_blocks_of(in, in.window().shrunk(3), Parity::Odd, col) ||
        !in.aligned_blocks(Parity::Odd, col).empty())
        throw std::invalid_argument("slide: input is not an odd-deleted cover for this coloring");
    Window nw = in.window().shrunk(1);
    SlideResult res;
    res.board = Board(nw);
    for (const Dimer& d : in.dimers()) {
        Dimer s = partner_in_odd_block(d, col);
        if (nw.contains(s)) res.board.add(s);
    }

    // Uncovered vertices well inside the shrunk window are exactly the
    // missing blocks; near the edge they are artifacts of dimers whose
    // preimage fell outside the input window.
    Coloring next = col.flipped();
    std::vector<Vertex> open = res.board.uncovered_in(nw.shrunk(2));
    std::vector<bool> used(open.size(), false);
    auto is_open = [&](Vertex v) { return nw.contains(v) && !res.board.covered(v); };
    for (size_t i = 0; i < open.size(); ++i) {
        if (used[i]) continue;
        Vertex c = open[i]; // lex-least vertex of its block is the corner
        bool full = is_open({c.x + 1, c.y}) && is_open({c.x, c.y + 1}) &&
                    is_open({c.x + 1, c.y + 1});
        internal_check(full, "slid cover's holes do not decompose into blocks");
        internal_check(block_parity(c, next) == Parity::Even,
                       "missing block after sliding is not even under the successor coloring");
        internal_check(res.board.window().edge_distance(c) >= 3,
                       "missing block too close to the window edge");
        res.missing.push_back(c);
        for (size_t j = i + 1; j < open.size(); ++j) {
            Vertex o = open[j];
            if (o.x >= c.x && o.x <= c.x + 1 && o.y >= c.y && o.y <= c.y + 1) used[j] = true;
        }
    }
    // A slid cover carries no even-aligned pairs beyond its holes; any
    // such pair would make the deletion/creation bookkeeping ambiguous.
    internal_check(res.board.aligned_blocks(Parity::Even, next).empty(),
                   "slid cover contains an unexpected even aligned pair");
    return res;
}

Board fill_blocks(const Board& deficient, const std::vector<Vertex>& corners, unsigned long mask) {
    Board out = deficient;
    for (size_t i = 0; i < corners.size(); ++i) {
        Vertex c = corners[i];
        if ((mask >> i) & 1UL) {
            out.add(Dimer({c.x, c.y}, {c.x + 1, c.y}));
            out.add(Dimer({c.x, c.y + 1}, {c.x + 1, c.y + 1}));
        } else {
            out.add(Dimer({c.x, c.y}, {c.x, c.y + 1}));
            out.add(Dimer({c.x + 1, c.y}, {c.x + 1, c.y + 1}));
        }
    }
    return out;
}

std::vector<DimerConfig> shuffle_formal_sum(const DimerConfig& cfg, const Board& eps,
                                            const Board& eps_next) {
    Coloring col = Coloring::usual(cfg.n);
    DeleteResult del = delete_blocks(cfg.to_board(eps), Parity::Odd, col);
    SlideResult sl = slide(del.board, col);
    internal_check(eps_next.window() == sl.board.window(), "eps_next window mismatch");
    std::vector<DimerConfig> out;
    for (unsigned long mask = 0; mask < (1UL << sl.missing.size()); ++mask) {
        Board filled = fill_blocks(sl.board, sl.missing, mask);
        out.push_back(DimerConfig::from_board(cfg.n + 1, filled, eps_next));
    }
    std::sort(out.begin(), out.end(), [](const DimerConfig& a, const DimerConfig& b) {
        return a.canonical_key() < b.canonical_key();
    });
    return out;
}

} // namespace pyramid
