#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "pyramid/enumerate.hpp"
#include "pyramid/series.hpp"

using namespace pyramid;

namespace {

// Test-side oracle: BFS over upward-closed removed brick sets of the
// length-1 pyramid, independent of the dimer machinery.
std::vector<RemovedSet> upward_closed_sets(int max_bricks) {
    std::vector<RemovedSet> out{RemovedSet{}};
    std::set<std::set<Brick>> seen{{}};
    size_t begin = 0;
    for (int sz = 0; sz < max_bricks; ++sz) {
        size_t end = out.size();
        for (size_t i = begin; i < end; ++i) {
            // candidates: the apex plus the bricks each present one rests on
            std::set<Brick> cands;
            cands.insert(Brick{0, 0, 0});
            for (const Brick& b : out[i].bricks) {
                if (b.dark()) {
                    for (int dj : {-1, 1}) cands.insert(Brick{b.i, b.j + dj, b.d + 1});
                } else {
                    for (int di : {-1, 1}) cands.insert(Brick{b.i + di, b.j, b.d + 1});
                }
            }
            for (const Brick& c : cands) {
                if (!brick_in_pyramid(c) || out[i].bricks.count(c)) continue;
                bool ok = true;
                for (const Brick& p : brick_parents(c)) ok = ok && out[i].bricks.count(p);
                if (!ok) continue;
                RemovedSet next = out[i];
                next.bricks.insert(c);
                if (seen.insert(next.bricks).second) out.push_back(std::move(next));
            }
        }
        begin = end;
    }
    return out;
}

} // namespace

TEST_CASE("empty room of length 1") {
    Window w = Window::centered(6);
    Board eps = empty_room_board(1, w);
    // central odd block is two vertical dimers at columns -1, 0
    CHECK(eps.has(Dimer({-1, -1}, {-1, 0})));
    CHECK(eps.has(Dimer({0, -1}, {0, 0})));
    CHECK(eps.block_state({-1, -1}) == BlockState::VerticalPair);
    // exactly one aligned odd block in the window
    CHECK(eps.aligned_blocks(Parity::Odd, Coloring::usual(1)) ==
          std::vector<Vertex>{Vertex{-1, -1}});
    CHECK(eps.aligned_blocks(Parity::Even, Coloring::usual(1)).empty());
    // interior fully covered
    CHECK(eps.uncovered_in(w.shrunk(1)).empty());
}

TEST_CASE("empty rooms have n odd blocks in a vertical line") {
    for (int n = 1; n <= 4; ++n) {
        Window w = Window::centered(n + 6);
        Board eps = empty_room_board(n, w);
        auto blocks = eps.aligned_blocks(Parity::Odd, Coloring::usual(n));
        REQUIRE((int)blocks.size() == n);
        for (size_t i = 0; i < blocks.size(); ++i) {
            CHECK(blocks[i].x == blocks[0].x);
            CHECK(blocks[i].y == blocks[0].y + 2 * (int)i);
        }
        CHECK(eps.aligned_blocks(Parity::Even, Coloring::usual(n)).empty());
        CHECK(eps.uncovered_in(w.shrunk(1)).empty());
    }
}

TEST_CASE("brick stencils") {
    // removing the apex flips the central block to horizontal dimers
    RemovedSet apex;
    apex.bricks.insert(Brick{0, 0, 0});
    Window w = Window::centered(6);
    Board b = bricks_to_dimers(apex, w);
    CHECK(b.block_state({-1, -1}) == BlockState::HorizontalPair);
    CHECK(apex.weight() == Monomial{1, 0});

    RemovedSet bad;
    bad.bricks.insert(Brick{0, 1, 1});
    CHECK(!bad.upward_closed());
    CHECK_THROWS_AS(bricks_to_dimers(bad, w), std::invalid_argument);

    // removing the exposed light brick additionally flips the even block
    // at rows 0..1 back to a vertical pair
    RemovedSet two = apex;
    two.bricks.insert(Brick{0, 1, 1});
    REQUIRE(two.upward_closed());
    Board b2 = bricks_to_dimers(two, w);
    CHECK(b2.block_state({-1, 0}) == BlockState::VerticalPair);
    CHECK(b2.has(Dimer({-1, -1}, {0, -1})));
    Board viaflips = b;
    apply_flip(viaflips, Flip{{-1, 0}, Parity::Even});
    CHECK(DimerConfig::from_board(1, b2, empty_room_board(1, w)).canonical_key() ==
          DimerConfig::from_board(1, viaflips, empty_room_board(1, w)).canonical_key());
}

TEST_CASE("flip counts on small configurations") {
    Window w = Window::centered(8);
    Board e1 = empty_room_board(1, w);
    Coloring c1 = Coloring::usual(1);
    auto flips = increasing_flips(e1, c1);
    REQUIRE(flips.size() == 1);
    CHECK(flips[0].corner == Vertex{-1, -1});
    CHECK(flips[0].parity == Parity::Odd);

    Board after = e1;
    apply_flip(after, flips[0]);
    auto flips2 = increasing_flips(after, c1);
    REQUIRE(flips2.size() == 2);
    CHECK(flips2[0].parity == Parity::Even);
    CHECK(flips2[1].parity == Parity::Even);

    Board e2 = empty_room_board(2, w);
    CHECK(increasing_flips(e2, Coloring::usual(2)).size() == 2);
}

TEST_CASE("enumeration at degree 0 and 1") {
    Enumerated e = enumerate_partitions(1, 1);
    REQUIRE(e.items.size() == 2);
    CHECK(e.items[0].second == kOne);
    CHECK(e.items[1].second == Monomial{1, 0});
}

TEST_CASE("BFS sums match the closed forms") {
    CHECK(enumerate_partitions(1, 3).sum == formula_Z(1, 3));
    CHECK(enumerate_partitions(2, 2).sum == formula_Z(2, 2));
    CHECK(enumerate_partitions(1, 6).sum == formula_Z(1, 6));
    CHECK(enumerate_partitions(2, 5).sum == formula_Z(2, 5));
    CHECK(enumerate_partitions(3, 4).sum == formula_Z(3, 4));
}

TEST_CASE("serial reference and parallel kernel agree") {
    for (auto [n, D] : {std::pair{1, 5}, {2, 4}, {3, 3}}) {
        Enumerated a = enumerate_partitions_serial(n, D);
        Enumerated b = enumerate_partitions(n, D, true);
        CHECK(a.sum == b.sum);
        REQUIRE(a.items.size() == b.items.size());
        for (size_t i = 0; i < a.items.size(); ++i) {
            CHECK(a.items[i].first.canonical_key() == b.items[i].first.canonical_key());
            CHECK(a.items[i].second == b.items[i].second);
        }
    }
}

TEST_CASE("brick model and dimer BFS agree on length 1") {
    int K = 5;
    Enumerated e = enumerate_partitions(1, K);
    std::map<std::string, Monomial> by_key;
    for (const auto& [cfg, w] : e.items) by_key.emplace(cfg.canonical_key(), w);

    auto sets = upward_closed_sets(K);
    CHECK(sets.size() == e.items.size());
    for (const RemovedSet& rs : sets) {
        Board b = bricks_to_dimers(rs, e.win);
        DimerConfig cfg = DimerConfig::from_board(1, b, e.eps);
        auto it = by_key.find(cfg.canonical_key());
        REQUIRE(it != by_key.end());
        CHECK(it->second == rs.weight());
    }
}

TEST_CASE("every enumerated configuration is a valid asymptotic cover") {
    for (auto [n, D] : {std::pair{1, 6}, {2, 6}, {3, 6}}) {
        Enumerated e = enumerate_partitions(n, D);
        for (const auto& [cfg, w] : e.items) {
            Board b = cfg.to_board(e.eps); // add/remove assert disjointness
            CHECK(b.uncovered_in(e.win.shrunk(1)).empty());
            auto sup = cfg.support();
            if (sup) CHECK(e.win.shrunk(3).contains(Vertex{sup->xmax, sup->ymax}));
        }
    }
}

TEST_CASE("canonical keys separate configurations") {
    Enumerated e = enumerate_partitions(1, 4);
    std::set<std::string> keys;
    for (const auto& [cfg, w] : e.items) keys.insert(cfg.canonical_key());
    CHECK(keys.size() == e.items.size());
    CHECK(e.items[0].first.canonical_key() == "");
    CHECK(!e.items[0].first.support().has_value());
}
