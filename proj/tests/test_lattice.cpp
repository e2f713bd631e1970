#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pyramid/board.hpp"
#include "pyramid/lattice.hpp"

using namespace pyramid;

TEST_CASE("coloring convention") {
    Coloring c1 = Coloring::usual(1);
    CHECK(c1.c == 1);
    CHECK(c1.black({-1, 0}));
    CHECK(!c1.black({0, 0}));
    CHECK(!Coloring::usual(2).black({-1, 0}));
}

TEST_CASE("block parity") {
    Coloring c1{1};
    CHECK(block_parity({-1, -1}, c1) == Parity::Odd);
    CHECK(block_parity({0, -1}, c1) == Parity::Even);
    CHECK(block_parity({-1, -1}, Coloring{0}) == Parity::Even);
    // flipping the coloring flips every block
    for (int x = -3; x <= 3; ++x)
        for (int y = -3; y <= 3; ++y)
            CHECK(block_parity({x, y}, c1) != block_parity({x, y}, Coloring{0}));
}

TEST_CASE("partner within the odd block") {
    Coloring c1{1};
    Dimer left({-1, -1}, {-1, 0});
    Dimer right({0, -1}, {0, 0});
    CHECK(partner_in_odd_block(left, c1) == right);
    CHECK(partner_in_odd_block(right, c1) == left);
    CHECK(direction_of(left, c1) == Direction::E);
    CHECK(direction_of(right, c1) == Direction::W);

    Dimer h({-1, 0}, {0, 0});
    CHECK(partner_in_odd_block(h, c1) == Dimer({-1, -1}, {0, -1}));
    CHECK(direction_of(h, c1) == Direction::S);
}

TEST_CASE("partner is an involution and direction alternates") {
    for (int c = 0; c <= 1; ++c) {
        Coloring col{c};
        for (int x = -10; x < 10; ++x)
            for (int y = -10; y < 10; ++y) {
                Dimer h({x, y}, {x + 1, y});
                Dimer v({x, y}, {x, y + 1});
                for (const Dimer& d : {h, v}) {
                    Dimer p = partner_in_odd_block(d, col);
                    CHECK(partner_in_odd_block(p, col) == d);
                    CHECK(d.horizontal() == p.horizontal());
                    // exactly one containing block is odd
                    auto cands = candidate_block_corners(d);
                    int odd = (block_parity(cands[0], col) == Parity::Odd) +
                              (block_parity(cands[1], col) == Parity::Odd);
                    CHECK(odd == 1);
                }
                // direction is opposite for the partner and 2-periodic
                Dimer h2({x + 2, y}, {x + 3, y});
                CHECK(direction_of(h, col) == direction_of(h2, col));
                Direction dh = direction_of(h, col);
                Direction dp = direction_of(partner_in_odd_block(h, col), col);
                CHECK(((dh == Direction::N && dp == Direction::S) ||
                       (dh == Direction::S && dp == Direction::N)));
            }
    }
}

TEST_CASE("board add/remove bookkeeping") {
    Board b(Window{0, 0, 3, 3});
    b.add(Dimer({0, 0}, {0, 1}));
    CHECK(b.covered({0, 0}));
    CHECK(b.mate({0, 1}) == Vertex{0, 0});
    CHECK_THROWS(b.add(Dimer({0, 1}, {1, 1})));
    b.remove(Dimer({0, 0}, {0, 1}));
    CHECK(!b.covered({0, 0}));
}
