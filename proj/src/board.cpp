#include "pyramid/board.hpp"

#include <algorithm>
#include <sstream>

namespace pyramid {

std::vector<Dimer> Board::dimers() const {
    std::vector<Dimer> out;
    for (int idx = 0; idx < (int)mate_.size(); ++idx) {
        if (mate_[idx] > idx) out.push_back(Dimer(vertex(idx), vertex(mate_[idx])));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vertex> Board::uncovered_in(Window region) const {
    std::vector<Vertex> out;
    for (int y = region.ymin; y <= region.ymax; ++y)
        for (int x = region.xmin; x <= region.xmax; ++x)
            if (!covered({x, y})) out.push_back({x, y});
    return out;
}

BlockState Board::block_state(Vertex c) const {
    Dimer vl({c.x, c.y}, {c.x, c.y + 1});
    Dimer vr({c.x + 1, c.y}, {c.x + 1, c.y + 1});
    if (has(vl) && has(vr)) return BlockState::VerticalPair;
    Dimer hb({c.x, c.y}, {c.x + 1, c.y});
    Dimer ht({c.x, c.y + 1}, {c.x + 1, c.y + 1});
    if (has(hb) && has(ht)) return BlockState::HorizontalPair;
    return BlockState::Other;
}

std::vector<Vertex> Board::aligned_blocks(Parity p, Coloring col) const {
    std::vector<Vertex> out;
    for (int y = win_.ymin; y < win_.ymax; ++y)
        for (int x = win_.xmin; x < win_.xmax; ++x) {
            Vertex c{x, y};
            if (block_parity(c, col) != p) continue;
            if (block_state(c) != BlockState::Other) out.push_back(c);
        }
    return out;
}

// ---- Bricks -------------------------------------------------------------

bool brick_in_pyramid(const Brick& b) {
    if (b.d < 0) return false;
    int m = b.d / 2;
    if (b.dark()) {
        // depth 2m: i,j in [-m,m], both congruent to m mod 2
        return std::abs(b.i) <= m && std::abs(b.j) <= m &&
               ((b.i - m) % 2 + 2) % 2 == 0 && ((b.j - m) % 2 + 2) % 2 == 0;
    }
    // depth 2m+1: i in [-m,m] congruent to m; j in [-m-1,m+1] congruent to m+1
    return std::abs(b.i) <= m && std::abs(b.j) <= m + 1 &&
           ((b.i - m) % 2 + 2) % 2 == 0 && ((b.j - m - 1) % 2 + 2) % 2 == 0;
}

std::vector<Brick> bricks_resting_on(const Brick& b) {
    std::vector<Brick> out;
    if (b.d == 0) return out;
    if (b.dark()) {
        for (int di : {-1, 1}) {
            Brick p{b.i + di, b.j, b.d - 1};
            if (brick_in_pyramid(p)) out.push_back(p);
        }
    } else {
        for (int dj : {-1, 1}) {
            Brick p{b.i, b.j + dj, b.d - 1};
            if (brick_in_pyramid(p)) out.push_back(p);
        }
    }
    return out;
}

std::vector<Brick> brick_parents(const Brick& b) { return bricks_resting_on(b); }

bool RemovedSet::upward_closed() const {
    for (const Brick& b : bricks) {
        if (!brick_in_pyramid(b)) return false;
        for (const Brick& p : brick_parents(b))
            if (!bricks.count(p)) return false;
    }
    return true;
}

Monomial RemovedSet::weight() const {
    Monomial w = kOne;
    for (const Brick& b : bricks) w = w * (b.dark() ? Monomial{1, 0} : Monomial{0, 1});
    return w;
}

namespace {

// Unique brick at the given depth whose top patch covers vertex (x,y).
std::optional<Brick> brick_at_depth_covering(int d, int x, int y) {
    int m = d / 2;
    auto pick = [](int lo, int want_parity) {
        // the element of {lo, lo+1} congruent to want_parity mod 2
        return ((lo % 2 + 2) % 2 == (want_parity % 2 + 2) % 2) ? lo : lo + 1;
    };
    if (d % 2 == 0) {
        Brick b{pick(x, m), pick(y, m), d};
        if (brick_in_pyramid(b)) return b;
    } else {
        Brick b{pick(x, m), pick(y, m + 1), d};
        if (brick_in_pyramid(b)) return b;
    }
    return std::nullopt;
}

Brick topmost_brick(int x, int y, const RemovedSet& removed, int depth_bound) {
    for (int d = 0; d <= depth_bound; ++d) {
        auto b = brick_at_depth_covering(d, x, y);
        if (b && !removed.bricks.count(*b)) return *b;
    }
    throw std::logic_error("visibility search exceeded its depth bound");
}

} // namespace

Board bricks_to_dimers(const RemovedSet& removed, Window w) {
    if (!removed.upward_closed())
        throw std::invalid_argument("bricks_to_dimers: removed set is not upward closed");
    int maxd = 0;
    for (const Brick& b : removed.bricks) maxd = std::max(maxd, b.d);
    Board out(w);
    for (int y = w.ymin; y <= w.ymax; ++y) {
        for (int x = w.xmin; x <= w.xmax; ++x) {
            Vertex v{x, y};
            if (out.covered(v)) continue;
            int bound = 2 * (std::max(std::abs(x), std::abs(y)) + 2) + maxd + 4;
            Brick b = topmost_brick(x, y, removed, bound);
            // dark: vertical dimer within the patch column; light: horizontal
            Vertex m = b.dark() ? Vertex{x, y == b.j ? b.j - 1 : b.j}
                                : Vertex{x == b.i ? b.i - 1 : b.i, y};
            if (!w.contains(m)) continue; // partner outside: edge vertex stays open
            if (out.covered(m)) {
                internal_check(out.mate(m) == v, "inconsistent visibility stencil");
                continue;
            }
            out.add(Dimer(v, m));
        }
    }
    return out;
}

// ---- Empty rooms --------------------------------------------------------

namespace {

// One deterministic deletion+slide step taking the empty room of length k
// to length k+1; the window shrinks by one ring.
Board slide_empty_room(const Board& eps, int k) {
    Coloring col = Coloring::usual(k);
    Board work = eps;
    for (Vertex c : eps.aligned_blocks(Parity::Odd, col)) {
        BlockState st = work.block_state(c);
        internal_check(st == BlockState::VerticalPair, "empty room odd block not vertical");
        work.remove(Dimer({c.x, c.y}, {c.x, c.y + 1}));
        work.remove(Dimer({c.x + 1, c.y}, {c.x + 1, c.y + 1}));
    }
    Window nw = eps.window().shrunk(1);
    Board out(nw);
    for (const Dimer& d : work.dimers()) {
        Dimer s = partner_in_odd_block(d, col);
        if (nw.contains(s)) out.add(s);
    }
    // The image must again be a full cover: no missing blocks arise.
    internal_check(out.uncovered_in(nw.shrunk(1)).empty(), "slid empty room has holes");
    return out;
}

} // namespace

Board empty_room_board(int n, Window w) {
    if (n < 1) throw std::invalid_argument("empty_room_board: n must be >= 1");
    Board b = bricks_to_dimers(RemovedSet{}, w.padded(n - 1));
    for (int k = 1; k < n; ++k) b = slide_empty_room(b, k);
    internal_check(b.window() == w, "empty room window bookkeeping");
    return b;
}

// ---- Configurations ------------------------------------------------------

DimerConfig DimerConfig::from_board(int n, const Board& b, const Board& eps) {
    internal_check(b.window() == eps.window(), "config/empty-room window mismatch");
    DimerConfig cfg;
    cfg.n = n;
    cfg.win = b.window();
    std::vector<Dimer> bd = b.dimers(), ed = eps.dimers();
    std::set_difference(bd.begin(), bd.end(), ed.begin(), ed.end(), std::back_inserter(cfg.added));
    std::set_difference(ed.begin(), ed.end(), bd.begin(), bd.end(), std::back_inserter(cfg.removed));
    return cfg;
}

Board DimerConfig::to_board(const Board& eps) const {
    internal_check(eps.window() == win, "config/empty-room window mismatch");
    Board b = eps;
    for (const Dimer& d : removed) b.remove(d);
    for (const Dimer& d : added) b.add(d);
    return b;
}

std::string DimerConfig::canonical_key() const {
    std::ostringstream os;
    for (const Dimer& d : added) os << "+" << d.u.x << "," << d.u.y << "," << d.v.x << "," << d.v.y << ";";
    for (const Dimer& d : removed) os << "-" << d.u.x << "," << d.u.y << "," << d.v.x << "," << d.v.y << ";";
    return os.str();
}

std::optional<Window> DimerConfig::support() const {
    if (added.empty() && removed.empty()) return std::nullopt;
    Window s{1 << 30, 1 << 30, -(1 << 30), -(1 << 30)};
    auto grow = [&s](Vertex v) {
        s.xmin = std::min(s.xmin, v.x);
        s.ymin = std::min(s.ymin, v.y);
        s.xmax = std::max(s.xmax, v.x);
        s.ymax = std::max(s.ymax, v.y);
    };
    for (const Dimer& d : added) grow(d.u), grow(d.v);
    for (const Dimer& d : removed) grow(d.u), grow(d.v);
    return s;
}

Board DeficientConfig::to_board(const Board& eps) const {
    Board b = filled.to_board(eps);
    for (Vertex c : missing) {
        internal_check(b.block_state(c) == BlockState::VerticalPair,
                       "deficient representation must fill missing blocks vertically");
        b.remove(Dimer({c.x, c.y}, {c.x, c.y + 1}));
        b.remove(Dimer({c.x + 1, c.y}, {c.x + 1, c.y + 1}));
    }
    return b;
}

std::string DeficientConfig::canonical_key() const {
    std::ostringstream os;
    os << filled.canonical_key() << "|";
    for (Vertex c : missing) os << c.x << "," << c.y << ";";
    return os.str();
}

} // namespace pyramid
