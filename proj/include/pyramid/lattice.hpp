#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace pyramid {

// Lattice point (x,y) standing for the half-integer point (x+1/2, y+1/2).
// The x axis of the plane runs between the vertex rows y=-1 and y=0.
struct Vertex {
    int x = 0;
    int y = 0;
    friend bool operator==(const Vertex&, const Vertex&) = default;
    friend bool operator<(Vertex a, Vertex b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

// Checkerboard coloring: a vertex is black iff (x+y) mod 2 == c.  The usual
// coloring of the length-n lattice has c = n mod 2.
struct Coloring {
    int c = 0;
    static Coloring usual(int n) { return {((n % 2) + 2) % 2}; }
    Coloring flipped() const { return {1 - c}; }
    bool black(Vertex v) const { return (((v.x + v.y) % 2) + 2) % 2 == c; }
    friend bool operator==(const Coloring&, const Coloring&) = default;
};

// Unordered edge between adjacent vertices, stored with u lexicographically
// least (so u is the left/bottom endpoint).
struct Dimer {
    Vertex u, v;
    Dimer() = default;
    Dimer(Vertex a, Vertex b) {
        if (b < a) std::swap(a, b);
        u = a;
        v = b;
        int dx = v.x - u.x, dy = v.y - u.y;
        if (!((dx == 1 && dy == 0) || (dx == 0 && dy == 1)))
            throw std::invalid_argument("dimer endpoints must be adjacent");
    }
    bool horizontal() const { return v.x == u.x + 1; }
    friend bool operator==(const Dimer&, const Dimer&) = default;
    friend bool operator<(const Dimer& a, const Dimer& b) {
        if (!(a.u == b.u)) return a.u < b.u;
        return a.v < b.v;
    }
};

enum class Parity { Odd, Even };
enum class Direction { N, S, E, W };

// 2x2 block of vertices named by its lower-left corner.  Odd iff the
// upper-left vertex (corner.x, corner.y+1) is black.
inline Parity block_parity(Vertex corner, Coloring col) {
    return col.black({corner.x, corner.y + 1}) ? Parity::Odd : Parity::Even;
}

// The two candidate blocks containing a dimer; exactly one of them is odd.
inline std::array<Vertex, 2> candidate_block_corners(const Dimer& d) {
    if (d.horizontal()) return {Vertex{d.u.x, d.u.y - 1}, Vertex{d.u.x, d.u.y}};
    return {Vertex{d.u.x - 1, d.u.y}, Vertex{d.u.x, d.u.y}};
}

inline Vertex odd_block_corner(const Dimer& d, Coloring col) {
    auto cand = candidate_block_corners(d);
    bool first_odd = block_parity(cand[0], col) == Parity::Odd;
    // The two candidates have adjacent upper-left vertices, so their
    // parities differ; exactly one is odd.
    return first_odd ? cand[0] : cand[1];
}

// The other dimer of the unique odd block containing d.  An involution;
// horizontal dimers map to horizontal, vertical to vertical.
inline Dimer partner_in_odd_block(const Dimer& d, Coloring col) {
    Vertex c = odd_block_corner(d, col);
    if (d.horizontal()) {
        int other_y = (d.u.y == c.y) ? c.y + 1 : c.y;
        return Dimer({c.x, other_y}, {c.x + 1, other_y});
    }
    int other_x = (d.u.x == c.x) ? c.x + 1 : c.x;
    return Dimer({other_x, c.y}, {other_x, c.y + 1});
}

inline Direction direction_of(const Dimer& d, Coloring col) {
    Dimer p = partner_in_odd_block(d, col);
    if (d.horizontal()) return p.u.y > d.u.y ? Direction::N : Direction::S;
    return p.u.x > d.u.x ? Direction::E : Direction::W;
}

// Inclusive axis-aligned vertex rectangle.
struct Window {
    int xmin = 0, ymin = 0, xmax = -1, ymax = -1;

    static Window centered(int half) { return {-half - 1, -half - 1, half, half}; }

    int width() const { return xmax - xmin + 1; }
    int height() const { return ymax - ymin + 1; }
    long size() const { return (long)width() * height(); }
    bool contains(Vertex v) const {
        return v.x >= xmin && v.x <= xmax && v.y >= ymin && v.y <= ymax;
    }
    bool contains(const Dimer& d) const { return contains(d.u) && contains(d.v); }
    Window shrunk(int k) const { return {xmin + k, ymin + k, xmax - k, ymax - k}; }
    Window padded(int k) const { return shrunk(-k); }
    // Distance from v to the window boundary (0 on the edge).
    int edge_distance(Vertex v) const {
        int d = v.x - xmin;
        d = std::min(d, xmax - v.x);
        d = std::min(d, v.y - ymin);
        return std::min(d, ymax - v.y);
    }
    friend bool operator==(const Window&, const Window&) = default;
};

} // namespace pyramid
