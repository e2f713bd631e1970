#pragma once

#include <array>
#include <vector>

#include "pyramid/series.hpp"

namespace pyramid {

// Integer partition as a weakly decreasing list of positive row lengths;
// cells are 0-based (row, col) pairs.
struct YoungDiagram {
    std::vector<int> rows;

    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<int> r);

    int size() const;
    bool empty() const { return rows.empty(); }
    bool contains(int r, int c) const {
        return r >= 0 && c >= 0 && r < (int)rows.size() && c < rows[r];
    }
    YoungDiagram transpose() const;
    std::vector<std::array<int, 2>> cells() const; // sorted (row, col)

    long n_stat() const;       // sum_i (i-1) * lambda_i, rows 1-based
    long binom2() const;       // sum_i C(lambda_i, 2)
    int hook(int r, int c) const;
    long content_sum() const;  // sum over cells of (row + col + 1), 0-based

    friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
    friend bool operator<(const YoungDiagram& a, const YoungDiagram& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.rows < b.rows;
    }
};

// All diagrams with |lambda| <= max_size, in (size, lex) order.
std::vector<YoungDiagram> enumerate_young(int max_size);

// Three-dimensional partition asymptotic to lambda: the infinite leg
// lambda x Z>=0 plus finitely many extra boxes, closed under decrementing
// any coordinate.
struct PlanePartition {
    YoungDiagram lambda;
    std::vector<std::array<int, 3>> extra; // sorted (x,y,z) triples outside the leg

    int size() const { return (int)extra.size(); }
    bool member(int x, int y, int z) const;
    bool closed() const;
    friend bool operator==(const PlanePartition&, const PlanePartition&) = default;
};

// Every partition asymptotic to lambda with at most max_extra boxes, in
// (size, lex) order, found by breadth-first single-box growth.
std::vector<PlanePartition> enumerate_plane_partitions(const YoungDiagram& lambda, int max_extra);

// Principal specialization s_lambda(1,q,q^2,...) truncated to q^D,
// computed as q^{n(lambda)} / prod_cells (1 - q^hook).  Returned as a
// (z,q) series of z-degree 0.
Series schur_principal(const YoungDiagram& lambda, int D);

// The sum q^|pi| over partitions asymptotic to lambda, brute force, and
// its closed form M(q) q^{binom2(lambda)} s_{lambda^t}(q).
Series one_leg_sum_bruteforce(const YoungDiagram& lambda, int D);
Series one_leg_sum_closed(const YoungDiagram& lambda, int D);

// Pair of partitions sharing an asymptotic leg shape.
struct SuperRigid {
    PlanePartition pi0;
    YoungDiagram lambda;
    PlanePartition piInf;
};

// N(n) = |pi0| + |piInf| + (n-1)|lambda| + sum_cells (i+j+1).
long superrigid_weight_exponent(const SuperRigid& sr, int n);

// Every triple with N(n) <= max_N together with its (z,q) weight
// z^|lambda| q^N(n); deterministic order (lambda, pi0, piInf).
std::vector<std::pair<SuperRigid, Monomial>> enumerate_superrigid(int max_N, int n);

// Their generating sum as a (z,q) series truncated per variable.
Series superrigid_sum(int max_N, int n, int z_degree, int q_degree);

// Elementary construction moves for a triple: one leg log per lambda cell
// in closure order (weight z q^{i+j+n} as a (z,q) monomial), then one box
// move of weight q per extra box of pi0, then of piInf.
enum class MoveKind { LegLog, BoxLeft, BoxRight };
struct Move {
    MoveKind kind;
    Monomial w; // (z,q) exponents
};
std::vector<Move> move_sequence(const SuperRigid& sr, int n);

} // namespace pyramid
