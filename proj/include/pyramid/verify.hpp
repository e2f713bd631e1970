#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "pyramid/json_io.hpp"
#include "pyramid/series.hpp"
#include "pyramid/solid.hpp"

namespace pyramid {

struct Discrepancy {
    Monomial m;
    BigInt lhs, rhs;
};

// Outcome of one identity check: an enumeration side and a closed-form
// side compared term by term within the truncation.
struct CheckReport {
    std::string check_id;
    Json parameters;
    Series lhs = Series(SeriesVars::Q0Q1, TruncSpec::by_total(0));
    Series rhs = Series(SeriesVars::Q0Q1, TruncSpec::by_total(0));
    bool equal = false;
    std::optional<Discrepancy> first_discrepancy; // lexicographically least
    std::chrono::milliseconds elapsed{0};
};

// Fills equal/first_discrepancy from lhs/rhs.
void compare_sides(CheckReport& r);

Json report_to_json(const CheckReport& r, bool with_timings = false);
std::string report_to_text(const CheckReport& r);

// Brute-force BFS sum over length-n pyramid partitions versus the
// MacMahon-inverse-type product times the super-rigid enumeration
// specialized to (q1, q0q1).
CheckReport check_theorem1(int D);

// BFS sum versus the closed product formula for general n.
CheckReport check_eq_general_n(int n, int D);

// BFS sum versus the k-step shuffle recursion: the accumulated creation
// factors times the propagated truncated weight sum.
CheckReport check_shuffle_recursion(int n, int k, int D);

// Super-rigid enumeration versus M(1,q)^2 M(-z,q)^{-1}.
CheckReport check_zx(int z_degree, int q_degree);

// Plane-partition counts versus the MacMahon function coefficients.
CheckReport check_macmahon(int D);

// One-leg enumeration versus M(q) q^{binom2} s_{lambda^t}(q).
CheckReport check_one_leg(const YoungDiagram& lambda, int D);

// sum_lambda z^|lambda| q^{n|lambda|} s_{lambda^t} s_lambda versus
// prod_{i,j>=1} (1 + z q^{i+j+n-2}), z-degree and q-degree D.
CheckReport check_cauchy(int n, int D);

} // namespace pyramid
