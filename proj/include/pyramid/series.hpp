#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pyramid/monomial.hpp"

namespace pyramid {

using BigInt = boost::multiprecision::cpp_int;

enum class SeriesVars { Q0Q1, ZQ };

// Truncation policy.  Series in (q0,q1) are truncated by total degree;
// series in (z,q) are truncated per variable.
struct TruncSpec {
    int total = -1;
    int deg0 = -1;
    int deg1 = -1;

    static TruncSpec by_total(int d) { return {d, -1, -1}; }
    static TruncSpec per_variable(int d0, int d1) { return {-1, d0, d1}; }

    bool total_mode() const { return total >= 0; }
    bool keeps(Monomial m) const {
        if (total_mode()) return m.total_degree() <= total;
        return m.e0 <= deg0 && m.e1 <= deg1;
    }
    friend bool operator==(const TruncSpec&, const TruncSpec&) = default;
};

// Exact truncated power series with arbitrary-precision integer
// coefficients.  Stored terms always have nonnegative exponents, no zero
// coefficients, and respect the truncation; the map keeps them in the
// canonical (e0,e1) lexicographic order.
class Series {
public:
    Series(SeriesVars vars, TruncSpec trunc) : vars_(vars), trunc_(trunc) {}

    static Series zero(SeriesVars v, TruncSpec t) { return Series(v, t); }
    static Series one(SeriesVars v, TruncSpec t) {
        Series s(v, t);
        s.add_term(kOne, 1);
        return s;
    }

    SeriesVars vars() const { return vars_; }
    const TruncSpec& trunc() const { return trunc_; }
    const std::map<Monomial, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    BigInt coeff(Monomial m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    // Adds c * m, dropping the term if it falls outside the truncation.
    void add_term(Monomial m, const BigInt& c);

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    Series& operator*=(const Series& o) { return *this = *this * o; }

    friend bool operator==(const Series& a, const Series& b) {
        return a.vars_ == b.vars_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
    }

    // Multiplies in place by (1 + sign*m)^exp, exactly up to the truncation.
    // exp may be negative (binomial series); m must fit the truncation
    // nontrivially and have nonnegative exponents.
    void mul_power_factor(Monomial m, int sign, long exp);

    std::string str() const;

private:
    SeriesVars vars_;
    TruncSpec trunc_;
    std::map<Monomial, BigInt> terms_;

    void check_compatible(const Series& o) const;
};

// Quotient a/b truncated, requiring b to have constant term +1 or -1.
Series series_div_unit(const Series& a, const Series& b);

// One factor (1 + sign*m)^exp of an infinite product.
struct ProductFactor {
    Monomial m;
    int sign = 1;
    long exp = 1;
};

// Expands a finite product of such factors.  Factors must arrive in
// non-decreasing total degree of m; expansion stops once a factor's
// monomial falls outside the truncation (sound because later factors have
// at least that degree).  A factor monomial of total degree <= 0 is a
// usage error: truncation of the infinite product would be meaningless.
Series product_expand(const std::vector<ProductFactor>& factors, SeriesVars vars, TruncSpec trunc);

// MacMahon-type product prod_{k>=1} (1 - x*qm^k)^(-k), with x given as
// sign_x * x_mono (x_mono may be the identity monomial and may carry
// negative exponents as long as every x*qm^k is storable).  With
// invert=true returns prod (1 - x*qm^k)^(+k).
Series macmahon(int sign_x, Monomial x_mono, Monomial qm, SeriesVars vars, TruncSpec trunc,
                bool invert = false);

// Closed-form product for the length-n pyramid partition series:
// M(1,q0q1)^2 * prod (1+q0^k q1^(k-1))^(k+n-1) * prod (1+q0^k q1^(k+1))^max(k-n+1,0).
Series formula_Z(int n, int max_total_degree);

// Z_X(z,q) = M(1,q)^2 M(-z,q)^(-1), truncated per variable.
Series formula_Zx(int z_degree, int q_degree);

// The z->q1, q->q0q1 specialization of Z_X, truncated by total degree.
Series formula_Zinf(int max_total_degree);

// Substitutes (z,q) -> (q1, q0*q1) and re-truncates by total degree.
Series substitute_zq_to_q0q1(const Series& zq, int max_total_degree);

} // namespace pyramid
