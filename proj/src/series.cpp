#include "pyramid/series.hpp"

#include <algorithm>
#include <sstream>

namespace pyramid {

void Series::add_term(Monomial m, const BigInt& c) {
    if (c == 0) return;
    if (!trunc_.keeps(m)) return;
    if (!m.nonnegative())
        throw std::invalid_argument("series term with negative exponent: " +
                                    monomial_str(m, "v0", "v1"));
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Series::check_compatible(const Series& o) const {
    if (vars_ != o.vars_ || !(trunc_ == o.trunc_))
        throw std::invalid_argument("series operands have mismatched variables or truncation");
}

Series& Series::operator+=(const Series& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Series& Series::operator-=(const Series& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    a.check_compatible(b);
    Series out(a.vars_, a.trunc_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma * mb;
            if (!a.trunc_.keeps(m)) continue;
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

void Series::mul_power_factor(Monomial m, int sign, long exp) {
    if (exp == 0) return;
    if (m.total_degree() <= 0)
        throw std::invalid_argument("product factor must have total degree >= 1");
    if (!m.nonnegative())
        throw std::invalid_argument("product factor with negative exponent");
    if (!trunc_.keeps(m)) return;

    // (1 + s*m)^e = sum_k binom(e,k) s^k m^k, finitely many k in range.
    Series factor = Series::one(vars_, trunc_);
    BigInt binom = 1;
    Monomial mk = kOne;
    for (long k = 1;; ++k) {
        mk = mk * m;
        if (!trunc_.keeps(mk)) break;
        binom = binom * BigInt(exp - k + 1) / k; // exact: running binomial coefficient
        BigInt c = binom;
        if (sign < 0 && (k % 2)) c = -c;
        factor.add_term(mk, c);
    }
    *this *= factor;
}

Series series_div_unit(const Series& a, const Series& b) {
    if (a.vars() != b.vars() || !(a.trunc() == b.trunc()))
        throw std::invalid_argument("series operands have mismatched variables or truncation");
    BigInt b0 = b.coeff(kOne);
    if (b0 != 1 && b0 != -1)
        throw std::invalid_argument("series_div_unit: divisor constant term must be +1 or -1");

    // Eliminate the lexicographically least remaining term; every correction
    // introduces only lex-greater terms, so this terminates.
    Series quot(a.vars(), a.trunc());
    Series rem = a;
    while (!rem.is_zero()) {
        auto [m, c] = *rem.terms().begin();
        BigInt q = c * b0; // c / b0 with b0 = +-1
        quot.add_term(m, q);
        for (const auto& [mb, cb] : b.terms()) rem.add_term(m * mb, -q * cb);
    }
    return quot;
}

Series product_expand(const std::vector<ProductFactor>& factors, SeriesVars vars, TruncSpec trunc) {
    Series out = Series::one(vars, trunc);
    int last_deg = 0;
    for (const auto& f : factors) {
        int d = f.m.total_degree();
        if (d <= 0) throw std::invalid_argument("product factor must have total degree >= 1");
        if (d < last_deg)
            throw std::invalid_argument("product factors must arrive in non-decreasing degree");
        last_deg = d;
        if (!trunc.keeps(f.m)) {
            if (trunc.total_mode()) break; // all later factors are at least this degree
            continue; // per-variable bounds are not monotone in total degree
        }
        out.mul_power_factor(f.m, f.sign, f.exp);
    }
    return out;
}

Series macmahon(int sign_x, Monomial x_mono, Monomial qm, SeriesVars vars, TruncSpec trunc,
                bool invert) {
    if (qm.total_degree() < 1) throw std::invalid_argument("macmahon: q-monomial needs degree >= 1");
    if ((x_mono * qm).total_degree() < 1)
        throw std::invalid_argument("macmahon: x*q has total degree <= 0, truncation unsound");
    Series out = Series::one(vars, trunc);
    Monomial qk = kOne;
    for (long k = 1;; ++k) {
        qk = qk * qm;
        Monomial m = x_mono * qk;
        if (m.total_degree() > 0 && !m.nonnegative())
            throw std::invalid_argument("macmahon: factor monomial not storable");
        if (trunc.total_mode() && m.total_degree() > trunc.total) break;
        if (!trunc.total_mode() && (m.e0 > trunc.deg0 || m.e1 > trunc.deg1)) break;
        out.mul_power_factor(m, -sign_x, invert ? k : -k);
    }
    return out;
}

Series formula_Z(int n, int max_total_degree) {
    if (n < 1) throw std::invalid_argument("formula_Z: n must be >= 1");
    int D = max_total_degree;
    TruncSpec t = TruncSpec::by_total(D);
    std::vector<ProductFactor> fs;
    for (int k = 1; 2 * k - 1 <= D; ++k) {
        fs.push_back({{k, k - 1}, 1, k + n - 1L});                 // (1+q0^k q1^(k-1))^(k+n-1)
        if (2 * k <= D) fs.push_back({{k, k}, -1, -2L * k});       // M(1, q0q1)^2
        if (2 * k + 1 <= D && k - n + 1 > 0)
            fs.push_back({{k, k + 1}, 1, (long)(k - n + 1)});      // (1+q0^k q1^(k+1))^max(k-n+1,0)
    }
    std::stable_sort(fs.begin(), fs.end(), [](const ProductFactor& a, const ProductFactor& b) {
        return a.m.total_degree() < b.m.total_degree();
    });
    return product_expand(fs, SeriesVars::Q0Q1, t);
}

Series formula_Zx(int z_degree, int q_degree) {
    if (z_degree < 0 || q_degree < 0) throw std::invalid_argument("formula_Zx: degrees must be >= 0");
    TruncSpec t = TruncSpec::per_variable(z_degree, q_degree);
    // M(1,q)^2 = prod (1-q^k)^(-2k),  M(-z,q)^(-1) = prod (1+z q^k)^k.
    Series out = Series::one(SeriesVars::ZQ, t);
    for (int k = 1; k <= q_degree; ++k) {
        out.mul_power_factor({0, k}, -1, -2L * k);
        if (z_degree >= 1) out.mul_power_factor({1, k}, 1, k);
    }
    return out;
}

Series formula_Zinf(int max_total_degree) {
    int D = max_total_degree;
    TruncSpec t = TruncSpec::by_total(D);
    // M(1,q0q1)^2 * prod (1+q0^k q1^(k+1))^k, the (z,q)->(q1,q0q1) image of Z_X.
    std::vector<ProductFactor> fs;
    for (int k = 1; 2 * k <= D || 2 * k + 1 <= D; ++k) {
        if (2 * k <= D) fs.push_back({{k, k}, -1, -2L * k});
        if (2 * k + 1 <= D) fs.push_back({{k, k + 1}, 1, (long)k});
    }
    std::stable_sort(fs.begin(), fs.end(), [](const ProductFactor& a, const ProductFactor& b) {
        return a.m.total_degree() < b.m.total_degree();
    });
    return product_expand(fs, SeriesVars::Q0Q1, t);
}

Series substitute_zq_to_q0q1(const Series& zq, int max_total_degree) {
    if (zq.vars() != SeriesVars::ZQ)
        throw std::invalid_argument("substitute_zq_to_q0q1: input must be a (z,q) series");
    Series out(SeriesVars::Q0Q1, TruncSpec::by_total(max_total_degree));
    for (const auto& [m, c] : zq.terms()) {
        // z^a q^b -> q1^a (q0 q1)^b
        out.add_term({m.e1, m.e0 + m.e1}, c);
    }
    return out;
}

std::string Series::str() const {
    if (terms_.empty()) return "0";
    const char* v0 = vars_ == SeriesVars::Q0Q1 ? "q0" : "z";
    const char* v1 = vars_ == SeriesVars::Q0Q1 ? "q1" : "q";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        BigInt a = c < 0 ? BigInt(-c) : c;
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        if (a != 1 || m == kOne) os << a.str();
        if (m != kOne) {
            if (a != 1) os << "*";
            os << monomial_str(m, v0, v1);
        }
    }
    return os.str();
}

} // namespace pyramid
