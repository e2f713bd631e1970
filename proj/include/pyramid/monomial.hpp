#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pyramid {

// Exponent vector of a bivariate Laurent monomial.  For series in (q0,q1)
// the components are the q0/q1 exponents; for series in (z,q) they are the
// z/q exponents.  Negative exponents are legal here (edge weights use them)
// but may not be stored inside a truncated series.
struct Monomial {
    int e0 = 0;
    int e1 = 0;

    friend Monomial operator*(Monomial a, Monomial b) { return {a.e0 + b.e0, a.e1 + b.e1}; }
    friend Monomial operator/(Monomial a, Monomial b) { return {a.e0 - b.e0, a.e1 - b.e1}; }
    Monomial pow(int k) const { return {e0 * k, e1 * k}; }

    int total_degree() const { return e0 + e1; }
    bool nonnegative() const { return e0 >= 0 && e1 >= 0; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    // Lexicographic by (e0,e1); this is the canonical term order everywhere.
    friend bool operator<(Monomial a, Monomial b) {
        if (a.e0 != b.e0) return a.e0 < b.e0;
        return a.e1 < b.e1;
    }
};

inline const Monomial kOne{0, 0};

inline std::string monomial_str(Monomial m, const char* v0, const char* v1) {
    if (m == kOne) return "1";
    std::string s;
    auto app = [&s](const char* v, int e) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += v;
        if (e != 1) s += "^" + std::to_string(e);
    };
    app(v0, m.e0);
    app(v1, m.e1);
    return s;
}

} // namespace pyramid
