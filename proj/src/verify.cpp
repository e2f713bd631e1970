#include "pyramid/verify.hpp"

#include <sstream>

#include "pyramid/enumerate.hpp"
#include "pyramid/weights.hpp"

namespace pyramid {

void compare_sides(CheckReport& r) {
    r.equal = true;
    r.first_discrepancy.reset();
    auto a = r.lhs.terms().begin(), ae = r.lhs.terms().end();
    auto b = r.rhs.terms().begin(), be = r.rhs.terms().end();
    auto note = [&](Monomial m, BigInt l, BigInt rr) {
        r.equal = false;
        if (!r.first_discrepancy) r.first_discrepancy = Discrepancy{m, l, rr};
    };
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->first < b->first)) {
            note(a->first, a->second, 0);
            ++a;
        } else if (a == ae || b->first < a->first) {
            note(b->first, 0, b->second);
            ++b;
        } else {
            if (a->second != b->second) note(a->first, a->second, b->second);
            ++a;
            ++b;
        }
    }
}

Json report_to_json(const CheckReport& r, bool with_timings) {
    Json j;
    j["check_id"] = r.check_id;
    j["parameters"] = r.parameters;
    j["lhs"] = series_to_json(r.lhs);
    j["rhs"] = series_to_json(r.rhs);
    j["equal"] = r.equal;
    if (r.first_discrepancy) {
        Json d;
        d["monomial"] = {r.first_discrepancy->m.e0, r.first_discrepancy->m.e1};
        d["lhs"] = r.first_discrepancy->lhs.str();
        d["rhs"] = r.first_discrepancy->rhs.str();
        j["first_discrepancy"] = std::move(d);
    } else {
        j["first_discrepancy"] = nullptr;
    }
    if (with_timings) j["elapsed_ms"] = r.elapsed.count();
    return j;
}

std::string report_to_text(const CheckReport& r) {
    std::ostringstream os;
    os << r.check_id << " " << r.parameters.dump() << ": "
       << (r.equal ? "equal" : "NOT EQUAL");
    if (r.first_discrepancy) {
        const char* v0 = r.lhs.vars() == SeriesVars::Q0Q1 ? "q0" : "z";
        const char* v1 = r.lhs.vars() == SeriesVars::Q0Q1 ? "q1" : "q";
        os << "  first discrepancy at " << monomial_str(r.first_discrepancy->m, v0, v1)
           << ": lhs=" << r.first_discrepancy->lhs.str()
           << " rhs=" << r.first_discrepancy->rhs.str();
    }
    os << "  (" << r.elapsed.count() << " ms)";
    return os.str();
}

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    std::chrono::milliseconds done() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - t0);
    }
};

} // namespace

CheckReport check_theorem1(int D) {
    Timer t;
    CheckReport r;
    r.check_id = "theorem1";
    r.parameters = Json{{"degree", D}};
    r.lhs = enumerate_partitions(1, D).sum;

    // prod_k (1 + q0^k q1^(k-1))^k from the creation factors, times the
    // super-rigid sum under (z,q) -> (q1, q0q1).  A (z,q) term z^a q^b
    // lands at total degree a+2b, so N <= D/2 and z-degree <= D suffice.
    Series factor = macmahon(-1, Monomial{0, -1}, Monomial{1, 1}, SeriesVars::Q0Q1,
                             TruncSpec::by_total(D), /*invert=*/true);
    Series zinf = substitute_zq_to_q0q1(superrigid_sum(D / 2, 1, D, D / 2), D);
    r.rhs = factor * zinf;
    r.elapsed = t.done();
    compare_sides(r);
    return r;
}

CheckReport check_eq_general_n(int n, int D) {
    Timer t;
    CheckReport r;
    r.check_id = "general_n";
    r.parameters = Json{{"n", n}, {"degree", D}};
    r.lhs = enumerate_partitions(n, D).sum;
    r.rhs = formula_Z(n, D);
    r.elapsed = t.done();
    compare_sides(r);
    return r;
}

CheckReport check_shuffle_recursion(int n, int k, int D) {
    if (k < 1) throw std::invalid_argument("check_shuffle_recursion: k must be >= 1");
    Timer t;
    CheckReport r;
    r.check_id = "shuffle_recursion";
    r.parameters = Json{{"n", n}, {"k", k}, {"degree", D}};
    r.lhs = enumerate_partitions(n, D).sum;

    WeightPipeline pipe = WeightPipeline::seed_level0(enumerate_partitions(n, D, true, k + 2));
    for (int i = 0; i < k; ++i) pipe.step();
    std::vector<ProductFactor> fs;
    for (int i = 1; i <= k; ++i)
        if (2 * i - 1 <= D) fs.push_back({Monomial{i, i - 1}, 1, (long)(i + n - 1)});
    Series prefix = product_expand(fs, SeriesVars::Q0Q1, TruncSpec::by_total(D));
    r.rhs = prefix * pipe.partition_sum();
    r.elapsed = t.done();
    compare_sides(r);
    return r;
}

CheckReport check_zx(int z_degree, int q_degree) {
    Timer t;
    CheckReport r;
    r.check_id = "zx";
    r.parameters = Json{{"z_degree", z_degree}, {"q_degree", q_degree}};
    r.lhs = superrigid_sum(q_degree, 1, z_degree, q_degree);
    r.rhs = formula_Zx(z_degree, q_degree);
    r.elapsed = t.done();
    compare_sides(r);
    return r;
}

CheckReport check_macmahon(int D) {
    Timer t;
    CheckReport r;
    r.check_id = "macmahon";
    r.parameters = Json{{"degree", D}};
    r.lhs = one_leg_sum_bruteforce(YoungDiagram{}, D);
    r.rhs = macmahon(1, kOne, Monomial{0, 1}, SeriesVars::ZQ, TruncSpec::per_variable(0, D));
    r.elapsed = t.done();
    compare_sides(r);
    return r;
}

CheckReport check_one_leg(const YoungDiagram& lambda, int D) {
    Timer t;
    CheckReport r;
    r.check_id = "one_leg";
    r.parameters = Json{{"lambda", lambda.rows}, {"degree", D}};
    r.lhs = one_leg_sum_bruteforce(lambda, D);
    r.rhs = one_leg_sum_closed(lambda, D);
    r.elapsed = t.done();
    compare_sides(r);
    return r;
}

CheckReport check_cauchy(int n, int D) {
    Timer t;
    CheckReport r;
    r.check_id = "cauchy";
    r.parameters = Json{{"n", n}, {"degree", D}};
    TruncSpec tr = TruncSpec::per_variable(D, D);

    // The lambda sector contributes z^|lambda| q^(>= n|lambda|), so
    // |lambda| <= min(D, D/n) diagrams cover the truncation.
    Series lhs = Series::zero(SeriesVars::ZQ, tr);
    for (const YoungDiagram& lam : enumerate_young(std::min(D, D / std::max(1, n)))) {
        long shift = (long)n * lam.size();
        if (shift > D) continue;
        Series zq = Series::zero(SeriesVars::ZQ, tr);
        zq.add_term({lam.size(), (int)shift}, 1);
        Series st = schur_principal(lam.transpose(), D);
        Series s = schur_principal(lam, D);
        // widen the univariate Schur factors into the bivariate truncation
        Series stw = Series::zero(SeriesVars::ZQ, tr), sw = Series::zero(SeriesVars::ZQ, tr);
        for (const auto& [m, c] : st.terms()) stw.add_term(m, c);
        for (const auto& [m, c] : s.terms()) sw.add_term(m, c);
        lhs += zq * stw * sw;
    }
    r.lhs = lhs;

    Series rhs = Series::one(SeriesVars::ZQ, tr);
    for (int i = 1; i <= D + 2; ++i)
        for (int j = 1; j <= D + 2; ++j) {
            int e = i + j + n - 2;
            if (e <= D) rhs.mul_power_factor({1, e}, 1, 1);
        }
    r.rhs = rhs;
    r.elapsed = t.done();
    compare_sides(r);
    return r;
}

} // namespace pyramid
