#include "pyramid/solid.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "pyramid/board.hpp"

namespace pyramid {

YoungDiagram::YoungDiagram(std::vector<int> r) : rows(std::move(r)) {
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] <= 0 || (i > 0 && rows[i] > rows[i - 1]))
            throw std::invalid_argument("young diagram rows must be positive and weakly decreasing");
    }
}

int YoungDiagram::size() const { return std::accumulate(rows.begin(), rows.end(), 0); }

YoungDiagram YoungDiagram::transpose() const {
    YoungDiagram t;
    if (rows.empty()) return t;
    for (int c = 0; c < rows[0]; ++c) {
        int h = 0;
        while (h < (int)rows.size() && rows[h] > c) ++h;
        t.rows.push_back(h);
    }
    return t;
}

std::vector<std::array<int, 2>> YoungDiagram::cells() const {
    std::vector<std::array<int, 2>> out;
    for (int r = 0; r < (int)rows.size(); ++r)
        for (int c = 0; c < rows[r]; ++c) out.push_back({r, c});
    return out;
}

long YoungDiagram::n_stat() const {
    long s = 0;
    for (size_t i = 0; i < rows.size(); ++i) s += (long)i * rows[i];
    return s;
}

long YoungDiagram::binom2() const {
    long s = 0;
    for (int r : rows) s += (long)r * (r - 1) / 2;
    return s;
}

int YoungDiagram::hook(int r, int c) const {
    int arm = rows[r] - c - 1;
    int leg = 0;
    for (int i = r + 1; i < (int)rows.size() && rows[i] > c; ++i) ++leg;
    return arm + leg + 1;
}

long YoungDiagram::content_sum() const {
    long s = 0;
    for (auto [r, c] : cells()) s += r + c + 1;
    return s;
}

std::vector<YoungDiagram> enumerate_young(int max_size) {
    std::vector<YoungDiagram> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            out.emplace_back();
            out.back().rows = cur;
            return;
        }
        for (int part = std::min(cap, remaining); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    for (int s = 0; s <= max_size; ++s) rec(rec, s, s == 0 ? 1 : s);
    std::sort(out.begin(), out.end());
    return out;
}

bool PlanePartition::member(int x, int y, int z) const {
    if (x < 0 || y < 0 || z < 0) return false;
    if (lambda.contains(x, y)) return true;
    return std::binary_search(extra.begin(), extra.end(), std::array<int, 3>{x, y, z});
}

bool PlanePartition::closed() const {
    for (auto [x, y, z] : extra) {
        if (lambda.contains(x, y)) return false;
        if (x > 0 && !member(x - 1, y, z)) return false;
        if (y > 0 && !member(x, y - 1, z)) return false;
        if (z > 0 && !member(x, y, z - 1)) return false;
    }
    return true;
}

std::vector<PlanePartition> enumerate_plane_partitions(const YoungDiagram& lambda, int max_extra) {
    if (max_extra < 0) throw std::invalid_argument("max_extra must be >= 0");
    int ext = (int)lambda.rows.size() + max_extra + 1;
    if (!lambda.rows.empty()) ext = std::max(ext, lambda.rows[0] + max_extra + 1);

    std::vector<PlanePartition> out;
    std::set<std::vector<std::array<int, 3>>> seen;
    PlanePartition base{lambda, {}};
    out.push_back(base);
    seen.insert(base.extra);
    size_t frontier_begin = 0;
    for (int sz = 0; sz < max_extra; ++sz) {
        size_t frontier_end = out.size();
        for (size_t i = frontier_begin; i < frontier_end; ++i) {
            PlanePartition cur = out[i];
            for (int x = 0; x < ext; ++x)
                for (int y = 0; y < ext; ++y)
                    for (int z = 0; z <= max_extra; ++z) {
                        if (cur.member(x, y, z)) continue;
                        if (x > 0 && !cur.member(x - 1, y, z)) continue;
                        if (y > 0 && !cur.member(x, y - 1, z)) continue;
                        if (z > 0 && !cur.member(x, y, z - 1)) continue;
                        PlanePartition next = cur;
                        next.extra.push_back({x, y, z});
                        std::sort(next.extra.begin(), next.extra.end());
                        if (seen.insert(next.extra).second) out.push_back(std::move(next));
                    }
        }
        frontier_begin = frontier_end;
    }
    std::sort(out.begin(), out.end(), [](const PlanePartition& a, const PlanePartition& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.extra < b.extra;
    });
    return out;
}

Series schur_principal(const YoungDiagram& lambda, int D) {
    TruncSpec t = TruncSpec::per_variable(0, D);
    Series s = Series::zero(SeriesVars::ZQ, t);
    long n = lambda.n_stat();
    if (n > D) return s;
    s.add_term({0, (int)n}, 1);
    Series denom = Series::one(SeriesVars::ZQ, t);
    for (auto [r, c] : lambda.cells()) {
        Series f = Series::one(SeriesVars::ZQ, t);
        f.add_term({0, lambda.hook(r, c)}, -1);
        denom *= f;
    }
    return series_div_unit(s, denom);
}

Series one_leg_sum_bruteforce(const YoungDiagram& lambda, int D) {
    Series s = Series::zero(SeriesVars::ZQ, TruncSpec::per_variable(0, D));
    for (const PlanePartition& p : enumerate_plane_partitions(lambda, D))
        s.add_term({0, p.size()}, 1);
    return s;
}

Series one_leg_sum_closed(const YoungDiagram& lambda, int D) {
    // M(q) / prod_cells (1 - q^hook); equivalently M(q) q^(-binom2(lambda))
    // times the principal specialization of s_{lambda^t}, since
    // n(lambda^t) = binom2(lambda).  The shift is a division: the series
    // itself starts at q^0 (the bare leg).
    TruncSpec t = TruncSpec::per_variable(0, D);
    Series m = macmahon(1, kOne, {0, 1}, SeriesVars::ZQ, t);
    Series hooks = Series::one(SeriesVars::ZQ, t);
    for (auto [r, c] : lambda.cells()) {
        Series f = Series::one(SeriesVars::ZQ, t);
        f.add_term({0, lambda.hook(r, c)}, -1);
        hooks *= f;
    }
    return series_div_unit(m, hooks);
}

long superrigid_weight_exponent(const SuperRigid& sr, int n) {
    return sr.pi0.size() + sr.piInf.size() + (long)(n - 1) * sr.lambda.size() +
           sr.lambda.content_sum();
}

std::vector<std::pair<SuperRigid, Monomial>> enumerate_superrigid(int max_N, int n) {
    if (max_N < 0 || n < 1) throw std::invalid_argument("enumerate_superrigid: bad bounds");
    std::vector<std::pair<SuperRigid, Monomial>> out;
    for (const YoungDiagram& lam : enumerate_young(max_N)) {
        long base = (long)(n - 1) * lam.size() + lam.content_sum();
        if (base > max_N) continue;
        int budget = int(max_N - base);
        auto pis = enumerate_plane_partitions(lam, budget);
        for (const PlanePartition& p0 : pis) {
            if (p0.size() > budget) continue;
            for (const PlanePartition& pI : pis) {
                if (p0.size() + pI.size() > budget) continue;
                SuperRigid sr{p0, lam, pI};
                long N = base + p0.size() + pI.size();
                out.push_back({std::move(sr), Monomial{lam.size(), (int)N}});
            }
        }
    }
    return out;
}

Series superrigid_sum(int max_N, int n, int z_degree, int q_degree) {
    internal_check(q_degree <= max_N, "superrigid_sum: q truncation exceeds enumeration bound");
    Series s = Series::zero(SeriesVars::ZQ, TruncSpec::per_variable(z_degree, q_degree));
    for (const auto& [sr, w] : enumerate_superrigid(max_N, n)) s.add_term(w, 1);
    return s;
}

std::vector<Move> move_sequence(const SuperRigid& sr, int n) {
    std::vector<Move> out;
    auto cells = sr.lambda.cells();
    std::sort(cells.begin(), cells.end(), [](auto a, auto b) {
        if (a[0] + a[1] != b[0] + b[1]) return a[0] + a[1] < b[0] + b[1];
        return a < b;
    });
    for (auto [i, j] : cells) out.push_back({MoveKind::LegLog, Monomial{1, i + j + n}});
    for (int k = 0; k < sr.pi0.size(); ++k) out.push_back({MoveKind::BoxLeft, Monomial{0, 1}});
    for (int k = 0; k < sr.piInf.size(); ++k) out.push_back({MoveKind::BoxRight, Monomial{0, 1}});
    return out;
}

} // namespace pyramid
