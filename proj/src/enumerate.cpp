#include "pyramid/enumerate.hpp"

#include <algorithm>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pyramid {

std::vector<Flip> increasing_flips(const Board& b, Coloring col) {
    std::vector<Flip> out;
    const Window& w = b.window();
    for (int y = w.ymin; y < w.ymax; ++y)
        for (int x = w.xmin; x < w.xmax; ++x) {
            Vertex c{x, y};
            BlockState st = b.block_state(c);
            if (st == BlockState::Other) continue;
            Parity p = block_parity(c, col);
            if (p == Parity::Odd && st == BlockState::VerticalPair) out.push_back({c, Parity::Odd});
            if (p == Parity::Even && st == BlockState::HorizontalPair) out.push_back({c, Parity::Even});
        }
    return out;
}

void apply_flip(Board& b, const Flip& f) {
    Vertex c = f.corner;
    Dimer vl({c.x, c.y}, {c.x, c.y + 1}), vr({c.x + 1, c.y}, {c.x + 1, c.y + 1});
    Dimer hb({c.x, c.y}, {c.x + 1, c.y}), ht({c.x, c.y + 1}, {c.x + 1, c.y + 1});
    if (f.parity == Parity::Odd) {
        b.remove(vl);
        b.remove(vr);
        b.add(hb);
        b.add(ht);
    } else {
        b.remove(hb);
        b.remove(ht);
        b.add(vl);
        b.add(vr);
    }
}

namespace {

struct Child {
    std::string key;
    DimerConfig cfg;
    Monomial w;
};

void sort_dedup(std::vector<Child>& cs) {
    std::sort(cs.begin(), cs.end(), [](const Child& a, const Child& b) { return a.key < b.key; });
    std::vector<Child> out;
    for (auto& c : cs) {
        if (!out.empty() && out.back().key == c.key) {
            internal_check(out.back().w == c.w, "weight disagreement between flip paths");
            continue;
        }
        out.push_back(std::move(c));
    }
    cs = std::move(out);
}

Enumerated run(int n, int D, bool parallel, int extra_pad) {
    if (n < 1 || D < 0) throw std::invalid_argument("enumerate_partitions: need n >= 1, D >= 0");
    int half = n + 2 * D + 4 + extra_pad;
    Enumerated res;
    res.n = n;
    res.max_degree = D;
    res.win = Window::centered(half);
    res.eps = empty_room_board(n, res.win);
    res.sum = Series(SeriesVars::Q0Q1, TruncSpec::by_total(D));
    Coloring col = Coloring::usual(n);

    std::vector<Child> level;
    level.push_back({"", DimerConfig{n, res.win, {}, {}}, kOne});

    for (int g = 0; g <= D; ++g) {
        for (const Child& c : level) {
            res.items.emplace_back(c.cfg, c.w);
            res.sum.add_term(c.w, 1);
        }
        if (g == D) break;

        std::vector<Child> next;
#ifdef _OPENMP
        if (parallel) {
            std::vector<std::vector<Child>> buckets;
#pragma omp parallel
            {
#pragma omp single
                buckets.resize(omp_get_num_threads());
                std::vector<Child>& mine = buckets[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 8)
                for (long i = 0; i < (long)level.size(); ++i) {
                    Board b = level[i].cfg.to_board(res.eps);
                    for (const Flip& f : increasing_flips(b, col)) {
                        Board nb = b;
                        apply_flip(nb, f);
                        DimerConfig cfg = DimerConfig::from_board(n, nb, res.eps);
                        Monomial w = level[i].w * (f.parity == Parity::Odd ? Monomial{1, 0}
                                                                           : Monomial{0, 1});
                        mine.push_back({cfg.canonical_key(), std::move(cfg), w});
                    }
                }
            }
            for (auto& bk : buckets)
                next.insert(next.end(), std::make_move_iterator(bk.begin()),
                            std::make_move_iterator(bk.end()));
        } else
#endif
        {
            for (const Child& c : level) {
                Board b = c.cfg.to_board(res.eps);
                for (const Flip& f : increasing_flips(b, col)) {
                    Board nb = b;
                    apply_flip(nb, f);
                    DimerConfig cfg = DimerConfig::from_board(n, nb, res.eps);
                    Monomial w =
                        c.w * (f.parity == Parity::Odd ? Monomial{1, 0} : Monomial{0, 1});
                    next.push_back({cfg.canonical_key(), std::move(cfg), w});
                }
            }
        }
        sort_dedup(next);
        for (const Child& c : next) {
            internal_check(c.w.total_degree() == g + 1, "BFS level does not match weight degree");
            auto sup = c.cfg.support();
            internal_check(sup && sup->xmin >= res.win.xmin + 3 && sup->ymin >= res.win.ymin + 3 &&
                               sup->xmax <= res.win.xmax - 3 && sup->ymax <= res.win.ymax - 3,
                           "configuration reached the window boundary; window too small");
        }
        level = std::move(next);
    }
    return res;
}

} // namespace

Enumerated enumerate_partitions(int n, int D, bool parallel, int extra_pad) {
    return run(n, D, parallel, extra_pad);
}

Enumerated enumerate_partitions_serial(int n, int D, int extra_pad) {
    if (n < 1 || D < 0) throw std::invalid_argument("enumerate_partitions: need n >= 1, D >= 0");
    int half = n + 2 * D + 4 + extra_pad;
    Enumerated res;
    res.n = n;
    res.max_degree = D;
    res.win = Window::centered(half);
    res.eps = empty_room_board(n, res.win);
    res.sum = Series(SeriesVars::Q0Q1, TruncSpec::by_total(D));
    Coloring col = Coloring::usual(n);

    // Plain map-based BFS, one level at a time.
    std::map<std::string, std::pair<DimerConfig, Monomial>> level;
    DimerConfig root{n, res.win, {}, {}};
    level.emplace(root.canonical_key(), std::make_pair(root, kOne));
    for (int g = 0; g <= D; ++g) {
        for (const auto& [key, cw] : level) {
            res.items.emplace_back(cw.first, cw.second);
            res.sum.add_term(cw.second, 1);
        }
        if (g == D) break;
        std::map<std::string, std::pair<DimerConfig, Monomial>> next;
        for (const auto& [key, cw] : level) {
            Board b = cw.first.to_board(res.eps);
            for (const Flip& f : increasing_flips(b, col)) {
                Board nb = b;
                apply_flip(nb, f);
                DimerConfig cfg = DimerConfig::from_board(n, nb, res.eps);
                Monomial w =
                    cw.second * (f.parity == Parity::Odd ? Monomial{1, 0} : Monomial{0, 1});
                auto [it, fresh] = next.emplace(cfg.canonical_key(), std::make_pair(cfg, w));
                if (!fresh) internal_check(it->second.second == w, "weight disagreement");
            }
        }
        level = std::move(next);
    }
    return res;
}

} // namespace pyramid
