#include "pyramid/weights.hpp"

#include <algorithm>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pyramid {

WeightField build_w0_field(Coloring col, Window win) {
    if (win.ymin > -1 || win.ymax < 0 || win.xmin >= win.xmax)
        throw std::invalid_argument("w0 field window must straddle the x axis");
    WeightField f(0, col, win);
    auto target = [&](Vertex corner) {
        return block_parity(corner, col) == Parity::Odd ? Monomial{1, 0} : Monomial{0, -1};
    };
    for (int x = win.xmin; x < win.xmax; ++x) {
        // Exactly one of the rows -1, 0 carries the northbound edge.
        Dimer d0({x, 0}, {x + 1, 0});
        int y0 = (direction_of(d0, col) == Direction::N) ? 0 : -1;
        internal_check(direction_of(Dimer({x, y0}, {x + 1, y0}), col) == Direction::N,
                       "northbound normalization row");
        f.set_horizontal({x, y0}, kOne);
        for (int y = y0 + 1; y <= win.ymax; ++y)
            f.set_horizontal({x, y}, target({x, y - 1}) / f.horizontal({x, y - 1}));
        for (int y = y0 - 1; y >= win.ymin; --y)
            f.set_horizontal({x, y}, target({x, y}) / f.horizontal({x, y + 1}));
    }
    return f;
}

WeightField transport_field(const WeightField& f) {
    Window nw = f.window().shrunk(1);
    WeightField out(f.level() + 1, f.coloring().flipped(), nw);
    for (int y = nw.ymin; y <= nw.ymax; ++y)
        for (int x = nw.xmin; x < nw.xmax; ++x) {
            Dimer e({x, y}, {x + 1, y});
            Dimer pre = partner_in_odd_block(e, f.coloring());
            out.set_horizontal({x, y}, f.horizontal(pre.u));
        }
    return out;
}

Monomial weight_under_field(const DimerConfig& cfg, const WeightField& f) {
    if (Coloring::usual(cfg.n) != f.coloring())
        throw std::invalid_argument("field coloring does not match configuration length");
    Monomial w = kOne;
    for (const Dimer& d : cfg.added)
        if (d.horizontal()) w = w * f.horizontal(d.u);
    for (const Dimer& d : cfg.removed)
        if (d.horizontal()) w = w / f.horizontal(d.u);
    return w;
}

namespace {

// Deletes the odd blocks of a full cover and re-encodes the result as a
// vertically refilled DeficientConfig.
PipelineItem make_item(const Board& full, int n, const Board& eps, Monomial w_full,
                       Monomial odd_block_product) {
    Coloring col = Coloring::usual(n);
    DeleteResult del = delete_blocks(full, Parity::Odd, col);
    Board refilled = del.board;
    for (Vertex c : del.corners) {
        refilled.add(Dimer({c.x, c.y}, {c.x, c.y + 1}));
        refilled.add(Dimer({c.x + 1, c.y}, {c.x + 1, c.y + 1}));
    }
    PipelineItem item;
    item.def.filled = DimerConfig::from_board(n, refilled, eps);
    item.def.missing = del.corners;
    item.def.missing_parity = Parity::Odd;
    item.w = w_full;
    for (int i = 0; i < del.horizontal_pairs; ++i) item.w = item.w / odd_block_product;
    return item;
}

void sort_dedup_items(std::vector<PipelineItem>& items) {
    std::sort(items.begin(), items.end(), [](const PipelineItem& a, const PipelineItem& b) {
        return a.def.canonical_key() < b.def.canonical_key();
    });
    std::vector<PipelineItem> out;
    for (auto& it : items) {
        if (!out.empty() && out.back().def.canonical_key() == it.def.canonical_key()) {
            internal_check(out.back().w == it.w, "deficient weight disagreement");
            continue;
        }
        out.push_back(std::move(it));
    }
    items = std::move(out);
}

Monomial odd_product_at(int level) { return Monomial{level + 1, level}; }

} // namespace

WeightPipeline WeightPipeline::seed_level0(const Enumerated& e) {
    std::vector<PipelineItem> items;
    for (const auto& [cfg, w] : e.items)
        items.push_back(make_item(cfg.to_board(e.eps), e.n, e.eps, w, odd_product_at(0)));
    sort_dedup_items(items);
    return WeightPipeline(e.n, 0, e.max_degree, e.win, std::move(items));
}

WeightPipeline WeightPipeline::seed_with_field(const Enumerated& e, const WeightField& f) {
    if (f.coloring() != Coloring::usual(e.n))
        throw std::invalid_argument("seed field coloring does not match configuration length");
    std::vector<PipelineItem> items;
    for (const auto& [cfg, w] : e.items) {
        PipelineItem it = make_item(cfg.to_board(e.eps), e.n, e.eps, kOne, kOne);
        it.w = weight_under_field(it.def.filled, f);
        items.push_back(std::move(it));
    }
    sort_dedup_items(items);
    // Field-weighted seeds are only complete up to the enumeration's brick
    // bound; the caller chooses it so that all weights of degree <= D are
    // present.  Keep everything and let partition_sum truncate.
    return WeightPipeline(e.n, f.level(), e.max_degree, e.win, std::move(items));
}

void WeightPipeline::step() {
    int a = level_;
    Monomial fill = odd_product_at(a);          // even-block product at level a+1
    Monomial del_product = odd_product_at(a + 1);
    Coloring col = Coloring::usual(len_);

    Board eps = empty_room_board(len_, win_);
    Window nwin = win_.shrunk(1);
    Board eps_next = empty_room_board(len_ + 1, nwin);

    std::vector<PipelineItem> next;
    auto expand = [&](const PipelineItem& item, std::vector<PipelineItem>& sink) {
        Board b = item.def.to_board(eps);
        SlideResult sl = slide(b, col);
        long budget = (D_ - item.w.total_degree()) / (2 * a + 1);
        internal_check(sl.missing.size() < 8 * sizeof(unsigned long), "fill mask overflow");
        for (unsigned long mask = 0; mask < (1UL << sl.missing.size()); ++mask) {
            int bits = __builtin_popcountl(mask);
            if (bits > budget) continue;
            Monomial w = item.w * fill.pow(bits);
            if (w.total_degree() > D_) continue;
            Board full = fill_blocks(sl.board, sl.missing, mask);
            sink.push_back(make_item(full, len_ + 1, eps_next, w, del_product));
        }
    };

#ifdef _OPENMP
    {
        std::vector<std::vector<PipelineItem>> buckets;
#pragma omp parallel
        {
#pragma omp single
            buckets.resize(omp_get_num_threads());
            std::vector<PipelineItem>& mine = buckets[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 4)
            for (long i = 0; i < (long)items_.size(); ++i) expand(items_[i], mine);
        }
        for (auto& bk : buckets)
            next.insert(next.end(), std::make_move_iterator(bk.begin()),
                        std::make_move_iterator(bk.end()));
    }
#else
    for (const PipelineItem& item : items_) expand(item, next);
#endif

    sort_dedup_items(next);
    items_ = std::move(next);
    ++len_;
    ++level_;
    win_ = nwin;
}

Series WeightPipeline::partition_sum() const {
    Series total(SeriesVars::Q0Q1, TruncSpec::by_total(D_));
    Monomial f = odd_product_at(level_);
    for (const PipelineItem& item : items_) {
        internal_check(item.w.nonnegative(), "deficient cover weight has a negative exponent");
        if (item.w.total_degree() > D_) continue;
        Series term(SeriesVars::Q0Q1, TruncSpec::by_total(D_));
        term.add_term(item.w, 1);
        term.mul_power_factor(f, 1, (long)item.def.missing.size());
        total += term;
    }
    return total;
}

} // namespace pyramid
