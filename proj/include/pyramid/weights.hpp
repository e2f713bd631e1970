#pragma once

#include <vector>

#include "pyramid/board.hpp"
#include "pyramid/enumerate.hpp"
#include "pyramid/series.hpp"
#include "pyramid/shuffle.hpp"

namespace pyramid {

// Edge-weight assignment on a window at transport level `a`.  Vertical
// edges always weigh 1 and are not stored; horizontal edges are keyed by
// their left vertex.  Horizontal weights may carry negative q1 exponents.
class WeightField {
public:
    WeightField(int level, Coloring col, Window win)
        : level_(level), col_(col), win_(win),
          h_(std::max<long>(0, win.size()), kOne) {}

    int level() const { return level_; }
    Coloring coloring() const { return col_; }
    const Window& window() const { return win_; }

    bool in_range(Vertex left) const {
        return left.x >= win_.xmin && left.x < win_.xmax && left.y >= win_.ymin &&
               left.y <= win_.ymax;
    }
    Monomial horizontal(Vertex left) const {
        if (!in_range(left)) throw std::invalid_argument("edge outside weight field window");
        return h_[(left.x - win_.xmin) + win_.width() * (left.y - win_.ymin)];
    }
    void set_horizontal(Vertex left, Monomial m) {
        h_[(left.x - win_.xmin) + win_.width() * (left.y - win_.ymin)] = m;
    }

    // Product of the two horizontal edge weights of the block at `corner`.
    Monomial block_product(Vertex corner) const {
        return horizontal(corner) * horizontal({corner.x, corner.y + 1});
    }

private:
    int level_;
    Coloring col_;
    Window win_;
    std::vector<Monomial> h_;
};

// The base weighting: vertical edges weigh 1, the northbound horizontal
// edge of each column pair in rows {-1,0} weighs 1, and the block ratio
// constraints (odd product q0, even product q1^-1) propagate the rest of
// each column chain.
WeightField build_w0_field(Coloring col, Window win);

// Push-forward along the sliding map: the level-(a+1) weight of an edge is
// the level-a weight of its partner under the level-a coloring.  The
// window shrinks by one ring and the coloring flips.
WeightField transport_field(const WeightField& f);

// Normalized weight of a configuration: product of horizontal edge weights
// over the dimers added relative to the empty room, divided by the product
// over those removed.  For a deficient configuration pass its vertical
// filling (vertical edges weigh 1, so the two weights agree).
Monomial weight_under_field(const DimerConfig& cfg, const WeightField& f);

// ---- Degree-truncated shuffle propagation ------------------------------

struct PipelineItem {
    DeficientConfig def; // odd-deficient, stored as vertical fill + corners
    Monomial w;          // its weight at the pipeline's current level
};

// Walks weighted odd-deficient covers up the shuffle tower one length at a
// time, tracking truncated weights.  Creation fan-out is explored lazily;
// fillings whose weight degree exceeds D are pruned, which is sound
// because the fill factor q0^(a+1) q1^a has positive degree.
class WeightPipeline {
public:
    // Seed with all of P_n up to degree D (weights tracked by the BFS).
    static WeightPipeline seed_level0(const Enumerated& e);
    // Seed with the same configurations but weighted by an explicit field
    // of level a (used to start the tower at a > 0); the field coloring
    // must match the configurations' usual coloring.
    static WeightPipeline seed_with_field(const Enumerated& e, const WeightField& f);

    int length() const { return len_; }
    int level() const { return level_; }
    const std::vector<PipelineItem>& items() const { return items_; }

    // One shuffle step: length and level increase by one.
    void step();

    // Sum over full configurations at the current level: every item
    // contributes (1 + q0^(a+1) q1^a)^(#missing) times its weight.
    Series partition_sum() const;

private:
    WeightPipeline(int len, int level, int D, Window win, std::vector<PipelineItem> items)
        : len_(len), level_(level), D_(D), win_(win), items_(std::move(items)) {}

    int len_;   // configurations have this length
    int level_; // weights are w_level
    int D_;
    Window win_;
    std::vector<PipelineItem> items_;
};

} // namespace pyramid
