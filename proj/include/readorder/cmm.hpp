#pragma once

#include <vector>

#include "readorder/mgs.hpp"
#include "readorder/model.hpp"

namespace readorder {

// Scale-sensitive weights with staggered magnitudes so the four distance
// terms act as a strict priority ladder: (m^2, m, 1, 1/m) with m the larger
// page dimension.
struct DynamicWeights {
    double w1 = 1.0;
    double w2 = 1.0;
    double w3 = 1.0;
    double w4 = 1.0;
};

// Per-class multipliers applied elementwise on top of the dynamic weights.
struct EdgeWeights {
    double e1 = 1.0;
    double e2 = 1.0;
    double e3 = 1.0;
    double e4 = 1.0;
};

struct PhiVector {
    double v1 = 0.0; // direction / projection-overlap gate
    double v2 = 0.0; // boundary proximity from center offsets
    double v3 = 0.0; // vertical continuity
    double v4 = 0.0; // horizontal (left-edge) ordering
};

enum class BoxDirection { Horizontal, Vertical };

inline BoxDirection box_direction(const BBox& b) {
    return aspect_ratio(b) >= 1.0 ? BoxDirection::Horizontal
                                  : BoxDirection::Vertical;
}

DynamicWeights dynamic_weights(double page_width, double page_height);

// Title x horizontal -> (1, 0.1, 0.1, 1); title x vertical -> (0.2, 0.1, 1, 1);
// cross-layout -> (1, 1, 0.1, 1); otherwise -> (1, 1, 1, 0.1).
EdgeWeights edge_weights(SemanticClass cls, TitleOrientation title_orientation);

// The four geometric constraints between a pending element and an ordered
// candidate. All components are non-negative, so partial sums of the
// weighted distance are monotone and early termination is exact.
PhiVector phi(const BBox& pending, const BBox& anchor, SemanticClass pending_cls,
              double page_height, double tau_overlap);

double weighted_distance(const PhiVector& v, const DynamicWeights& w,
                         const EdgeWeights& e);

double distance(const BBox& pending, SemanticClass pending_cls,
                const BBox& anchor, double page_width, double page_height,
                double tau_overlap, TitleOrientation title_orientation);

// One (pending -> anchor) decision, recorded for diagnostics and tests.
struct MatchTrace {
    int pending_id = 0;
    int anchor_id = 0;
    bool inserted_after = false;
};

// Restores masked elements into the backbone: classes are processed in
// descending priority; each pending block attaches to the candidate
// minimizing the weighted distance and is inserted into the running order
// next to it (before when the pending element sits above the anchor, after
// otherwise). Cross-layout elements divide the vertical flow instead: they
// are placed before the first entry fully below them, falling back to the
// last entry fully above, then to the distance argmin. The candidate set
// only grows, so later passes may attach to earlier restorations. Returns a
// permutation of all page block ids.
OrderResult match_all(const Page& page, const std::vector<AtomicRegion>& backbone,
                      const std::vector<MaskedBlock>& masked, const Params& params,
                      std::vector<MatchTrace>* trace = nullptr);

} // namespace readorder
