#include "readorder/cmm.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <list>

namespace readorder {

DynamicWeights dynamic_weights(double page_width, double page_height) {
    const double m = std::max(page_width, page_height);
    return {m * m, m, 1.0, m > 0.0 ? 1.0 / m : 1.0};
}

EdgeWeights edge_weights(SemanticClass cls, TitleOrientation title_orientation) {
    switch (cls) {
    case SemanticClass::Title:
        return title_orientation == TitleOrientation::Horizontal
                   ? EdgeWeights{1.0, 0.1, 0.1, 1.0}
                   : EdgeWeights{0.2, 0.1, 1.0, 1.0};
    case SemanticClass::CrossLayout:
        return {1.0, 1.0, 0.1, 1.0};
    default:
        return {1.0, 1.0, 1.0, 0.1};
    }
}

PhiVector phi(const BBox& pending, const BBox& anchor, SemanticClass pending_cls,
              double page_height, double tau_overlap) {
    PhiVector v;

    // v1: gate on matching direction plus sufficient projection overlap along
    // the pending element's own direction axis (column alignment for
    // horizontal elements, row alignment for vertical ones).
    const BoxDirection dp = box_direction(pending);
    if (dp != box_direction(anchor)) {
        v.v1 = 1.0;
    } else {
        const double iou =
            dp == BoxDirection::Horizontal
                ? iou_1d(pending.x1, pending.x2, anchor.x1, anchor.x2)
                : iou_1d(pending.y1, pending.y2, anchor.y1, anchor.y2);
        v.v1 = iou < tau_overlap ? 1.0 : 0.0;
    }

    // v2: residual center offset. With overlap on one axis the separation on
    // the other axis is what matters; diagonal neighbors pay both.
    const Point cp = center(pending);
    const Point ca = center(anchor);
    const double dx = std::abs(cp.x - ca.x);
    const double dy = std::abs(cp.y - ca.y);
    const bool xo = x_overlaps(pending, anchor);
    const bool yo = y_overlaps(pending, anchor);
    if (xo && yo) {
        v.v2 = std::min(dx, dy);
    } else if (xo) {
        v.v2 = dy;
    } else if (yo) {
        v.v2 = dx;
    } else {
        v.v2 = dx + dy;
    }

    // v3: vertical continuity. Cross-layout elements bind to the first
    // candidate below them and otherwise to the nearest candidate above;
    // the 2H offset keeps the term non-negative without moving the argmin.
    if (pending_cls == SemanticClass::CrossLayout) {
        const bool anchor_below = anchor.y1 >= pending.y2;
        v.v3 = anchor_below ? anchor.y1 : 2.0 * page_height - anchor.y2;
    } else {
        v.v3 = anchor.y1;
    }

    // v4: left-to-right reading bias via the candidate's left edge.
    v.v4 = anchor.x1;
    return v;
}

double weighted_distance(const PhiVector& v, const DynamicWeights& w,
                         const EdgeWeights& e) {
    return w.w1 * e.e1 * v.v1 + w.w2 * e.e2 * v.v2 + w.w3 * e.e3 * v.v3 +
           w.w4 * e.e4 * v.v4;
}

double distance(const BBox& pending, SemanticClass pending_cls,
                const BBox& anchor, double page_width, double page_height,
                double tau_overlap, TitleOrientation title_orientation) {
    return weighted_distance(
        phi(pending, anchor, pending_cls, page_height, tau_overlap),
        dynamic_weights(page_width, page_height),
        edge_weights(pending_cls, title_orientation));
}

namespace {

struct Entry {
    int block_id = 0;
    BBox bbox;
    SemanticClass cls = SemanticClass::Other;
    bool is_backbone = false;
    int direct_anchor_id = -1;
    bool inserted_after = false;
};

using EntryList = std::list<Entry>;

bool pending_before_anchor(const BBox& pending, const BBox& anchor) {
    const double pc = (pending.y1 + pending.y2) / 2.0;
    const double ac = (anchor.y1 + anchor.y2) / 2.0;
    if (pc != ac) return pc < ac;
    if (pending.y1 != anchor.y1) return pending.y1 < anchor.y1;
    return pending.x1 <= anchor.x1;
}

void insert_relative(EntryList& entries, EntryList::iterator anchor_it,
                     Entry pending, bool after) {
    pending.direct_anchor_id = anchor_it->block_id;
    pending.inserted_after = after;
    if (!after) {
        entries.insert(anchor_it, std::move(pending));
        return;
    }
    auto pos = std::next(anchor_it);
    while (pos != entries.end() && pos->inserted_after &&
           pos->direct_anchor_id == anchor_it->block_id) {
        ++pos;
    }
    entries.insert(pos, std::move(pending));
}

void sort_by_position(std::vector<const MaskedBlock*>& blocks) {
    std::sort(blocks.begin(), blocks.end(),
              [](const MaskedBlock* a, const MaskedBlock* b) {
                  if (a->block.bbox.y1 != b->block.bbox.y1)
                      return a->block.bbox.y1 < b->block.bbox.y1;
                  if (a->block.bbox.x1 != b->block.bbox.x1)
                      return a->block.bbox.x1 < b->block.bbox.x1;
                  return a->block.id < b->block.id;
              });
}

} // namespace

OrderResult match_all(const Page& page, const std::vector<AtomicRegion>& backbone,
                      const std::vector<MaskedBlock>& masked, const Params& params,
                      std::vector<MatchTrace>* trace) {
    const DynamicWeights weights = dynamic_weights(page.width, page.height);

    EntryList entries;
    for (const AtomicRegion& region : backbone) {
        Entry e;
        e.block_id = region.block_id;
        e.bbox = region.bbox;
        e.cls = SemanticClass::Other;
        e.is_backbone = true;
        entries.push_back(e);
    }

    std::vector<const MaskedBlock*> pending;
    pending.reserve(masked.size());
    for (const MaskedBlock& mb : masked) pending.push_back(&mb);

    // Degenerate page with every block masked: seed the highest-priority
    // masked class as anchors in (y1, x1) order, then match the rest.
    if (entries.empty() && !pending.empty()) {
        int best = -1;
        for (const MaskedBlock* mb : pending) {
            best = std::max(best, class_priority(mb->cls));
        }
        std::vector<const MaskedBlock*> seeds;
        std::vector<const MaskedBlock*> rest;
        for (const MaskedBlock* mb : pending) {
            (class_priority(mb->cls) == best ? seeds : rest).push_back(mb);
        }
        sort_by_position(seeds);
        for (const MaskedBlock* mb : seeds) {
            Entry e;
            e.block_id = mb->block.id;
            e.bbox = mb->block.bbox;
            e.cls = mb->cls;
            e.is_backbone = true;
            entries.push_back(e);
        }
        pending = std::move(rest);
    }

    std::vector<const MaskedBlock*> unmatched;

    const std::array<SemanticClass, 4> class_order = {
        SemanticClass::CrossLayout, SemanticClass::Title, SemanticClass::Vision,
        SemanticClass::Other};

    for (SemanticClass current : class_order) {
        std::vector<const MaskedBlock*> batch;
        for (const MaskedBlock* mb : pending) {
            if (mb->cls == current) batch.push_back(mb);
        }
        if (batch.empty()) continue;
        sort_by_position(batch);

        for (const MaskedBlock* mb : batch) {
            // A valid candidate pool requires a strictly higher-priority
            // element or a backbone anchor in the sequence.
            bool eligible = false;
            for (const Entry& e : entries) {
                if (e.is_backbone ||
                    class_priority(e.cls) > class_priority(current)) {
                    eligible = true;
                    break;
                }
            }
            if (!eligible) {
                unmatched.push_back(mb);
                continue;
            }

            const EdgeWeights edges = edge_weights(current, mb->title_orientation);
            double best_distance = std::numeric_limits<double>::infinity();
            auto best_it = entries.end();
            for (auto it = entries.begin(); it != entries.end(); ++it) {
                const PhiVector v = phi(mb->block.bbox, it->bbox, current,
                                        page.height, params.tau_overlap);
                const std::array<double, 4> terms = {
                    weights.w1 * edges.e1 * v.v1, weights.w2 * edges.e2 * v.v2,
                    weights.w3 * edges.e3 * v.v3, weights.w4 * edges.e4 * v.v4};
                double current_distance = 0.0;
                bool pruned = false;
                for (double term : terms) {
                    current_distance += term;
                    if (params.early_termination &&
                        current_distance > best_distance) {
                        pruned = true;
                        break;
                    }
                }
                if (!pruned && current_distance < best_distance) {
                    best_distance = current_distance;
                    best_it = it;
                }
            }
            if (best_it == entries.end()) {
                unmatched.push_back(mb);
                continue;
            }

            // Spanning elements divide the vertical flow: they read after
            // everything fully above them and before everything fully below.
            // The band scan realizes that exactly; the distance argmin remains
            // the tie-breaker when every candidate straddles the band.
            bool after = !pending_before_anchor(mb->block.bbox, best_it->bbox);
            if (current == SemanticClass::CrossLayout) {
                auto below = entries.end();
                for (auto it = entries.begin(); it != entries.end(); ++it) {
                    if (it->bbox.y1 >= mb->block.bbox.y2) {
                        below = it;
                        break;
                    }
                }
                if (below != entries.end()) {
                    best_it = below;
                    after = false;
                } else {
                    auto above = entries.end();
                    for (auto it = entries.begin(); it != entries.end(); ++it) {
                        if (it->bbox.y2 <= mb->block.bbox.y1) above = it;
                    }
                    if (above != entries.end()) {
                        best_it = above;
                        after = true;
                    }
                }
            }
            if (trace) {
                trace->push_back({mb->block.id, best_it->block_id, after});
            }
            Entry e;
            e.block_id = mb->block.id;
            e.bbox = mb->block.bbox;
            e.cls = current;
            insert_relative(entries, best_it, std::move(e), after);
        }
    }

    OrderResult result;
    result.page_id = page.page_id;
    result.order.reserve(entries.size() + unmatched.size());
    for (const Entry& e : entries) result.order.push_back(e.block_id);
    sort_by_position(unmatched);
    for (const MaskedBlock* mb : unmatched) result.order.push_back(mb->block.id);
    return result;
}

} // namespace readorder
