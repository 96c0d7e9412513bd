#include "readorder/mgs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "readorder/errors.hpp"
#include "readorder/projection.hpp"

namespace readorder {

namespace {

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

double reading_axis_length(const BBox& b, Orientation orientation) {
    return orientation == Orientation::HorizontalDoc ? b.width() : b.height();
}

std::pair<double, double> reading_axis_interval(const BBox& b,
                                                Orientation orientation) {
    return orientation == Orientation::HorizontalDoc ? std::pair{b.x1, b.x2}
                                                     : std::pair{b.y1, b.y2};
}

BBox union_bbox(const Region& region) {
    BBox u{std::numeric_limits<double>::max(),
           std::numeric_limits<double>::max(), 0.0, 0.0};
    auto extend = [&u](const Block& b) {
        u.x1 = std::min(u.x1, b.bbox.x1);
        u.y1 = std::min(u.y1, b.bbox.y1);
        u.x2 = std::max(u.x2, b.bbox.x2);
        u.y2 = std::max(u.y2, b.bbox.y2);
    };
    for (const Block& b : region.members) extend(b);
    for (const Block& b : region.cross_members) extend(b);
    return u;
}

void sort_reading(std::vector<Block>& blocks) {
    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
        if (a.bbox.y1 != b.bbox.y1) return a.bbox.y1 < b.bbox.y1;
        if (a.bbox.x1 != b.bbox.x1) return a.bbox.x1 < b.bbox.x1;
        return a.id < b.id;
    });
}

void emit_atomic(const Block& b, std::vector<AtomicRegion>& out) {
    AtomicRegion region;
    region.bbox = b.bbox;
    region.content_type = ContentType::SingleLayout;
    region.label = b.label;
    region.index = static_cast<int>(out.size());
    region.block_id = b.id;
    out.push_back(region);
}

void adaptive_recurse(Region region, const Params& params,
                      Orientation orientation, std::vector<AtomicRegion>& out) {
    if (region.members.empty()) return;
    if (region.members.size() == 1) {
        emit_atomic(region.members.front(), out);
        return;
    }

    const double tau_d = density(region);
    const Axis first = tau_d > params.theta_v ? Axis::Y : Axis::X;
    const Axis second = first == Axis::Y ? Axis::X : Axis::Y;

    for (Axis axis : {first, second}) {
        const ProjectionProfile profile = project(region.members, axis);
        const auto gaps = find_gaps(profile, params.min_gap);
        if (gaps.empty()) continue;

        std::vector<double> cuts;
        cuts.reserve(gaps.size());
        for (const auto& [lo, hi] : gaps) cuts.push_back((lo + hi) / 2.0);

        auto member_groups = split_at_cuts(region.members, axis, cuts);
        auto cross_groups = split_at_cuts(region.cross_members, axis, cuts);

        std::vector<size_t> group_order(member_groups.size());
        for (size_t i = 0; i < group_order.size(); ++i) group_order[i] = i;
        if (axis == Axis::X && orientation == Orientation::VerticalDoc) {
            std::reverse(group_order.begin(), group_order.end());
        }

        for (size_t g : group_order) {
            Region sub;
            sub.members = std::move(member_groups[g]);
            sub.cross_members = std::move(cross_groups[g]);
            if (sub.members.empty() && sub.cross_members.empty()) continue;
            sub.bbox = union_bbox(sub);
            adaptive_recurse(std::move(sub), params, orientation, out);
        }
        return;
    }

    // Unsplittable multi-block region: finalize in (y1, x1) order.
    sort_reading(region.members);
    for (const Block& b : region.members) emit_atomic(b, out);
}

// Bands occupied by anchors along the split axis, merged where overlapping.
std::vector<std::pair<double, double>> merged_bands(
    const std::vector<const Block*>& anchors, Axis axis) {
    std::vector<std::pair<double, double>> bands;
    bands.reserve(anchors.size());
    for (const Block* a : anchors) {
        bands.emplace_back(axis == Axis::Y ? a->bbox.y1 : a->bbox.x1,
                           axis == Axis::Y ? a->bbox.y2 : a->bbox.x2);
    }
    std::sort(bands.begin(), bands.end());
    std::vector<std::pair<double, double>> merged;
    for (const auto& band : bands) {
        if (!merged.empty() && band.first <= merged.back().second) {
            merged.back().second = std::max(merged.back().second, band.second);
        } else {
            merged.push_back(band);
        }
    }
    return merged;
}

} // namespace

Orientation infer_orientation(const Page& page, const Taxonomy& taxonomy) {
    std::vector<double> ratios;
    ratios.reserve(page.blocks.size());
    for (const Block& b : page.blocks) {
        if (classify(b, taxonomy).cls == SemanticClass::Other) {
            ratios.push_back(aspect_ratio(b.bbox));
        }
    }
    if (ratios.empty()) return Orientation::HorizontalDoc;
    return median(std::move(ratios)) >= 1.0 ? Orientation::HorizontalDoc
                                            : Orientation::VerticalDoc;
}

double length_threshold(std::span<const Block> blocks, Orientation orientation,
                        double beta) {
    if (blocks.empty()) {
        throw EmptyRegionError("length_threshold: empty block sequence");
    }
    std::vector<double> lengths;
    lengths.reserve(blocks.size());
    for (const Block& b : blocks) {
        lengths.push_back(reading_axis_length(b.bbox, orientation));
    }
    return beta * median(std::move(lengths));
}

std::unordered_set<int> detect_cross_layout(std::span<const Block> blocks,
                                            double threshold,
                                            Orientation orientation) {
    std::unordered_set<int> cross;
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (reading_axis_length(blocks[i].bbox, orientation) <= threshold) {
            continue;
        }
        const auto [lo, hi] = reading_axis_interval(blocks[i].bbox, orientation);
        int overlapping = 0;
        for (size_t j = 0; j < blocks.size() && overlapping < 2; ++j) {
            if (j == i) continue;
            const auto [jlo, jhi] =
                reading_axis_interval(blocks[j].bbox, orientation);
            if (std::min(hi, jhi) - std::max(lo, jlo) > 0.0) ++overlapping;
        }
        if (overlapping >= 2) cross.insert(blocks[i].id);
    }
    return cross;
}

std::vector<Region> pre_segment(const Page& page, std::span<const Block> core,
                                std::span<const Block> mask_candidates,
                                std::span<const Block> text_blocks,
                                const Params& params, Orientation orientation,
                                std::vector<int>* anchor_ids) {
    const Point page_center{page.width / 2.0, page.height / 2.0};

    // Text-line thickness: block height on horizontal pages, block width on
    // vertical ones.
    double isolation_radius = 0.0;
    if (!text_blocks.empty()) {
        std::vector<double> spans;
        spans.reserve(text_blocks.size());
        for (const Block& b : text_blocks) {
            spans.push_back(orientation == Orientation::HorizontalDoc
                                ? b.bbox.height()
                                : b.bbox.width());
        }
        isolation_radius = params.isolation_multiplier * median(std::move(spans));
    }

    std::vector<const Block*> anchors;
    for (const Block& candidate : mask_candidates) {
        const Point c = center(candidate.bbox);
        const double normalizer =
            aspect_ratio(candidate.bbox) < params.aspect_pivot ? page.width
                                                               : page.height;
        const double dist = std::hypot(c.x - page_center.x, c.y - page_center.y);
        if (normalizer <= 0.0 || dist / normalizer > params.center_bound) continue;

        bool isolated = true;
        for (const Block& text : text_blocks) {
            if (boundary_distance(candidate.bbox, text.bbox) <= isolation_radius) {
                isolated = false;
                break;
            }
        }
        if (!isolated) continue;
        anchors.push_back(&candidate);
        if (anchor_ids) anchor_ids->push_back(candidate.id);
    }

    const Axis axis =
        orientation == Orientation::HorizontalDoc ? Axis::Y : Axis::X;

    std::vector<Region> regions;
    if (anchors.empty()) {
        Region whole;
        whole.members.assign(core.begin(), core.end());
        if (!whole.members.empty()) whole.bbox = union_bbox(whole);
        regions.push_back(std::move(whole));
        return regions;
    }

    // Complement intervals of the merged anchor bands over the page extent.
    const double page_extent =
        axis == Axis::Y ? page.height : page.width;
    const auto bands = merged_bands(anchors, axis);
    std::vector<std::pair<double, double>> slots;
    double cursor = 0.0;
    for (const auto& band : bands) {
        if (band.first > cursor) slots.emplace_back(cursor, band.first);
        cursor = std::max(cursor, band.second);
    }
    if (cursor < page_extent) slots.emplace_back(cursor, page_extent);
    if (slots.empty()) slots.emplace_back(0.0, page_extent);

    std::vector<std::vector<Block>> groups(slots.size());
    for (const Block& b : core) {
        const auto [lo, hi] =
            axis == Axis::Y ? std::pair{b.bbox.y1, b.bbox.y2}
                            : std::pair{b.bbox.x1, b.bbox.x2};
        size_t best = 0;
        double best_overlap = -1.0;
        for (size_t s = 0; s < slots.size(); ++s) {
            const double ov =
                std::max(0.0, std::min(hi, slots[s].second) -
                                  std::max(lo, slots[s].first));
            if (ov > best_overlap) {
                best_overlap = ov;
                best = s;
            }
        }
        if (best_overlap <= 0.0) {
            // Fully inside an anchor band: nearest slot by center.
            const double mid = (lo + hi) / 2.0;
            double best_dist = std::numeric_limits<double>::max();
            for (size_t s = 0; s < slots.size(); ++s) {
                const double slot_mid = (slots[s].first + slots[s].second) / 2.0;
                const double d = std::abs(mid - slot_mid);
                if (d < best_dist) {
                    best_dist = d;
                    best = s;
                }
            }
        }
        groups[best].push_back(b);
    }

    std::vector<size_t> slot_order(slots.size());
    for (size_t i = 0; i < slot_order.size(); ++i) slot_order[i] = i;
    if (axis == Axis::X && orientation == Orientation::VerticalDoc) {
        std::reverse(slot_order.begin(), slot_order.end());
    }
    for (size_t s : slot_order) {
        if (groups[s].empty()) continue;
        Region region;
        region.members = std::move(groups[s]);
        region.bbox = union_bbox(region);
        regions.push_back(std::move(region));
    }
    if (regions.empty()) regions.emplace_back();
    return regions;
}

double density(const Region& region) {
    double cross_area = 0.0;
    double single_area = 0.0;
    for (const Block& b : region.cross_members) cross_area += b.bbox.area();
    for (const Block& b : region.members) single_area += b.bbox.area();
    if (single_area <= 0.0) {
        return cross_area > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    }
    return cross_area / single_area;
}

std::vector<AtomicRegion> adaptive_cut(const Region& region, const Params& params,
                                       Orientation orientation) {
    std::vector<AtomicRegion> out;
    adaptive_recurse(region, params, orientation, out);
    return out;
}

MgsResult mgs_order(const Page& page, const MaskPartition& partition,
                    const Params& params, const Taxonomy& taxonomy) {
    MgsResult result;
    result.orientation = params.orientation_override
                             ? *params.orientation_override
                             : infer_orientation(page, taxonomy);

    for (const Block& b : partition.masked) {
        MaskedBlock mb;
        mb.block = b;
        const Classification c = classify(b, taxonomy);
        mb.cls = c.cls;
        mb.title_orientation = c.title_orientation;
        result.masked.push_back(std::move(mb));
    }

    if (partition.core.empty()) return result;

    // Phase 1: cross-layout detection over the core.
    const double threshold =
        length_threshold(partition.core, result.orientation, params.beta);
    const auto cross_ids =
        detect_cross_layout(partition.core, threshold, result.orientation);

    std::vector<Block> single;
    std::vector<Block> cross;
    single.reserve(partition.core.size());
    for (const Block& b : partition.core) {
        (cross_ids.count(b.id) ? cross : single).push_back(b);
    }
    for (const Block& b : cross) {
        MaskedBlock mb;
        mb.block = b;
        mb.cls = SemanticClass::CrossLayout;
        result.masked.push_back(std::move(mb));
    }

    // Phase 2: geometric pre-segmentation. Candidates are all masked blocks;
    // isolation is tested against the remaining (text) backbone.
    std::vector<Block> candidates = partition.masked;
    candidates.insert(candidates.end(), cross.begin(), cross.end());
    std::vector<int> anchor_ids;
    std::vector<Region> regions = pre_segment(page, single, candidates, single,
                                              params, result.orientation,
                                              &anchor_ids);

    // Cross-layout blocks ride along for density evaluation; assign each to
    // the region overlapping it most (first region on ties). Anchors were
    // consumed as cut lines and stay out of every region.
    for (const Block& cb : cross) {
        if (std::find(anchor_ids.begin(), anchor_ids.end(), cb.id) !=
            anchor_ids.end()) {
            continue;
        }
        size_t best = 0;
        double best_overlap = -1.0;
        for (size_t r = 0; r < regions.size(); ++r) {
            if (regions[r].members.empty()) continue;
            const BBox& rb = regions[r].bbox;
            const double ov =
                overlap_1d(cb.bbox.x1, cb.bbox.x2, rb.x1, rb.x2) *
                overlap_1d(cb.bbox.y1, cb.bbox.y2, rb.y1, rb.y2);
            if (ov > best_overlap) {
                best_overlap = ov;
                best = r;
            }
        }
        if (best < regions.size()) regions[best].cross_members.push_back(cb);
    }

    // Phase 3: density-driven refinement, indices contiguous across regions.
    for (const Region& region : regions) {
        for (AtomicRegion atomic : adaptive_cut(region, params, result.orientation)) {
            atomic.index = static_cast<int>(result.backbone.size());
            result.backbone.push_back(std::move(atomic));
        }
    }
    return result;
}

} // namespace readorder
