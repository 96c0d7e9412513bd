#include "readorder/projection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "readorder/errors.hpp"

namespace readorder {

namespace {

std::pair<double, double> axis_extent(const BBox& b, Axis axis) {
    return axis == Axis::X ? std::pair{b.x1, b.x2} : std::pair{b.y1, b.y2};
}

void sort_canonical(std::vector<Block>& blocks) {
    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
        if (a.bbox.y1 != b.bbox.y1) return a.bbox.y1 < b.bbox.y1;
        if (a.bbox.x1 != b.bbox.x1) return a.bbox.x1 < b.bbox.x1;
        if (a.bbox.y2 != b.bbox.y2) return a.bbox.y2 < b.bbox.y2;
        if (a.bbox.x2 != b.bbox.x2) return a.bbox.x2 < b.bbox.x2;
        return a.id < b.id;
    });
}

void xycut_recurse(std::vector<Block> blocks, double min_gap,
                   std::vector<int>& out) {
    if (blocks.empty()) return;
    if (blocks.size() == 1) {
        out.push_back(blocks.front().id);
        return;
    }
    for (Axis axis : {Axis::Y, Axis::X}) {
        const ProjectionProfile profile = project(blocks, axis);
        const auto gaps = find_gaps(profile, min_gap);
        if (gaps.empty()) continue;
        std::vector<double> cuts;
        cuts.reserve(gaps.size());
        for (const auto& [lo, hi] : gaps) cuts.push_back((lo + hi) / 2.0);
        for (auto& part : split_at_cuts(blocks, axis, cuts)) {
            xycut_recurse(std::move(part), min_gap, out);
        }
        return;
    }
    // No gap on either axis: finalize by (y1, x1).
    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
        if (a.bbox.y1 != b.bbox.y1) return a.bbox.y1 < b.bbox.y1;
        if (a.bbox.x1 != b.bbox.x1) return a.bbox.x1 < b.bbox.x1;
        return a.id < b.id;
    });
    for (const Block& b : blocks) out.push_back(b.id);
}

} // namespace

ProjectionProfile project(std::span<const Block> blocks, Axis axis) {
    if (blocks.empty()) throw EmptyRegionError("project: empty block sequence");

    std::vector<double> edges;
    edges.reserve(blocks.size() * 2);
    for (const Block& b : blocks) {
        const auto [lo, hi] = axis_extent(b.bbox, axis);
        edges.push_back(lo);
        edges.push_back(hi);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    ProjectionProfile profile;
    profile.axis = axis;
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        const double lo = edges[i];
        const double hi = edges[i + 1];
        const double mid = (lo + hi) / 2.0;
        int coverage = 0;
        for (const Block& b : blocks) {
            const auto [blo, bhi] = axis_extent(b.bbox, axis);
            if (blo <= mid && mid < bhi) ++coverage;
        }
        if (!profile.intervals.empty() &&
            profile.intervals.back().coverage == coverage) {
            profile.intervals.back().end = hi;
        } else {
            profile.intervals.push_back({lo, hi, coverage});
        }
    }
    if (profile.intervals.empty()) {
        // Single degenerate edge set cannot happen with valid boxes, but keep
        // the invariant that the profile tiles a non-empty extent.
        throw EmptyRegionError("project: degenerate extent");
    }
    return profile;
}

std::vector<std::pair<double, double>> find_gaps(const ProjectionProfile& profile,
                                                 double min_gap) {
    std::vector<std::pair<double, double>> gaps;
    const double lo = profile.extent_start();
    const double hi = profile.extent_end();
    for (const ProfileInterval& iv : profile.intervals) {
        if (iv.coverage != 0) continue;
        if (iv.start <= lo || iv.end >= hi) continue; // margins, not gaps
        if (iv.end - iv.start >= min_gap) gaps.emplace_back(iv.start, iv.end);
    }
    return gaps;
}

std::vector<std::vector<Block>> split_at_cuts(std::span<const Block> blocks,
                                              Axis axis,
                                              std::span<const double> cuts) {
    std::vector<std::vector<Block>> groups(cuts.size() + 1);
    for (const Block& b : blocks) {
        const auto [lo, hi] = axis_extent(b.bbox, axis);
        size_t best = 0;
        double best_share = -1.0;
        double band_lo = -std::numeric_limits<double>::infinity();
        for (size_t g = 0; g <= cuts.size(); ++g) {
            const double band_hi = g < cuts.size()
                                       ? cuts[g]
                                       : std::numeric_limits<double>::infinity();
            const double share =
                std::max(0.0, std::min(hi, band_hi) - std::max(lo, band_lo));
            if (share > best_share) { // strict: ties stay on the earlier side
                best_share = share;
                best = g;
            }
            band_lo = band_hi;
        }
        groups[best].push_back(b);
    }
    return groups;
}

std::vector<int> xycut_order(std::span<const Block> blocks, double min_gap) {
    std::vector<Block> sorted(blocks.begin(), blocks.end());
    sort_canonical(sorted);
    std::vector<int> out;
    out.reserve(sorted.size());
    xycut_recurse(std::move(sorted), min_gap, out);
    return out;
}

OrderResult xycut_baseline(const Page& page, double min_gap) {
    OrderResult result;
    result.page_id = page.page_id;
    result.order = xycut_order(page.blocks, min_gap);
    return result;
}

} // namespace readorder
