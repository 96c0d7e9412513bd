#pragma once

#include <span>
#include <utility>
#include <vector>

#include "readorder/model.hpp"

namespace readorder {

enum class Axis { X, Y };

struct ProfileInterval {
    double start = 0.0;
    double end = 0.0;
    int coverage = 0;
};

// Interval decomposition of the blocks' joint extent along one axis.
// Intervals are sorted, non-overlapping, tile the extent exactly, and
// adjacent intervals always differ in coverage.
struct ProjectionProfile {
    Axis axis = Axis::Y;
    std::vector<ProfileInterval> intervals;

    double extent_start() const { return intervals.front().start; }
    double extent_end() const { return intervals.back().end; }
};

// Event-sweep over box edges. Throws EmptyRegionError on empty input.
ProjectionProfile project(std::span<const Block> blocks, Axis axis);

// Maximal zero-coverage intervals of width >= min_gap, strictly inside the
// profile extent. Leading/trailing empty margins are never reported.
std::vector<std::pair<double, double>> find_gaps(const ProjectionProfile& profile,
                                                 double min_gap);

// Partitions blocks at the given sorted cut positions along an axis.
// A block straddling a cut goes to the side holding the larger share of its
// extent; ties go to the earlier side. Returns cuts.size() + 1 groups, some
// possibly empty, ordered by ascending coordinate.
std::vector<std::vector<Block>> split_at_cuts(std::span<const Block> blocks,
                                              Axis axis,
                                              std::span<const double> cuts);

// Plain recursive XY-Cut: horizontal (Y-projection) cuts first at every
// level, then vertical, recursing until regions are atomic. Unsplittable
// multi-block regions are emitted in (y1, x1) order. Output is invariant to
// the input block order.
OrderResult xycut_baseline(const Page& page, double min_gap = 1.0);

// Same recursion over an arbitrary block subset; returns block ids.
std::vector<int> xycut_order(std::span<const Block> blocks, double min_gap);

} // namespace readorder
