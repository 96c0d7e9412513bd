#pragma once

#include <algorithm>
#include <cmath>

namespace readorder {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

// Axis-aligned box in page coordinates, origin at the top-left corner:
// (x1, y1) is the upper-left corner, (x2, y2) the lower-right.
struct BBox {
    double x1 = 0.0;
    double y1 = 0.0;
    double x2 = 0.0;
    double y2 = 0.0;

    double width() const { return x2 - x1; }
    double height() const { return y2 - y1; }
    double area() const { return width() * height(); }
};

inline Point center(const BBox& b) {
    return {(b.x1 + b.x2) / 2.0, (b.y1 + b.y2) / 2.0};
}

inline double aspect_ratio(const BBox& b) { return b.width() / b.height(); }

inline bool valid_bbox(const BBox& b) {
    return std::isfinite(b.x1) && std::isfinite(b.y1) && std::isfinite(b.x2) &&
           std::isfinite(b.y2) && b.x1 >= 0.0 && b.y1 >= 0.0 && b.x2 > b.x1 &&
           b.y2 > b.y1;
}

inline double overlap_1d(double a1, double a2, double b1, double b2) {
    return std::max(0.0, std::min(a2, b2) - std::max(a1, b1));
}

// Intersection over union of two 1-D intervals.
inline double iou_1d(double a1, double a2, double b1, double b2) {
    const double inter = overlap_1d(a1, a2, b1, b2);
    const double uni = std::max(a2, b2) - std::min(a1, b1);
    return uni > 0.0 ? inter / uni : 0.0;
}

inline bool x_overlaps(const BBox& a, const BBox& b) {
    return overlap_1d(a.x1, a.x2, b.x1, b.x2) > 0.0;
}

inline bool y_overlaps(const BBox& a, const BBox& b) {
    return overlap_1d(a.y1, a.y2, b.y1, b.y2) > 0.0;
}

// Minimum boundary-to-boundary distance; 0 when the boxes touch or intersect.
inline double boundary_distance(const BBox& a, const BBox& b) {
    const double dx = std::max({0.0, b.x1 - a.x2, a.x1 - b.x2});
    const double dy = std::max({0.0, b.y1 - a.y2, a.y1 - b.y2});
    return std::hypot(dx, dy);
}

inline double center_distance(const BBox& a, const BBox& b) {
    const Point ca = center(a);
    const Point cb = center(b);
    return std::hypot(ca.x - cb.x, ca.y - cb.y);
}

} // namespace readorder
