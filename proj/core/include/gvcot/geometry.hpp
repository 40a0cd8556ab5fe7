#pragma once

#include <cstdint>
#include <vector>

namespace gvcot {

/// Axis-aligned pixel rectangle, top-left origin, half-open on the
/// right/bottom edges: covers [x1,x2) x [y1,y2), so area = (x2-x1)*(y2-y1).
struct BBox {
    int x1 = 0;
    int y1 = 0;
    int x2 = 0;
    int y2 = 0;

    long long width() const { return static_cast<long long>(x2) - x1; }
    long long height() const { return static_cast<long long>(y2) - y1; }
    long long area() const { return width() * height(); }

    bool operator==(const BBox&) const = default;
};

/// Returns the box with x1<=x2 and y1<=y2, swapping coordinates as needed.
/// Idempotent.
BBox normalize_box(const BBox& b);

/// Intersection-over-union of two normalized boxes using half-open pixel
/// areas. Symmetric. A pair whose union has zero area yields 0.
double box_iou(const BBox& a, const BBox& b);

/// Orders by (y1, x1, y2, x2); used wherever box lists need a stable order.
bool box_before(const BBox& a, const BBox& b);

} // namespace gvcot
