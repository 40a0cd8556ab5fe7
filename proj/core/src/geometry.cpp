#include "gvcot/geometry.hpp"

#include <algorithm>

namespace gvcot {

BBox normalize_box(const BBox& b) {
    BBox out = b;
    if (out.x1 > out.x2) std::swap(out.x1, out.x2);
    if (out.y1 > out.y2) std::swap(out.y1, out.y2);
    return out;
}

double box_iou(const BBox& a, const BBox& b) {
    const long long ix1 = std::max(a.x1, b.x1);
    const long long iy1 = std::max(a.y1, b.y1);
    const long long ix2 = std::min(a.x2, b.x2);
    const long long iy2 = std::min(a.y2, b.y2);
    const long long iw = std::max(0LL, ix2 - ix1);
    const long long ih = std::max(0LL, iy2 - iy1);
    const long long inter = iw * ih;
    const long long uni = a.area() + b.area() - inter;
    if (uni <= 0) return 0.0;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

bool box_before(const BBox& a, const BBox& b) {
    if (a.y1 != b.y1) return a.y1 < b.y1;
    if (a.x1 != b.x1) return a.x1 < b.x1;
    if (a.y2 != b.y2) return a.y2 < b.y2;
    return a.x2 < b.x2;
}

} // namespace gvcot
