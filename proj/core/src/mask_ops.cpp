#include "gvcot/mask_ops.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace gvcot {
namespace {

// Scanline flood fill over a predicate; marks visited cells in `seen`.
// Returns the number of cells visited.
template <typename Pred>
std::size_t flood(int w, int h, int sx, int sy, std::vector<std::uint8_t>& seen,
                  std::vector<std::pair<int, int>>& stack, bool eight_connected, Pred inside) {
    std::size_t count = 0;
    stack.clear();
    stack.emplace_back(sx, sy);
    seen[static_cast<std::size_t>(sy) * w + sx] = 1;
    while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        ++count;
        for (int dy = -1; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) {
                if (dx == 0 && dy == 0) continue;
                if (!eight_connected && dx != 0 && dy != 0) continue;
                const int nx = x + dx, ny = y + dy;
                if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
                auto& s = seen[static_cast<std::size_t>(ny) * w + nx];
                if (s || !inside(nx, ny)) continue;
                s = 1;
                stack.emplace_back(nx, ny);
            }
        }
    }
    return count;
}

std::vector<std::pair<int, int>> disc_offsets(int radius) {
    std::vector<std::pair<int, int>> offs;
    for (int dy = -radius; dy <= radius; ++dy) {
        for (int dx = -radius; dx <= radius; ++dx) {
            if (dx * dx + dy * dy <= radius * radius) offs.emplace_back(dx, dy);
        }
    }
    return offs;
}

BinaryMask dilate(const BinaryMask& m, const std::vector<std::pair<int, int>>& offs) {
    BinaryMask out(m.width(), m.height());
    for (int y = 0; y < m.height(); ++y) {
        for (int x = 0; x < m.width(); ++x) {
            if (!m.at(x, y)) continue;
            for (auto [dx, dy] : offs) {
                if (m.in_bounds(x + dx, y + dy)) out.set(x + dx, y + dy, true);
            }
        }
    }
    return out;
}

// Out-of-bounds neighbors count as foreground so border regions survive.
BinaryMask erode(const BinaryMask& m, const std::vector<std::pair<int, int>>& offs) {
    BinaryMask out(m.width(), m.height());
    for (int y = 0; y < m.height(); ++y) {
        for (int x = 0; x < m.width(); ++x) {
            if (!m.at(x, y)) continue;
            bool keep = true;
            for (auto [dx, dy] : offs) {
                const int nx = x + dx, ny = y + dy;
                if (m.in_bounds(nx, ny) && !m.at(nx, ny)) {
                    keep = false;
                    break;
                }
            }
            out.set(x, y, keep);
        }
    }
    return out;
}

} // namespace

BinaryMask rasterize_boxes(const std::vector<BBox>& boxes, int width, int height) {
    BinaryMask m(width, height);
    for (const BBox& b : boxes) {
        const int x1 = std::clamp(b.x1, 0, width);
        const int x2 = std::clamp(b.x2, 0, width);
        const int y1 = std::clamp(b.y1, 0, height);
        const int y2 = std::clamp(b.y2, 0, height);
        for (int y = y1; y < y2; ++y) {
            for (int x = x1; x < x2; ++x) {
                m.set(x, y, true);
            }
        }
    }
    return m;
}

BinaryMask diff_mask(const RasterImage& src, const RasterImage& cot, const MorphParams& p) {
    if (!src.same_shape(cot)) {
        throw DimensionMismatch("diff_mask: image shapes differ");
    }
    BinaryMask m(src.width(), src.height());
    for (int y = 0; y < src.height(); ++y) {
        for (int x = 0; x < src.width(); ++x) {
            int diff = 0;
            for (int c = 0; c < src.channels(); ++c) {
                diff = std::max(diff, std::abs(static_cast<int>(src.at(x, y, c)) -
                                               static_cast<int>(cot.at(x, y, c))));
            }
            if (diff > p.diff_threshold) m.set(x, y, true);
        }
    }
    m = remove_speckles(m, p.min_speckle_area);
    return fill_holes(m);
}

BinaryMask fill_holes(const BinaryMask& m) {
    const int w = m.width(), h = m.height();
    std::vector<std::uint8_t> reached(static_cast<std::size_t>(w) * h, 0);
    std::vector<std::pair<int, int>> stack;
    auto background = [&](int x, int y) { return !m.at(x, y); };

    for (int x = 0; x < w; ++x) {
        if (background(x, 0) && !reached[x]) flood(w, h, x, 0, reached, stack, false, background);
        if (background(x, h - 1) && !reached[static_cast<std::size_t>(h - 1) * w + x]) {
            flood(w, h, x, h - 1, reached, stack, false, background);
        }
    }
    for (int y = 0; y < h; ++y) {
        if (background(0, y) && !reached[static_cast<std::size_t>(y) * w]) {
            flood(w, h, 0, y, reached, stack, false, background);
        }
        if (background(w - 1, y) && !reached[static_cast<std::size_t>(y) * w + w - 1]) {
            flood(w, h, w - 1, y, reached, stack, false, background);
        }
    }

    BinaryMask out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            out.set(x, y, m.at(x, y) || !reached[static_cast<std::size_t>(y) * w + x]);
        }
    }
    return out;
}

BinaryMask remove_speckles(const BinaryMask& m, int min_area) {
    const int w = m.width(), h = m.height();
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(w) * h, 0);
    std::vector<std::pair<int, int>> stack;
    std::vector<std::pair<int, int>> component;
    BinaryMask out(w, h);
    auto foreground = [&](int x, int y) { return m.at(x, y); };

    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (!m.at(x, y) || seen[static_cast<std::size_t>(y) * w + x]) continue;
            // collect the component so it can be kept or dropped atomically
            component.clear();
            stack.clear();
            stack.emplace_back(x, y);
            seen[static_cast<std::size_t>(y) * w + x] = 1;
            while (!stack.empty()) {
                auto [cx, cy] = stack.back();
                stack.pop_back();
                component.emplace_back(cx, cy);
                for (int dy = -1; dy <= 1; ++dy) {
                    for (int dx = -1; dx <= 1; ++dx) {
                        if (dx == 0 && dy == 0) continue;
                        const int nx = cx + dx, ny = cy + dy;
                        if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
                        auto& s = seen[static_cast<std::size_t>(ny) * w + nx];
                        if (s || !foreground(nx, ny)) continue;
                        s = 1;
                        stack.emplace_back(nx, ny);
                    }
                }
            }
            if (static_cast<int>(component.size()) >= min_area) {
                for (auto [px, py] : component) out.set(px, py, true);
            }
        }
    }
    return out;
}

BinaryMask smooth_boundary(const BinaryMask& m, int radius) {
    if (radius <= 0) return m;
    const auto offs = disc_offsets(radius);
    // closing then opening
    BinaryMask closed = erode(dilate(m, offs), offs);
    return dilate(erode(closed, offs), offs);
}

RasterImage compose_overlay(const RasterImage& src, const BinaryMask& m, const OverlayStyle& style) {
    if (src.width() != m.width() || src.height() != m.height()) {
        throw DimensionMismatch("compose_overlay: mask shape differs from image");
    }
    RasterImage out = src;
    const double color[3] = {static_cast<double>(style.r), static_cast<double>(style.g),
                             static_cast<double>(style.b)};
    const double luma = 0.299 * color[0] + 0.587 * color[1] + 0.114 * color[2];
    for (int y = 0; y < src.height(); ++y) {
        for (int x = 0; x < src.width(); ++x) {
            if (!m.at(x, y)) continue;
            for (int c = 0; c < src.channels(); ++c) {
                const double col = src.channels() == 1 ? luma : color[c];
                const double v =
                    (1.0 - style.alpha) * static_cast<double>(src.at(x, y, c)) + style.alpha * col;
                out.set(x, y, c, static_cast<std::uint8_t>(std::clamp(std::round(v), 0.0, 255.0)));
            }
        }
    }
    return out;
}

double mask_iou(const BinaryMask& a, const BinaryMask& b) {
    if (!a.same_shape(b)) {
        throw DimensionMismatch("mask_iou: mask shapes differ");
    }
    std::size_t inter = 0, uni = 0;
    const auto& ab = a.bits();
    const auto& bb = b.bits();
    for (std::size_t i = 0; i < ab.size(); ++i) {
        inter += ab[i] & bb[i];
        uni += ab[i] | bb[i];
    }
    if (uni == 0) return 1.0;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

} // namespace gvcot
