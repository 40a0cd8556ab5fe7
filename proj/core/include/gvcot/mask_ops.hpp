#pragma once

#include <cstdint>
#include <vector>

#include "gvcot/geometry.hpp"
#include "gvcot/image.hpp"

namespace gvcot {

/// Tint drawn over the edit region when composing a visual-thought image.
struct OverlayStyle {
    std::uint8_t r = 255;
    std::uint8_t g = 0;
    std::uint8_t b = 255;
    double alpha = 0.5; // blend ratio in [0, 1]
};

/// Mask cleanup parameters.
struct MorphParams {
    int min_speckle_area = 64;     // pixels; foreground blobs below this are erased
    int smooth_radius = 2;         // disc radius for boundary smoothing
    int diff_threshold = 30;       // 8-bit intensity for pixel-difference extraction
};

/// Union of filled rectangles on a w x h grid.
BinaryMask rasterize_boxes(const std::vector<BBox>& boxes, int width, int height);

/// Thresholded max-over-channels |src - cot| difference, then speckle
/// removal and hole filling. Throws DimensionMismatch on shape mismatch.
BinaryMask diff_mask(const RasterImage& src, const RasterImage& cot, const MorphParams& p);

/// Sets 4-connected background components that do not touch the image
/// border to foreground.
BinaryMask fill_holes(const BinaryMask& m);

/// Erases 8-connected foreground components with area strictly below
/// min_area.
BinaryMask remove_speckles(const BinaryMask& m, int min_area);

/// Morphological closing then opening with a disc structuring element.
/// radius 0 is the identity.
BinaryMask smooth_boundary(const BinaryMask& m, int radius);

/// Alpha-blends the style color over masked pixels, rounding half away from
/// zero. Pixels outside the mask are untouched.
RasterImage compose_overlay(const RasterImage& src, const BinaryMask& m, const OverlayStyle& style);

/// |a AND b| / |a OR b|. Two empty masks agree perfectly and score 1.0.
double mask_iou(const BinaryMask& a, const BinaryMask& b);

} // namespace gvcot
