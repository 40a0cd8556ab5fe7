#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "gvcot/image.hpp"

namespace gvcot {

struct PngError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Reads an 8-bit PNG as RGB (3 channels) or grayscale (1 channel); alpha is
/// stripped, palettes expanded.
RasterImage read_png(const std::filesystem::path& path);

void write_png(const std::filesystem::path& path, const RasterImage& img);

/// PNG bytes in memory; used when embedding images into judge requests.
std::vector<std::uint8_t> encode_png(const RasterImage& img);

/// Masks persist as single-channel PNG with values {0,255}; on read, any
/// value >= 128 counts as edit region.
BinaryMask read_mask_png(const std::filesystem::path& path);
void write_mask_png(const std::filesystem::path& path, const BinaryMask& mask);

} // namespace gvcot
