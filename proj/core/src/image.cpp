#include "gvcot/image.hpp"

#include <numeric>

namespace gvcot {

RasterImage::RasterImage(int width, int height, int channels, std::uint8_t fill)
    : width_(width), height_(height), channels_(channels) {
    if (width < 1 || height < 1 || (channels != 1 && channels != 3)) {
        throw std::invalid_argument("RasterImage: bad dimensions");
    }
    data_.assign(static_cast<std::size_t>(width) * height * channels, fill);
}

BinaryMask::BinaryMask(int width, int height, bool fill)
    : width_(width), height_(height) {
    if (width < 1 || height < 1) {
        throw std::invalid_argument("BinaryMask: bad dimensions");
    }
    bits_.assign(static_cast<std::size_t>(width) * height, fill ? 1 : 0);
}

std::size_t BinaryMask::area() const {
    return std::accumulate(bits_.begin(), bits_.end(), std::size_t{0});
}

} // namespace gvcot
