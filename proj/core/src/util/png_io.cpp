#include "gvcot/util/png_io.hpp"

#include <cstring>

#include <png.h>

namespace gvcot {
namespace {

RasterImage finish_read(png_image& image) {
    const bool color = (image.format & PNG_FORMAT_FLAG_COLOR) != 0;
    image.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
    const int channels = color ? 3 : 1;

    RasterImage out(static_cast<int>(image.width), static_cast<int>(image.height), channels);
    if (!png_image_finish_read(&image, nullptr, out.data().data(), 0, nullptr)) {
        std::string msg = image.message;
        png_image_free(&image);
        throw PngError("png read failed: " + msg);
    }
    return out;
}

} // namespace

RasterImage read_png(const std::filesystem::path& path) {
    png_image image;
    std::memset(&image, 0, sizeof(image));
    image.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_file(&image, path.string().c_str())) {
        throw PngError("cannot open png: " + path.string() + ": " + image.message);
    }
    return finish_read(image);
}

void write_png(const std::filesystem::path& path, const RasterImage& img) {
    png_image image;
    std::memset(&image, 0, sizeof(image));
    image.version = PNG_IMAGE_VERSION;
    image.width = static_cast<png_uint_32>(img.width());
    image.height = static_cast<png_uint_32>(img.height());
    image.format = img.channels() == 3 ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
    if (!png_image_write_to_file(&image, path.string().c_str(), 0, img.data().data(), 0,
                                 nullptr)) {
        throw PngError("png write failed: " + path.string() + ": " + image.message);
    }
}

std::vector<std::uint8_t> encode_png(const RasterImage& img) {
    png_image image;
    std::memset(&image, 0, sizeof(image));
    image.version = PNG_IMAGE_VERSION;
    image.width = static_cast<png_uint_32>(img.width());
    image.height = static_cast<png_uint_32>(img.height());
    image.format = img.channels() == 3 ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;

    png_alloc_size_t size = 0;
    if (!png_image_write_to_memory(&image, nullptr, &size, 0, img.data().data(), 0, nullptr)) {
        throw PngError(std::string("png memory sizing failed: ") + image.message);
    }
    std::vector<std::uint8_t> buf(size);
    if (!png_image_write_to_memory(&image, buf.data(), &size, 0, img.data().data(), 0,
                                   nullptr)) {
        throw PngError(std::string("png memory write failed: ") + image.message);
    }
    buf.resize(size);
    return buf;
}

BinaryMask read_mask_png(const std::filesystem::path& path) {
    const RasterImage img = read_png(path);
    BinaryMask mask(img.width(), img.height());
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            int v = img.at(x, y, 0);
            if (img.channels() == 3) {
                v = std::max({v, static_cast<int>(img.at(x, y, 1)),
                              static_cast<int>(img.at(x, y, 2))});
            }
            mask.set(x, y, v >= 128);
        }
    }
    return mask;
}

void write_mask_png(const std::filesystem::path& path, const BinaryMask& mask) {
    RasterImage img(mask.width(), mask.height(), 1);
    for (int y = 0; y < mask.height(); ++y) {
        for (int x = 0; x < mask.width(); ++x) {
            img.set(x, y, 0, mask.at(x, y) ? 255 : 0);
        }
    }
    write_png(path, img);
}

} // namespace gvcot
