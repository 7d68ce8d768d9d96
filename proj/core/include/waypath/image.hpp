#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "waypath/error.hpp"

namespace waypath {

/// 8-bit grayscale raster, row-major.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h),
          pixels(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {
        if (w <= 0 || h <= 0) raise(Errc::BadImage, "GrayImage: non-positive size");
    }

    bool in_bounds(int h, int v) const {
        return h >= 0 && h < width && v >= 0 && v < height;
    }

    std::uint8_t at(int h, int v) const {
        return pixels[static_cast<std::size_t>(v) * width + h];
    }
    std::uint8_t& at(int h, int v) {
        return pixels[static_cast<std::size_t>(v) * width + h];
    }

    bool operator==(const GrayImage& other) const = default;
};

/// Binary PGM (P5, maxval 255). Reading accepts comments and arbitrary
/// header whitespace; writing emits the canonical form so identical images
/// produce identical bytes.
GrayImage read_pgm(std::istream& in);
GrayImage read_pgm_file(const std::string& path);
void write_pgm(const GrayImage& img, std::ostream& out);
void write_pgm_file(const GrayImage& img, const std::string& path);

} // namespace waypath
