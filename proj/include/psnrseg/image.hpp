#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "psnrseg/errors.hpp"

namespace psnrseg {

/// 8-bit luminance raster, row-major, top-left origin.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels; // size == width * height

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t value = 0)
        : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, value) {}
    GrayImage(int w, int h, std::vector<std::uint8_t> px)
        : width(w), height(h), pixels(std::move(px)) {}

    std::size_t pixel_count() const { return pixels.size(); }
    std::uint8_t at(int x, int y) const {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
    std::uint8_t& at(int x, int y) {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
    bool same_shape(const GrayImage& other) const {
        return width == other.width && height == other.height;
    }
    bool operator==(const GrayImage&) const = default;
};

/// GrayImage whose samples are all 0 or 255.
class BinaryMask {
public:
    // Rejects any sample outside {0, 255}, naming the first offending pixel.
    explicit BinaryMask(GrayImage img);

    const GrayImage& image() const { return img_; }
    int width() const { return img_.width; }
    int height() const { return img_.height; }
    bool operator==(const BinaryMask&) const = default;

private:
    GrayImage img_;
};

inline BinaryMask as_binary(GrayImage img) { return BinaryMask(std::move(img)); }

/// Rec.601 luminance, rounded half-up.
std::uint8_t to_gray(std::uint8_t r, std::uint8_t g, std::uint8_t b);

enum class PnmFormat { P2, P5 };

/// Decodes PGM (P2/P5) or PPM (P3/P6) with maxval 255. Color input is
/// converted through to_gray. '#' comments and arbitrary whitespace are
/// accepted between header tokens.
GrayImage read_pnm(std::span<const std::uint8_t> bytes);
GrayImage read_pnm_file(const std::filesystem::path& path);

/// Encodes as PGM. P5 output round-trips bit-exactly through read_pnm.
std::vector<std::uint8_t> write_pnm(const GrayImage& img, PnmFormat format);
void write_pnm_file(const GrayImage& img, PnmFormat format,
                    const std::filesystem::path& path);

} // namespace psnrseg
