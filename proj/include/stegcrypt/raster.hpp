#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace stegcrypt {

struct Pixel {
    std::uint8_t r;
    std::uint8_t g;
    std::uint8_t b;
    std::uint8_t a;
    bool operator==(const Pixel&) const = default;
};

/// Row-major grid of 8-bit RGBA pixels, the shared representation for
/// steganography and quality metrics.
class Raster {
public:
    Raster() = default;
    Raster(std::uint32_t width, std::uint32_t height);

    std::uint32_t width() const { return width_; }
    std::uint32_t height() const { return height_; }
    std::size_t pixel_count() const { return std::size_t{width_} * height_; }

    Pixel pixel(std::size_t index) const;
    void set_pixel(std::size_t index, Pixel p);

    /// Flat RGBA8 view, 4 bytes per pixel, row-major.
    std::span<const std::uint8_t> bytes() const { return data_; }
    std::span<std::uint8_t> bytes() { return data_; }

    bool operator==(const Raster&) const = default;

private:
    std::uint32_t width_ = 0;
    std::uint32_t height_ = 0;
    std::vector<std::uint8_t> data_;
};

/// Decodes a PNG file to RGBA (grayscale/RGB/palette inputs are expanded,
/// alpha filled with 255). Lossy formats are refused: throws
/// UnsupportedFormatError for JPEG and anything else that is not PNG,
/// DecodeError for undecodable PNG data, IoError when the file is missing.
Raster load_image(const std::filesystem::path& path);

/// Writes 8-bit RGBA PNG; a save/load round trip reproduces every channel
/// bit-exactly. Throws DomainError for an empty raster, IoError on failure.
void save_image(const Raster& raster, const std::filesystem::path& path);

} // namespace stegcrypt
