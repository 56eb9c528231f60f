#include "stegcrypt/raster.hpp"

#include <png.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "stegcrypt/errors.hpp"

namespace stegcrypt {

namespace {

constexpr std::array<std::uint8_t, 8> kPngMagic = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
constexpr std::array<std::uint8_t, 3> kJpegMagic = {0xFF, 0xD8, 0xFF};

void sniff_format(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::array<std::uint8_t, 8> head{};
    in.read(reinterpret_cast<char*>(head.data()), head.size());
    if (in.gcount() < static_cast<std::streamsize>(head.size()))
        throw DecodeError("file too short to be a PNG: " + path.string());
    if (std::equal(kJpegMagic.begin(), kJpegMagic.end(), head.begin()))
        throw UnsupportedFormatError(
            "JPEG input refused: lossy recompression destroys the LSB planes that carry "
            "hidden data; use PNG");
    if (!std::equal(kPngMagic.begin(), kPngMagic.end(), head.begin()))
        throw UnsupportedFormatError("not a PNG file (only lossless PNG is supported): " +
                                     path.string());
}

} // namespace

Raster::Raster(std::uint32_t width, std::uint32_t height)
    : width_(width), height_(height), data_(std::size_t{width} * height * 4, 0) {}

Pixel Raster::pixel(std::size_t index) const {
    const std::uint8_t* p = &data_[index * 4];
    return Pixel{p[0], p[1], p[2], p[3]};
}

void Raster::set_pixel(std::size_t index, Pixel px) {
    std::uint8_t* p = &data_[index * 4];
    p[0] = px.r;
    p[1] = px.g;
    p[2] = px.b;
    p[3] = px.a;
}

Raster load_image(const std::filesystem::path& path) {
    sniff_format(path);

    png_image image{};
    image.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_file(&image, path.string().c_str()))
        throw DecodeError(std::string("PNG decode failed: ") + image.message);
    image.format = PNG_FORMAT_RGBA;

    Raster out(image.width, image.height);
    if (!png_image_finish_read(&image, nullptr, out.bytes().data(), 0, nullptr)) {
        std::string msg = image.message;
        png_image_free(&image);
        throw DecodeError("PNG decode failed: " + msg);
    }
    return out;
}

void save_image(const Raster& raster, const std::filesystem::path& path) {
    if (raster.pixel_count() == 0) throw DomainError("cannot save an empty raster");

    png_image image{};
    image.version = PNG_IMAGE_VERSION;
    image.width = raster.width();
    image.height = raster.height();
    image.format = PNG_FORMAT_RGBA;
    if (!png_image_write_to_file(&image, path.string().c_str(), 0, raster.bytes().data(), 0,
                                 nullptr)) {
        std::string msg = image.message;
        png_image_free(&image);
        throw IoError("PNG write failed for " + path.string() + ": " + msg);
    }
}

} // namespace stegcrypt
