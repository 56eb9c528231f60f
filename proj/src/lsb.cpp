#include "stegcrypt/lsb.hpp"

#include <string>

#include "stegcrypt/errors.hpp"

namespace stegcrypt::lsb {

namespace {

// Payload channel k lives at flat offset 4*(k/3) + k%3: R, G, B of pixel 0,
// then pixel 1, and so on. Alpha (offset 3) is never touched.
std::size_t channel_offset(std::size_t k) { return 4 * (k / 3) + k % 3; }

void write_bits(Raster& raster, std::span<const std::uint8_t> payload) {
    auto data = raster.bytes();
    std::size_t k = 0;
    for (std::uint8_t byte : payload) {
        for (int j = 7; j >= 0; --j, ++k) {
            std::uint8_t bit = (byte >> j) & 1u;
            std::uint8_t& ch = data[channel_offset(k)];
            ch = static_cast<std::uint8_t>((ch & ~1u) | bit);
        }
    }
}

class BitReader {
public:
    explicit BitReader(const Raster& raster)
        : data_(raster.bytes()), remaining_(capacity_bits(raster)) {}

    std::size_t remaining_bytes() const { return remaining_ / 8; }

    std::uint8_t next_byte() {
        std::uint8_t byte = 0;
        for (int j = 0; j < 8; ++j, ++k_) {
            byte = static_cast<std::uint8_t>((byte << 1) | (data_[channel_offset(k_)] & 1u));
        }
        remaining_ -= 8;
        return byte;
    }

private:
    std::span<const std::uint8_t> data_;
    std::size_t remaining_;
    std::size_t k_ = 0;
};

bool contains_delimiter(std::span<const std::uint8_t> text) {
    std::string_view view(reinterpret_cast<const char*>(text.data()), text.size());
    return view.find(kDelimiter) != std::string_view::npos;
}

void check_capacity(const Raster& cover, std::size_t payload_bytes) {
    std::size_t required = payload_bytes * 8;
    std::size_t available = capacity_bits(cover);
    if (required > available)
        throw CapacityError("payload needs " + std::to_string(required) +
                            " bits but the cover holds " + std::to_string(available));
}

} // namespace

std::size_t capacity_bits(const Raster& raster) { return 3 * raster.pixel_count(); }

Raster embed_delimited(const Raster& cover, std::span<const std::uint8_t> text) {
    if (contains_delimiter(text))
        throw DelimiterCollisionError("text contains the \"#####\" delimiter");
    std::vector<std::uint8_t> payload(text.begin(), text.end());
    payload.insert(payload.end(), kDelimiter.begin(), kDelimiter.end());
    check_capacity(cover, payload.size());

    Raster stego = cover;
    write_bits(stego, payload);
    return stego;
}

std::vector<std::uint8_t> extract_delimited(const Raster& stego) {
    BitReader reader(stego);
    std::vector<std::uint8_t> bytes;
    bytes.reserve(reader.remaining_bytes());
    while (reader.remaining_bytes() > 0) {
        bytes.push_back(reader.next_byte());
        if (bytes.size() >= kDelimiter.size() &&
            std::string_view(reinterpret_cast<const char*>(bytes.data()) + bytes.size() -
                                 kDelimiter.size(),
                             kDelimiter.size()) == kDelimiter) {
            bytes.resize(bytes.size() - kDelimiter.size());
            return bytes;
        }
    }
    throw NoMessageError("no \"#####\" delimiter found in the image");
}

Raster embed_framed(const Raster& cover, std::span<const std::uint8_t> payload) {
    std::vector<std::uint8_t> framed;
    framed.reserve(payload.size() + 4);
    std::uint32_t len = static_cast<std::uint32_t>(payload.size());
    framed.push_back(static_cast<std::uint8_t>(len >> 24));
    framed.push_back(static_cast<std::uint8_t>(len >> 16));
    framed.push_back(static_cast<std::uint8_t>(len >> 8));
    framed.push_back(static_cast<std::uint8_t>(len));
    framed.insert(framed.end(), payload.begin(), payload.end());
    check_capacity(cover, framed.size());

    Raster stego = cover;
    write_bits(stego, framed);
    return stego;
}

std::vector<std::uint8_t> extract_framed(const Raster& stego) {
    BitReader reader(stego);
    if (reader.remaining_bytes() < 4)
        throw CorruptFrameError("image too small to hold a length header");
    std::uint32_t len = 0;
    for (int i = 0; i < 4; ++i) len = (len << 8) | reader.next_byte();
    if (len > reader.remaining_bytes())
        throw CorruptFrameError("declared payload of " + std::to_string(len) +
                                " bytes exceeds the remaining capacity of " +
                                std::to_string(reader.remaining_bytes()) + " bytes");
    std::vector<std::uint8_t> payload;
    payload.reserve(len);
    for (std::uint32_t i = 0; i < len; ++i) payload.push_back(reader.next_byte());
    return payload;
}

} // namespace stegcrypt::lsb
