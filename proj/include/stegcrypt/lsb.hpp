#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "stegcrypt/raster.hpp"

namespace stegcrypt::lsb {

/// End-of-message marker appended by the delimited text mode.
inline constexpr std::string_view kDelimiter = "#####";

/// One bit per R, G and B channel; alpha never carries payload.
std::size_t capacity_bits(const Raster& raster);

/// Embeds text followed by "#####". Bits are written most-significant-first
/// per byte, into channel LSBs in R,G,B order, pixels row-major.
/// Throws DelimiterCollisionError when the text contains the delimiter,
/// CapacityError when (len+5)*8 exceeds the capacity.
Raster embed_delimited(const Raster& cover, std::span<const std::uint8_t> text);

/// Reads bytes until the first "#####"; throws NoMessageError when the
/// delimiter never appears.
std::vector<std::uint8_t> extract_delimited(const Raster& stego);

/// Binary-safe mode: a 4-byte big-endian length header precedes the payload,
/// so ciphertext containing "#####" is carried verbatim.
Raster embed_framed(const Raster& cover, std::span<const std::uint8_t> payload);

/// Inverse of embed_framed; throws CorruptFrameError when the declared
/// length exceeds what the image can hold.
std::vector<std::uint8_t> extract_framed(const Raster& stego);

} // namespace stegcrypt::lsb
