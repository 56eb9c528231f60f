#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stegcrypt/nat.hpp"

namespace stegcrypt::blocks {

/// Plaintext block size in bytes for a given modulus: floor((bitlen - 1) / 8).
/// Every block of that many bytes reads back as a value strictly below the
/// modulus. Zero means the modulus cannot carry even one byte per block.
std::size_t plaintext_block_size(const Nat& modulus);

/// Appends the 0x01 terminator, zero-pads to a whole number of blocks, and
/// returns each block as a big-endian value.
std::vector<Nat> split(std::span<const std::uint8_t> message, std::size_t block_size);

/// Exact inverse of split: re-serializes each value into `block_size` bytes,
/// strips trailing zero padding and the 0x01 terminator.
/// Throws CorruptCiphertextError on an empty sequence, a value too wide for
/// the block size, or padding without the terminator.
std::vector<std::uint8_t> join(std::span<const Nat> values, std::size_t block_size);

} // namespace stegcrypt::blocks
