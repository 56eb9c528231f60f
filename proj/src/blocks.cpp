#include "stegcrypt/blocks.hpp"

#include "stegcrypt/errors.hpp"

namespace stegcrypt::blocks {

std::size_t plaintext_block_size(const Nat& modulus) {
    std::size_t bits = modulus.bit_length();
    return bits == 0 ? 0 : (bits - 1) / 8;
}

std::vector<Nat> split(std::span<const std::uint8_t> message, std::size_t block_size) {
    if (block_size == 0) throw KeyTooSmallError("modulus too small for byte blocks");
    std::vector<std::uint8_t> framed(message.begin(), message.end());
    framed.push_back(0x01);
    framed.resize(((framed.size() + block_size - 1) / block_size) * block_size, 0x00);

    std::vector<Nat> out;
    out.reserve(framed.size() / block_size);
    for (std::size_t off = 0; off < framed.size(); off += block_size) {
        out.push_back(Nat::from_bytes_be({framed.data() + off, block_size}));
    }
    return out;
}

std::vector<std::uint8_t> join(std::span<const Nat> values, std::size_t block_size) {
    if (values.empty()) throw CorruptCiphertextError("no ciphertext blocks");
    std::vector<std::uint8_t> bytes;
    bytes.reserve(values.size() * block_size);
    for (const Nat& v : values) {
        if (v.byte_length() > block_size)
            throw CorruptCiphertextError("decrypted block wider than the block size");
        auto chunk = v.to_bytes_be(block_size);
        bytes.insert(bytes.end(), chunk.begin(), chunk.end());
    }
    while (!bytes.empty() && bytes.back() == 0x00) bytes.pop_back();
    if (bytes.empty() || bytes.back() != 0x01)
        throw CorruptCiphertextError("missing end-of-message terminator");
    bytes.pop_back();
    return bytes;
}

} // namespace stegcrypt::blocks
