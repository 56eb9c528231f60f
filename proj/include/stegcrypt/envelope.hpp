#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "stegcrypt/nat.hpp"

namespace stegcrypt::pipeline {

inline constexpr std::array<std::uint8_t, 4> kEnvelopeMagic = {'S', 'C', 'P', '1'};

enum class CipherId : std::uint8_t {
    rsa = 0x01,
    elgamal = 0x02,
};

/// Framed ciphertext container carried inside stego images.
///
/// Wire layout (all integers big-endian):
///   magic "SCP1" | cipher id (1 byte) | logical block count (4 bytes) |
///   per value: length (2 bytes) + minimal big-endian bytes.
/// RSA stores one value per block; ElGamal stores e1 then e2 per block.
struct CipherEnvelope {
    CipherId cipher;
    std::vector<Nat> values;

    std::size_t values_per_block() const { return cipher == CipherId::elgamal ? 2 : 1; }
    std::size_t block_count() const { return values.size() / values_per_block(); }

    bool operator==(const CipherEnvelope&) const = default;
};

/// Throws DomainError when a value needs more than 65535 bytes or the value
/// count does not form whole blocks.
std::vector<std::uint8_t> serialize_envelope(const CipherEnvelope& envelope);

/// Exact inverse of serialize_envelope. Throws NotAStegoEnvelopeError on a
/// magic mismatch and ParseError on truncation, an unknown cipher id, or
/// trailing bytes.
CipherEnvelope parse_envelope(std::span<const std::uint8_t> bytes);

} // namespace stegcrypt::pipeline
