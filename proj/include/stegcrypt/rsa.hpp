#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stegcrypt/nat.hpp"
#include "stegcrypt/rng.hpp"

namespace stegcrypt::rsa {

struct RsaPublicKey {
    Nat e;
    Nat n;
    bool operator==(const RsaPublicKey&) const = default;
};

struct RsaPrivateKey {
    Nat d;
    Nat n;
    bool operator==(const RsaPrivateKey&) const = default;
};

struct RsaKeyPair {
    RsaPublicKey public_key;
    RsaPrivateKey private_key;
    Nat p;
    Nat q;
    Nat phi; // (p-1)(q-1)
};

/// Builds a keypair from chosen primes: n = p*q, d = e^-1 mod (p-1)(q-1).
/// Throws DomainError when p or q is not prime, p = q, e is out of range,
/// or e shares a factor with phi.
RsaKeyPair keygen_from_primes(const Nat& p, const Nat& q, const Nat& e);

/// Random keypair with an n of exactly `bits` significant bits.
/// Requires bits >= 16 and even, e odd and >= 3.
RsaKeyPair keygen(unsigned bits, const Nat& e, RandomSource& rng);

/// m^e mod n; throws BlockTooLargeError when m >= n.
Nat encrypt_block(const Nat& m, const RsaPublicKey& key);

/// c^d mod n; throws BlockTooLargeError when c >= n.
Nat decrypt_block(const Nat& c, const RsaPrivateKey& key);

/// Splits the message into fixed-size byte blocks (0x01 terminator, zero
/// padding) and encrypts each one. Requires a non-empty message; throws
/// KeyTooSmallError when n is below 16 bits.
std::vector<Nat> encrypt_bytes(std::span<const std::uint8_t> message, const RsaPublicKey& key);

/// Inverse of encrypt_bytes. Throws CorruptCiphertextError on an empty
/// sequence, an out-of-range block, or broken padding.
std::vector<std::uint8_t> decrypt_bytes(std::span<const Nat> blocks, const RsaPrivateKey& key);

std::string to_text(const RsaPublicKey& key);
std::string to_text(const RsaPrivateKey& key);
RsaPublicKey public_key_from_text(std::string_view text);
RsaPrivateKey private_key_from_text(std::string_view text);

} // namespace stegcrypt::rsa
