#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stegcrypt/nat.hpp"
#include "stegcrypt/rng.hpp"

namespace stegcrypt::elgamal {

struct ElGamalPublicKey {
    Nat r; // prime modulus (safe-prime form)
    Nat g; // generator
    Nat z; // g^s mod r
    bool operator==(const ElGamalPublicKey&) const = default;
};

struct ElGamalPrivateKey {
    Nat s; // secret, 1 < s < r-1
    Nat r;
    Nat g;
    bool operator==(const ElGamalPrivateKey&) const = default;
};

struct ElGamalCiphertext {
    Nat e1; // g^l mod r
    Nat e2; // (z^l * plaintext) mod r
    bool operator==(const ElGamalCiphertext&) const = default;
};

struct ElGamalKeyPair {
    ElGamalPublicKey public_key;
    ElGamalPrivateKey private_key;
};

/// Safe-prime modulus, primitive root, secret uniform in (1, r-1).
ElGamalKeyPair keygen(unsigned bits, RandomSource& rng);

/// Encrypts one block with a fresh session exponent drawn from (1, r-1).
ElGamalCiphertext encrypt_block(const Nat& p_msg, const ElGamalPublicKey& key,
                                RandomSource& rng);

/// Deterministic variant with a caller-chosen session exponent l.
ElGamalCiphertext encrypt_block(const Nat& p_msg, const ElGamalPublicKey& key,
                                const Nat& session_exponent);

/// (e2 * (e1^s)^-1) mod r. Throws CorruptCiphertextError when e1 = 0,
/// BlockTooLargeError when a component is not below r.
Nat decrypt_block(const ElGamalCiphertext& ct, const ElGamalPrivateKey& key);

/// Same byte framing as rsa::encrypt_bytes; every block gets its own l.
std::vector<ElGamalCiphertext> encrypt_bytes(std::span<const std::uint8_t> message,
                                             const ElGamalPublicKey& key, RandomSource& rng);

std::vector<std::uint8_t> decrypt_bytes(std::span<const ElGamalCiphertext> cts,
                                        const ElGamalPrivateKey& key);

std::string to_text(const ElGamalPublicKey& key);
std::string to_text(const ElGamalPrivateKey& key);
ElGamalPublicKey public_key_from_text(std::string_view text);
ElGamalPrivateKey private_key_from_text(std::string_view text);

} // namespace stegcrypt::elgamal
