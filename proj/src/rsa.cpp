#include "stegcrypt/rsa.hpp"

#include "stegcrypt/blocks.hpp"
#include "stegcrypt/errors.hpp"
#include "stegcrypt/keyfile.hpp"
#include "stegcrypt/numtheory.hpp"

namespace stegcrypt::rsa {

RsaKeyPair keygen_from_primes(const Nat& p, const Nat& q, const Nat& e) {
    if (p == q) throw DomainError("p and q must differ");
    if (!is_probable_prime(p) || !is_probable_prime(q))
        throw DomainError("p and q must both be prime");
    Nat n = p * q;
    Nat phi = (p - Nat{1}) * (q - Nat{1});
    if (e <= Nat{1} || e >= phi) throw DomainError("public exponent out of range (1, phi)");
    if (gcd(e, phi) != Nat{1}) throw DomainError("public exponent must be coprime to phi");
    Nat d = mod_inverse(e, phi);
    return RsaKeyPair{RsaPublicKey{e, n}, RsaPrivateKey{std::move(d), n}, p, q, std::move(phi)};
}

RsaKeyPair keygen(unsigned bits, const Nat& e, RandomSource& rng) {
    if (bits < 16 || bits % 2 != 0) throw DomainError("modulus size must be even and >= 16 bits");
    if (!e.is_odd() || e < Nat{3}) throw DomainError("public exponent must be odd and >= 3");
    for (;;) {
        Nat p = gen_prime(bits / 2, rng);
        Nat q = gen_prime(bits / 2, rng);
        if (p == q) continue;
        if ((p * q).bit_length() != bits) continue;
        Nat phi = (p - Nat{1}) * (q - Nat{1});
        if (gcd(e, phi) != Nat{1}) continue;
        return keygen_from_primes(p, q, e);
    }
}

Nat encrypt_block(const Nat& m, const RsaPublicKey& key) {
    if (m >= key.n) throw BlockTooLargeError("plaintext block not below the modulus");
    return mod_pow(m, key.e, key.n);
}

Nat decrypt_block(const Nat& c, const RsaPrivateKey& key) {
    if (c >= key.n) throw BlockTooLargeError("ciphertext block not below the modulus");
    return mod_pow(c, key.d, key.n);
}

std::vector<Nat> encrypt_bytes(std::span<const std::uint8_t> message, const RsaPublicKey& key) {
    if (message.empty()) throw DomainError("message must be non-empty");
    std::size_t block_size = blocks::plaintext_block_size(key.n);
    if (block_size == 0) throw KeyTooSmallError("modulus too small to carry a byte per block");
    std::vector<Nat> out;
    for (const Nat& block : blocks::split(message, block_size)) {
        out.push_back(encrypt_block(block, key));
    }
    return out;
}

std::vector<std::uint8_t> decrypt_bytes(std::span<const Nat> cipher_blocks,
                                        const RsaPrivateKey& key) {
    if (cipher_blocks.empty()) throw CorruptCiphertextError("no ciphertext blocks");
    std::size_t block_size = blocks::plaintext_block_size(key.n);
    if (block_size == 0) throw KeyTooSmallError("modulus too small to carry a byte per block");
    std::vector<Nat> plain;
    plain.reserve(cipher_blocks.size());
    for (const Nat& c : cipher_blocks) {
        if (c >= key.n) throw CorruptCiphertextError("ciphertext block not below the modulus");
        plain.push_back(decrypt_block(c, key));
    }
    return blocks::join(plain, block_size);
}

std::string to_text(const RsaPublicKey& key) {
    const keyfile::Entry entries[] = {
        {"kind", "rsa-public"}, {"n", key.n.to_hex()}, {"e", key.e.to_hex()}};
    return keyfile::render(entries);
}

std::string to_text(const RsaPrivateKey& key) {
    const keyfile::Entry entries[] = {
        {"kind", "rsa-private"}, {"n", key.n.to_hex()}, {"d", key.d.to_hex()}};
    return keyfile::render(entries);
}

RsaPublicKey public_key_from_text(std::string_view text) {
    auto entries = keyfile::parse(text);
    if (entries.size() != 3 || keyfile::expect(entries, 0, "kind") != "rsa-public")
        throw ParseError("not an rsa-public key file");
    return RsaPublicKey{Nat::from_hex(keyfile::expect(entries, 2, "e")),
                        Nat::from_hex(keyfile::expect(entries, 1, "n"))};
}

RsaPrivateKey private_key_from_text(std::string_view text) {
    auto entries = keyfile::parse(text);
    if (entries.size() != 3 || keyfile::expect(entries, 0, "kind") != "rsa-private")
        throw ParseError("not an rsa-private key file");
    return RsaPrivateKey{Nat::from_hex(keyfile::expect(entries, 2, "d")),
                         Nat::from_hex(keyfile::expect(entries, 1, "n"))};
}

} // namespace stegcrypt::rsa
