#include "stegcrypt/elgamal.hpp"

#include "stegcrypt/blocks.hpp"
#include "stegcrypt/errors.hpp"
#include "stegcrypt/keyfile.hpp"
#include "stegcrypt/numtheory.hpp"

namespace stegcrypt::elgamal {

ElGamalKeyPair keygen(unsigned bits, RandomSource& rng) {
    auto [r, q] = gen_safe_prime(bits, rng);
    Nat g = find_primitive_root(r, q);
    Nat s = rng.in_range(Nat{2}, r - Nat{2});
    Nat z = mod_pow(g, s, r);
    ElGamalPublicKey pub{r, g, std::move(z)};
    ElGamalPrivateKey priv{std::move(s), std::move(r), std::move(g)};
    return ElGamalKeyPair{std::move(pub), std::move(priv)};
}

ElGamalCiphertext encrypt_block(const Nat& p_msg, const ElGamalPublicKey& key,
                                RandomSource& rng) {
    Nat l = rng.in_range(Nat{2}, key.r - Nat{2});
    return encrypt_block(p_msg, key, l);
}

ElGamalCiphertext encrypt_block(const Nat& p_msg, const ElGamalPublicKey& key,
                                const Nat& session_exponent) {
    if (p_msg >= key.r) throw BlockTooLargeError("plaintext block not below the modulus");
    Nat e1 = mod_pow(key.g, session_exponent, key.r);
    Nat session_key = mod_pow(key.z, session_exponent, key.r);
    Nat e2 = (session_key * p_msg) % key.r;
    return ElGamalCiphertext{std::move(e1), std::move(e2)};
}

Nat decrypt_block(const ElGamalCiphertext& ct, const ElGamalPrivateKey& key) {
    if (ct.e1 >= key.r || ct.e2 >= key.r)
        throw BlockTooLargeError("ciphertext component not below the modulus");
    if (ct.e1.is_zero()) throw CorruptCiphertextError("ciphertext with e1 = 0");
    Nat session_key = mod_pow(ct.e1, key.s, key.r);
    return (ct.e2 * mod_inverse(session_key, key.r)) % key.r;
}

std::vector<ElGamalCiphertext> encrypt_bytes(std::span<const std::uint8_t> message,
                                             const ElGamalPublicKey& key, RandomSource& rng) {
    if (message.empty()) throw DomainError("message must be non-empty");
    std::size_t block_size = blocks::plaintext_block_size(key.r);
    if (block_size == 0) throw KeyTooSmallError("modulus too small to carry a byte per block");
    std::vector<ElGamalCiphertext> out;
    for (const Nat& block : blocks::split(message, block_size)) {
        out.push_back(encrypt_block(block, key, rng));
    }
    return out;
}

std::vector<std::uint8_t> decrypt_bytes(std::span<const ElGamalCiphertext> cts,
                                        const ElGamalPrivateKey& key) {
    if (cts.empty()) throw CorruptCiphertextError("no ciphertext blocks");
    std::size_t block_size = blocks::plaintext_block_size(key.r);
    if (block_size == 0) throw KeyTooSmallError("modulus too small to carry a byte per block");
    std::vector<Nat> plain;
    plain.reserve(cts.size());
    for (const ElGamalCiphertext& ct : cts) {
        if (ct.e1 >= key.r || ct.e2 >= key.r || ct.e1.is_zero())
            throw CorruptCiphertextError("ciphertext component out of range");
        plain.push_back(decrypt_block(ct, key));
    }
    return blocks::join(plain, block_size);
}

std::string to_text(const ElGamalPublicKey& key) {
    const keyfile::Entry entries[] = {{"kind", "elgamal-public"},
                                      {"r", key.r.to_hex()},
                                      {"g", key.g.to_hex()},
                                      {"z", key.z.to_hex()}};
    return keyfile::render(entries);
}

std::string to_text(const ElGamalPrivateKey& key) {
    const keyfile::Entry entries[] = {{"kind", "elgamal-private"},
                                      {"r", key.r.to_hex()},
                                      {"g", key.g.to_hex()},
                                      {"s", key.s.to_hex()}};
    return keyfile::render(entries);
}

ElGamalPublicKey public_key_from_text(std::string_view text) {
    auto entries = keyfile::parse(text);
    if (entries.size() != 4 || keyfile::expect(entries, 0, "kind") != "elgamal-public")
        throw ParseError("not an elgamal-public key file");
    return ElGamalPublicKey{Nat::from_hex(keyfile::expect(entries, 1, "r")),
                            Nat::from_hex(keyfile::expect(entries, 2, "g")),
                            Nat::from_hex(keyfile::expect(entries, 3, "z"))};
}

ElGamalPrivateKey private_key_from_text(std::string_view text) {
    auto entries = keyfile::parse(text);
    if (entries.size() != 4 || keyfile::expect(entries, 0, "kind") != "elgamal-private")
        throw ParseError("not an elgamal-private key file");
    return ElGamalPrivateKey{Nat::from_hex(keyfile::expect(entries, 3, "s")),
                             Nat::from_hex(keyfile::expect(entries, 1, "r")),
                             Nat::from_hex(keyfile::expect(entries, 2, "g"))};
}

} // namespace stegcrypt::elgamal
