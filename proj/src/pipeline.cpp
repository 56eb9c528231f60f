#include "stegcrypt/pipeline.hpp"

#include <string>

#include "stegcrypt/errors.hpp"
#include "stegcrypt/lsb.hpp"

namespace stegcrypt::pipeline {

namespace {

Raster embed_envelope(const Raster& cover, const CipherEnvelope& envelope) {
    auto wire = serialize_envelope(envelope);
    std::size_t required = wire.size() + 4; // framed mode adds the length header
    std::size_t available = lsb::capacity_bits(cover) / 8;
    if (required > available)
        throw CapacityError("envelope needs " + std::to_string(required) +
                            " bytes but the cover holds " + std::to_string(available));
    return lsb::embed_framed(cover, wire);
}

CipherEnvelope recover_envelope(const Raster& stego) {
    try {
        return parse_envelope(lsb::extract_framed(stego));
    } catch (const CorruptFrameError& e) {
        throw NotAStegoEnvelopeError(std::string("image carries no envelope: ") + e.what());
    } catch (const ParseError& e) {
        throw NotAStegoEnvelopeError(std::string("image carries no envelope: ") + e.what());
    }
}

} // namespace

Raster hide(const Raster& cover, std::span<const std::uint8_t> message,
            const rsa::RsaPublicKey& key) {
    CipherEnvelope envelope{CipherId::rsa, rsa::encrypt_bytes(message, key)};
    return embed_envelope(cover, envelope);
}

Raster hide(const Raster& cover, std::span<const std::uint8_t> message,
            const elgamal::ElGamalPublicKey& key, RandomSource& rng) {
    CipherEnvelope envelope{CipherId::elgamal, {}};
    for (auto& ct : elgamal::encrypt_bytes(message, key, rng)) {
        envelope.values.push_back(std::move(ct.e1));
        envelope.values.push_back(std::move(ct.e2));
    }
    return embed_envelope(cover, envelope);
}

std::vector<std::uint8_t> reveal(const Raster& stego, const rsa::RsaPrivateKey& key) {
    CipherEnvelope envelope = recover_envelope(stego);
    if (envelope.cipher != CipherId::rsa)
        throw WrongKeyKindError("envelope was encrypted with ElGamal, not RSA");
    return rsa::decrypt_bytes(envelope.values, key);
}

std::vector<std::uint8_t> reveal(const Raster& stego, const elgamal::ElGamalPrivateKey& key) {
    CipherEnvelope envelope = recover_envelope(stego);
    if (envelope.cipher != CipherId::elgamal)
        throw WrongKeyKindError("envelope was encrypted with RSA, not ElGamal");
    std::vector<elgamal::ElGamalCiphertext> cts;
    cts.reserve(envelope.block_count());
    for (std::size_t i = 0; i + 1 < envelope.values.size(); i += 2) {
        cts.push_back(elgamal::ElGamalCiphertext{envelope.values[i], envelope.values[i + 1]});
    }
    return elgamal::decrypt_bytes(cts, key);
}

} // namespace stegcrypt::pipeline
