#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stegcrypt/elgamal.hpp"
#include "stegcrypt/envelope.hpp"
#include "stegcrypt/raster.hpp"
#include "stegcrypt/rng.hpp"
#include "stegcrypt/rsa.hpp"

namespace stegcrypt::pipeline {

/// Encrypt-then-embed: the message is encrypted block-wise, framed into a
/// CipherEnvelope, and the serialized envelope is carried in the cover's
/// R/G/B LSBs. Throws CapacityError when the envelope does not fit.
Raster hide(const Raster& cover, std::span<const std::uint8_t> message,
            const rsa::RsaPublicKey& key);
Raster hide(const Raster& cover, std::span<const std::uint8_t> message,
            const elgamal::ElGamalPublicKey& key, RandomSource& rng);

/// Extract-then-decrypt, the inverse of hide. Throws NotAStegoEnvelopeError
/// when the image carries no envelope, WrongKeyKindError when the envelope
/// was made for the other cipher, CorruptCiphertextError when decryption
/// cannot reconstruct a padded message.
std::vector<std::uint8_t> reveal(const Raster& stego, const rsa::RsaPrivateKey& key);
std::vector<std::uint8_t> reveal(const Raster& stego, const elgamal::ElGamalPrivateKey& key);

} // namespace stegcrypt::pipeline
