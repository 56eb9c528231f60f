#include "stegcrypt/envelope.hpp"

#include <algorithm>

#include "stegcrypt/errors.hpp"

namespace stegcrypt::pipeline {

std::vector<std::uint8_t> serialize_envelope(const CipherEnvelope& envelope) {
    if (envelope.values.size() % envelope.values_per_block() != 0)
        throw DomainError("ElGamal envelope needs an (e1, e2) pair per block");

    std::vector<std::uint8_t> out(kEnvelopeMagic.begin(), kEnvelopeMagic.end());
    out.push_back(static_cast<std::uint8_t>(envelope.cipher));
    std::uint32_t blocks = static_cast<std::uint32_t>(envelope.block_count());
    out.push_back(static_cast<std::uint8_t>(blocks >> 24));
    out.push_back(static_cast<std::uint8_t>(blocks >> 16));
    out.push_back(static_cast<std::uint8_t>(blocks >> 8));
    out.push_back(static_cast<std::uint8_t>(blocks));

    for (const Nat& value : envelope.values) {
        auto bytes = value.to_bytes_be();
        if (bytes.size() > 0xFFFF) throw DomainError("ciphertext value too wide to frame");
        out.push_back(static_cast<std::uint8_t>(bytes.size() >> 8));
        out.push_back(static_cast<std::uint8_t>(bytes.size()));
        out.insert(out.end(), bytes.begin(), bytes.end());
    }
    return out;
}

CipherEnvelope parse_envelope(std::span<const std::uint8_t> bytes) {
    std::size_t pos = 0;
    auto take = [&](std::size_t count) -> std::span<const std::uint8_t> {
        if (bytes.size() - pos < count) throw ParseError("truncated envelope");
        auto view = bytes.subspan(pos, count);
        pos += count;
        return view;
    };

    auto magic = take(kEnvelopeMagic.size());
    if (!std::equal(kEnvelopeMagic.begin(), kEnvelopeMagic.end(), magic.begin()))
        throw NotAStegoEnvelopeError("magic bytes do not spell an envelope");

    std::uint8_t cipher_byte = take(1)[0];
    if (cipher_byte != static_cast<std::uint8_t>(CipherId::rsa) &&
        cipher_byte != static_cast<std::uint8_t>(CipherId::elgamal))
        throw ParseError("unknown cipher id in envelope");

    auto count_bytes = take(4);
    std::uint32_t blocks = (std::uint32_t{count_bytes[0]} << 24) |
                           (std::uint32_t{count_bytes[1]} << 16) |
                           (std::uint32_t{count_bytes[2]} << 8) | count_bytes[3];

    CipherEnvelope envelope{static_cast<CipherId>(cipher_byte), {}};
    std::size_t value_count = std::size_t{blocks} * envelope.values_per_block();
    envelope.values.reserve(std::min<std::size_t>(value_count, bytes.size()));
    for (std::size_t i = 0; i < value_count; ++i) {
        auto len_bytes = take(2);
        std::size_t len = (std::size_t{len_bytes[0]} << 8) | len_bytes[1];
        envelope.values.push_back(Nat::from_bytes_be(take(len)));
    }
    if (pos != bytes.size()) throw ParseError("trailing bytes after envelope");
    return envelope;
}

} // namespace stegcrypt::pipeline
