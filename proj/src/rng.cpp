#include "stegcrypt/rng.hpp"

#include <vector>

#include "stegcrypt/errors.hpp"

namespace stegcrypt {

Nat RandomSource::bits(std::size_t count) {
    if (count == 0) return Nat{};
    std::vector<std::uint8_t> bytes((count + 7) / 8);
    std::uint64_t word = 0;
    unsigned have = 0;
    for (auto& b : bytes) {
        if (have == 0) {
            word = engine_();
            have = 8;
        }
        b = static_cast<std::uint8_t>(word);
        word >>= 8;
        --have;
    }
    unsigned excess = static_cast<unsigned>(bytes.size() * 8 - count);
    bytes.front() &= static_cast<std::uint8_t>(0xFFu >> excess);
    return Nat::from_bytes_be(bytes);
}

Nat RandomSource::below(const Nat& bound) {
    if (bound.is_zero()) throw DomainError("bound must be positive");
    std::size_t k = bound.bit_length();
    for (;;) {
        Nat candidate = bits(k);
        if (candidate < bound) return candidate;
    }
}

Nat RandomSource::in_range(const Nat& lo, const Nat& hi) {
    if (hi < lo) throw DomainError("empty range");
    return lo + below(hi - lo + Nat{1});
}

} // namespace stegcrypt
