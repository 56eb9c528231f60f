#pragma once

#include <cstdint>
#include <random>

#include "stegcrypt/nat.hpp"

namespace stegcrypt {

/// Seedable randomness for key generation.
///
/// A fixed seed gives a reproducible stream (single-threaded use); concurrent
/// callers must each own their instance.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform value in [0, 2^count).
    Nat bits(std::size_t count);

    /// Uniform value in [0, bound) by rejection; bound must be >= 1.
    Nat below(const Nat& bound);

    /// Uniform value in [lo, hi] inclusive; requires lo <= hi.
    Nat in_range(const Nat& lo, const Nat& hi);

private:
    std::mt19937_64 engine_;
};

} // namespace stegcrypt
