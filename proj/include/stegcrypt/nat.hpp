#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stegcrypt {

/// Arbitrary-precision non-negative integer.
///
/// Stored as little-endian base-2^32 limbs with no trailing zero limbs;
/// zero is the empty limb vector. All operations are value-level, no
/// constant-time guarantees.
class Nat {
public:
    Nat() = default;
    Nat(std::uint64_t value); // NOLINT: implicit by design, mirrors integer literals

    static Nat from_hex(std::string_view text);
    static Nat from_decimal(std::string_view text);
    static Nat from_bytes_be(std::span<const std::uint8_t> bytes);

    /// Lowercase hex, no leading zeros, "0" for zero.
    std::string to_hex() const;
    std::string to_decimal() const;

    /// Minimal big-endian encoding; empty for zero.
    std::vector<std::uint8_t> to_bytes_be() const;
    /// Fixed-width big-endian encoding; throws DomainError if the value
    /// does not fit in `width` bytes.
    std::vector<std::uint8_t> to_bytes_be(std::size_t width) const;

    bool is_zero() const { return limbs_.empty(); }
    bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1u) != 0; }

    /// Number of significant bits; 0 for zero.
    std::size_t bit_length() const;
    bool bit(std::size_t index) const;
    void set_bit(std::size_t index);

    /// Throws DomainError if the value exceeds 2^64 - 1.
    std::uint64_t to_u64() const;

    std::size_t byte_length() const { return (bit_length() + 7) / 8; }

    friend Nat operator+(const Nat& a, const Nat& b);
    /// Throws DomainError if b > a (no negative values).
    friend Nat operator-(const Nat& a, const Nat& b);
    friend Nat operator*(const Nat& a, const Nat& b);
    friend Nat operator/(const Nat& a, const Nat& b);
    friend Nat operator%(const Nat& a, const Nat& b);
    friend Nat operator<<(const Nat& a, std::size_t bits);
    friend Nat operator>>(const Nat& a, std::size_t bits);

    Nat& operator+=(const Nat& b) { return *this = *this + b; }
    Nat& operator-=(const Nat& b) { return *this = *this - b; }
    Nat& operator*=(const Nat& b) { return *this = *this * b; }
    Nat& operator%=(const Nat& b) { return *this = *this % b; }
    Nat& operator<<=(std::size_t bits) { return *this = *this << bits; }
    Nat& operator>>=(std::size_t bits) { return *this = *this >> bits; }

    /// Quotient and remainder in one pass; throws DomainError on zero divisor.
    static std::pair<Nat, Nat> divmod(const Nat& a, const Nat& b);

    /// Fast path for word-sized divisors.
    static std::pair<Nat, std::uint32_t> divmod_u32(const Nat& a, std::uint32_t b);
    std::uint32_t mod_u32(std::uint32_t m) const;

    std::strong_ordering operator<=>(const Nat& other) const;
    bool operator==(const Nat& other) const = default;

private:
    void trim();
    std::vector<std::uint32_t> limbs_;
};

} // namespace stegcrypt
