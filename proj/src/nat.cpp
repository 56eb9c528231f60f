#include "stegcrypt/nat.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdio>

#include "stegcrypt/errors.hpp"

namespace stegcrypt {

namespace {

constexpr std::uint64_t kBase = std::uint64_t{1} << 32;
constexpr std::uint64_t kLimbMask = kBase - 1;

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

} // namespace

Nat::Nat(std::uint64_t value) {
    if (value != 0) limbs_.push_back(static_cast<std::uint32_t>(value & kLimbMask));
    if (value >> 32) limbs_.push_back(static_cast<std::uint32_t>(value >> 32));
}

void Nat::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::size_t Nat::bit_length() const {
    if (limbs_.empty()) return 0;
    return 32 * (limbs_.size() - 1) + (32 - std::countl_zero(limbs_.back()));
}

bool Nat::bit(std::size_t index) const {
    std::size_t limb = index / 32;
    if (limb >= limbs_.size()) return false;
    return (limbs_[limb] >> (index % 32)) & 1u;
}

void Nat::set_bit(std::size_t index) {
    std::size_t limb = index / 32;
    if (limb >= limbs_.size()) limbs_.resize(limb + 1, 0);
    limbs_[limb] |= std::uint32_t{1} << (index % 32);
}

std::uint64_t Nat::to_u64() const {
    if (limbs_.size() > 2) throw DomainError("value does not fit in 64 bits");
    std::uint64_t v = 0;
    if (limbs_.size() > 1) v = std::uint64_t{limbs_[1]} << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

std::strong_ordering Nat::operator<=>(const Nat& other) const {
    if (limbs_.size() != other.limbs_.size())
        return limbs_.size() <=> other.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != other.limbs_[i]) return limbs_[i] <=> other.limbs_[i];
    }
    return std::strong_ordering::equal;
}

Nat operator+(const Nat& a, const Nat& b) {
    Nat r;
    const auto& x = a.limbs_;
    const auto& y = b.limbs_;
    std::size_t n = std::max(x.size(), y.size());
    r.limbs_.resize(n);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t s = carry;
        if (i < x.size()) s += x[i];
        if (i < y.size()) s += y[i];
        r.limbs_[i] = static_cast<std::uint32_t>(s & kLimbMask);
        carry = s >> 32;
    }
    if (carry) r.limbs_.push_back(static_cast<std::uint32_t>(carry));
    return r;
}

Nat operator-(const Nat& a, const Nat& b) {
    if (a < b) throw DomainError("subtraction would be negative");
    Nat r;
    r.limbs_.resize(a.limbs_.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a.limbs_[i]) - borrow;
        if (i < b.limbs_.size()) d -= b.limbs_[i];
        borrow = d < 0 ? 1 : 0;
        r.limbs_[i] = static_cast<std::uint32_t>(d + (borrow << 32));
    }
    r.trim();
    return r;
}

Nat operator*(const Nat& a, const Nat& b) {
    if (a.is_zero() || b.is_zero()) return Nat{};
    Nat r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = a.limbs_[i];
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            // ai*bj + existing + carry fits in 64 bits: (2^32-1)^2 + 2*(2^32-1) = 2^64-1
            std::uint64_t cur = ai * b.limbs_[j] + r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<std::uint32_t>(cur & kLimbMask);
            carry = cur >> 32;
        }
        r.limbs_[i + b.limbs_.size()] = static_cast<std::uint32_t>(carry);
    }
    r.trim();
    return r;
}

Nat operator<<(const Nat& a, std::size_t bits) {
    if (a.is_zero()) return Nat{};
    std::size_t limb_shift = bits / 32;
    unsigned bit_shift = bits % 32;
    Nat r;
    r.limbs_.assign(a.limbs_.size() + limb_shift + 1, 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t v = std::uint64_t{a.limbs_[i]} << bit_shift;
        r.limbs_[i + limb_shift] |= static_cast<std::uint32_t>(v & kLimbMask);
        r.limbs_[i + limb_shift + 1] |= static_cast<std::uint32_t>(v >> 32);
    }
    r.trim();
    return r;
}

Nat operator>>(const Nat& a, std::size_t bits) {
    std::size_t limb_shift = bits / 32;
    unsigned bit_shift = bits % 32;
    if (limb_shift >= a.limbs_.size()) return Nat{};
    Nat r;
    r.limbs_.resize(a.limbs_.size() - limb_shift);
    for (std::size_t i = 0; i < r.limbs_.size(); ++i) {
        std::uint64_t v = std::uint64_t{a.limbs_[i + limb_shift]} >> bit_shift;
        if (bit_shift != 0 && i + limb_shift + 1 < a.limbs_.size())
            v |= std::uint64_t{a.limbs_[i + limb_shift + 1]} << (32 - bit_shift);
        r.limbs_[i] = static_cast<std::uint32_t>(v & kLimbMask);
    }
    r.trim();
    return r;
}

std::pair<Nat, std::uint32_t> Nat::divmod_u32(const Nat& a, std::uint32_t b) {
    if (b == 0) throw DomainError("division by zero");
    Nat q;
    q.limbs_.resize(a.limbs_.size());
    std::uint64_t rem = 0;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | a.limbs_[i];
        q.limbs_[i] = static_cast<std::uint32_t>(cur / b);
        rem = cur % b;
    }
    q.trim();
    return {std::move(q), static_cast<std::uint32_t>(rem)};
}

std::uint32_t Nat::mod_u32(std::uint32_t m) const {
    if (m == 0) throw DomainError("division by zero");
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        rem = ((rem << 32) | limbs_[i]) % m;
    }
    return static_cast<std::uint32_t>(rem);
}

// Knuth TAOCP vol. 2, algorithm D.
std::pair<Nat, Nat> Nat::divmod(const Nat& a, const Nat& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    if (a < b) return {Nat{}, a};
    if (b.limbs_.size() == 1) {
        auto [q, r] = divmod_u32(a, b.limbs_[0]);
        return {std::move(q), Nat{r}};
    }

    // Normalize so the divisor's top limb has its high bit set.
    unsigned shift = std::countl_zero(b.limbs_.back());
    Nat u = a << shift;
    Nat v = b << shift;
    const std::size_t n = v.limbs_.size();
    const std::size_t m = u.limbs_.size() - n;
    u.limbs_.push_back(0);

    const std::uint64_t v1 = v.limbs_[n - 1];
    const std::uint64_t v2 = v.limbs_[n - 2];

    Nat q;
    q.limbs_.assign(m + 1, 0);

    for (std::size_t j = m + 1; j-- > 0;) {
        std::uint64_t top = (std::uint64_t{u.limbs_[j + n]} << 32) | u.limbs_[j + n - 1];
        std::uint64_t qhat = top / v1;
        std::uint64_t rhat = top % v1;
        // Two-limb refinement: qhat may start at most 2 too large.
        while (qhat >= kBase ||
               qhat * v2 > ((rhat << 32) | u.limbs_[j + n - 2])) {
            --qhat;
            rhat += v1;
            if (rhat >= kBase) break;
        }

        // u[j .. j+n] -= qhat * v
        std::uint64_t carry = 0;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t p = qhat * v.limbs_[i] + carry;
            carry = p >> 32;
            std::int64_t t = static_cast<std::int64_t>(u.limbs_[i + j]) -
                             static_cast<std::int64_t>(p & kLimbMask) - borrow;
            u.limbs_[i + j] = static_cast<std::uint32_t>(t);
            borrow = t < 0 ? 1 : 0;
        }
        std::int64_t t = static_cast<std::int64_t>(u.limbs_[j + n]) -
                         static_cast<std::int64_t>(carry) - borrow;
        u.limbs_[j + n] = static_cast<std::uint32_t>(t);

        if (t < 0) {
            // qhat was one too large; add v back once.
            --qhat;
            std::uint64_t c = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t s = std::uint64_t{u.limbs_[i + j]} + v.limbs_[i] + c;
                u.limbs_[i + j] = static_cast<std::uint32_t>(s & kLimbMask);
                c = s >> 32;
            }
            u.limbs_[j + n] = static_cast<std::uint32_t>(u.limbs_[j + n] + c);
        }
        q.limbs_[j] = static_cast<std::uint32_t>(qhat);
    }

    q.trim();
    u.limbs_.resize(n);
    u.trim();
    return {std::move(q), u >> shift};
}

Nat operator/(const Nat& a, const Nat& b) { return Nat::divmod(a, b).first; }
Nat operator%(const Nat& a, const Nat& b) { return Nat::divmod(a, b).second; }

Nat Nat::from_hex(std::string_view text) {
    if (text.empty()) throw ParseError("empty hex string");
    Nat r;
    r.limbs_.assign((text.size() + 7) / 8, 0);
    std::size_t bitpos = 0;
    for (std::size_t i = text.size(); i-- > 0;) {
        int d = hex_digit(text[i]);
        if (d < 0) throw ParseError(std::string("invalid hex digit '") + text[i] + "'");
        r.limbs_[bitpos / 32] |= static_cast<std::uint32_t>(d) << (bitpos % 32);
        bitpos += 4;
    }
    r.trim();
    return r;
}

std::string Nat::to_hex() const {
    if (limbs_.empty()) return "0";
    char buf[9];
    std::snprintf(buf, sizeof buf, "%x", limbs_.back());
    std::string out = buf;
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
        std::snprintf(buf, sizeof buf, "%08x", limbs_[i]);
        out += buf;
    }
    return out;
}

Nat Nat::from_decimal(std::string_view text) {
    if (text.empty()) throw ParseError("empty decimal string");
    Nat r;
    for (char c : text) {
        if (c < '0' || c > '9') throw ParseError(std::string("invalid decimal digit '") + c + "'");
        r = r * Nat{10} + Nat{static_cast<std::uint64_t>(c - '0')};
    }
    return r;
}

std::string Nat::to_decimal() const {
    if (limbs_.empty()) return "0";
    std::vector<std::uint32_t> chunks; // base 10^9, little-endian
    Nat cur = *this;
    while (!cur.is_zero()) {
        auto [q, r] = divmod_u32(cur, 1000000000u);
        chunks.push_back(r);
        cur = std::move(q);
    }
    char buf[10];
    std::snprintf(buf, sizeof buf, "%u", chunks.back());
    std::string out = buf;
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::snprintf(buf, sizeof buf, "%09u", chunks[i]);
        out += buf;
    }
    return out;
}

Nat Nat::from_bytes_be(std::span<const std::uint8_t> bytes) {
    Nat r;
    r.limbs_.assign((bytes.size() + 3) / 4, 0);
    std::size_t bitpos = 0;
    for (std::size_t i = bytes.size(); i-- > 0;) {
        r.limbs_[bitpos / 32] |= std::uint32_t{bytes[i]} << (bitpos % 32);
        bitpos += 8;
    }
    r.trim();
    return r;
}

std::vector<std::uint8_t> Nat::to_bytes_be() const {
    return to_bytes_be(byte_length());
}

std::vector<std::uint8_t> Nat::to_bytes_be(std::size_t width) const {
    if (byte_length() > width) throw DomainError("value does not fit in requested width");
    std::vector<std::uint8_t> out(width, 0);
    for (std::size_t i = 0; i < width; ++i) {
        std::size_t limb = i / 4;
        if (limb >= limbs_.size()) break;
        out[width - 1 - i] = static_cast<std::uint8_t>(limbs_[limb] >> (8 * (i % 4)));
    }
    return out;
}

} // namespace stegcrypt
