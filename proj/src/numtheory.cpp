#include "stegcrypt/numtheory.hpp"

#include <array>
#include <vector>

#include "stegcrypt/errors.hpp"

namespace stegcrypt {

namespace {

thread_local std::uint64_t g_mod_pow_calls = 0;

// Primes below 1024, for the deterministic trial-division stage.
// Conclusive on its own for any n < 1024^2 = 1048576.
const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<std::uint32_t> out;
        std::array<bool, 1024> composite{};
        for (std::uint32_t i = 2; i < composite.size(); ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint32_t j = i * i; j < composite.size(); j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

enum class TrialVerdict { prime, composite, unknown };

TrialVerdict trial_divide(const Nat& n) {
    const bool small = n.bit_length() <= 20; // n < 1048576
    const std::uint64_t nv = small ? n.to_u64() : 0;
    for (std::uint32_t p : small_primes()) {
        if (small) {
            if (nv == p) return TrialVerdict::prime;
            if (std::uint64_t{p} * p > nv) return TrialVerdict::prime;
        }
        if (n.mod_u32(p) == 0) return TrialVerdict::composite;
    }
    return small ? TrialVerdict::prime : TrialVerdict::unknown;
}

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Witness generator seeded from the candidate itself, making the verdict a
// pure function of n.
RandomSource witness_source(const Nat& n) {
    std::uint64_t h = mix64(n.bit_length());
    Nat rest = n;
    while (!rest.is_zero()) {
        h = mix64(h ^ rest.mod_u32(0xfffffffbu));
        rest = rest >> 32;
    }
    return RandomSource{h};
}

// Core Miller-Rabin; expects odd n with no factor below 1024.
bool miller_rabin(const Nat& n, unsigned rounds) {
    const Nat one{1};
    const Nat n_minus_1 = n - one;
    std::size_t s = 0;
    Nat d = n_minus_1;
    while (!d.is_odd()) {
        d = d >> 1;
        ++s;
    }

    RandomSource witnesses = witness_source(n);
    const Nat span = n - Nat{3}; // witnesses drawn from [2, n-2]
    for (unsigned round = 0; round < rounds; ++round) {
        Nat a = witnesses.below(span) + Nat{2};
        Nat x = mod_pow(a, d, n);
        if (x == one || x == n_minus_1) continue;
        bool composite = true;
        for (std::size_t i = 1; i < s; ++i) {
            x = (x * x) % n;
            if (x == n_minus_1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Residue filter for the safe-prime search: rejects q when a small prime
// properly divides q or p = 2q + 1.
bool survives_joint_sieve(const Nat& q) {
    const bool fits = q.bit_length() <= 32;
    const std::uint64_t qv = fits ? q.to_u64() : 0;
    const std::uint64_t pv = 2 * qv + 1;
    for (std::uint32_t s : small_primes()) {
        if (s == 2) continue;
        std::uint32_t rq = q.mod_u32(s);
        if (rq == 0 && !(fits && qv == s)) return false;
        if ((2ull * rq + 1) % s == 0 && !(fits && pv == s)) return false;
    }
    return true;
}

} // namespace

Nat mod_pow(const Nat& base, const Nat& exponent, const Nat& modulus) {
    if (modulus.is_zero()) throw DomainError("modulus must be >= 1");
    ++g_mod_pow_calls;
    if (modulus == Nat{1}) return Nat{};
    Nat result{1};
    Nat acc = base % modulus;
    for (std::size_t i = 0, bits = exponent.bit_length(); i < bits; ++i) {
        if (exponent.bit(i)) result = (result * acc) % modulus;
        if (i + 1 < bits) acc = (acc * acc) % modulus;
    }
    return result;
}

Nat mod_inverse(const Nat& a, const Nat& m) {
    if (m < Nat{2}) throw DomainError("modulus must be >= 2");
    // Iterative extended Euclid; the Bezout coefficient of a is tracked
    // modulo m to stay non-negative.
    Nat r0 = m;
    Nat r1 = a % m;
    Nat x0{0};
    Nat x1{1};
    while (!r1.is_zero()) {
        auto [quot, rem] = Nat::divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        Nat next = (x0 + (m - (quot * x1) % m)) % m;
        x0 = std::move(x1);
        x1 = std::move(next);
    }
    if (r0 != Nat{1}) throw NotInvertibleError("value has no inverse modulo m");
    return x0;
}

Nat gcd(Nat a, Nat b) {
    while (!b.is_zero()) {
        Nat r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_probable_prime(const Nat& n, unsigned rounds) {
    if (n < Nat{2}) return false;
    switch (trial_divide(n)) {
        case TrialVerdict::prime: return true;
        case TrialVerdict::composite: return false;
        case TrialVerdict::unknown: break;
    }
    return miller_rabin(n, rounds);
}

Nat gen_prime(unsigned bits, RandomSource& rng) {
    if (bits < 8) throw DomainError("prime size must be at least 8 bits");
    for (;;) {
        Nat candidate = rng.bits(bits);
        candidate.set_bit(bits - 1);
        candidate.set_bit(0);
        if (is_probable_prime(candidate, 40)) return candidate;
    }
}

SafePrime gen_safe_prime(unsigned bits, RandomSource& rng) {
    if (bits < 8) throw DomainError("prime size must be at least 8 bits");
    for (;;) {
        Nat q = rng.bits(bits - 1);
        q.set_bit(bits - 2);
        q.set_bit(0);
        if (!survives_joint_sieve(q)) continue;
        Nat p = (q << 1) + Nat{1};
        // One cheap round on q discards nearly all remaining composites
        // before the expensive confirmation of the pair.
        if (q.bit_length() > 20 && !miller_rabin(q, 1)) continue;
        if (!is_probable_prime(p, 40)) continue;
        if (!is_probable_prime(q, 40)) continue;
        return SafePrime{std::move(p), std::move(q)};
    }
}

Nat find_primitive_root(const Nat& p, const Nat& q) {
    if ((q << 1) + Nat{1} != p || !is_probable_prime(p, 40) || !is_probable_prime(q, 40))
        throw DomainError("expected a safe prime p = 2q + 1 with q prime");
    const Nat one{1};
    for (Nat g{2}; g < p; g += one) {
        if (mod_pow(g, Nat{2}, p) == one) continue;
        if (mod_pow(g, q, p) == one) continue;
        return g;
    }
    throw DomainError("no primitive root below p"); // unreachable for valid input
}

std::uint64_t mod_pow_count() { return g_mod_pow_calls; }
void reset_mod_pow_count() { g_mod_pow_calls = 0; }

} // namespace stegcrypt
