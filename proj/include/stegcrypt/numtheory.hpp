#pragma once

#include <cstdint>

#include "stegcrypt/nat.hpp"
#include "stegcrypt/rng.hpp"

namespace stegcrypt {

/// base^exponent mod modulus by square-and-multiply.
/// Throws DomainError when modulus is zero.
Nat mod_pow(const Nat& base, const Nat& exponent, const Nat& modulus);

/// Multiplicative inverse of a modulo m via extended Euclid, in (0, m).
/// Throws DomainError for m < 2, NotInvertibleError when gcd(a, m) != 1.
Nat mod_inverse(const Nat& a, const Nat& m);

/// Greatest common divisor; gcd(0, 0) = 0.
Nat gcd(Nat a, Nat b);

/// Miller-Rabin primality check, preceded by deterministic trial division
/// against all primes below 1024 (conclusive on its own for n < 1024^2).
/// Witnesses are drawn from a generator seeded by n itself, so the verdict
/// is a deterministic function of n. False positives occur with probability
/// at most 4^-rounds; false negatives never. Requires rounds >= 1.
bool is_probable_prime(const Nat& n, unsigned rounds = 40);

/// Odd probable prime with exactly `bits` significant bits (top bit set).
/// Candidates are tested with 40 Miller-Rabin rounds. Requires bits >= 8.
/// Deterministic function of the rng seed in single-threaded use.
Nat gen_prime(unsigned bits, RandomSource& rng);

struct SafePrime {
    Nat p; // safe prime, p = 2q + 1, `bits` significant bits
    Nat q; // Sophie Germain prime
};

/// Safe prime p = 2q + 1 with q prime. Requires bits >= 8.
SafePrime gen_safe_prime(unsigned bits, RandomSource& rng);

/// Smallest g >= 2 with g^2 != 1 and g^q != 1 (mod p); for p = 2q + 1 in
/// safe-prime form this is exactly the primitive-root condition.
/// Throws DomainError unless p = 2q + 1 with both p and q probable primes.
Nat find_primitive_root(const Nat& p, const Nat& q);

/// Running count of mod_pow calls on this thread; the benchmark harness
/// uses it to report modular exponentiations per encrypted block.
std::uint64_t mod_pow_count();
void reset_mod_pow_count();

} // namespace stegcrypt
