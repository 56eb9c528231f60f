#pragma once

#include <string>
#include <string_view>

#include "stegcrypt/nat.hpp"
#include "stegcrypt/rng.hpp"

namespace stegcrypt::dh {

/// Public group parameters: safe prime p = 2q + 1 and a primitive root g.
struct DhParams {
    Nat p;
    Nat g;
    Nat q;
    bool operator==(const DhParams&) const = default;
};

struct DhKeyPair {
    Nat private_key; // in (1, p-1)
    Nat public_key;  // g^private mod p
    bool operator==(const DhKeyPair&) const = default;
};

DhParams gen_params(unsigned bits, RandomSource& rng);

DhKeyPair gen_keypair(const DhParams& params, RandomSource& rng);

/// peer_public ^ own_private mod p. Throws DomainError when peer_public is
/// outside [1, p-1].
Nat shared_secret(const DhParams& params, const Nat& own_private, const Nat& peer_public);

// Key-value text form: p, g, q lines for params; keypairs append priv, pub.
std::string params_to_text(const DhParams& params);
DhParams params_from_text(std::string_view text);
std::string keypair_to_text(const DhParams& params, const DhKeyPair& keypair);
std::pair<DhParams, DhKeyPair> keypair_from_text(std::string_view text);

} // namespace stegcrypt::dh
