#include "stegcrypt/dh.hpp"

#include "stegcrypt/errors.hpp"
#include "stegcrypt/keyfile.hpp"
#include "stegcrypt/numtheory.hpp"

namespace stegcrypt::dh {

DhParams gen_params(unsigned bits, RandomSource& rng) {
    auto [p, q] = gen_safe_prime(bits, rng);
    Nat g = find_primitive_root(p, q);
    return DhParams{std::move(p), std::move(g), std::move(q)};
}

DhKeyPair gen_keypair(const DhParams& params, RandomSource& rng) {
    // private key uniform in (1, p-1), i.e. [2, p-2]
    Nat priv = rng.in_range(Nat{2}, params.p - Nat{2});
    Nat pub = mod_pow(params.g, priv, params.p);
    return DhKeyPair{std::move(priv), std::move(pub)};
}

Nat shared_secret(const DhParams& params, const Nat& own_private, const Nat& peer_public) {
    if (peer_public.is_zero() || peer_public >= params.p)
        throw DomainError("peer public key outside [1, p-1]");
    return mod_pow(peer_public, own_private, params.p);
}

std::string params_to_text(const DhParams& params) {
    const keyfile::Entry entries[] = {
        {"p", params.p.to_hex()}, {"g", params.g.to_hex()}, {"q", params.q.to_hex()}};
    return keyfile::render(entries);
}

DhParams params_from_text(std::string_view text) {
    auto entries = keyfile::parse(text);
    if (entries.size() != 3) throw ParseError("params file must have exactly p, g, q");
    return DhParams{Nat::from_hex(keyfile::expect(entries, 0, "p")),
                    Nat::from_hex(keyfile::expect(entries, 1, "g")),
                    Nat::from_hex(keyfile::expect(entries, 2, "q"))};
}

std::string keypair_to_text(const DhParams& params, const DhKeyPair& keypair) {
    const keyfile::Entry entries[] = {{"p", params.p.to_hex()},
                                      {"g", params.g.to_hex()},
                                      {"q", params.q.to_hex()},
                                      {"priv", keypair.private_key.to_hex()},
                                      {"pub", keypair.public_key.to_hex()}};
    return keyfile::render(entries);
}

std::pair<DhParams, DhKeyPair> keypair_from_text(std::string_view text) {
    auto entries = keyfile::parse(text);
    if (entries.size() != 5) throw ParseError("keypair file must have p, g, q, priv, pub");
    DhParams params{Nat::from_hex(keyfile::expect(entries, 0, "p")),
                    Nat::from_hex(keyfile::expect(entries, 1, "g")),
                    Nat::from_hex(keyfile::expect(entries, 2, "q"))};
    DhKeyPair keypair{Nat::from_hex(keyfile::expect(entries, 3, "priv")),
                      Nat::from_hex(keyfile::expect(entries, 4, "pub"))};
    return {std::move(params), std::move(keypair)};
}

} // namespace stegcrypt::dh
