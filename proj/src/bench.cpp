#include "stegcrypt/bench.hpp"

#include <chrono>
#include <cstdio>
#include <vector>

#include "stegcrypt/elgamal.hpp"
#include "stegcrypt/errors.hpp"
#include "stegcrypt/numtheory.hpp"
#include "stegcrypt/rsa.hpp"

namespace stegcrypt::bench {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::uint8_t> random_message(std::size_t size, RandomSource& rng) {
    std::vector<std::uint8_t> msg(size);
    for (auto& b : msg) b = static_cast<std::uint8_t>(rng.next_u64());
    return msg;
}

template <typename Encrypt, typename Decrypt>
BenchReport measure(BenchReport report, Encrypt encrypt, Decrypt decrypt) {
    // Warm-up run, also the source of counts and the decryption input.
    reset_mod_pow_count();
    auto ciphertext = encrypt();
    std::uint64_t encrypt_calls = mod_pow_count();
    std::size_t block_count = ciphertext.size();

    reset_mod_pow_count();
    decrypt(ciphertext);
    std::uint64_t decrypt_calls = mod_pow_count();

    double total = 0;
    std::size_t sink = 0; // keeps the timed calls observable
    for (unsigned i = 0; i < report.repetitions; ++i) {
        auto start = Clock::now();
        sink += encrypt().size();
        total += seconds_since(start);
    }
    if (sink == 0) throw Error("benchmark produced no ciphertext");
    report.mean_encrypt_s = total / report.repetitions;

    total = 0;
    for (unsigned i = 0; i < report.repetitions; ++i) {
        auto start = Clock::now();
        decrypt(ciphertext);
        total += seconds_since(start);
    }
    report.mean_decrypt_s = total / report.repetitions;

    report.modexp_count_encrypt = encrypt_calls / block_count;
    report.modexp_count_decrypt = decrypt_calls / block_count;
    return report;
}

} // namespace

BenchReport run_bench(std::string_view cipher, unsigned key_bits, std::size_t message_bytes,
                      unsigned repetitions, std::uint64_t seed) {
    if (key_bits != 512 && key_bits != 1024 && key_bits != 2048)
        throw DomainError("key_bits must be 512, 1024 or 2048");
    if (repetitions < 5) throw DomainError("repetitions must be at least 5");
    if (message_bytes == 0) throw DomainError("message must be non-empty");

    RandomSource rng(seed);
    auto message = random_message(message_bytes, rng);

    BenchReport report{std::string(cipher), key_bits, message_bytes, repetitions, 0, 0, 0, 0};

    if (cipher == "rsa") {
        auto keypair = rsa::keygen(key_bits, Nat{65537}, rng);
        return measure(
            std::move(report),
            [&] { return rsa::encrypt_bytes(message, keypair.public_key); },
            [&](const std::vector<Nat>& ct) { rsa::decrypt_bytes(ct, keypair.private_key); });
    }
    if (cipher == "elgamal") {
        auto keypair = elgamal::keygen(key_bits, rng);
        return measure(
            std::move(report),
            [&] { return elgamal::encrypt_bytes(message, keypair.public_key, rng); },
            [&](const std::vector<elgamal::ElGamalCiphertext>& ct) {
                elgamal::decrypt_bytes(ct, keypair.private_key);
            });
    }
    throw DomainError("unknown cipher '" + std::string(cipher) + "' (expected rsa or elgamal)");
}

std::string csv_row(const BenchReport& r) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s,%u,%zu,%u,%.9f,%.9f,%llu,%llu", r.cipher.c_str(),
                  r.key_bits, r.message_bytes, r.repetitions, r.mean_encrypt_s, r.mean_decrypt_s,
                  static_cast<unsigned long long>(r.modexp_count_encrypt),
                  static_cast<unsigned long long>(r.modexp_count_decrypt));
    return buf;
}

} // namespace stegcrypt::bench
