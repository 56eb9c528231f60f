#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace stegcrypt::bench {

struct BenchReport {
    std::string cipher; // "rsa" or "elgamal"
    unsigned key_bits;
    std::size_t message_bytes;
    unsigned repetitions;
    double mean_encrypt_s; // arithmetic mean over `repetitions` timed runs
    double mean_decrypt_s; // after one untimed warm-up run
    std::uint64_t modexp_count_encrypt; // modular exponentiations per block
    std::uint64_t modexp_count_decrypt;
};

inline constexpr std::string_view kCsvHeader =
    "cipher,key_bits,message_bytes,repetitions,mean_encrypt_s,mean_decrypt_s,"
    "modexp_count_encrypt,modexp_count_decrypt";

/// Generates a seeded key, encrypts/decrypts a fixed random message, and
/// reports mean timings plus instrumented modexp counts per block.
/// Requires key_bits in {512, 1024, 2048} and repetitions >= 5.
BenchReport run_bench(std::string_view cipher, unsigned key_bits, std::size_t message_bytes,
                      unsigned repetitions, std::uint64_t seed);

std::string csv_row(const BenchReport& report);

} // namespace stegcrypt::bench
