#include "stegcrypt/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "stegcrypt/bench.hpp"
#include "stegcrypt/dh.hpp"
#include "stegcrypt/elgamal.hpp"
#include "stegcrypt/errors.hpp"
#include "stegcrypt/keyfile.hpp"
#include "stegcrypt/lsb.hpp"
#include "stegcrypt/metrics.hpp"
#include "stegcrypt/numtheory.hpp"
#include "stegcrypt/pipeline.hpp"
#include "stegcrypt/raster.hpp"
#include "stegcrypt/rsa.hpp"

namespace stegcrypt::cli {

namespace {

std::uint64_t entropy_seed() {
    std::random_device rd;
    return (std::uint64_t{rd()} << 32) ^ rd();
}

std::vector<std::uint8_t> as_bytes(const std::string& text) {
    return {text.begin(), text.end()};
}

std::vector<std::uint8_t> read_payload(const std::string& text, const std::string& in_path) {
    if (!in_path.empty()) return as_bytes(keyfile::read_file(in_path));
    return as_bytes(text);
}

void write_bytes_out(std::span<const std::uint8_t> data, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(data.data(), 1, data.size(), stdout);
        return;
    }
    keyfile::write_file(out_path,
                        std::string_view(reinterpret_cast<const char*>(data.data()), data.size()));
}

void write_text_out(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::fputs(text.c_str(), stdout);
    else
        keyfile::write_file(out_path, text);
}

std::string detect_key_kind(const std::string& text) {
    auto entries = keyfile::parse(text);
    if (!entries.empty() && entries.front().first == "kind") return entries.front().second;
    return "";
}

struct KeygenArgs {
    std::string cipher;
    unsigned bits = 0;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::string exponent = "10001"; // hex for 65537
};

int do_keygen(const KeygenArgs& args) {
    RandomSource rng(args.seed.value_or(entropy_seed()));
    std::string pub_text;
    std::string priv_text;
    if (args.cipher == "rsa") {
        auto keypair = rsa::keygen(args.bits, Nat::from_hex(args.exponent), rng);
        pub_text = rsa::to_text(keypair.public_key);
        priv_text = rsa::to_text(keypair.private_key);
    } else if (args.cipher == "elgamal") {
        auto keypair = elgamal::keygen(args.bits, rng);
        pub_text = elgamal::to_text(keypair.public_key);
        priv_text = elgamal::to_text(keypair.private_key);
    } else {
        throw DomainError("unknown cipher '" + args.cipher + "' (expected rsa or elgamal)");
    }
    keyfile::write_file(args.out + ".pub", pub_text);
    keyfile::write_file(args.out + ".priv", priv_text);
    std::cout << "wrote " << args.out << ".pub and " << args.out << ".priv\n";
    return 0;
}

struct DhDemoArgs {
    unsigned bits = 64;
    std::optional<std::uint64_t> seed;
    std::string out;
};

int do_dh_demo(const DhDemoArgs& args) {
    RandomSource rng(args.seed.value_or(entropy_seed()));
    auto params = dh::gen_params(args.bits, rng);
    auto alice = dh::gen_keypair(params, rng);
    auto bob = dh::gen_keypair(params, rng);
    Nat alice_shared = dh::shared_secret(params, alice.private_key, bob.public_key);
    Nat bob_shared = dh::shared_secret(params, bob.private_key, alice.public_key);

    std::cout << "p=" << params.p.to_hex() << "\n"
              << "g=" << params.g.to_hex() << "\n"
              << "q=" << params.q.to_hex() << "\n"
              << "alice_pub=" << alice.public_key.to_hex() << "\n"
              << "bob_pub=" << bob.public_key.to_hex() << "\n"
              << "alice_shared=" << alice_shared.to_hex() << "\n"
              << "bob_shared=" << bob_shared.to_hex() << "\n"
              << "agreement=" << (alice_shared == bob_shared ? "true" : "false") << "\n";

    if (!args.out.empty()) {
        keyfile::write_file(args.out + ".params", dh::params_to_text(params));
        keyfile::write_file(args.out + ".alice", dh::keypair_to_text(params, alice));
        keyfile::write_file(args.out + ".bob", dh::keypair_to_text(params, bob));
    }
    return alice_shared == bob_shared ? 0 : 2;
}

struct CryptArgs {
    std::string key;
    std::string in;
    std::string out;
    std::optional<std::uint64_t> seed;
};

int do_encrypt(const CryptArgs& args) {
    auto message = as_bytes(keyfile::read_file(args.in));
    std::string key_text = keyfile::read_file(args.key);
    std::string kind = detect_key_kind(key_text);
    pipeline::CipherEnvelope envelope{pipeline::CipherId::rsa, {}};
    if (kind == "rsa-public") {
        envelope.values = rsa::encrypt_bytes(message, rsa::public_key_from_text(key_text));
    } else if (kind == "elgamal-public") {
        RandomSource rng(args.seed.value_or(entropy_seed()));
        envelope.cipher = pipeline::CipherId::elgamal;
        auto cts = elgamal::encrypt_bytes(message, elgamal::public_key_from_text(key_text), rng);
        for (auto& ct : cts) {
            envelope.values.push_back(std::move(ct.e1));
            envelope.values.push_back(std::move(ct.e2));
        }
    } else {
        throw DomainError("expected an rsa-public or elgamal-public key file");
    }
    write_bytes_out(pipeline::serialize_envelope(envelope), args.out);
    return 0;
}

int do_decrypt(const CryptArgs& args) {
    auto wire = as_bytes(keyfile::read_file(args.in));
    auto envelope = pipeline::parse_envelope(wire);
    std::string key_text = keyfile::read_file(args.key);
    std::string kind = detect_key_kind(key_text);
    std::vector<std::uint8_t> message;
    if (kind == "rsa-private") {
        if (envelope.cipher != pipeline::CipherId::rsa)
            throw WrongKeyKindError("envelope was encrypted with ElGamal, not RSA");
        message = rsa::decrypt_bytes(envelope.values, rsa::private_key_from_text(key_text));
    } else if (kind == "elgamal-private") {
        if (envelope.cipher != pipeline::CipherId::elgamal)
            throw WrongKeyKindError("envelope was encrypted with RSA, not ElGamal");
        std::vector<elgamal::ElGamalCiphertext> cts;
        for (std::size_t i = 0; i + 1 < envelope.values.size(); i += 2)
            cts.push_back({envelope.values[i], envelope.values[i + 1]});
        message = elgamal::decrypt_bytes(cts, elgamal::private_key_from_text(key_text));
    } else {
        throw DomainError("expected an rsa-private or elgamal-private key file");
    }
    write_bytes_out(message, args.out);
    return 0;
}

struct EmbedArgs {
    std::string cover;
    std::string text;
    std::string in;
    std::string out;
    bool framed = false;
};

int do_embed(const EmbedArgs& args) {
    Raster cover = load_image(args.cover);
    auto payload = read_payload(args.text, args.in);
    Raster stego =
        args.framed ? lsb::embed_framed(cover, payload) : lsb::embed_delimited(cover, payload);
    save_image(stego, args.out);
    return 0;
}

struct ExtractArgs {
    std::string image;
    std::string out;
    bool framed = false;
};

int do_extract(const ExtractArgs& args) {
    Raster stego = load_image(args.image);
    auto payload = args.framed ? lsb::extract_framed(stego) : lsb::extract_delimited(stego);
    write_bytes_out(payload, args.out);
    return 0;
}

struct HideArgs {
    std::string cover;
    std::string text;
    std::string in;
    std::string key;
    std::string out;
    std::optional<std::uint64_t> seed;
};

int do_hide(const HideArgs& args) {
    Raster cover = load_image(args.cover);
    auto message = read_payload(args.text, args.in);
    std::string key_text = keyfile::read_file(args.key);
    std::string kind = detect_key_kind(key_text);
    Raster stego;
    if (kind == "rsa-public") {
        stego = pipeline::hide(cover, message, rsa::public_key_from_text(key_text));
    } else if (kind == "elgamal-public") {
        RandomSource rng(args.seed.value_or(entropy_seed()));
        stego = pipeline::hide(cover, message, elgamal::public_key_from_text(key_text), rng);
    } else {
        throw DomainError("expected an rsa-public or elgamal-public key file");
    }
    save_image(stego, args.out);
    return 0;
}

struct RevealArgs {
    std::string image;
    std::string key;
    std::string out;
};

int do_reveal(const RevealArgs& args) {
    Raster stego = load_image(args.image);
    std::string key_text = keyfile::read_file(args.key);
    std::string kind = detect_key_kind(key_text);
    std::vector<std::uint8_t> message;
    if (kind == "rsa-private") {
        message = pipeline::reveal(stego, rsa::private_key_from_text(key_text));
    } else if (kind == "elgamal-private") {
        message = pipeline::reveal(stego, elgamal::private_key_from_text(key_text));
    } else {
        throw DomainError("expected an rsa-private or elgamal-private key file");
    }
    write_bytes_out(message, args.out);
    return 0;
}

struct MetricsArgs {
    std::string original;
    std::string candidate;
    std::string message;
    std::string message_file;
    std::vector<std::string> images;
    std::string out;
};

int do_metrics(const MetricsArgs& args) {
    std::string csv(metrics::kCsvHeader);
    csv += '\n';
    if (!args.images.empty()) {
        // LSB table mode: embed the message into every cover, report each pair.
        auto message = read_payload(args.message, args.message_file);
        for (const auto& path : args.images) {
            Raster cover = load_image(path);
            Raster stego = lsb::embed_delimited(cover, message);
            auto report = metrics::quality_report(cover, stego);
            csv += metrics::csv_row(std::filesystem::path(path).stem().string(), report);
            csv += '\n';
        }
    } else {
        if (args.original.empty() || args.candidate.empty())
            throw DomainError("need --original and --candidate, or --images with a message");
        Raster original = load_image(args.original);
        Raster candidate = load_image(args.candidate);
        auto report = metrics::quality_report(original, candidate);
        csv += metrics::csv_row(std::filesystem::path(args.candidate).stem().string(), report);
        csv += '\n';
    }
    write_text_out(csv, args.out);
    return 0;
}

struct BenchArgs {
    std::string cipher = "both";
    std::vector<unsigned> bits = {512, 1024};
    std::size_t message_bytes = 64;
    unsigned repetitions = 10;
    std::optional<std::uint64_t> seed;
    std::string out;
};

int do_bench(const BenchArgs& args) {
    std::vector<std::string> ciphers;
    if (args.cipher == "both") {
        ciphers = {"rsa", "elgamal"};
    } else if (args.cipher == "rsa" || args.cipher == "elgamal") {
        ciphers = {args.cipher};
    } else {
        throw DomainError("unknown cipher '" + args.cipher + "' (expected rsa, elgamal or both)");
    }
    std::uint64_t seed = args.seed.value_or(entropy_seed());

    std::string csv(bench::kCsvHeader);
    csv += '\n';
    for (const auto& cipher : ciphers) {
        for (unsigned key_bits : args.bits) {
            auto report =
                bench::run_bench(cipher, key_bits, args.message_bytes, args.repetitions, seed);
            csv += bench::csv_row(report);
            csv += '\n';
        }
    }
    write_text_out(csv, args.out);
    return 0;
}

} // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"Public-key cryptography composed with LSB image steganography"};
    app.require_subcommand(1);

    KeygenArgs keygen_args;
    auto* keygen = app.add_subcommand("keygen", "Generate an RSA or ElGamal keypair");
    keygen->add_option("--cipher", keygen_args.cipher, "rsa or elgamal")->required();
    keygen->add_option("--bits", keygen_args.bits, "modulus size in bits")->required();
    keygen->add_option("--out", keygen_args.out, "output path prefix")->required();
    keygen->add_option("--seed", keygen_args.seed, "deterministic seed");
    keygen->add_option("--exponent", keygen_args.exponent, "RSA public exponent (hex)");

    DhDemoArgs dh_args;
    auto* dh_demo = app.add_subcommand("dh-demo", "Run a Diffie-Hellman agreement end to end");
    dh_demo->add_option("--bits", dh_args.bits, "prime size in bits (default 64)");
    dh_demo->add_option("--seed", dh_args.seed, "deterministic seed");
    dh_demo->add_option("--out", dh_args.out, "write .params/.alice/.bob files");

    CryptArgs encrypt_args;
    auto* encrypt = app.add_subcommand("encrypt", "Encrypt a file into an envelope");
    encrypt->add_option("--key", encrypt_args.key, "public key file")->required();
    encrypt->add_option("--in", encrypt_args.in, "plaintext file")->required();
    encrypt->add_option("--out", encrypt_args.out, "envelope output file");
    encrypt->add_option("--seed", encrypt_args.seed, "deterministic seed (ElGamal)");

    CryptArgs decrypt_args;
    auto* decrypt = app.add_subcommand("decrypt", "Decrypt an envelope file");
    decrypt->add_option("--key", decrypt_args.key, "private key file")->required();
    decrypt->add_option("--in", decrypt_args.in, "envelope file")->required();
    decrypt->add_option("--out", decrypt_args.out, "plaintext output (stdout otherwise)");

    EmbedArgs embed_args;
    auto* embed = app.add_subcommand("embed", "Hide plain text in an image (no encryption)");
    embed->add_option("--cover", embed_args.cover, "cover PNG")->required();
    auto* embed_text = embed->add_option("--text", embed_args.text, "text to hide");
    embed->add_option("--in", embed_args.in, "file with the payload")->excludes(embed_text);
    embed->add_option("--out", embed_args.out, "stego PNG")->required();
    embed->add_flag("--framed", embed_args.framed, "length-framed binary mode");

    ExtractArgs extract_args;
    auto* extract = app.add_subcommand("extract", "Recover text hidden by embed");
    extract->add_option("--image", extract_args.image, "stego PNG")->required();
    extract->add_option("--out", extract_args.out, "payload output (stdout otherwise)");
    extract->add_flag("--framed", extract_args.framed, "length-framed binary mode");

    HideArgs hide_args;
    auto* hide = app.add_subcommand("hide", "Encrypt a message and embed it in an image");
    hide->add_option("--cover", hide_args.cover, "cover PNG")->required();
    auto* hide_text = hide->add_option("--text", hide_args.text, "message text");
    hide->add_option("--in", hide_args.in, "file with the message")->excludes(hide_text);
    hide->add_option("--key", hide_args.key, "public key file")->required();
    hide->add_option("--out", hide_args.out, "stego PNG")->required();
    hide->add_option("--seed", hide_args.seed, "deterministic seed (ElGamal)");

    RevealArgs reveal_args;
    auto* reveal = app.add_subcommand("reveal", "Extract and decrypt a hidden message");
    reveal->add_option("--image", reveal_args.image, "stego PNG")->required();
    reveal->add_option("--key", reveal_args.key, "private key file")->required();
    reveal->add_option("--out", reveal_args.out, "message output (stdout otherwise)");

    MetricsArgs metrics_args;
    auto* metrics_cmd = app.add_subcommand("metrics", "MSE/PSNR reports as CSV");
    metrics_cmd->add_option("--original", metrics_args.original, "original PNG");
    metrics_cmd->add_option("--candidate", metrics_args.candidate, "candidate PNG");
    metrics_cmd->add_option("--message", metrics_args.message, "message for table mode");
    metrics_cmd->add_option("--message-file", metrics_args.message_file,
                            "message file for table mode");
    metrics_cmd->add_option("--images", metrics_args.images, "cover PNGs for table mode");
    metrics_cmd->add_option("--out", metrics_args.out, "CSV output (stdout otherwise)");

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "Time RSA vs ElGamal and count modexps");
    bench_cmd->add_option("--cipher", bench_args.cipher, "rsa, elgamal or both");
    bench_cmd->add_option("--bits", bench_args.bits, "key sizes (512/1024/2048)")
        ->delimiter(',');
    bench_cmd->add_option("--message-bytes", bench_args.message_bytes, "message size");
    bench_cmd->add_option("--repetitions", bench_args.repetitions, "timed runs per mean");
    bench_cmd->add_option("--seed", bench_args.seed, "deterministic seed");
    bench_cmd->add_option("--out", bench_args.out, "CSV output (stdout otherwise)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (keygen->parsed()) return do_keygen(keygen_args);
        if (dh_demo->parsed()) return do_dh_demo(dh_args);
        if (encrypt->parsed()) return do_encrypt(encrypt_args);
        if (decrypt->parsed()) return do_decrypt(decrypt_args);
        if (embed->parsed()) return do_embed(embed_args);
        if (extract->parsed()) return do_extract(extract_args);
        if (hide->parsed()) return do_hide(hide_args);
        if (reveal->parsed()) return do_reveal(reveal_args);
        if (metrics_cmd->parsed()) return do_metrics(metrics_args);
        if (bench_cmd->parsed()) return do_bench(bench_args);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

} // namespace stegcrypt::cli
