#include "stegcrypt/keyfile.hpp"

#include <fstream>
#include <sstream>

#include "stegcrypt/errors.hpp"

namespace stegcrypt::keyfile {

std::string render(std::span<const Entry> entries) {
    std::string out;
    for (const auto& [key, value] : entries) {
        out += key;
        out += '=';
        out += value;
        out += '\n';
    }
    return out;
}

std::vector<Entry> parse(std::string_view text) {
    std::vector<Entry> entries;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        std::string_view line = text.substr(pos, end == std::string_view::npos ? end : end - pos);
        pos = end == std::string_view::npos ? text.size() : end + 1;
        if (line.empty()) {
            if (pos >= text.size()) break; // tolerate one trailing newline
            throw ParseError("blank line in key file");
        }
        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError("key file line without '='");
        entries.emplace_back(std::string(line.substr(0, eq)), std::string(line.substr(eq + 1)));
    }
    return entries;
}

const std::string& expect(const std::vector<Entry>& entries, std::size_t index,
                          std::string_view key) {
    if (index >= entries.size() || entries[index].first != key)
        throw ParseError("expected field '" + std::string(key) + "' at position " +
                         std::to_string(index + 1));
    return entries[index].second;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof()) throw IoError("read failure on " + path.string());
    return std::move(buf).str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot create " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out.good()) throw IoError("write failure on " + path.string());
}

} // namespace stegcrypt::keyfile
