#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stegcrypt::keyfile {

using Entry = std::pair<std::string, std::string>;

/// Renders "key=value" lines, one per entry, each newline-terminated.
std::string render(std::span<const Entry> entries);

/// Parses the line format back; throws ParseError on blank lines or lines
/// without '='.
std::vector<Entry> parse(std::string_view text);

/// Returns the value for `key`, requiring it to appear at `index` in the
/// fixed field order; throws ParseError otherwise.
const std::string& expect(const std::vector<Entry>& entries, std::size_t index,
                          std::string_view key);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

} // namespace stegcrypt::keyfile
