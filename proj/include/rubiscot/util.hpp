#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace rubiscot {

// FNV-1a, used for prompt fingerprints and deterministic ids.
std::uint64_t fnv1a(std::string_view data);
std::string to_hex(std::uint64_t value);

std::string lowercase(std::string_view s);
std::string trim(std::string_view s);

// Collapses every run of whitespace to a single space and trims the ends.
std::string collapse_whitespace(std::string_view s);

bool contains_ci(std::string_view haystack, std::string_view needle);

std::vector<std::string> split_lines(std::string_view text);

std::string base64_encode(const std::uint8_t* data, std::size_t len);
std::vector<std::uint8_t> base64_decode(std::string_view encoded);

std::string read_file(const std::filesystem::path& path);

// write-temp-then-rename so readers never observe a half-written file
void atomic_write_file(const std::filesystem::path& path, std::string_view content);

// Fixed-precision decimal formatting (printf "%.1f" style), used wherever
// report output must be byte-deterministic.
std::string format_fixed(double value, int decimals);

}  // namespace rubiscot
