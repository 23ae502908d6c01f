#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>

namespace myxo::io {

/// SHA-256 as a lowercase hex string.
std::string sha256_hex(std::span<const std::uint8_t> bytes);
std::string sha256_hex(const std::string& text);

/// Throws RuntimeError when the file cannot be read.
std::string sha256_file(const std::filesystem::path& path);

} // namespace myxo::io
