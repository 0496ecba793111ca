#pragma once

#include <filesystem>
#include <string>

namespace devrank {

/// Lowercase hex SHA-256 of a file's bytes. Throws std::runtime_error if the
/// file cannot be read.
std::string sha256_file(const std::filesystem::path& path);

/// Lowercase hex SHA-256 of a byte string.
std::string sha256_bytes(std::string_view data);

}  // namespace devrank
