#pragma once

#include <string>

namespace modecert {

/// Hex digest of the SHA-256 hash of the given bytes.
std::string sha256Hex(const std::string& bytes);

}  // namespace modecert
