#pragma once

#include <cstdint>
#include <string>

namespace heis {

// SHA-256 of a byte string / file, hex-encoded. Used for output manifests.
std::string sha256_hex(const std::string& data);
std::string sha256_file_hex(const std::string& path);

}  // namespace heis
