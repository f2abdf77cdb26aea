#pragma once

#include <string>
#include <string_view>

namespace ccs::digest {

// Hex-encoded SHA-256 of the input bytes.
std::string sha256_hex(std::string_view data);

// Leading 16 hex chars; enough for resume-index keys.
std::string sha256_hex16(std::string_view data);

}  // namespace ccs::digest
