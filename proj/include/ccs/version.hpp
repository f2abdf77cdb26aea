#pragma once

namespace ccs {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace ccs
