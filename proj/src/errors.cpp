#include "ccs/errors.hpp"

namespace ccs {

const char* to_string(SubstrateErrorKind kind) {
  switch (kind) {
    case SubstrateErrorKind::Auth: return "auth";
    case SubstrateErrorKind::RateLimitExhausted: return "rate_limit_exhausted";
    case SubstrateErrorKind::Timeout: return "timeout";
    case SubstrateErrorKind::Network: return "network";
    case SubstrateErrorKind::Http: return "http";
    case SubstrateErrorKind::MalformedPayload: return "malformed_payload";
  }
  return "unknown";
}

}  // namespace ccs
