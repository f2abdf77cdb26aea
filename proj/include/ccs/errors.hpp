#pragma once

#include <chrono>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccs {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// File system / stream failures. CLI exit code 1.
class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

// Schema, invariant, or configuration violations. Carries the offending
// field path when one is known. CLI exit code 2.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what, std::string field_path = "")
      : Error(field_path.empty() ? what : what + " (at " + field_path + ")"),
        field_path_(std::move(field_path)) {}

  const std::string& field_path() const { return field_path_; }

 private:
  std::string field_path_;
};

// A routed subject absent from every partition under undeclared_policy=reject.
class UndeclaredDomainError : public ValidationError {
 public:
  explicit UndeclaredDomainError(const std::string& label)
      : ValidationError("undeclared domain rejected by profile policy: " + label),
        label_(label) {}

  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

enum class SubstrateErrorKind {
  Auth,
  RateLimitExhausted,
  Timeout,
  Network,
  Http,
  MalformedPayload,
};

const char* to_string(SubstrateErrorKind kind);

// One upstream attempt, kept so exhausted calls can report their history.
struct SubstrateAttempt {
  int status = 0;  // HTTP status, or 0 for transport-level failures
  std::string note;
  std::chrono::milliseconds backoff{0};
};

// Substrate dispatch failure. CLI exit code 3.
class SubstrateError : public Error {
 public:
  SubstrateError(SubstrateErrorKind kind, std::string substrate_id, const std::string& what,
                 std::vector<SubstrateAttempt> attempts = {})
      : Error("[" + substrate_id + "] " + std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        substrate_id_(std::move(substrate_id)),
        attempts_(std::move(attempts)) {}

  SubstrateErrorKind kind() const { return kind_; }
  const std::string& substrate_id() const { return substrate_id_; }
  const std::vector<SubstrateAttempt>& attempts() const { return attempts_; }

 private:
  SubstrateErrorKind kind_;
  std::string substrate_id_;
  std::vector<SubstrateAttempt> attempts_;
};

}  // namespace ccs
