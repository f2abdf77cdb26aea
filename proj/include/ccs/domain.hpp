#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace ccs {

// Normalized domain identifier: lowercase, alphanumeric runs joined by
// underscores ("Machine Learning" -> machine_learning). Normalization is
// idempotent; the empty result is rejected.
class DomainLabel {
 public:
  DomainLabel() = default;

  // Throws ValidationError when nothing alphanumeric survives.
  static DomainLabel normalize(std::string_view raw);

  // Accepts an already-normalized value; throws ValidationError otherwise.
  static DomainLabel from_normalized(std::string_view value);

  const std::string& str() const { return value_; }
  bool empty() const { return value_.empty(); }

  bool operator==(const DomainLabel&) const = default;
  auto operator<=>(const DomainLabel&) const = default;

 private:
  explicit DomainLabel(std::string value) : value_(std::move(value)) {}
  std::string value_;
};

enum class Partition { Strong, Mixed, Weak, Undeclared };

std::string_view to_string(Partition p);
Partition partition_from_string(std::string_view s);

// Escalation ordering used by the permutation statistic's expected-direction
// sign: Strong < Mixed < Weak, with Undeclared routed like Weak.
int partition_rank(Partition p);

}  // namespace ccs
