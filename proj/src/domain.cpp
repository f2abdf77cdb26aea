#include "ccs/domain.hpp"

#include <cctype>

#include "ccs/errors.hpp"

namespace ccs {

DomainLabel DomainLabel::normalize(std::string_view raw) {
  std::string value;
  value.reserve(raw.size());
  bool pending_sep = false;
  for (unsigned char ch : raw) {
    if (std::isalnum(ch)) {
      if (pending_sep && !value.empty()) value.push_back('_');
      pending_sep = false;
      value.push_back(static_cast<char>(std::tolower(ch)));
    } else {
      pending_sep = true;
    }
  }
  if (value.empty()) {
    throw ValidationError("domain label has no alphanumeric content: '" + std::string(raw) + "'");
  }
  return DomainLabel(std::move(value));
}

DomainLabel DomainLabel::from_normalized(std::string_view value) {
  DomainLabel normalized = normalize(value);
  if (normalized.value_ != value) {
    throw ValidationError("domain label is not normalized: '" + std::string(value) + "'");
  }
  return normalized;
}

std::string_view to_string(Partition p) {
  switch (p) {
    case Partition::Strong: return "strong";
    case Partition::Mixed: return "mixed";
    case Partition::Weak: return "weak";
    case Partition::Undeclared: return "undeclared";
  }
  return "undeclared";
}

Partition partition_from_string(std::string_view s) {
  if (s == "strong") return Partition::Strong;
  if (s == "mixed") return Partition::Mixed;
  if (s == "weak") return Partition::Weak;
  if (s == "undeclared") return Partition::Undeclared;
  throw ValidationError("unknown partition: '" + std::string(s) + "'");
}

int partition_rank(Partition p) {
  switch (p) {
    case Partition::Strong: return 0;
    case Partition::Mixed: return 1;
    case Partition::Weak:
    case Partition::Undeclared: return 2;
  }
  return 2;
}

}  // namespace ccs
