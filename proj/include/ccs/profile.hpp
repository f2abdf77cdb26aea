#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ccs/domain.hpp"

namespace ccs {

enum class UndeclaredPolicy { TreatAsWeak, Reject };

std::string_view to_string(UndeclaredPolicy p);
UndeclaredPolicy undeclared_policy_from_string(std::string_view s);

// Typed capability profile: a strong/mixed/weak partition of domains plus the
// per-domain evidence vocabulary driving the consistency guardrail. Immutable
// after parsing; safe to share across threads.
struct CapabilityProfile {
  std::string id;
  std::set<DomainLabel> strong;
  std::set<DomainLabel> mixed;
  std::set<DomainLabel> weak;
  std::map<DomainLabel, std::vector<std::string>> vocabulary;
  double alignment_threshold = 0.5;
  UndeclaredPolicy undeclared_policy = UndeclaredPolicy::TreatAsWeak;

  bool operator==(const CapabilityProfile&) const = default;
};

// Parses and validates a profile document (JSON text per the schema in the
// README). Throws ValidationError with a field path on schema errors, on
// partition overlaps (naming the duplicated label), and on out-of-range
// thresholds.
CapabilityProfile parse_profile(const std::string& document);

// File wrapper around parse_profile. Throws IoError when unreadable.
CapabilityProfile load_profile_file(const std::filesystem::path& path);

// Canonical serialization; parse_profile(serialize_profile(p)) == p.
std::string serialize_profile(const CapabilityProfile& profile);

// The two bundled profiles (pcs-nlp, pcs-litprof), in that order.
const std::vector<CapabilityProfile>& builtin_profiles();

// Source text of a bundled profile; byte-identical to the file shipped under
// profiles/. Throws ValidationError for unknown ids.
const std::string& builtin_profile_text(const std::string& id);

// Looks up a builtin by id ("pcs-nlp" / "pcs-litprof") or loads a file.
CapabilityProfile resolve_profile(const std::string& path_or_builtin_id);

// Pure partition lookup; Undeclared when the label is in no partition set
// (callers apply undeclared_policy).
Partition classify_domain(const CapabilityProfile& profile, const DomainLabel& label);

}  // namespace ccs
