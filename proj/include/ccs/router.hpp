#pragma once

#include <string>
#include <vector>

#include "ccs/profile.hpp"

#include "json.hpp"

namespace ccs {

enum class AlignmentVerdict { Aligned, Misaligned, NoEvidence };

std::string_view to_string(AlignmentVerdict v);
AlignmentVerdict alignment_verdict_from_string(std::string_view s);

// Consistency-guardrail output: how strongly the prompt's lexical evidence
// points at the profile's strong domains.
struct AlignmentReport {
  double score = 0.0;  // in [0,1]
  std::vector<std::string> matched_strong_terms;
  std::vector<std::string> matched_offpartition_terms;
  double threshold = 0.5;
  AlignmentVerdict verdict = AlignmentVerdict::NoEvidence;

  bool operator==(const AlignmentReport&) const = default;
};

// Stable machine-readable reason codes.
namespace reason {
inline constexpr const char* kStrongSilent = "strong_silent";
inline constexpr const char* kStrongAmbiguous = "strong_ambiguous";
inline constexpr const char* kMixedAligned = "mixed_aligned";
inline constexpr const char* kMixedNoEvidence = "mixed_no_evidence";
inline constexpr const char* kMixedMisaligned = "mixed_misaligned";
inline constexpr const char* kWeakFull = "weak_full";
inline constexpr const char* kUndeclaredDefault = "undeclared_default";
}  // namespace reason

// Intervention intensity scale: 0 silent, 1 light flag, 2 conditional
// scaffold, 3 full scaffold with uncertainty disclosure and boundary
// signaling. Firing = level >= 1.
struct RoutingDirective {
  Partition partition = Partition::Undeclared;
  int level_hint = 0;
  AlignmentReport alignment;
  std::string rationale;

  bool operator==(const RoutingDirective&) const = default;
};

void to_json(nlohmann::json& j, const AlignmentReport& r);
void from_json(const nlohmann::json& j, AlignmentReport& r);
void to_json(nlohmann::json& j, const RoutingDirective& d);
void from_json(const nlohmann::json& j, RoutingDirective& d);

// Smoothed vocabulary-overlap score of prompt tokens against the profile's
// strong-domain vocabulary versus its mixed/weak vocabulary:
//   score = strong_hits / (strong_hits + offpartition_hits + 1)
// A token matching both counts as strong. Deterministic; empty vocabulary or
// zero hits yields NoEvidence. Tokenization is lowercase word-splitting on
// non-alphanumerics.
AlignmentReport assess_alignment(const CapabilityProfile& profile, const std::string& prompt_text,
                                 Partition partition);

// The decision matrix. Pure function of its inputs:
//   Strong     -> 0 (1 when the item carries an explicit ambiguous flag)
//   Mixed      -> 0 Aligned / 1 NoEvidence / 2 Misaligned
//   Weak       -> 3
//   Undeclared -> 3 under treat_as_weak; UndeclaredDomainError under reject
RoutingDirective route(const CapabilityProfile& profile, const DomainLabel& subject,
                       const std::string& prompt_text, bool ambiguous = false);

// Validates the per-partition level bounds; throws ValidationError on breach.
void validate_directive(const RoutingDirective& d);

}  // namespace ccs
