#pragma once

#include <optional>
#include <string>

#include "ccs/corpus.hpp"
#include "ccs/profile.hpp"
#include "ccs/router.hpp"

namespace ccs {

inline constexpr const char* kTemplateVersion = "ccs-t1";

// Substrate-facing prompt. system_text embeds the serialized capability
// profile (recoverable via extract_profile_block), the routing policy, and
// the marker-emission instructions for the directive's level. Baseline
// envelopes carry no directive and no marker instructions.
struct PromptEnvelope {
  std::string system_text;
  std::string user_text;
  std::optional<RoutingDirective> directive;
  std::string template_version;
  std::string item_id;
  DomainLabel subject;
};

// Marker grammar (bit-exact):
//   [CCS:INTERVENTION level=<0|1|2|3> partition=<strong|mixed|weak> domain=<label>]
// with optional follow-ups when level >= 2, each on its own line:
//   [CCS:UNCERTAINTY]
//   [CCS:BOUNDARY]
std::string format_intervention_marker(int level, Partition partition, const DomainLabel& domain);
inline constexpr const char* kUncertaintyMarker = "[CCS:UNCERTAINTY]";
inline constexpr const char* kBoundaryMarker = "[CCS:BOUNDARY]";

// Deterministic assembly per the routing prompt template. The directive must
// come from route() for this item's subject.
PromptEnvelope assemble_prompt(const CapabilityProfile& profile, const RoutingDirective& directive,
                               const Item& item);

// Unscaffolded control condition: plain answering instructions, no profile
// block, no markers.
PromptEnvelope assemble_baseline(const Item& item);

// Recovers the profile document embedded in system_text, if any.
std::optional<std::string> extract_profile_block(const std::string& system_text);

}  // namespace ccs
