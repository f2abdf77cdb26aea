#include "ccs/scaffold.hpp"

#include <cstring>
#include <sstream>

#include "ccs/errors.hpp"

namespace ccs {

namespace {

constexpr const char* kProfileBlockBegin = "<<<CCS-PROFILE";
constexpr const char* kProfileBlockEnd = ">>>CCS-PROFILE";

// Fixed routing-policy paragraph; identical across levels.
constexpr const char* kRoutingPolicy =
    "Routing policy: For prompts in strong domains, respond directly and minimize "
    "intervention markers. For prompts in mixed domains, evaluate prompt-evidence alignment "
    "before determining intervention intensity. For prompts in weak domains, include explicit "
    "uncertainty disclosure and capability-boundary signaling.";

const char* level_instructions(int level) {
  switch (level) {
    case 0:
      return "Respond directly and minimize intervention markers: emit the level-0 status "
             "marker above and no other CCS markers, then answer.";
    case 1:
      return "Apply a light flag: after the marker, note in one sentence any ambiguity or "
             "interpretation choice in the question, then answer.";
    case 2:
      return "Apply a conditional scaffold: after the marker, state which claims the user "
             "should verify independently. Emit [CCS:UNCERTAINTY] and [CCS:BOUNDARY] each on "
             "its own line before the answer.";
    case 3:
      return "Apply the full scaffold with explicit uncertainty disclosure and "
             "capability-boundary signaling: emit [CCS:UNCERTAINTY] and [CCS:BOUNDARY] each on "
             "its own line, state what lies beyond the user's declared evaluative capability, "
             "and qualify every non-obvious claim before the answer.";
    default:
      return "";
  }
}

}  // namespace

std::string format_intervention_marker(int level, Partition partition,
                                       const DomainLabel& domain) {
  // Undeclared domains route like weak ones; the marker grammar has no
  // undeclared value.
  const Partition marker_partition =
      partition == Partition::Undeclared ? Partition::Weak : partition;
  std::ostringstream out;
  out << "[CCS:INTERVENTION level=" << level << " partition=" << to_string(marker_partition)
      << " domain=" << domain.str() << "]";
  return out.str();
}

PromptEnvelope assemble_prompt(const CapabilityProfile& profile,
                               const RoutingDirective& directive, const Item& item) {
  PromptEnvelope envelope;
  envelope.directive = directive;
  envelope.template_version = kTemplateVersion;
  envelope.item_id = item.id;
  envelope.subject = item.subject;

  std::ostringstream sys;
  sys << "You are operating under a capability-conditioned scaffolding (CCS) policy, template "
      << kTemplateVersion << ".\n\n";
  sys << "User capability profile:\n"
      << kProfileBlockBegin << "\n"
      << serialize_profile(profile) << kProfileBlockEnd << "\n\n";
  sys << kRoutingPolicy << "\n\n";
  sys << "Routing decision for this prompt:\n"
      << "- domain: " << item.subject.str() << "\n"
      << "- partition: " << to_string(directive.partition) << "\n"
      << "- intervention level: " << directive.level_hint << "\n"
      << "- reason: " << directive.rationale << "\n\n";
  sys << "Marker instructions: Begin your response with exactly this marker line:\n"
      << format_intervention_marker(directive.level_hint, directive.partition, item.subject)
      << "\n"
      << level_instructions(directive.level_hint) << "\n";
  envelope.system_text = sys.str();

  std::ostringstream user;
  user << "Subject: " << item.subject.str() << "\n" << prompt_text(item) << "\n";
  envelope.user_text = user.str();
  return envelope;
}

PromptEnvelope assemble_baseline(const Item& item) {
  PromptEnvelope envelope;
  envelope.template_version = kTemplateVersion;
  envelope.item_id = item.id;
  envelope.subject = item.subject;
  envelope.system_text =
      "Answer the multiple-choice question. Reply with the best option and a brief "
      "justification.\n";
  std::ostringstream user;
  user << "Subject: " << item.subject.str() << "\n" << prompt_text(item) << "\n";
  envelope.user_text = user.str();
  return envelope;
}

std::optional<std::string> extract_profile_block(const std::string& system_text) {
  const auto begin = system_text.find(kProfileBlockBegin);
  if (begin == std::string::npos) return std::nullopt;
  const auto content_start = begin + std::strlen(kProfileBlockBegin) + 1;  // skip newline
  const auto end = system_text.find(kProfileBlockEnd, content_start);
  if (end == std::string::npos || content_start > end) return std::nullopt;
  return system_text.substr(content_start, end - content_start);
}

}  // namespace ccs
