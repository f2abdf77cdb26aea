#include "ccs/router.hpp"

#include <algorithm>
#include <set>

#include "ccs/errors.hpp"
#include "ccs/util/text.hpp"

namespace ccs {

using nlohmann::json;

std::string_view to_string(AlignmentVerdict v) {
  switch (v) {
    case AlignmentVerdict::Aligned: return "aligned";
    case AlignmentVerdict::Misaligned: return "misaligned";
    case AlignmentVerdict::NoEvidence: return "no_evidence";
  }
  return "no_evidence";
}

AlignmentVerdict alignment_verdict_from_string(std::string_view s) {
  if (s == "aligned") return AlignmentVerdict::Aligned;
  if (s == "misaligned") return AlignmentVerdict::Misaligned;
  if (s == "no_evidence") return AlignmentVerdict::NoEvidence;
  throw ValidationError("unknown alignment verdict: '" + std::string(s) + "'");
}

void to_json(json& j, const AlignmentReport& r) {
  j = json{{"score", r.score},
           {"matched_strong_terms", r.matched_strong_terms},
           {"matched_offpartition_terms", r.matched_offpartition_terms},
           {"threshold", r.threshold},
           {"verdict", std::string(to_string(r.verdict))}};
}

void from_json(const json& j, AlignmentReport& r) {
  j.at("score").get_to(r.score);
  j.at("matched_strong_terms").get_to(r.matched_strong_terms);
  j.at("matched_offpartition_terms").get_to(r.matched_offpartition_terms);
  j.at("threshold").get_to(r.threshold);
  r.verdict = alignment_verdict_from_string(j.at("verdict").get<std::string>());
}

void to_json(json& j, const RoutingDirective& d) {
  j = json{{"partition", std::string(to_string(d.partition))},
           {"level_hint", d.level_hint},
           {"alignment", d.alignment},
           {"rationale", d.rationale}};
}

void from_json(const json& j, RoutingDirective& d) {
  d.partition = partition_from_string(j.at("partition").get<std::string>());
  j.at("level_hint").get_to(d.level_hint);
  j.at("alignment").get_to(d.alignment);
  j.at("rationale").get_to(d.rationale);
}

AlignmentReport assess_alignment(const CapabilityProfile& profile, const std::string& prompt_text,
                                 Partition partition) {
  (void)partition;  // the lexical score is partition-independent by design
  AlignmentReport report;
  report.threshold = profile.alignment_threshold;

  std::set<std::string> strong_vocab;
  std::set<std::string> off_vocab;
  for (const auto& [label, words] : profile.vocabulary) {
    auto& target = profile.strong.count(label) ? strong_vocab : off_vocab;
    target.insert(words.begin(), words.end());
  }

  long long strong_hits = 0;
  long long off_hits = 0;
  std::set<std::string> strong_terms;
  std::set<std::string> off_terms;
  for (const auto& token : text::tokenize(prompt_text)) {
    if (strong_vocab.count(token)) {
      ++strong_hits;
      strong_terms.insert(token);
    } else if (off_vocab.count(token)) {
      ++off_hits;
      off_terms.insert(token);
    }
  }

  report.matched_strong_terms.assign(strong_terms.begin(), strong_terms.end());
  report.matched_offpartition_terms.assign(off_terms.begin(), off_terms.end());

  if (strong_hits + off_hits == 0) {
    report.score = 0.0;
    report.verdict = AlignmentVerdict::NoEvidence;
    return report;
  }
  report.score = static_cast<double>(strong_hits) /
                 static_cast<double>(strong_hits + off_hits + 1);
  report.score = std::clamp(report.score, 0.0, 1.0);
  report.verdict = report.score >= report.threshold ? AlignmentVerdict::Aligned
                                                    : AlignmentVerdict::Misaligned;
  return report;
}

RoutingDirective route(const CapabilityProfile& profile, const DomainLabel& subject,
                       const std::string& prompt_text, bool ambiguous) {
  const Partition partition = classify_domain(profile, subject);
  if (partition == Partition::Undeclared &&
      profile.undeclared_policy == UndeclaredPolicy::Reject) {
    throw UndeclaredDomainError(subject.str());
  }

  RoutingDirective directive;
  directive.partition = partition;
  directive.alignment = assess_alignment(profile, prompt_text, partition);

  switch (partition) {
    case Partition::Strong:
      directive.level_hint = ambiguous ? 1 : 0;
      directive.rationale = ambiguous ? reason::kStrongAmbiguous : reason::kStrongSilent;
      break;
    case Partition::Mixed:
      switch (directive.alignment.verdict) {
        case AlignmentVerdict::Aligned:
          directive.level_hint = 0;
          directive.rationale = reason::kMixedAligned;
          break;
        case AlignmentVerdict::NoEvidence:
          directive.level_hint = 1;
          directive.rationale = reason::kMixedNoEvidence;
          break;
        case AlignmentVerdict::Misaligned:
          directive.level_hint = 2;
          directive.rationale = reason::kMixedMisaligned;
          break;
      }
      break;
    case Partition::Weak:
      directive.level_hint = 3;
      directive.rationale = reason::kWeakFull;
      break;
    case Partition::Undeclared:
      directive.level_hint = 3;
      directive.rationale = reason::kUndeclaredDefault;
      break;
  }
  validate_directive(directive);
  return directive;
}

void validate_directive(const RoutingDirective& d) {
  if (d.level_hint < 0 || d.level_hint > 3) {
    throw ValidationError("level_hint out of range: " + std::to_string(d.level_hint));
  }
  const int level = d.level_hint;
  switch (d.partition) {
    case Partition::Strong:
      if (level > 1) throw ValidationError("strong partition allows levels {0,1} only");
      break;
    case Partition::Mixed:
      if (level > 2) throw ValidationError("mixed partition allows levels {0,1,2} only");
      break;
    case Partition::Weak:
      if (level != 3) throw ValidationError("weak partition requires level 3");
      break;
    case Partition::Undeclared:
      if (level != 3) throw ValidationError("undeclared partition requires level 3");
      break;
  }
}

}  // namespace ccs
