#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ccs/domain.hpp"

#include "json.hpp"

namespace ccs {

// One MMLU-style question. Exactly four choices.
struct Item {
  std::string id;
  DomainLabel subject;
  std::string question;
  std::array<std::string, 4> choices;
  int answer_index = 0;
  bool ambiguous = false;

  bool operator==(const Item&) const = default;
};

// The full prompt text the router and scaffold see (question plus options).
std::string prompt_text(const Item& item);

inline constexpr const char* kBaselineCondition = "baseline";

// Evaluation condition: "baseline" (no scaffolding) or a profile run.
struct Condition {
  std::string id;                          // "baseline" or the profile id
  std::optional<std::string> profile_id;   // absent for baseline

  bool is_baseline() const { return !profile_id.has_value(); }
  static Condition baseline() { return {kBaselineCondition, std::nullopt}; }
  static Condition profile_run(const std::string& profile_id) { return {profile_id, profile_id}; }

  bool operator==(const Condition&) const = default;
};

struct ConditionPair {
  Item item;
  Condition condition;
};

enum class CorpusFormat { Csv, Jsonl };

// Loads items from an MMLU-distribution CSV (question,A,B,C,D,answer-letter,
// no header) or a JSONL file (one object per line: id, question, choices,
// answer_index, optional subject/ambiguous). Subject falls back to the file
// name stem (minus a _test/_val/_dev suffix); an explicit subject field wins.
// Output is sorted by id. Throws IoError / ValidationError with line numbers.
std::vector<Item> load_items(const std::filesystem::path& path, CorpusFormat format);

// Infers the format from the extension (.csv vs .jsonl/.json).
std::vector<Item> load_items(const std::filesystem::path& path);

// Sidecar ambiguity annotations: JSON object {item_id: bool}. Keeps upstream
// corpora pristine.
std::map<std::string, bool> load_ambiguity_sidecar(const std::filesystem::path& path);
void apply_ambiguity(std::vector<Item>& items, const std::map<std::string, bool>& sidecar);

// Deterministic, seed-stable sample without replacement; output sorted by id.
// Throws ValidationError when n exceeds the pool size.
std::vector<Item> sample_subset(const std::vector<Item>& items, std::size_t n, uint64_t seed);

// First-match-wins keep/drop rule for (subject, condition) pairs.
struct PairFilterRule {
  std::optional<std::string> condition;          // absent = any condition
  std::optional<std::set<DomainLabel>> subjects; // absent = any subject
  bool keep = true;
};

struct PairFilter {
  std::vector<PairFilterRule> rules;
  bool default_keep = true;

  bool keeps(const DomainLabel& subject, const std::string& condition_id) const;

  static PairFilter none() { return {}; }
  static PairFilter from_json_file(const std::filesystem::path& path);
  static PairFilter from_json(const nlohmann::json& j);
};

struct ExpandResult {
  std::vector<ConditionPair> pairs;
  std::size_t raw_count = 0;
  std::size_t filtered_out = 0;
};

// Cross product items x conditions, then the filter. Pair order is
// deterministic: conditions in the given order, items in input order.
ExpandResult expand_conditions(const std::vector<Item>& items,
                               const std::vector<Condition>& conditions,
                               const PairFilter& filter);

// PDD-Scenarios persona: a professional role with prompts in its strong,
// risk, and outside content zones. All three zones are required.
struct Persona {
  std::string role;
  std::map<std::string, std::vector<std::string>> zones;  // keys = zone names below
};

inline constexpr std::array<const char*, 3> kPersonaZones = {"strong_zone", "risk_zone",
                                                             "outside_zone"};

std::vector<Persona> load_personas(const std::filesystem::path& path);

// Zone prompts as routable Items (subject = "<role>_<zone>", four empty
// choices since scenarios are open-ended, ambiguous defaults to false).
std::vector<Item> persona_items(const Persona& persona);

// Stable content digest over items (id order), for run manifests.
std::string corpus_digest(const std::vector<Item>& items);

}  // namespace ccs
