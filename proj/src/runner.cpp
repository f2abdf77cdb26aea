#include "ccs/runner.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <future>
#include <map>

#include "ccs/annotate.hpp"
#include "ccs/router.hpp"
#include "ccs/scaffold.hpp"
#include "ccs/util/digest.hpp"
#include "ccs/util/text.hpp"
#include "ccs/version.hpp"

namespace ccs {

using nlohmann::json;

namespace {

std::filesystem::path resolve_path(const std::filesystem::path& base,
                                   const std::filesystem::path& p) {
  return p.is_absolute() ? p : base / p;
}

}  // namespace

RunConfig RunConfig::from_json(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw ValidationError("run config must be a JSON object");
  RunConfig config;
  if (j.contains("corpus")) {
    for (const auto& p : j["corpus"]) {
      config.corpus_paths.push_back(resolve_path(base_dir, p.get<std::string>()));
    }
  }
  if (j.contains("profiles")) {
    for (const auto& p : j["profiles"]) config.profiles.push_back(p.get<std::string>());
  }
  if (j.contains("conditions")) {
    for (const auto& c : j["conditions"]) config.conditions.push_back(c.get<std::string>());
  }
  if (j.contains("substrates")) {
    for (const auto& s : j["substrates"]) {
      config.substrates.push_back(SubstrateConfig::from_json(s));
    }
  }
  config.seed = j.value("seed", 0ULL);
  if (j.contains("sample")) {
    const auto& sample = j["sample"];
    config.sample_n = sample.value("default", -1);
    if (sample.contains("per_subject")) {
      for (const auto& [subject, n] : sample["per_subject"].items()) {
        config.sample_per_subject[subject] = n.get<int>();
      }
    }
  }
  if (j.contains("filter")) config.filter = PairFilter::from_json(j["filter"]);
  if (j.contains("out_dir")) {
    config.out_dir = resolve_path(base_dir, j["out_dir"].get<std::string>());
  }
  if (j.contains("ambiguity_sidecar")) {
    config.ambiguity_sidecar = resolve_path(base_dir, j["ambiguity_sidecar"].get<std::string>());
  }
  config.resume = j.value("resume", false);
  config.capture_raw = j.value("capture_raw", false);
  return config;
}

RunConfig RunConfig::from_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open run config: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed run config: ") + e.what(), path.string());
  }
  return from_json(j, path.has_parent_path() ? path.parent_path() : ".");
}

namespace {

std::vector<std::filesystem::path> collect_corpus_files(
    const std::vector<std::filesystem::path>& paths) {
  std::vector<std::filesystem::path> files;
  for (const auto& path : paths) {
    if (std::filesystem::is_directory(path)) {
      std::vector<std::filesystem::path> entries;
      for (const auto& entry : std::filesystem::directory_iterator(path)) {
        const auto ext = entry.path().extension().string();
        if (entry.is_regular_file() && (ext == ".csv" || ext == ".jsonl")) {
          entries.push_back(entry.path());
        }
      }
      std::sort(entries.begin(), entries.end());
      files.insert(files.end(), entries.begin(), entries.end());
    } else if (std::filesystem::exists(path)) {
      files.push_back(path);
    } else {
      throw IoError("corpus path does not exist: " + path.string());
    }
  }
  if (files.empty()) throw ValidationError("run config names no corpus files");
  return files;
}

// Deterministic run identity: digest of the run-shaping configuration.
std::string derive_run_id(const RunConfig& config, const std::string& corpus_dig,
                          const std::vector<std::string>& conditions) {
  json j{{"corpus_digest", corpus_dig},
         {"conditions", conditions},
         {"seed", config.seed},
         {"sample_n", config.sample_n},
         {"sample_per_subject", config.sample_per_subject},
         {"capture_raw", config.capture_raw},
         {"template_version", kTemplateVersion}};
  std::vector<std::string> substrate_ids;
  for (const auto& s : config.substrates) substrate_ids.push_back(s.substrate_id());
  j["substrates"] = substrate_ids;
  return digest::sha256_hex16(j.dump());
}

struct TrialTask {
  ConditionPair pair;
  const CapabilityProfile* profile = nullptr;  // null for baseline
  const SubstrateConfig* substrate = nullptr;
};

struct TrialOutput {
  bool ok = false;
  TrialRecord record;
  TrialError error;
};

TrialOutput execute_trial(const TrialTask& task, bool capture_raw) {
  TrialOutput output;
  const Item& item = task.pair.item;
  std::optional<RoutingDirective> directive;
  PromptEnvelope envelope;
  if (task.profile != nullptr) {
    directive = route(*task.profile, item.subject, prompt_text(item), item.ambiguous);
    envelope = assemble_prompt(*task.profile, *directive, item);
  } else {
    envelope = assemble_baseline(item);
  }
  try {
    // Mock dispatch narrows condition-scoped fault entries; HTTP ignores them.
    const SubstrateResponse response =
        task.substrate->kind == SubstrateKind::Mock
            ? mock_complete(envelope,
                            task.substrate->faults.for_condition(task.pair.condition.id),
                            task.substrate->substrate_id())
            : complete(*task.substrate, envelope);
    TrialRecord record;
    record.item_id = item.id;
    record.subject = item.subject;
    record.condition = task.pair.condition.id;
    record.profile_id = task.pair.condition.profile_id;
    record.substrate_id = response.substrate_id;
    record.directive = directive;
    record.annotation = parse_response(response.text);
    record.raw_response_digest = digest::sha256_hex(response.text);
    record.timestamp = text::utc_timestamp();
    if (capture_raw) record.raw_response = response.text;
    record.attempt_count = response.attempt_count;
    record.latency_ms = response.latency.count();
    record.prompt_tokens = response.prompt_tokens;
    record.completion_tokens = response.completion_tokens;
    output.ok = true;
    output.record = std::move(record);
  } catch (const SubstrateError& e) {
    output.error = TrialError{item.id,
                              task.pair.condition.id,
                              task.substrate->substrate_id(),
                              std::string(to_string(e.kind())),
                              e.what(),
                              static_cast<int>(e.attempts().size()),
                              text::utc_timestamp()};
  }
  return output;
}

}  // namespace

std::vector<Item> load_run_items(const RunConfig& config) {
  std::map<DomainLabel, std::vector<Item>> by_subject;
  for (const auto& file : collect_corpus_files(config.corpus_paths)) {
    for (auto& item : load_items(file)) {
      by_subject[item.subject].push_back(std::move(item));
    }
  }
  std::map<std::string, bool> sidecar;
  if (!config.ambiguity_sidecar.empty()) {
    sidecar = load_ambiguity_sidecar(config.ambiguity_sidecar);
  }
  std::vector<Item> items;
  for (auto& [subject, pool] : by_subject) {
    std::sort(pool.begin(), pool.end(),
              [](const Item& a, const Item& b) { return a.id < b.id; });
    int n = config.sample_n;
    if (auto it = config.sample_per_subject.find(subject.str());
        it != config.sample_per_subject.end()) {
      n = it->second;
    }
    std::vector<Item> chosen =
        n < 0 ? pool : sample_subset(pool, static_cast<std::size_t>(n), config.seed);
    items.insert(items.end(), chosen.begin(), chosen.end());
  }
  if (!sidecar.empty()) apply_ambiguity(items, sidecar);
  return items;
}

RunOutcome execute_run(const RunConfig& config) {
  if (config.substrates.empty()) throw ValidationError("run config names no substrates");

  // Profiles: resolve and index by id.
  std::map<std::string, CapabilityProfile> profiles;
  std::vector<std::string> profile_ids;
  for (const auto& ref : config.profiles) {
    CapabilityProfile profile = resolve_profile(ref);
    profile_ids.push_back(profile.id);
    profiles.emplace(profile.id, std::move(profile));
  }

  // Conditions default to baseline plus every loaded profile.
  std::vector<Condition> conditions;
  if (config.conditions.empty()) {
    conditions.push_back(Condition::baseline());
    for (const auto& id : profile_ids) conditions.push_back(Condition::profile_run(id));
  } else {
    for (const auto& id : config.conditions) {
      if (id == kBaselineCondition) {
        conditions.push_back(Condition::baseline());
      } else if (profiles.count(id)) {
        conditions.push_back(Condition::profile_run(id));
      } else {
        throw ValidationError("condition '" + id + "' names no loaded profile");
      }
    }
  }

  const std::vector<Item> items = load_run_items(config);
  const std::string corpus_dig = corpus_digest(items);
  const ExpandResult expansion = expand_conditions(items, conditions, config.filter);

  RunManifest manifest;
  std::vector<std::string> condition_ids;
  for (const auto& condition : conditions) condition_ids.push_back(condition.id);
  manifest.run_id = derive_run_id(config, corpus_dig, condition_ids);
  manifest.corpus_digest = corpus_dig;
  manifest.profile_ids = profile_ids;
  for (const auto& substrate : config.substrates) {
    manifest.substrate_ids.push_back(substrate.substrate_id());
  }
  manifest.conditions = condition_ids;
  manifest.sample_seed = config.seed;
  manifest.raw_pair_count = expansion.raw_count;
  manifest.filtered_out_count = expansion.filtered_out;
  manifest.kept_pair_count = expansion.pairs.size();
  manifest.template_version = kTemplateVersion;
  manifest.tool_version = kToolVersion;
  manifest.created_at = text::utc_timestamp();

  std::filesystem::create_directories(config.out_dir);
  const std::filesystem::path log_path = config.out_dir / "run.jsonl";
  RunLogWriter writer(log_path, manifest, config.resume);

  RunOutcome outcome;
  outcome.log_path = log_path;

  for (const auto& substrate : config.substrates) {
    // Pending tasks for this substrate, in deterministic pair order.
    std::vector<TrialTask> tasks;
    for (const auto& pair : expansion.pairs) {
      if (writer.already_logged(
              trial_key(pair.item.id, pair.condition.id, substrate.substrate_id()))) {
        ++outcome.skipped;
        continue;
      }
      TrialTask task;
      task.pair = pair;
      task.profile = pair.condition.profile_id ? &profiles.at(*pair.condition.profile_id)
                                               : nullptr;
      task.substrate = &substrate;
      tasks.push_back(std::move(task));
    }

    // Bounded sliding window of async trials; results are appended in
    // submission order so the log stays deterministic regardless of the
    // schedule.
    const std::size_t window =
        std::min<std::size_t>(static_cast<std::size_t>(substrate.parallelism_limit),
                              std::max<std::size_t>(tasks.size(), 1));
    std::deque<std::future<TrialOutput>> in_flight;
    std::size_t next = 0;
    const bool capture_raw = config.capture_raw;
    auto drain_one = [&]() {
      TrialOutput output = in_flight.front().get();
      in_flight.pop_front();
      if (output.ok) {
        writer.append(output.record);
        ++outcome.completed;
      } else {
        writer.append_error(output.error);
        ++outcome.failed;
      }
    };
    while (next < tasks.size() || !in_flight.empty()) {
      while (next < tasks.size() && in_flight.size() < window) {
        const TrialTask* task = &tasks[next++];
        in_flight.push_back(std::async(std::launch::async, [task, capture_raw] {
          return execute_trial(*task, capture_raw);
        }));
      }
      drain_one();
    }
  }
  writer.flush();
  return outcome;
}

}  // namespace ccs
