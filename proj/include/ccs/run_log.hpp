#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "ccs/errors.hpp"
#include "ccs/stats.hpp"

namespace ccs {

// Provenance header embedded in every report rendered from a run.
// created_at is excluded from comparison digests.
struct RunManifest {
  std::string run_id;
  std::string corpus_digest;
  std::vector<std::string> profile_ids;
  std::vector<std::string> substrate_ids;
  std::vector<std::string> conditions;
  uint64_t sample_seed = 0;
  std::size_t raw_pair_count = 0;
  std::size_t filtered_out_count = 0;
  std::size_t kept_pair_count = 0;
  std::string template_version;
  std::string tool_version;
  std::string created_at;
};

void to_json(nlohmann::json& j, const RunManifest& m);
void from_json(const nlohmann::json& j, RunManifest& m);

// Digest-keyed resume index entry for one (item, condition, substrate).
std::string trial_key(const std::string& item_id, const std::string& condition,
                      const std::string& substrate_id);

struct TrialError {
  std::string item_id;
  std::string condition;
  std::string substrate_id;
  std::string kind;
  std::string message;
  int attempts = 0;
  std::string timestamp;
};

// Append-only JSONL run log. The first line is the manifest; every further
// line is a trial or error record. Reopening with resume=true indexes the
// completed trials so re-invocation is idempotent.
class RunLogWriter {
 public:
  RunLogWriter(const std::filesystem::path& path, const RunManifest& manifest, bool resume);

  bool already_logged(const std::string& key) const { return done_.count(key) > 0; }
  void append(const TrialRecord& record);
  void append_error(const TrialError& error);
  void flush();

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::ofstream out_;
  std::unordered_set<std::string> done_;
};

struct RunLogData {
  RunManifest manifest;
  std::vector<TrialRecord> trials;
  std::vector<TrialError> errors;
};

// Loads a run log; validates the manifest line and per-record schema.
RunLogData read_run_log(const std::filesystem::path& path);

// SHA-256 over the log with timestamp fields stripped; byte-stable across
// re-runs of the same deterministic configuration.
std::string log_comparison_digest(const std::filesystem::path& path);

}  // namespace ccs
