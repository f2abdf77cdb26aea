#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "ccs/corpus.hpp"
#include "ccs/profile.hpp"
#include "ccs/run_log.hpp"
#include "ccs/substrate.hpp"

namespace ccs {

struct RunConfig {
  std::vector<std::filesystem::path> corpus_paths;  // files or directories
  std::vector<std::string> profiles;                // builtin ids or file paths
  std::vector<std::string> conditions;              // default: baseline + every profile
  std::vector<SubstrateConfig> substrates;
  uint64_t seed = 0;
  int sample_n = -1;                                // per subject; -1 = all items
  std::map<std::string, int> sample_per_subject;    // overrides sample_n
  PairFilter filter;                                // default: keep everything
  std::filesystem::path out_dir = ".";
  std::filesystem::path ambiguity_sidecar;          // optional
  bool resume = false;
  bool capture_raw = false;

  static RunConfig from_json(const nlohmann::json& j, const std::filesystem::path& base_dir);
  static RunConfig from_json_file(const std::filesystem::path& path);
};

struct RunOutcome {
  std::filesystem::path log_path;
  std::size_t completed = 0;
  std::size_t skipped = 0;   // already logged (resume)
  std::size_t failed = 0;    // substrate errors recorded in the log
};

// Drives the full pipeline: load corpora -> sample -> expand conditions ->
// route -> assemble -> dispatch -> annotate -> append to the JSONL log.
// Manifest is written first; substrate failures become error records and the
// run continues. With the mock substrate the log is byte-identical across
// runs modulo timestamps.
RunOutcome execute_run(const RunConfig& config);

// The sampled item set a config produces (used by route listings and tests).
std::vector<Item> load_run_items(const RunConfig& config);

}  // namespace ccs
