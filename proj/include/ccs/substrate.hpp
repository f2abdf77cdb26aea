#pragma once

#include <chrono>
#include <map>
#include <set>
#include <string>

#include "ccs/scaffold.hpp"

#include "json.hpp"

namespace ccs {

enum class SubstrateKind { HttpChat, Mock };

// Scripted deviations for the mock substrate: per-item level overrides (e.g.
// replaying a borderline outlier), marker omission, and marker malformation
// for parser-fallback testing. Entries under per_condition apply only to one
// run condition; the runner narrows them via for_condition before dispatch.
struct MockFaultPlan {
  std::map<std::string, int> level_overrides;  // item id -> forced level
  std::set<std::string> omit_marker_items;
  std::set<std::string> malform_items;
  bool omit_all = false;
  bool malform_all = false;
  std::map<std::string, MockFaultPlan> per_condition;

  // Base plan merged with the named condition's entries.
  MockFaultPlan for_condition(const std::string& condition_id) const;

  static MockFaultPlan from_json(const nlohmann::json& j);
  static MockFaultPlan from_json_file(const std::filesystem::path& path);
};

struct SubstrateConfig {
  SubstrateKind kind = SubstrateKind::Mock;
  std::string vendor;        // http_chat adapter: "openai" or "anthropic"
  std::string endpoint_url;  // full URL of the chat-completion endpoint
  std::string model_id = "mock";
  double temperature = 0.0;
  bool allow_nonzero_temperature = false;
  int max_output_tokens = 512;
  std::chrono::milliseconds request_timeout{30000};
  int max_retries = 3;
  int parallelism_limit = 1;
  bool backoff_jitter = false;  // live-mode only; tests need the deterministic schedule
  MockFaultPlan faults;         // mock only

  const std::string& substrate_id() const { return model_id; }

  static SubstrateConfig mock(const std::string& model_id = "mock");
  static SubstrateConfig from_json(const nlohmann::json& j);
  static SubstrateConfig from_json_file(const std::filesystem::path& path);
};

struct SubstrateResponse {
  std::string text;
  std::chrono::milliseconds latency{0};
  long long prompt_tokens = 0;
  long long completion_tokens = 0;
  std::string substrate_id;
  int attempt_count = 1;
};

// Name of the credential variable for a vendor: CCS_API_KEY_<VENDOR>.
std::string credential_env_var(const std::string& vendor);

// Deterministic backoff schedule (no jitter): 250ms * 2^(attempt-1), capped.
std::chrono::milliseconds backoff_delay(int attempt);

// Dispatches the envelope. Mock configs route to mock_complete. HTTP configs
// retry transient failures (429/5xx, timeouts) with exponential backoff up to
// max_retries and never retry auth/validation 4xx. Missing credentials fail
// before any network call. Throws SubstrateError.
SubstrateResponse complete(const SubstrateConfig& config, const PromptEnvelope& envelope);

// Deterministic offline backend: emits markers exactly matching the
// envelope's directive (subject to the fault plan) followed by a canned
// answer line. Baseline envelopes produce an unmarked answer.
SubstrateResponse mock_complete(const PromptEnvelope& envelope, const MockFaultPlan& faults,
                                const std::string& substrate_id = "mock");

}  // namespace ccs
