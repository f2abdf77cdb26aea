#include "ccs/substrate.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "ccs/errors.hpp"
#include "ccs/util/text.hpp"

#include "httplib.h"

namespace ccs {

using nlohmann::json;

MockFaultPlan MockFaultPlan::from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("mock fault plan must be a JSON object");
  MockFaultPlan plan;
  if (j.contains("level_overrides")) {
    for (const auto& [item, level] : j["level_overrides"].items()) {
      const int lvl = level.get<int>();
      if (lvl < 0 || lvl > 3) {
        throw ValidationError("fault level out of range [0,3]", "level_overrides." + item);
      }
      plan.level_overrides[item] = lvl;
    }
  }
  if (j.contains("omit_marker_items")) {
    for (const auto& item : j["omit_marker_items"]) {
      plan.omit_marker_items.insert(item.get<std::string>());
    }
  }
  if (j.contains("malform_items")) {
    for (const auto& item : j["malform_items"]) plan.malform_items.insert(item.get<std::string>());
  }
  plan.omit_all = j.value("omit", false);
  plan.malform_all = j.value("malform", false);
  if (j.contains("per_condition")) {
    for (const auto& [condition, sub] : j["per_condition"].items()) {
      MockFaultPlan sub_plan = from_json(sub);
      if (!sub_plan.per_condition.empty()) {
        throw ValidationError("per_condition plans cannot nest", "per_condition." + condition);
      }
      plan.per_condition[condition] = std::move(sub_plan);
    }
  }
  return plan;
}

MockFaultPlan MockFaultPlan::for_condition(const std::string& condition_id) const {
  MockFaultPlan effective = *this;
  effective.per_condition.clear();
  auto it = per_condition.find(condition_id);
  if (it == per_condition.end()) return effective;
  const MockFaultPlan& scoped = it->second;
  for (const auto& [item, level] : scoped.level_overrides) {
    effective.level_overrides[item] = level;
  }
  effective.omit_marker_items.insert(scoped.omit_marker_items.begin(),
                                     scoped.omit_marker_items.end());
  effective.malform_items.insert(scoped.malform_items.begin(), scoped.malform_items.end());
  effective.omit_all = effective.omit_all || scoped.omit_all;
  effective.malform_all = effective.malform_all || scoped.malform_all;
  return effective;
}

MockFaultPlan MockFaultPlan::from_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open fault plan: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed fault plan: ") + e.what(), path.string());
  }
  return from_json(j);
}

SubstrateConfig SubstrateConfig::mock(const std::string& model_id) {
  SubstrateConfig config;
  config.kind = SubstrateKind::Mock;
  config.model_id = model_id;
  return config;
}

SubstrateConfig SubstrateConfig::from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("substrate config must be a JSON object");
  SubstrateConfig config;
  const std::string kind = j.value("kind", "mock");
  if (kind == "mock") {
    config.kind = SubstrateKind::Mock;
  } else if (kind == "http_chat") {
    config.kind = SubstrateKind::HttpChat;
  } else {
    throw ValidationError("unknown substrate kind: '" + kind + "'", "kind");
  }
  config.vendor = j.value("vendor", "");
  config.endpoint_url = j.value("endpoint_url", "");
  config.model_id = j.value("model_id", std::string(kind == "mock" ? "mock" : ""));
  config.temperature = j.value("temperature", 0.0);
  config.allow_nonzero_temperature = j.value("allow_nonzero_temperature", false);
  config.max_output_tokens = j.value("max_output_tokens", 512);
  config.request_timeout = std::chrono::milliseconds(j.value("request_timeout_ms", 30000));
  config.max_retries = j.value("max_retries", 3);
  config.parallelism_limit = j.value("parallelism_limit", 1);
  config.backoff_jitter = j.value("backoff_jitter", false);
  if (j.contains("faults")) config.faults = MockFaultPlan::from_json(j["faults"]);
  if (j.contains("faults_path")) {
    config.faults = MockFaultPlan::from_json_file(j["faults_path"].get<std::string>());
  }
  if (config.parallelism_limit < 1) {
    throw ValidationError("parallelism_limit must be >= 1", "parallelism_limit");
  }
  if (config.kind == SubstrateKind::HttpChat) {
    if (config.endpoint_url.empty()) {
      throw ValidationError("http_chat substrate requires endpoint_url", "endpoint_url");
    }
    if (config.vendor.empty()) {
      throw ValidationError("http_chat substrate requires a vendor", "vendor");
    }
    if (config.model_id.empty()) {
      throw ValidationError("http_chat substrate requires model_id", "model_id");
    }
  }
  return config;
}

SubstrateConfig SubstrateConfig::from_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open substrate config: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed substrate config: ") + e.what(), path.string());
  }
  return from_json(j);
}

std::string credential_env_var(const std::string& vendor) {
  std::string var = "CCS_API_KEY_";
  for (unsigned char ch : vendor) var.push_back(static_cast<char>(std::toupper(ch)));
  return var;
}

std::chrono::milliseconds backoff_delay(int attempt) {
  constexpr std::chrono::milliseconds kBase{250};
  constexpr std::chrono::milliseconds kCap{8000};
  std::chrono::milliseconds delay = kBase * (1LL << std::min(attempt - 1, 10));
  return std::min(delay, kCap);
}

namespace {

long long count_tokens(const std::string& s) {
  return static_cast<long long>(text::tokenize(s).size());
}

struct ParsedUrl {
  std::string base;  // scheme://host[:port]
  std::string path;  // /v1/chat/completions
};

ParsedUrl split_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw ValidationError("endpoint_url must include a scheme: " + url, "endpoint_url");
  }
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

json build_request_body(const SubstrateConfig& config, const PromptEnvelope& envelope) {
  if (config.vendor == "anthropic") {
    return json{{"model", config.model_id},
                {"system", envelope.system_text},
                {"messages", json::array({json{{"role", "user"}, {"content", envelope.user_text}}})},
                {"temperature", config.temperature},
                {"max_tokens", config.max_output_tokens}};
  }
  // Default: OpenAI-compatible chat completions.
  return json{{"model", config.model_id},
              {"messages",
               json::array({json{{"role", "system"}, {"content", envelope.system_text}},
                            json{{"role", "user"}, {"content", envelope.user_text}}})},
              {"temperature", config.temperature},
              {"max_tokens", config.max_output_tokens}};
}

httplib::Headers build_headers(const SubstrateConfig& config, const std::string& key) {
  if (config.vendor == "anthropic") {
    return {{"x-api-key", key}, {"anthropic-version", "2023-06-01"}};
  }
  return {{"Authorization", "Bearer " + key}};
}

// Pulls text + token usage out of the upstream payload; throws
// MalformedPayload on surprises.
void parse_response_body(const SubstrateConfig& config, const std::string& body,
                         SubstrateResponse& out, std::vector<SubstrateAttempt> attempts) {
  json j;
  try {
    j = json::parse(body);
  } catch (const json::parse_error& e) {
    throw SubstrateError(SubstrateErrorKind::MalformedPayload, config.substrate_id(),
                         std::string("response is not JSON: ") + e.what(), std::move(attempts));
  }
  try {
    if (config.vendor == "anthropic") {
      out.text = j.at("content").at(0).at("text").get<std::string>();
      if (j.contains("usage")) {
        out.prompt_tokens = j["usage"].value("input_tokens", 0LL);
        out.completion_tokens = j["usage"].value("output_tokens", 0LL);
      }
    } else {
      out.text = j.at("choices").at(0).at("message").at("content").get<std::string>();
      if (j.contains("usage")) {
        out.prompt_tokens = j["usage"].value("prompt_tokens", 0LL);
        out.completion_tokens = j["usage"].value("completion_tokens", 0LL);
      }
    }
  } catch (const json::exception& e) {
    throw SubstrateError(SubstrateErrorKind::MalformedPayload, config.substrate_id(),
                         std::string("unexpected response shape: ") + e.what(),
                         std::move(attempts));
  }
  if (out.text.empty()) {
    throw SubstrateError(SubstrateErrorKind::MalformedPayload, config.substrate_id(),
                         "empty completion text", std::move(attempts));
  }
}

SubstrateResponse http_complete(const SubstrateConfig& config, const PromptEnvelope& envelope) {
  if (config.temperature != 0.0 && !config.allow_nonzero_temperature) {
    throw ValidationError(
        "evaluation runs require temperature 0 (set allow_nonzero_temperature to override)");
  }
  const std::string env_var = credential_env_var(config.vendor);
  const char* key = std::getenv(env_var.c_str());
  if (key == nullptr || *key == '\0') {
    // Fail before any network traffic.
    throw SubstrateError(SubstrateErrorKind::Auth, config.substrate_id(),
                         "missing credential env var " + env_var);
  }

  const ParsedUrl url = split_url(config.endpoint_url);
  httplib::Client client(url.base);
  const auto timeout_sec =
      std::chrono::duration_cast<std::chrono::seconds>(config.request_timeout);
  client.set_connection_timeout(std::max<long>(1, timeout_sec.count()), 0);
  client.set_read_timeout(std::max<long>(1, timeout_sec.count()), 0);

  const std::string body = build_request_body(config, envelope).dump();
  const httplib::Headers headers = build_headers(config, key);

  std::vector<SubstrateAttempt> attempts;
  const auto start = std::chrono::steady_clock::now();
  const int max_attempts = config.max_retries + 1;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    auto res = client.Post(url.path, headers, body, "application/json");
    SubstrateAttempt record;
    record.status = res ? res->status : 0;
    if (res && res->status >= 200 && res->status < 300) {
      SubstrateResponse out;
      out.substrate_id = config.substrate_id();
      out.attempt_count = attempt;
      attempts.push_back(record);
      parse_response_body(config, res->body, out, attempts);
      out.latency = std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start);
      return out;
    }

    const bool transport_failure = !res;
    const bool retryable =
        transport_failure || res->status == 429 || (res->status >= 500 && res->status < 600);
    record.note = transport_failure ? httplib::to_string(res.error())
                                    : "http status " + std::to_string(res->status);

    if (!retryable) {
      attempts.push_back(record);
      const auto kind = (res->status == 401 || res->status == 403)
                            ? SubstrateErrorKind::Auth
                            : SubstrateErrorKind::Http;
      throw SubstrateError(kind, config.substrate_id(), record.note, std::move(attempts));
    }

    if (attempt < max_attempts) {
      auto delay = backoff_delay(attempt);
      if (config.backoff_jitter) {
        // Live mode only; tests rely on the deterministic schedule.
        static thread_local std::mt19937_64 jitter_rng{std::random_device{}()};
        const auto half = delay.count() / 2;
        delay = std::chrono::milliseconds(
            half + static_cast<long long>(jitter_rng() % static_cast<uint64_t>(half + 1)));
      }
      record.backoff = delay;
      attempts.push_back(record);
      std::this_thread::sleep_for(delay);
      continue;
    }

    attempts.push_back(record);
    SubstrateErrorKind kind = SubstrateErrorKind::Network;
    if (!transport_failure && res->status == 429) kind = SubstrateErrorKind::RateLimitExhausted;
    if (!transport_failure && res->status >= 500) kind = SubstrateErrorKind::Http;
    if (transport_failure && res.error() == httplib::Error::Read) {
      kind = SubstrateErrorKind::Timeout;
    }
    throw SubstrateError(kind, config.substrate_id(),
                         "retries exhausted after " + std::to_string(max_attempts) +
                             " attempts: " + record.note,
                         std::move(attempts));
  }
  throw SubstrateError(SubstrateErrorKind::Network, config.substrate_id(), "unreachable");
}

}  // namespace

SubstrateResponse mock_complete(const PromptEnvelope& envelope, const MockFaultPlan& faults,
                                const std::string& substrate_id) {
  std::ostringstream text;
  if (envelope.directive.has_value()) {
    const bool omit = faults.omit_all || faults.omit_marker_items.count(envelope.item_id) > 0;
    const bool malform =
        faults.malform_all || faults.malform_items.count(envelope.item_id) > 0;
    int level = envelope.directive->level_hint;
    if (auto it = faults.level_overrides.find(envelope.item_id);
        it != faults.level_overrides.end()) {
      level = it->second;
    }
    if (malform) {
      text << "[CCS:INTERV\n";
    } else if (!omit) {
      text << format_intervention_marker(level, envelope.directive->partition, envelope.subject)
           << "\n";
      if (level >= 2) {
        text << kUncertaintyMarker << "\n" << kBoundaryMarker << "\n";
      }
    }
  }
  text << "Answer: A\n(deterministic mock completion for item " << envelope.item_id << ")\n";

  SubstrateResponse response;
  response.text = text.str();
  response.latency = std::chrono::milliseconds(0);
  response.prompt_tokens = count_tokens(envelope.system_text) + count_tokens(envelope.user_text);
  response.completion_tokens = count_tokens(response.text);
  response.substrate_id = substrate_id;
  response.attempt_count = 1;
  return response;
}

SubstrateResponse complete(const SubstrateConfig& config, const PromptEnvelope& envelope) {
  if (config.kind == SubstrateKind::Mock) {
    return mock_complete(envelope, config.faults, config.substrate_id());
  }
  return http_complete(config, envelope);
}

}  // namespace ccs
