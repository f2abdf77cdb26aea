#include "ccs/run_log.hpp"

#include <sstream>

#include "ccs/util/digest.hpp"

namespace ccs {

using nlohmann::json;

void to_json(json& j, const RunManifest& m) {
  j = json{{"type", "manifest"},
           {"run_id", m.run_id},
           {"corpus_digest", m.corpus_digest},
           {"profile_ids", m.profile_ids},
           {"substrate_ids", m.substrate_ids},
           {"conditions", m.conditions},
           {"sample_seed", m.sample_seed},
           {"pair_counts",
            json{{"raw", m.raw_pair_count},
                 {"filtered_out", m.filtered_out_count},
                 {"kept", m.kept_pair_count}}},
           {"template_version", m.template_version},
           {"tool_version", m.tool_version},
           {"created_at", m.created_at}};
}

void from_json(const json& j, RunManifest& m) {
  j.at("run_id").get_to(m.run_id);
  j.at("corpus_digest").get_to(m.corpus_digest);
  j.at("profile_ids").get_to(m.profile_ids);
  j.at("substrate_ids").get_to(m.substrate_ids);
  j.at("conditions").get_to(m.conditions);
  j.at("sample_seed").get_to(m.sample_seed);
  const auto& counts = j.at("pair_counts");
  counts.at("raw").get_to(m.raw_pair_count);
  counts.at("filtered_out").get_to(m.filtered_out_count);
  counts.at("kept").get_to(m.kept_pair_count);
  j.at("template_version").get_to(m.template_version);
  j.at("tool_version").get_to(m.tool_version);
  m.created_at = j.value("created_at", "");
}

std::string trial_key(const std::string& item_id, const std::string& condition,
                      const std::string& substrate_id) {
  return digest::sha256_hex16(item_id + "|" + condition + "|" + substrate_id);
}

RunLogWriter::RunLogWriter(const std::filesystem::path& path, const RunManifest& manifest,
                           bool resume) : path_(path) {
  const bool exists = std::filesystem::exists(path);
  if (exists && !resume) {
    throw ValidationError("run log already exists (use resume): " + path.string());
  }
  if (exists && resume) {
    RunLogData existing = read_run_log(path);
    if (existing.manifest.run_id != manifest.run_id) {
      throw ValidationError("resume refused: log belongs to run '" + existing.manifest.run_id +
                            "', config produces run '" + manifest.run_id + "'");
    }
    for (const auto& trial : existing.trials) {
      done_.insert(trial_key(trial.item_id, trial.condition, trial.substrate_id));
    }
    out_.open(path, std::ios::binary | std::ios::app);
    if (!out_) throw IoError("cannot reopen run log for append: " + path.string());
    return;
  }
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  out_.open(path, std::ios::binary | std::ios::trunc);
  if (!out_) throw IoError("cannot open run log: " + path.string());
  // Manifest goes first so any partial log is still attributable.
  out_ << json(manifest).dump() << '\n';
  out_.flush();
}

void RunLogWriter::append(const TrialRecord& record) {
  json j = record;
  j["trial_key"] = trial_key(record.item_id, record.condition, record.substrate_id);
  out_ << j.dump() << '\n';
  out_.flush();
  done_.insert(trial_key(record.item_id, record.condition, record.substrate_id));
}

void RunLogWriter::append_error(const TrialError& error) {
  json j{{"type", "error"},
         {"item_id", error.item_id},
         {"condition", error.condition},
         {"substrate_id", error.substrate_id},
         {"kind", error.kind},
         {"message", error.message},
         {"attempts", error.attempts},
         {"timestamp", error.timestamp}};
  out_ << j.dump() << '\n';
  out_.flush();
}

void RunLogWriter::flush() { out_.flush(); }

RunLogData read_run_log(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open run log: " + path.string());
  RunLogData data;
  std::string line;
  std::size_t line_no = 0;
  bool manifest_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ValidationError(std::string("malformed run log line: ") + e.what(),
                            path.string() + ":" + std::to_string(line_no));
    }
    const std::string type = j.value("type", "");
    if (type == "manifest") {
      if (manifest_seen) {
        throw ValidationError("duplicate manifest line",
                              path.string() + ":" + std::to_string(line_no));
      }
      data.manifest = j.get<RunManifest>();
      manifest_seen = true;
    } else if (type == "trial") {
      try {
        data.trials.push_back(j.get<TrialRecord>());
      } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed trial record: ") + e.what(),
                              path.string() + ":" + std::to_string(line_no));
      }
    } else if (type == "error") {
      TrialError error;
      error.item_id = j.value("item_id", "");
      error.condition = j.value("condition", "");
      error.substrate_id = j.value("substrate_id", "");
      error.kind = j.value("kind", "");
      error.message = j.value("message", "");
      error.attempts = j.value("attempts", 0);
      error.timestamp = j.value("timestamp", "");
      data.errors.push_back(std::move(error));
    } else {
      throw ValidationError("unknown record type: '" + type + "'",
                            path.string() + ":" + std::to_string(line_no));
    }
  }
  if (!manifest_seen) throw ValidationError("run log has no manifest line: " + path.string());
  return data;
}

std::string log_comparison_digest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open run log: " + path.string());
  std::string blob;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    j.erase("timestamp");
    j.erase("created_at");
    blob += j.dump();
    blob.push_back('\n');
  }
  return digest::sha256_hex(blob);
}

}  // namespace ccs
