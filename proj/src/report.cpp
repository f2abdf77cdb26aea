#include "ccs/report.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "ccs/errors.hpp"

namespace ccs {

namespace {

const std::set<std::string>& mlcs_subjects() {
  static const std::set<std::string> kSet = {"machine_learning", "college_computer_science"};
  return kSet;
}

const std::set<std::string>& medical_legal_subjects() {
  static const std::set<std::string> kSet = {"clinical_knowledge", "medical_genetics",
                                             "professional_law"};
  return kSet;
}

const std::set<std::string>& humanities_subjects() {
  static const std::set<std::string> kSet = {"philosophy", "european_history"};
  return kSet;
}

std::string display_name(const DomainLabel& label) {
  std::string out;
  bool upper_next = true;
  for (const char ch : label.str()) {
    if (ch == '_') {
      out.push_back(' ');
      upper_next = true;
    } else {
      out.push_back(upper_next ? static_cast<char>(std::toupper(ch)) : ch);
      upper_next = false;
    }
  }
  return out;
}

struct Counts {
  long long fired = 0;
  long long total = 0;
};

void require_condition(std::span<const TrialRecord> records, const std::string& condition) {
  for (const auto& record : records) {
    if (record.condition == condition) return;
  }
  throw ValidationError("run log has no records for condition '" + condition + "'");
}

}  // namespace

std::optional<std::string> domain_group(const DomainLabel& subject) {
  if (mlcs_subjects().count(subject.str())) return groups::kMlCs;
  if (medical_legal_subjects().count(subject.str())) return groups::kMedicalLegal;
  if (humanities_subjects().count(subject.str())) return groups::kHumanities;
  return std::nullopt;
}

const std::vector<DomainLabel>& mixed_subsets() {
  static const std::vector<DomainLabel> kSubsets = {
      DomainLabel::from_normalized("professional_psychology"),
      DomainLabel::from_normalized("formal_logic"),
      DomainLabel::from_normalized("econometrics"),
  };
  return kSubsets;
}

std::string format_pct_1dp(long long k, long long n) {
  // The pilot tables collapse the exact boundaries to integers.
  if (k == 0) return "0%";
  if (k == n) return "100%";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f%%", 100.0 * static_cast<double>(k) / static_cast<double>(n));
  return buf;
}

std::string format_cell_1dp(long long k, long long n) {
  std::ostringstream out;
  out << format_pct_1dp(k, n) << " (" << k << "/" << n << ")";
  return out.str();
}

std::string format_cell_int(long long k, long long n) {
  const long long pct =
      std::llround(100.0 * static_cast<double>(k) / static_cast<double>(n));
  std::ostringstream out;
  out << pct << "% (" << k << "/" << n << ")";
  return out.str();
}

TableDocument render_profile_inversion(std::span<const TrialRecord> records,
                                       const std::string& condition_a,
                                       const std::string& condition_b) {
  require_condition(records, condition_a);
  require_condition(records, condition_b);

  std::map<std::string, std::map<std::string, Counts>> cells;  // condition -> group -> counts
  for (const auto& record : records) {
    if (record.condition != condition_a && record.condition != condition_b) continue;
    const auto group = domain_group(record.subject);
    if (!group) continue;
    auto& counts = cells[record.condition][*group];
    if (record.annotation.fired) ++counts.fired;
    ++counts.total;
  }

  TableDocument table;
  table.title = "Profile inversion results across domain partitions";
  table.row_header = "Condition";
  table.columns = {std::string(groups::kMlCs) + " (Strong)",
                   std::string(groups::kMedicalLegal) + " (Weak)",
                   std::string(groups::kHumanities) + " (Weak)"};
  for (const auto& condition : {condition_a, condition_b}) {
    table.row_labels.push_back(condition);
    std::vector<std::string> row;
    for (const char* group : {groups::kMlCs, groups::kMedicalLegal, groups::kHumanities}) {
      const auto& counts = cells[condition][group];
      row.push_back(counts.total == 0 ? "-" : format_cell_1dp(counts.fired, counts.total));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

TableDocument render_mixed_divergence(std::span<const TrialRecord> records,
                                      const std::string& condition) {
  require_condition(records, condition);
  std::map<std::string, Counts> cells;
  for (const auto& record : records) {
    if (record.condition != condition) continue;
    for (const auto& subset : mixed_subsets()) {
      if (record.subject == subset) {
        auto& counts = cells[subset.str()];
        if (record.annotation.fired) ++counts.fired;
        ++counts.total;
      }
    }
  }

  TableDocument table;
  table.title = "Within-partition activation divergence";
  table.row_header = "Mixed-Domain Subset";
  table.columns = {"Intervention Activation"};
  for (const auto& subset : mixed_subsets()) {
    const auto& counts = cells[subset.str()];
    table.row_labels.push_back(display_name(subset));
    table.rows.push_back(
        {counts.total == 0 ? "-" : format_cell_int(counts.fired, counts.total)});
  }
  return table;
}

TableDocument render_cross_substrate(std::span<const TrialRecord> records,
                                     const std::string& condition) {
  require_condition(records, condition);

  // Column order = first appearance in the log (the run config's order).
  std::vector<std::string> substrates;
  for (const auto& record : records) {
    if (record.condition != condition) continue;
    if (std::find(substrates.begin(), substrates.end(), record.substrate_id) ==
        substrates.end()) {
      substrates.push_back(record.substrate_id);
    }
  }

  std::map<std::string, std::map<std::string, Counts>> cells;  // group -> substrate -> counts
  for (const auto& record : records) {
    if (record.condition != condition) continue;
    const auto group = domain_group(record.subject);
    if (!group) continue;
    auto& counts = cells[*group][record.substrate_id];
    if (record.annotation.fired) ++counts.fired;
    ++counts.total;
  }

  TableDocument table;
  table.title = "Cross-substrate activation rates";
  table.row_header = "Domain Partition";
  table.columns = substrates;
  const std::vector<std::pair<const char*, const char*>> rows = {
      {groups::kMlCs, "Strong"},
      {groups::kMedicalLegal, "Weak"},
      {groups::kHumanities, "Weak"},
  };
  for (const auto& [group, partition] : rows) {
    table.row_labels.push_back(std::string(group) + " (" + partition + ")");
    std::vector<std::string> row;
    for (const auto& substrate : substrates) {
      const auto& counts = cells[group][substrate];
      row.push_back(counts.total == 0 ? "-" : format_pct_1dp(counts.fired, counts.total));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace {

std::string manifest_comment_lines(const RunManifest& manifest, const std::string& prefix,
                                   const std::string& suffix) {
  auto join = [](const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) {
      if (!out.empty()) out += ",";
      out += s;
    }
    return out;
  };
  std::ostringstream out;
  out << prefix << "run_id: " << manifest.run_id << suffix << '\n';
  out << prefix << "corpus_digest: " << manifest.corpus_digest << suffix << '\n';
  out << prefix << "profiles: " << join(manifest.profile_ids) << suffix << '\n';
  out << prefix << "substrates: " << join(manifest.substrate_ids) << suffix << '\n';
  out << prefix << "conditions: " << join(manifest.conditions) << suffix << '\n';
  out << prefix << "sample_seed: " << manifest.sample_seed << suffix << '\n';
  out << prefix << "pairs: raw=" << manifest.raw_pair_count
      << " filtered_out=" << manifest.filtered_out_count << " kept=" << manifest.kept_pair_count
      << suffix << '\n';
  out << prefix << "template_version: " << manifest.template_version
      << ", tool_version: " << manifest.tool_version << suffix << '\n';
  return out.str();
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (const char ch : field) {
    if (ch == '"') out += "\"\"";
    else out.push_back(ch);
  }
  out += "\"";
  return out;
}

}  // namespace

std::string to_markdown(const TableDocument& table, const RunManifest& manifest) {
  std::ostringstream out;
  out << manifest_comment_lines(manifest, "<!-- ", " -->");
  out << '\n' << "## " << table.title << "\n\n";
  out << "| " << table.row_header;
  for (const auto& column : table.columns) out << " | " << column;
  out << " |\n|";
  for (std::size_t i = 0; i <= table.columns.size(); ++i) out << " --- |";
  out << '\n';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << "| " << table.row_labels[r];
    for (const auto& cell : table.rows[r]) out << " | " << cell;
    out << " |\n";
  }
  return out.str();
}

std::string to_csv(const TableDocument& table, const RunManifest& manifest) {
  std::ostringstream out;
  out << manifest_comment_lines(manifest, "# ", "");
  out << csv_escape(table.row_header);
  for (const auto& column : table.columns) out << ',' << csv_escape(column);
  out << '\n';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << csv_escape(table.row_labels[r]);
    for (const auto& cell : table.rows[r]) out << ',' << csv_escape(cell);
    out << '\n';
  }
  return out.str();
}

std::string emit_heatmap_csv(std::span<const TrialRecord> records, const RunManifest& manifest) {
  std::map<std::string, std::map<std::string, Counts>> cells;  // condition -> group -> counts
  std::vector<std::string> condition_order;
  for (const auto& record : records) {
    const auto group = domain_group(record.subject);
    if (!group) continue;
    if (!cells.count(record.condition)) condition_order.push_back(record.condition);
    auto& counts = cells[record.condition][*group];
    if (record.annotation.fired) ++counts.fired;
    ++counts.total;
  }
  std::ostringstream out;
  out << manifest_comment_lines(manifest, "# ", "");
  out << "condition,domain_group,rate,fired,total\n";
  for (const auto& condition : condition_order) {
    for (const char* group : {groups::kMlCs, groups::kMedicalLegal, groups::kHumanities}) {
      auto it = cells[condition].find(group);
      if (it == cells[condition].end()) continue;
      char rate[32];
      std::snprintf(rate, sizeof(rate), "%.6f",
                    static_cast<double>(it->second.fired) /
                        static_cast<double>(it->second.total));
      out << csv_escape(condition) << ',' << csv_escape(group) << ',' << rate << ','
          << it->second.fired << ',' << it->second.total << '\n';
    }
  }
  return out.str();
}

std::vector<TrialRecord> filter_records(std::span<const TrialRecord> records,
                                        const std::optional<std::string>& condition,
                                        const std::optional<std::string>& substrate) {
  std::vector<TrialRecord> out;
  for (const auto& record : records) {
    if (condition && record.condition != *condition) continue;
    if (substrate && record.substrate_id != *substrate) continue;
    out.push_back(record);
  }
  return out;
}

}  // namespace ccs
