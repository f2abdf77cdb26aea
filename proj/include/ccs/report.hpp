#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ccs/run_log.hpp"
#include "ccs/stats.hpp"

namespace ccs {

// Domain groupings used by the pilot analysis tables.
namespace groups {
inline constexpr const char* kMlCs = "ML / CS";
inline constexpr const char* kMedicalLegal = "Medical / Legal";
inline constexpr const char* kHumanities = "Humanities";
}  // namespace groups

// Group for a subject label, or nullopt for subjects outside the three
// reporting groups (the mixed subsets report individually in Table 3).
std::optional<std::string> domain_group(const DomainLabel& subject);

const std::vector<DomainLabel>& mixed_subsets();

// "3.3%" / "90.0%", with exact 0 and 1 collapsed to "0%" / "100%".
std::string format_pct_1dp(long long k, long long n);
// "3.3% (1/30)"
std::string format_cell_1dp(long long k, long long n);
// "73% (22/30)"
std::string format_cell_int(long long k, long long n);

struct TableDocument {
  std::string title;
  std::string row_header;               // label of the first column
  std::vector<std::string> columns;     // remaining column labels
  std::vector<std::string> row_labels;
  std::vector<std::vector<std::string>> rows;
};

// Profile inversion across domain partitions: rows = the two profile
// conditions, columns = ML/CS, Medical/Legal, Humanities, cells
// "rate% (k/n)" at one decimal. Throws ValidationError naming any absent
// condition.
TableDocument render_profile_inversion(std::span<const TrialRecord> records,
                                       const std::string& condition_a = "pcs-nlp",
                                       const std::string& condition_b = "pcs-litprof");

// Within-partition activation divergence across the mixed subsets under one
// condition; integer percentages.
TableDocument render_mixed_divergence(std::span<const TrialRecord> records,
                                      const std::string& condition = "pcs-nlp");

// Rows = domain partitions, columns = substrates in first-appearance order,
// cells bare percentages at one decimal.
TableDocument render_cross_substrate(std::span<const TrialRecord> records,
                                     const std::string& condition = "pcs-nlp");

// Long-format (condition, domain_group, rate, fired, total) rows for
// external plotting.
std::string emit_heatmap_csv(std::span<const TrialRecord> records, const RunManifest& manifest);

// Renderers are deterministic: same run, same bytes. Every file carries the
// manifest as a comment header.
std::string to_markdown(const TableDocument& table, const RunManifest& manifest);
std::string to_csv(const TableDocument& table, const RunManifest& manifest);

// Record filters used by report/stats selections.
std::vector<TrialRecord> filter_records(std::span<const TrialRecord> records,
                                        const std::optional<std::string>& condition,
                                        const std::optional<std::string>& substrate);

}  // namespace ccs
