#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ccs/annotate.hpp"
#include "ccs/domain.hpp"
#include "ccs/router.hpp"

namespace ccs {

// One (item, condition, substrate) execution; the JSONL persistence unit.
// Baseline trials carry no directive. timestamp is excluded from run-log
// comparison digests.
struct TrialRecord {
  std::string item_id;
  DomainLabel subject;
  std::string condition;
  std::optional<std::string> profile_id;
  std::string substrate_id;
  std::optional<RoutingDirective> directive;
  InterventionAnnotation annotation;
  std::string raw_response_digest;
  std::string timestamp;
  std::optional<std::string> raw_response;  // audit capture, optional
  int attempt_count = 1;
  long long latency_ms = 0;
  long long prompt_tokens = 0;
  long long completion_tokens = 0;
};

void to_json(nlohmann::json& j, const TrialRecord& r);
void from_json(const nlohmann::json& j, TrialRecord& r);

// Rows = conditions, columns = fired / not-fired.
struct ContingencyTable2x2 {
  long long a = 0, b = 0;
  long long c = 0, d = 0;
};

struct FisherResult {
  double p_value = 1.0;
  bool degenerate = false;  // a zero row or column margin
};

// Two-sided Fisher exact test by point-probability ordering, computed in
// exact big-integer arithmetic (hypergeometric weights summed as integers,
// one high-precision division at the end). Exact comparisons, no epsilon.
FisherResult fisher_exact(const ContingencyTable2x2& table);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Wilson score interval; exact 0 / 1 bounds at k=0 / k=n. Throws on n=0.
Interval wilson_ci(long long k, long long n, double confidence = 0.95);

struct RateSummary {
  long long fired = 0;
  long long total = 0;
  double rate = 0.0;
  Interval wilson95;
};

struct RateReport {
  std::map<std::string, RateSummary> groups;
  std::vector<std::string> warnings;  // expected groups that were empty
};

using GroupKeyFn = std::function<std::string(const TrialRecord&)>;

// Grouped activation counts. Groups named in expected_groups but absent from
// the records are omitted with a warning listing them.
RateReport activation_rate(std::span<const TrialRecord> records, const GroupKeyFn& group_key,
                           const std::vector<std::string>& expected_groups = {});

// One item evaluated under two profile conditions; the permutation-test unit.
struct MatchedPair {
  std::string item_id;
  int level_a = 0;
  int level_b = 0;
  int rank_a = 0;  // partition_rank under condition A's directive
  int rank_b = 0;
};

// Pairs records by item id across two conditions. strict=true raises an
// unmatched-pair error listing the offending ids; otherwise unmatched ids go
// to *unmatched (when given) and are dropped.
std::vector<MatchedPair> match_pairs(std::span<const TrialRecord> records,
                                     const std::string& condition_a,
                                     const std::string& condition_b, bool strict = true,
                                     std::vector<std::string>* unmatched = nullptr);

struct PermResult {
  double observed_stat = 0.0;  // mean signed level difference over pairs
  int n_permutations = 0;
  long long exceed_count = 0;
  double p_value = 1.0;  // (exceed_count + 1) / (n_permutations + 1)
  uint64_t seed = 0;
};

// Matched-pair sign-flip permutation test. The statistic is the mean of
// sign(rank_b - rank_a) * (level_b - level_a) over pairs, i.e. the level
// shift signed by the expected inversion direction of each item's subject.
// The null flips each pair's sign independently; draws are counter-based on
// (seed, permutation, item id), so the result is seed-stable, schedule-
// independent, and invariant to pair ordering. Two-sided exceedance
// comparisons happen on exact integer sums.
PermResult permutation_test(std::span<const MatchedPair> pairs, int n_permutations = 10000,
                            uint64_t seed = 0);

}  // namespace ccs
