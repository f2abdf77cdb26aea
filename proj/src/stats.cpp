#include "ccs/stats.hpp"

#include <algorithm>
#include <map>

#include <boost/math/distributions/normal.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "ccs/errors.hpp"
#include "ccs/util/rng.hpp"

namespace ccs {

using boost::multiprecision::cpp_int;
using nlohmann::json;

void to_json(json& j, const TrialRecord& r) {
  j = json{{"type", "trial"},
           {"item_id", r.item_id},
           {"subject", r.subject.str()},
           {"condition", r.condition},
           {"substrate_id", r.substrate_id},
           {"annotation", r.annotation},
           {"raw_response_digest", r.raw_response_digest},
           {"timestamp", r.timestamp},
           {"attempt_count", r.attempt_count},
           {"latency_ms", r.latency_ms},
           {"prompt_tokens", r.prompt_tokens},
           {"completion_tokens", r.completion_tokens}};
  if (r.profile_id) j["profile_id"] = *r.profile_id;
  if (r.directive) j["directive"] = *r.directive;
  if (r.raw_response) j["raw_response"] = *r.raw_response;
}

void from_json(const json& j, TrialRecord& r) {
  j.at("item_id").get_to(r.item_id);
  r.subject = DomainLabel::normalize(j.at("subject").get<std::string>());
  j.at("condition").get_to(r.condition);
  j.at("substrate_id").get_to(r.substrate_id);
  j.at("annotation").get_to(r.annotation);
  j.at("raw_response_digest").get_to(r.raw_response_digest);
  j.at("timestamp").get_to(r.timestamp);
  r.attempt_count = j.value("attempt_count", 1);
  r.latency_ms = j.value("latency_ms", 0LL);
  r.prompt_tokens = j.value("prompt_tokens", 0LL);
  r.completion_tokens = j.value("completion_tokens", 0LL);
  r.profile_id = j.contains("profile_id")
                     ? std::optional<std::string>(j["profile_id"].get<std::string>())
                     : std::nullopt;
  r.directive = j.contains("directive")
                    ? std::optional<RoutingDirective>(j["directive"].get<RoutingDirective>())
                    : std::nullopt;
  r.raw_response = j.contains("raw_response")
                       ? std::optional<std::string>(j["raw_response"].get<std::string>())
                       : std::nullopt;
}

namespace {

// Exact binomial coefficient via the multiplicative formula; every division
// is exact.
cpp_int binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  cpp_int result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

double ratio_to_double(const cpp_int& num, const cpp_int& den) {
  using big_float = boost::multiprecision::cpp_bin_float_50;
  return static_cast<double>(big_float(num) / big_float(den));
}

}  // namespace

FisherResult fisher_exact(const ContingencyTable2x2& table) {
  const long long a = table.a, b = table.b, c = table.c, d = table.d;
  if (a < 0 || b < 0 || c < 0 || d < 0) {
    throw ValidationError("contingency table cells must be non-negative");
  }
  const long long r1 = a + b, r2 = c + d, c1 = a + c, c2 = b + d, total = r1 + r2;
  if (total == 0) throw ValidationError("contingency table total must be positive");
  if (r1 == 0 || r2 == 0 || c1 == 0 || c2 == 0) return {1.0, true};

  // Two-sided by point-probability ordering: sum the hypergeometric weights
  // of every table (same margins) whose point probability is <= the observed
  // one. Weight comparisons are exact integer comparisons, so tie handling
  // needs no epsilon.
  const long long lo = std::max(0LL, c1 - r2);
  const long long hi = std::min(r1, c1);
  const cpp_int observed = binom(r1, a) * binom(r2, c1 - a);
  cpp_int tail_sum = 0;
  for (long long x = lo; x <= hi; ++x) {
    const cpp_int w = binom(r1, x) * binom(r2, c1 - x);
    if (w <= observed) tail_sum += w;
  }
  const cpp_int denom = binom(total, c1);
  return {ratio_to_double(tail_sum, denom), false};
}

Interval wilson_ci(long long k, long long n, double confidence) {
  if (n <= 0) throw ValidationError("wilson_ci requires n > 0");
  if (k < 0 || k > n) throw ValidationError("wilson_ci requires 0 <= k <= n");
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw ValidationError("confidence must lie in (0,1)");
  }
  const boost::math::normal_distribution<double> normal;
  const double z = boost::math::quantile(normal, 0.5 + confidence / 2.0);
  const double nn = static_cast<double>(n);
  const double p_hat = static_cast<double>(k) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = (p_hat + z2 / (2.0 * nn)) / denom;
  const double half = z * std::sqrt(p_hat * (1.0 - p_hat) / nn + z2 / (4.0 * nn * nn)) / denom;
  Interval ci{center - half, center + half};
  // Boundary cases are exact by construction.
  if (k == 0) ci.lo = 0.0;
  if (k == n) ci.hi = 1.0;
  ci.lo = std::clamp(ci.lo, 0.0, 1.0);
  ci.hi = std::clamp(ci.hi, 0.0, 1.0);
  return ci;
}

RateReport activation_rate(std::span<const TrialRecord> records, const GroupKeyFn& group_key,
                           const std::vector<std::string>& expected_groups) {
  RateReport report;
  std::map<std::string, std::pair<long long, long long>> counts;  // group -> (fired, total)
  for (const auto& record : records) {
    auto& [fired, total] = counts[group_key(record)];
    if (record.annotation.fired) ++fired;
    ++total;
  }
  for (const auto& [group, kn] : counts) {
    RateSummary summary;
    summary.fired = kn.first;
    summary.total = kn.second;
    summary.rate = static_cast<double>(kn.first) / static_cast<double>(kn.second);
    summary.wilson95 = wilson_ci(kn.first, kn.second, 0.95);
    report.groups[group] = summary;
  }
  for (const auto& expected : expected_groups) {
    if (!counts.count(expected)) {
      report.warnings.push_back("group '" + expected + "' has no records and was omitted");
    }
  }
  return report;
}

std::vector<MatchedPair> match_pairs(std::span<const TrialRecord> records,
                                     const std::string& condition_a,
                                     const std::string& condition_b, bool strict,
                                     std::vector<std::string>* unmatched) {
  std::map<std::string, const TrialRecord*> side_a;
  std::map<std::string, const TrialRecord*> side_b;
  for (const auto& record : records) {
    if (record.condition == condition_a) side_a[record.item_id] = &record;
    if (record.condition == condition_b) side_b[record.item_id] = &record;
  }
  std::vector<MatchedPair> pairs;
  std::vector<std::string> missing;
  for (const auto& [item_id, rec_a] : side_a) {
    auto it = side_b.find(item_id);
    if (it == side_b.end()) {
      missing.push_back(item_id);
      continue;
    }
    const TrialRecord* rec_b = it->second;
    if (!rec_a->directive || !rec_b->directive) {
      throw ValidationError("matched pair requires directives on both sides: item " + item_id);
    }
    MatchedPair pair;
    pair.item_id = item_id;
    pair.level_a = rec_a->annotation.level;
    pair.level_b = rec_b->annotation.level;
    pair.rank_a = partition_rank(rec_a->directive->partition);
    pair.rank_b = partition_rank(rec_b->directive->partition);
    pairs.push_back(std::move(pair));
  }
  for (const auto& [item_id, rec_b] : side_b) {
    (void)rec_b;
    if (!side_a.count(item_id)) missing.push_back(item_id);
  }
  if (!missing.empty()) {
    std::sort(missing.begin(), missing.end());
    if (strict) {
      std::string list;
      for (const auto& id : missing) {
        if (!list.empty()) list += ", ";
        list += id;
      }
      throw ValidationError("unmatched pairs for items: " + list);
    }
    if (unmatched) *unmatched = std::move(missing);
  }
  return pairs;
}

PermResult permutation_test(std::span<const MatchedPair> pairs, int n_permutations,
                            uint64_t seed) {
  if (pairs.empty()) throw ValidationError("permutation_test requires at least one pair");
  if (n_permutations < 1) throw ValidationError("n_permutations must be >= 1");

  // Signed integer contribution per pair; exceedance comparisons stay exact.
  std::vector<long long> contributions;
  std::vector<uint64_t> pair_keys;
  contributions.reserve(pairs.size());
  pair_keys.reserve(pairs.size());
  for (const auto& pair : pairs) {
    const int direction = pair.rank_b > pair.rank_a ? 1 : (pair.rank_b < pair.rank_a ? -1 : 0);
    contributions.push_back(static_cast<long long>(direction) *
                            (pair.level_b - pair.level_a));
    pair_keys.push_back(rng::fnv1a64(pair.item_id));
  }

  long long t_observed = 0;
  for (const long long c : contributions) t_observed += c;
  const long long abs_observed = std::llabs(t_observed);

  long long exceed = 0;
  for (int r = 0; r < n_permutations; ++r) {
    long long t = 0;
    for (std::size_t i = 0; i < contributions.size(); ++i) {
      const bool flip = rng::mix3(seed, static_cast<uint64_t>(r), pair_keys[i]) & 1;
      t += flip ? -contributions[i] : contributions[i];
    }
    if (std::llabs(t) >= abs_observed) ++exceed;
  }

  PermResult result;
  result.observed_stat = static_cast<double>(t_observed) / static_cast<double>(pairs.size());
  result.n_permutations = n_permutations;
  result.exceed_count = exceed;
  result.p_value = static_cast<double>(exceed + 1) / static_cast<double>(n_permutations + 1);
  result.seed = seed;
  return result;
}

}  // namespace ccs
