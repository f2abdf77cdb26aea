#include "ccs/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include "ccs/annotate.hpp"
#include "ccs/corpus.hpp"
#include "ccs/errors.hpp"
#include "ccs/profile.hpp"
#include "ccs/report.hpp"
#include "ccs/router.hpp"
#include "ccs/runner.hpp"
#include "ccs/run_log.hpp"
#include "ccs/scaffold.hpp"
#include "ccs/stats.hpp"
#include "ccs/version.hpp"

#include "CLI11.hpp"
#include "json.hpp"

namespace ccs::cli {

using nlohmann::json;

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write: " + path.string());
  out << content;
}

int cmd_validate(const std::string& profile_path, std::ostream& out) {
  const CapabilityProfile profile = load_profile_file(profile_path);
  out << "ok: profile '" << profile.id << "' (" << profile.strong.size() << " strong, "
      << profile.mixed.size() << " mixed, " << profile.weak.size() << " weak domains)\n";
  return kExitOk;
}

int cmd_route(const std::string& profile_ref, const std::vector<std::string>& corpus_files,
              const std::string& ambiguity_path, std::ostream& out) {
  const CapabilityProfile profile = resolve_profile(profile_ref);
  std::map<std::string, bool> sidecar;
  if (!ambiguity_path.empty()) sidecar = load_ambiguity_sidecar(ambiguity_path);
  for (const auto& file : corpus_files) {
    std::vector<Item> items = load_items(file);
    if (!sidecar.empty()) apply_ambiguity(items, sidecar);
    for (const auto& item : items) {
      const RoutingDirective directive =
          route(profile, item.subject, prompt_text(item), item.ambiguous);
      out << item.id << " subject=" << item.subject.str()
          << " partition=" << to_string(directive.partition)
          << " level=" << directive.level_hint << " reason=" << directive.rationale
          << " alignment=" << to_string(directive.alignment.verdict) << ":"
          << directive.alignment.score << "\n";
    }
  }
  return kExitOk;
}

// Infers the two profile conditions of an inversion analysis from the
// manifest, preferring the run's condition order.
std::pair<std::string, std::string> inversion_conditions(const RunManifest& manifest,
                                                         std::string cond_a,
                                                         std::string cond_b) {
  if (!cond_a.empty() && !cond_b.empty()) return {cond_a, cond_b};
  std::vector<std::string> profile_conditions;
  for (const auto& condition : manifest.conditions) {
    if (condition != kBaselineCondition) profile_conditions.push_back(condition);
  }
  if (profile_conditions.size() < 2) {
    throw ValidationError("run log has fewer than two profile conditions; pass --condition-a/-b");
  }
  return {profile_conditions[0], profile_conditions[1]};
}

json rate_summary_json(const RateSummary& summary) {
  return json{{"fired", summary.fired},
              {"total", summary.total},
              {"rate", summary.rate},
              {"wilson95", {summary.wilson95.lo, summary.wilson95.hi}}};
}

int cmd_stats(const std::string& log_path, const std::string& out_dir, int permutations,
              uint64_t seed, const std::string& substrate_sel, std::string cond_a,
              std::string cond_b, std::ostream& out) {
  const RunLogData data = read_run_log(log_path);
  std::tie(cond_a, cond_b) = inversion_conditions(data.manifest, cond_a, cond_b);

  const std::vector<TrialRecord> records = filter_records(
      data.trials, std::nullopt,
      substrate_sel.empty() ? std::nullopt : std::optional<std::string>(substrate_sel));
  if (records.empty()) throw ValidationError("no trial records after selection");

  json result;
  result["manifest"] = data.manifest;
  result["selection"] = json{{"substrate", substrate_sel.empty() ? json() : json(substrate_sel)},
                             {"condition_a", cond_a},
                             {"condition_b", cond_b}};

  // Activation rates and mean firing intensity per condition x domain group,
  // plus per condition x subject.
  auto group_key = [](const TrialRecord& r) {
    const auto group = domain_group(r.subject);
    return r.condition + " / " + (group ? *group : r.subject.str());
  };
  auto subject_key = [](const TrialRecord& r) { return r.condition + " / " + r.subject.str(); };
  json rates_group = json::object();
  for (const auto& [key, summary] : activation_rate(records, group_key).groups) {
    rates_group[key] = rate_summary_json(summary);
  }
  json rates_subject = json::object();
  json mean_level = json::object();
  {
    std::map<std::string, std::pair<long long, long long>> level_sums;
    for (const auto& record : records) {
      auto& [sum, count] = level_sums[subject_key(record)];
      sum += record.annotation.level;
      ++count;
    }
    for (const auto& [key, summary] : activation_rate(records, subject_key).groups) {
      rates_subject[key] = rate_summary_json(summary);
    }
    for (const auto& [key, sums] : level_sums) {
      mean_level[key] = static_cast<double>(sums.first) / static_cast<double>(sums.second);
    }
  }
  result["rates_by_condition_group"] = rates_group;
  result["rates_by_condition_subject"] = rates_subject;
  // The pilot's firing-intensity figure does not say whether it is binary or
  // graded; report both and let readers pick.
  result["mean_level_by_condition_subject"] = mean_level;

  // Fisher exact per domain group across the two profile conditions.
  json fisher = json::object();
  for (const char* group : {groups::kMlCs, groups::kMedicalLegal, groups::kHumanities}) {
    long long a = 0, b = 0, c = 0, d = 0;
    for (const auto& record : records) {
      const auto g = domain_group(record.subject);
      if (!g || *g != group) continue;
      if (record.condition == cond_a) {
        record.annotation.fired ? ++a : ++b;
      } else if (record.condition == cond_b) {
        record.annotation.fired ? ++c : ++d;
      }
    }
    if (a + b == 0 || c + d == 0) continue;  // group absent under a condition
    const FisherResult fr = fisher_exact({a, b, c, d});
    fisher[group] = json{{"table", {a, b, c, d}},
                         {"p_value", fr.p_value},
                         {"degenerate", fr.degenerate}};
  }
  result["fisher_by_group"] = fisher;

  // Matched-pair permutation test across the two profile conditions.
  std::vector<std::string> unmatched;
  const std::vector<MatchedPair> pairs =
      match_pairs(records, cond_a, cond_b, /*strict=*/false, &unmatched);
  if (!pairs.empty()) {
    const PermResult perm = permutation_test(pairs, permutations, seed);
    result["permutation"] = json{{"observed_stat", perm.observed_stat},
                                 {"n_permutations", perm.n_permutations},
                                 {"exceed_count", perm.exceed_count},
                                 {"p_value", perm.p_value},
                                 {"seed", perm.seed},
                                 {"n_pairs", pairs.size()},
                                 {"unmatched_items", unmatched}};
  }

  result["notes"] = json::array(
      {"intervention detection counts explicit CCS markers emitted by the scaffold's grammar; "
       "free-text hedging is not counted",
       "permutation statistic: mean level difference over matched prompt pairs, signed by the "
       "expected inversion direction of each item's subject, with an independent per-pair "
       "sign-flip null and add-one p-value smoothing"});

  const std::string text = result.dump(2) + "\n";
  if (!out_dir.empty()) {
    write_file(std::filesystem::path(out_dir) / "stats.json", text);
    out << "wrote " << (std::filesystem::path(out_dir) / "stats.json").string() << "\n";
  } else {
    out << text;
  }
  return kExitOk;
}

int cmd_report(const std::string& log_path, const std::string& out_dir,
               const std::string& format, const std::string& substrate_sel,
               const std::string& mixed_condition, std::string cond_a, std::string cond_b,
               std::ostream& out) {
  if (format != "md" && format != "csv") {
    throw ValidationError("--format must be md or csv, got '" + format + "'");
  }
  const RunLogData data = read_run_log(log_path);
  std::tie(cond_a, cond_b) = inversion_conditions(data.manifest, cond_a, cond_b);

  const std::vector<TrialRecord> selected = filter_records(
      data.trials, std::nullopt,
      substrate_sel.empty() ? std::nullopt : std::optional<std::string>(substrate_sel));
  if (selected.empty()) throw ValidationError("no trial records after selection");

  auto render = [&](const TableDocument& table) {
    return format == "md" ? to_markdown(table, data.manifest) : to_csv(table, data.manifest);
  };

  const TableDocument table2 = render_profile_inversion(selected, cond_a, cond_b);
  const TableDocument table3 = render_mixed_divergence(selected, mixed_condition);
  // Table 4 spans substrates; it always uses the unfiltered records.
  const TableDocument table4 = render_cross_substrate(data.trials, mixed_condition);
  const std::string heatmap = emit_heatmap_csv(selected, data.manifest);

  const std::filesystem::path dir(out_dir);
  write_file(dir / ("table2_profile_inversion." + format), render(table2));
  write_file(dir / ("table3_mixed_divergence." + format), render(table3));
  write_file(dir / ("table4_cross_substrate." + format), render(table4));
  write_file(dir / "heatmap.csv", heatmap);
  out << "wrote table2/table3/table4." << format << " and heatmap.csv to " << out_dir << "\n";
  return kExitOk;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"capability-conditioned scaffolding toolkit"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  // validate
  std::string profile_path;
  auto* validate = app.add_subcommand("validate", "parse and validate a profile file");
  validate->add_option("profile", profile_path, "profile file path")->required();

  // route
  std::string route_profile, route_ambiguity;
  std::vector<std::string> route_corpus;
  auto* route_cmd = app.add_subcommand("route", "print per-item directives without substrate calls");
  route_cmd->add_option("--profile", route_profile, "profile path or builtin id")->required();
  route_cmd->add_option("--corpus", route_corpus, "corpus file(s)")->required();
  route_cmd->add_option("--ambiguity", route_ambiguity, "ambiguity sidecar file");

  // run
  std::string run_config_path, run_filter, run_ambiguity, run_out = "out";
  std::vector<std::string> run_profiles, run_corpus, run_substrates, run_conditions;
  uint64_t run_seed = 0;
  int run_sample_n = -1;
  bool run_resume = false, run_capture_raw = false;
  auto* run_cmd = app.add_subcommand("run", "execute trials and append a JSONL run log");
  run_cmd->add_option("--config", run_config_path, "run config JSON (flags override it)");
  run_cmd->add_option("--profile", run_profiles, "profile path(s) or builtin id(s)");
  run_cmd->add_option("--corpus", run_corpus, "corpus file(s) or directory");
  run_cmd->add_option("--conditions", run_conditions,
                      "condition ids (baseline and/or profile ids)");
  run_cmd->add_option("--substrate", run_substrates, "'mock' or substrate config JSON path");
  run_cmd->add_option("--seed", run_seed, "sampling seed");
  run_cmd->add_option("--sample-n", run_sample_n, "items per subject (-1 = all)");
  run_cmd->add_option("--filter", run_filter, "pair filter JSON path");
  run_cmd->add_option("--ambiguity", run_ambiguity, "ambiguity sidecar file");
  run_cmd->add_option("--out", run_out, "output directory");
  run_cmd->add_flag("--resume", run_resume, "skip pairs already logged");
  run_cmd->add_flag("--capture-raw", run_capture_raw, "store raw responses in the log");

  // stats
  std::string stats_log, stats_out, stats_substrate, stats_cond_a, stats_cond_b;
  int stats_permutations = 10000;
  uint64_t stats_seed = 0;
  auto* stats_cmd = app.add_subcommand("stats", "compute rates, Fisher tests, permutation test");
  stats_cmd->add_option("--log", stats_log, "run log path")->required();
  stats_cmd->add_option("--out", stats_out, "output directory (stdout when omitted)");
  stats_cmd->add_option("--permutations", stats_permutations, "permutation count");
  stats_cmd->add_option("--seed", stats_seed, "permutation seed");
  stats_cmd->add_option("--substrate", stats_substrate, "restrict to one substrate");
  stats_cmd->add_option("--condition-a", stats_cond_a, "first profile condition");
  stats_cmd->add_option("--condition-b", stats_cond_b, "second profile condition");

  // report
  std::string report_log, report_out = "out", report_format = "md", report_substrate;
  std::string report_mixed_condition = "pcs-nlp", report_cond_a, report_cond_b;
  auto* report_cmd = app.add_subcommand("report", "render the pilot tables and heatmap data");
  report_cmd->add_option("--log", report_log, "run log path")->required();
  report_cmd->add_option("--out", report_out, "output directory");
  report_cmd->add_option("--format", report_format, "md or csv");
  report_cmd->add_option("--substrate", report_substrate,
                         "substrate for the single-substrate tables");
  report_cmd->add_option("--mixed-condition", report_mixed_condition,
                         "condition for the mixed-divergence table");
  report_cmd->add_option("--condition-a", report_cond_a, "first inversion condition");
  report_cmd->add_option("--condition-b", report_cond_b, "second inversion condition");

  std::vector<std::string> argv_copy = args;
  try {
    std::vector<const char*> argv;
    argv.push_back("ccs");
    for (const auto& a : argv_copy) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  if (validate->parsed()) return cmd_validate(profile_path, out);
  if (route_cmd->parsed()) return cmd_route(route_profile, route_corpus, route_ambiguity, out);
  if (run_cmd->parsed()) {
    RunConfig config;
    if (!run_config_path.empty()) config = RunConfig::from_json_file(run_config_path);
    for (const auto& p : run_profiles) config.profiles.push_back(p);
    for (const auto& c : run_corpus) config.corpus_paths.push_back(c);
    for (const auto& c : run_conditions) config.conditions.push_back(c);
    for (const auto& s : run_substrates) {
      config.substrates.push_back(s == "mock" ? SubstrateConfig::mock()
                                              : SubstrateConfig::from_json_file(s));
    }
    if (run_cmd->count("--seed")) config.seed = run_seed;
    if (run_cmd->count("--sample-n")) config.sample_n = run_sample_n;
    if (!run_filter.empty()) config.filter = PairFilter::from_json_file(run_filter);
    if (!run_ambiguity.empty()) config.ambiguity_sidecar = run_ambiguity;
    if (run_cmd->count("--out")) config.out_dir = run_out;
    if (run_resume) config.resume = true;
    if (run_capture_raw) config.capture_raw = true;
    const RunOutcome outcome = execute_run(config);
    out << "log: " << outcome.log_path.string() << " completed=" << outcome.completed
        << " skipped=" << outcome.skipped << " failed=" << outcome.failed << "\n";
    return outcome.failed > 0 ? kExitSubstrate : kExitOk;
  }
  if (stats_cmd->parsed()) {
    return cmd_stats(stats_log, stats_out, stats_permutations, stats_seed, stats_substrate,
                     stats_cond_a, stats_cond_b, out);
  }
  if (report_cmd->parsed()) {
    return cmd_report(report_log, report_out, report_format, report_substrate,
                      report_mixed_condition, report_cond_a, report_cond_b, out);
  }
  err << "error: no subcommand\n";
  return kExitValidation;
}

}  // namespace

int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const UndeclaredDomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const SubstrateError& e) {
    err << "error: " << e.what() << "\n";
    return kExitSubstrate;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
}

}  // namespace ccs::cli
