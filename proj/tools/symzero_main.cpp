// Copyright 2026 The symzero Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "symzero/errors.hpp"
#include "symzero/experiments.hpp"
#include "symzero/game_io.hpp"
#include "symzero/version.hpp"

namespace {

using namespace symzero;
using experiments::ReportFormat;

constexpr int kExitPass = 0;
constexpr int kExitStatFail = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
  std::string dist = "odd-int";
  std::string base = "rps";
  int n = 3;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  long bound = 4;
  std::string half_width = "1";
  int workers = 0;
  std::string out;
  std::string format = "json";
  double z_threshold = 4.0;
  std::uint64_t min_trials = 1000;
  std::string set;
  std::string config_path;
};

// Registers the shared experiment flags on a subcommand, recording the
// option pointers so a JSON config can fill in anything not given on the
// command line (flags override the file).
struct CommonBinding {
  CLI::Option* dist = nullptr;
  CLI::Option* base = nullptr;
  CLI::Option* n = nullptr;
  CLI::Option* trials = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* bound = nullptr;
  CLI::Option* half_width = nullptr;
  CLI::Option* workers = nullptr;
  CLI::Option* out = nullptr;
  CLI::Option* format = nullptr;
  CLI::Option* z_threshold = nullptr;
  CLI::Option* min_trials = nullptr;
  CLI::Option* set = nullptr;
};

CommonBinding add_common_options(CLI::App* cmd, CommonOpts& o, bool with_sampler) {
  CommonBinding b;
  if (with_sampler) {
    b.dist = cmd->add_option("--dist", o.dist, "Sampler distribution")
                 ->check(CLI::IsMember({"odd-int", "gaussian", "uniform", "tournament",
                                        "symmetrized"}));
    b.base = cmd->add_option("--base", o.base, "Base sampler for --dist symmetrized")
                 ->check(CLI::IsMember({"odd-int", "gaussian", "uniform", "tournament", "rps"}));
    b.n = cmd->add_option("--n", o.n, "Number of actions");
    b.bound = cmd->add_option("--bound", o.bound, "Odd-int bound B: entries in {±1..±(2B+1)}");
    b.half_width = cmd->add_option("--half-width", o.half_width,
                                   "Uniform sampler magnitude range [0, W] (rational)");
  }
  b.trials = cmd->add_option("--trials", o.trials, "Number of Monte Carlo trials");
  b.seed = cmd->add_option("--seed", o.seed, "Root seed for the splitmix64 substreams");
  b.workers = cmd->add_option("--workers", o.workers,
                              "Worker threads (0 = hardware concurrency); results do not "
                              "depend on this");
  b.out = cmd->add_option("--out", o.out, "Write the full report to this path");
  b.format = cmd->add_option("--format", o.format, "Report file format")
                 ->check(CLI::IsMember({"csv", "json"}));
  b.z_threshold = cmd->add_option("--z-threshold", o.z_threshold, "Per-bin |z| gate");
  b.min_trials = cmd->add_option("--min-trials", o.min_trials, "Minimum trials for a verdict");
  cmd->add_option("--config", o.config_path,
                  "JSON config mirroring the flags; explicit flags override it");
  return b;
}

void apply_config_file(CommonOpts& o, const CommonBinding& b) {
  if (o.config_path.empty()) return;
  std::ifstream in(o.config_path);
  if (!in) throw IoError("cannot open config file: " + o.config_path);
  nlohmann::json cfg;
  try {
    in >> cfg;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("bad JSON config " + o.config_path + ": " + e.what());
  }

  auto unset = [](CLI::Option* opt) { return opt != nullptr && opt->count() == 0; };
  if (cfg.contains("dist") && unset(b.dist)) o.dist = cfg["dist"].get<std::string>();
  if (cfg.contains("base") && unset(b.base)) o.base = cfg["base"].get<std::string>();
  if (cfg.contains("n") && unset(b.n)) o.n = cfg["n"].get<int>();
  if (cfg.contains("trials") && unset(b.trials)) o.trials = cfg["trials"].get<std::uint64_t>();
  if (cfg.contains("seed") && unset(b.seed)) o.seed = cfg["seed"].get<std::uint64_t>();
  if (cfg.contains("bound") && unset(b.bound)) o.bound = cfg["bound"].get<long>();
  if (cfg.contains("half-width") && unset(b.half_width)) {
    o.half_width = cfg["half-width"].is_string() ? cfg["half-width"].get<std::string>()
                                                 : cfg["half-width"].dump();
  }
  if (cfg.contains("workers") && unset(b.workers)) o.workers = cfg["workers"].get<int>();
  if (cfg.contains("out") && unset(b.out)) o.out = cfg["out"].get<std::string>();
  if (cfg.contains("format") && unset(b.format)) o.format = cfg["format"].get<std::string>();
  if (cfg.contains("z-threshold") && unset(b.z_threshold)) {
    o.z_threshold = cfg["z-threshold"].get<double>();
  }
  if (cfg.contains("min-trials") && unset(b.min_trials)) {
    o.min_trials = cfg["min-trials"].get<std::uint64_t>();
  }
  if (cfg.contains("set") && unset(b.set)) {
    o.set = cfg["set"].is_string() ? cfg["set"].get<std::string>() : cfg["set"].dump();
  }
}

sampling::SamplerSpec base_spec(const std::string& kind, const CommonOpts& o) {
  if (kind == "odd-int") return sampling::odd_int_spec(o.n, o.bound);
  if (kind == "gaussian") return sampling::gaussian_spec(o.n);
  if (kind == "uniform") return sampling::uniform_spec(o.n, rat_from_string(o.half_width));
  if (kind == "tournament") return sampling::tournament_spec(o.n);
  if (kind == "rps") {
    if (o.n != 3) throw ParseError("--base rps requires --n 3");
    return sampling::constant_spec(
        SkewGame::from_upper(3, {BigRat(1), BigRat(-1), BigRat(1)}));
  }
  throw ParseError("unknown sampler kind: " + kind);
}

experiments::ExperimentConfig make_config(const CommonOpts& o) {
  experiments::ExperimentConfig c;
  if (o.dist == "symmetrized") {
    c.sampler = sampling::symmetrized(base_spec(o.base, o));
  } else {
    c.sampler = base_spec(o.dist, o);
  }
  c.trials = o.trials;
  c.seed = o.seed;
  c.workers = o.workers;
  c.tolerance.z_threshold = o.z_threshold;
  c.tolerance.min_trials = o.min_trials;
  if (!o.set.empty()) c.conditioning_set = ActionSet::parse(o.set);
  return c;
}

void maybe_write(const CommonOpts& o, const std::string& json_text,
                 const std::string& csv_text) {
  if (o.out.empty()) return;
  const ReportFormat format = experiments::parse_format(o.format);
  experiments::write_text_file(o.out,
                               format == ReportFormat::Json ? json_text : csv_text);
  std::cout << "report written to " << o.out << "\n";
}

void print_census_summary(const experiments::SupportHistogram& hist,
                          const experiments::StatReport& stats) {
  std::cout << "sampler: " << hist.sampler << "  seed: " << hist.seed
            << "  trials: " << hist.trials << "\n";
  std::cout << "degenerate: " << stats.degenerate << " (rate "
            << stats.degenerate_rate << ")\n";
  std::cout << "even-support draws: " << stats.even_support_count << "\n";
  for (const auto& bin : stats.bins) {
    if (bin.count == 0 && bin.expected == 0.0) continue;
    std::printf("support %-12s count %10llu  freq %.6f  expected %.6f  z %+.3f\n",
                ActionSet::from_mask(bin.mask).to_string().c_str(),
                static_cast<unsigned long long>(bin.count), bin.frequency, bin.expected,
                bin.z);
  }
  std::printf("chi-square %.4f (dof %d, p %.6g), max |z| %.3f\n", stats.chi_square, stats.dof,
              stats.p_value, stats.max_abs_z);
  for (const auto& f : stats.failures) std::cout << "violation: " << f << "\n";
  std::cout << "verdict: " << (stats.pass ? "PASS" : "FAIL") << "\n";
}

int run_solve(const std::string& path, const std::string& report_format) {
  const SkewGame game = read_game_file(path);
  const SolveReport report = analyze(game);
  if (report_format == "csv") {
    std::cout << experiments::solve_report_csv(game, report);
  } else {
    std::cout << experiments::solve_report_json(game, report);
  }
  return kExitPass;
}

int run_census_cmd(const CommonOpts& o) {
  const auto config = make_config(o);
  const auto hist = experiments::run_census(config);
  const auto stats = experiments::evaluate_census(hist, config.tolerance);
  print_census_summary(hist, stats);
  maybe_write(o, experiments::census_report_json(hist, stats),
              experiments::census_report_csv(hist, stats));
  return stats.pass ? kExitPass : kExitStatFail;
}

int run_totally_mixed_cmd(const CommonOpts& o) {
  const auto config = make_config(o);
  const auto report = experiments::run_totally_mixed(config);
  std::cout << "sampler: " << config.sampler.describe() << "  seed: " << config.seed
            << "  trials: " << report.trials << "\n";
  std::cout << "totally-mixed frequency: " << rat_to_string(report.frequency) << " ("
            << rat_to_double(report.frequency) << "), expected " << report.expected << "\n";
  std::printf("z %+.3f, ci [%.6f, %.6f], degenerate %llu\n", report.z, report.ci_low,
              report.ci_high, static_cast<unsigned long long>(report.degenerate));
  if (!report.detail.empty()) std::cout << report.detail << "\n";
  std::cout << "verdict: " << (report.pass ? "PASS" : "FAIL") << "\n";
  maybe_write(o,
              experiments::frequency_report_json(report, "totally-mixed",
                                                 config.sampler.describe(), config.seed),
              experiments::frequency_report_csv(report));
  return report.pass ? kExitPass : kExitStatFail;
}

int run_conditional_cmd(const CommonOpts& o) {
  const auto config = make_config(o);
  if (!config.conditioning_set) throw ParseError("conditional requires --set");
  const auto report = experiments::run_conditional(config);
  std::cout << "sampler: " << config.sampler.describe() << "  seed: " << config.seed
            << "  trials: " << report.trials << "  set: "
            << report.conditioning_set.to_string() << "\n";
  std::cout << "conditional frequency: " << rat_to_string(report.conditional_frequency) << " ("
            << rat_to_double(report.conditional_frequency) << "), expected "
            << report.expected_conditional << "\n";
  std::cout << "conditioning rate: " << rat_to_string(report.conditioning_rate) << " ("
            << rat_to_double(report.conditioning_rate) << "), expected " << report.expected_rate
            << "\n";
  std::printf("z(conditional) %+.3f, z(rate) %+.3f, conditioned trials %llu\n",
              report.z_conditional, report.z_rate,
              static_cast<unsigned long long>(report.conditioned));
  std::cout << "verdict: " << (report.pass ? "PASS" : "FAIL") << "\n";
  maybe_write(o,
              experiments::conditional_report_json(report, config.sampler.describe(),
                                                   config.seed),
              experiments::conditional_report_csv(report));
  return report.pass ? kExitPass : kExitStatFail;
}

int run_tournament_cmd(const CommonOpts& o) {
  const auto census = experiments::tournament_census_exact(o.n, o.workers);
  std::cout << "tournament games: " << census.histogram.trials << " (n=" << o.n << ")\n";
  std::cout << "expected per odd support: " << census.expected_per_odd_support << "\n";
  std::cout << "non-unique games: " << census.histogram.degenerate << "\n";

  std::map<int, std::uint64_t> by_cardinality;
  for (const auto& [mask, count] : census.histogram.counts) {
    by_cardinality[ActionSet::from_mask(mask).size()] += count;
  }
  for (const auto& [card, count] : by_cardinality) {
    std::cout << "support size " << card << ": " << count << " games\n";
  }
  for (const auto& f : census.stats.failures) std::cout << "violation: " << f << "\n";
  std::cout << "verdict: " << (census.exact_match ? "PASS (exact)" : "FAIL") << "\n";
  maybe_write(o, experiments::census_report_json(census.histogram, census.stats),
              experiments::census_report_csv(census.histogram, census.stats));
  return census.exact_match ? kExitPass : kExitStatFail;
}

int run_two_by_two_cmd(const CommonOpts& o) {
  experiments::TolerancePolicy tol;
  tol.z_threshold = o.z_threshold;
  const auto report = experiments::two_by_two_census(o.trials, o.seed, o.workers, tol);
  std::cout << "2x2 gaussian zero-sum games, trials: " << report.trials
            << "  seed: " << o.seed << "\n";
  std::cout << "full-support frequency: " << rat_to_string(report.frequency) << " ("
            << rat_to_double(report.frequency) << "), expected 1/3\n";
  std::printf("z %+.3f, ci [%.6f, %.6f]\n", report.z, report.ci_low, report.ci_high);
  std::cout << "verdict: " << (report.pass ? "PASS" : "FAIL") << "\n";
  maybe_write(o,
              experiments::frequency_report_json(report, "two-by-two", "gaussian-2x2", o.seed),
              experiments::frequency_report_csv(report));
  return report.pass ? kExitPass : kExitStatFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic experiments on symmetric zero-sum games"};
  app.set_version_flag("--version", std::string("symzero ") + kVersion);
  app.require_subcommand(1);

  // solve
  std::string game_path;
  std::string report_format = "json";
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve a game file exactly");
  solve_cmd->add_option("game-file", game_path, "Path to a game file")->required();
  solve_cmd->add_option("--report", report_format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));

  CommonOpts census_opts, tm_opts, cond_opts, tour_opts, two_opts;

  CLI::App* census_cmd =
      app.add_subcommand("census", "Monte Carlo census of optimal-strategy supports");
  auto census_bind = add_common_options(census_cmd, census_opts, true);

  CLI::App* tm_cmd =
      app.add_subcommand("totally-mixed", "Frequency of totally mixed unique optima");
  auto tm_bind = add_common_options(tm_cmd, tm_opts, true);

  CLI::App* cond_cmd = app.add_subcommand(
      "conditional", "Conditional support-extension frequency given a totally mixed subgame");
  auto cond_bind = add_common_options(cond_cmd, cond_opts, true);
  cond_bind.set = cond_cmd->add_option(
      "--set", cond_opts.set, "Conditioning action set: {1,2,3}, 1,2,3 or a decimal bitmask");

  CLI::App* tour_cmd =
      app.add_subcommand("tournament-exact", "Exhaustive census over all tournament games");
  tour_opts.format = "json";
  auto tour_bind = add_common_options(tour_cmd, tour_opts, false);
  tour_bind.n = tour_cmd->add_option("--n", tour_opts.n, "Number of actions (<= 7)");

  CLI::App* two_cmd = app.add_subcommand(
      "two-by-two", "Full-support frequency for random non-symmetric 2x2 zero-sum games");
  auto two_bind = add_common_options(two_cmd, two_opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*solve_cmd) return run_solve(game_path, report_format);
    if (*census_cmd) {
      apply_config_file(census_opts, census_bind);
      return run_census_cmd(census_opts);
    }
    if (*tm_cmd) {
      apply_config_file(tm_opts, tm_bind);
      return run_totally_mixed_cmd(tm_opts);
    }
    if (*cond_cmd) {
      apply_config_file(cond_opts, cond_bind);
      return run_conditional_cmd(cond_opts);
    }
    if (*tour_cmd) {
      apply_config_file(tour_opts, tour_bind);
      return run_tournament_cmd(tour_opts);
    }
    if (*two_cmd) {
      apply_config_file(two_opts, two_bind);
      return run_two_by_two_cmd(two_opts);
    }
  } catch (const ConditioningEmpty& e) {
    // An honest empirical outcome, not a usage error: the conditioning event
    // never occurred (e.g. even |S| under a regular sampler).
    std::cerr << "conditioning empty: " << e.what() << "\n";
    return kExitStatFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
