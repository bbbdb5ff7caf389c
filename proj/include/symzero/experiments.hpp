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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symzero/sampling.hpp"
#include "symzero/solver.hpp"

namespace symzero::experiments {

struct TolerancePolicy {
  double z_threshold = 4.0;
  std::uint64_t min_trials = 1000;
  double max_degenerate_rate = 1e-4;
  double min_chi_square_p = 1e-3;
};

struct ExperimentConfig {
  sampling::SamplerSpec sampler;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  int workers = 0;  // 0 = hardware concurrency
  std::optional<ActionSet> conditioning_set;
  TolerancePolicy tolerance;

  void validate() const;
};

/// Empirical support distribution from a census run. Counts plus degenerate
/// always sum to trials; degenerate draws (non-unique optimum) are excluded
/// from the support bins.
struct SupportHistogram {
  int n = 0;
  std::map<std::uint64_t, std::uint64_t> counts;  // support mask -> count
  std::uint64_t trials = 0;
  std::uint64_t degenerate = 0;
  std::string sampler;  // echo, e.g. "odd-int(n=3,bound=4)"
  std::uint64_t seed = 0;
};

struct BinStat {
  std::uint64_t mask = 0;
  int cardinality = 0;
  std::uint64_t count = 0;
  double frequency = 0;
  double expected = 0;  // probability: 2^-(n-1) for odd |S|, 0 for even
  double z = 0;         // NaN when the binomial variance vanishes
};

struct StatReport {
  int n = 0;
  std::vector<BinStat> bins;  // every nonempty subset, ascending mask
  double chi_square = 0;
  int dof = 0;
  double p_value = 1;
  std::uint64_t even_support_count = 0;
  std::uint64_t trials = 0;
  std::uint64_t degenerate = 0;
  double degenerate_rate = 0;
  double max_abs_z = 0;
  bool pass = false;
  std::vector<std::string> failures;
};

/// Seeded Monte Carlo census: for each trial t, draws a game on
/// substream(seed, t) and bins the support of its unique optimal strategy.
/// The result is independent of worker count and schedule.
SupportHistogram run_census(const ExperimentConfig& config);

/// Verdict against the 2^-(n-1) law: per-bin binomial z-scores, chi-square
/// across the odd bins, an even-support tripwire and the degeneracy gate.
/// Throws TooFewTrials below the policy minimum.
StatReport evaluate_census(const SupportHistogram& hist, const TolerancePolicy& tol = {});

struct FrequencyReport {
  BigRat frequency;  // exact hits/trials
  std::uint64_t hits = 0;
  std::uint64_t trials = 0;
  std::uint64_t degenerate = 0;
  double expected = 0;
  double z = 0;  // NaN when undefined
  double ci_low = 0, ci_high = 0;
  bool pass = false;
  std::string detail;
};

/// Frequency of trials whose unique optimal strategy is totally mixed;
/// exactly 0 expected for even n, 2^-(n-1) for odd n.
FrequencyReport run_totally_mixed(const ExperimentConfig& config);

struct ConditionalReport {
  ActionSet conditioning_set;
  BigRat conditional_frequency;  // among conditioned trials
  BigRat conditioning_rate;
  std::uint64_t conditioned = 0;
  std::uint64_t hits = 0;
  std::uint64_t trials = 0;
  double expected_conditional = 0;
  double expected_rate = 0;
  double z_conditional = 0;
  double z_rate = 0;
  double ci_low = 0, ci_high = 0;
  bool pass = false;
};

/// Among trials whose subgame G_S is totally-mixed optimal, the fraction
/// where S extends to an optimal support of the full game (expected
/// 2^-(n-|S|)); also reports the conditioning rate (expected 2^-(|S|-1)).
/// Throws ConditioningEmpty when no trial satisfies the condition.
ConditionalReport run_conditional(const ExperimentConfig& config);

struct TournamentCensus {
  SupportHistogram histogram;
  StatReport stats;
  std::uint64_t expected_per_odd_support = 0;
  bool exact_match = false;  // every odd bin exact, no even bins, no degenerates
};

/// Exhaustive census over all 2^(n(n-1)/2) tournament games; the law gives
/// exact integer counts here, so the verdict is zero-tolerance.
TournamentCensus tournament_census_exact(int n, int workers = 0);

/// The non-symmetric 2x2 control experiment: iid standard-normal payoff
/// matrices solved as general zero-sum games; frequency of trials whose
/// row-player optimal set contains a full-support strategy (expected 1/3).
FrequencyReport two_by_two_census(std::uint64_t trials, std::uint64_t seed, int workers = 0,
                                  const TolerancePolicy& tol = {});

enum class ReportFormat { Csv, Json };
ReportFormat parse_format(const std::string& text);

/// Serializations. Identical runs produce byte-identical files; exact
/// rationals appear as "a/b" strings in JSON.
std::string census_report_json(const SupportHistogram& hist, const StatReport& stats);
std::string census_report_csv(const SupportHistogram& hist, const StatReport& stats);
std::string frequency_report_json(const FrequencyReport& report, const std::string& kind,
                                  const std::string& sampler, std::uint64_t seed);
std::string frequency_report_csv(const FrequencyReport& report);
std::string conditional_report_json(const ConditionalReport& report, const std::string& sampler,
                                    std::uint64_t seed);
std::string conditional_report_csv(const ConditionalReport& report);
std::string solve_report_json(const SkewGame& game, const SolveReport& report);
std::string solve_report_csv(const SkewGame& game, const SolveReport& report);

void write_text_file(const std::string& path, const std::string& contents);

/// Upper tail of the chi-square distribution with k degrees of freedom.
double chi_square_tail(double statistic, int dof);

}  // namespace symzero::experiments
