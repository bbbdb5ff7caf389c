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

#include "symzero/experiments.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "symzero/errors.hpp"
#include "symzero/version.hpp"

namespace symzero::experiments {

namespace {

using ordered_json = nlohmann::ordered_json;

int effective_workers(int requested) {
  if (requested > 0) return requested;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Runs body(trial) for every trial in [0, trials) across a worker pool.
// `make_local` produces one accumulator per worker; `merge` folds them in a
// worker-index order that is fixed regardless of scheduling (the counts are
// commutative sums anyway).
template <typename Local, typename Body>
std::vector<Local> run_trials(std::uint64_t trials, int workers, const Body& body) {
  int w = effective_workers(workers);
  if (trials > 0 && static_cast<std::uint64_t>(w) > trials) w = static_cast<int>(trials);
  if (w < 1) w = 1;
  std::vector<Local> locals(w);
  std::atomic<std::uint64_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  constexpr std::uint64_t kBlock = 256;

  auto work = [&](int slot) {
    try {
      while (true) {
        const std::uint64_t begin = next.fetch_add(kBlock);
        if (begin >= trials) break;
        const std::uint64_t end = std::min(trials, begin + kBlock);
        for (std::uint64_t t = begin; t < end; ++t) body(t, locals[slot]);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };

  if (w == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(w);
    for (int i = 0; i < w; ++i) pool.emplace_back(work, i);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  return locals;
}

double binomial_z(std::uint64_t count, std::uint64_t trials, double p) {
  const double variance = static_cast<double>(trials) * p * (1.0 - p);
  if (variance <= 0.0) {
    const double expected_count = static_cast<double>(trials) * p;
    return static_cast<double>(count) == expected_count
               ? 0.0
               : std::numeric_limits<double>::quiet_NaN();
  }
  return (static_cast<double>(count) - static_cast<double>(trials) * p) / std::sqrt(variance);
}

// Wald interval at the policy z-threshold.
std::pair<double, double> wald_interval(double freq, std::uint64_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double half = z * std::sqrt(std::max(freq * (1.0 - freq), 0.0) / static_cast<double>(trials));
  return {freq - half, freq + half};
}

// Regularized incomplete gamma, series and continued-fraction branches.
double gamma_p_series(double a, double x) {
  double sum = 1.0 / a;
  double term = sum;
  for (int k = 1; k < 500; ++k) {
    term *= x / (a + k);
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * 1e-15) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_continued_fraction(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-15) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

ActionSet full_support_set(int n) { return ActionSet::full(n); }

struct CensusLocal {
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t degenerate = 0;
};

SupportHistogram merge_census(const ExperimentConfig& config, std::vector<CensusLocal> locals) {
  SupportHistogram hist;
  hist.n = config.sampler.n;
  hist.trials = config.trials;
  hist.seed = config.seed;
  hist.sampler = config.sampler.describe();
  for (const auto& local : locals) {
    hist.degenerate += local.degenerate;
    for (const auto& [mask, count] : local.counts) hist.counts[mask] += count;
  }
  return hist;
}

std::string json_double(double v) { return ordered_json(v).dump(); }

}  // namespace

double chi_square_tail(double statistic, int dof) {
  if (dof <= 0) return statistic <= 0.0 ? 1.0 : 0.0;
  if (statistic <= 0.0) return 1.0;
  const double a = 0.5 * dof;
  const double x = 0.5 * statistic;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_continued_fraction(a, x);
}

void ExperimentConfig::validate() const {
  sampler.validate();
  if (trials < 1) throw TooFewTrials("experiment needs at least one trial");
  if (workers < 0) throw Error("worker count cannot be negative");
  if (conditioning_set) {
    if (conditioning_set->empty()) throw EmptySubset("conditioning set cannot be empty");
    if (!conditioning_set->subset_of(ActionSet::full(sampler.n))) {
      throw OutOfRange("conditioning set exceeds the sampler's actions");
    }
  }
}

SupportHistogram run_census(const ExperimentConfig& config) {
  config.validate();
  auto locals = run_trials<CensusLocal>(
      config.trials, config.workers, [&](std::uint64_t t, CensusLocal& local) {
        sampling::RandomStream stream = sampling::substream(config.seed, t);
        const SkewGame g = sampling::draw_game(config.sampler, stream);
        const SolveReport r = analyze(g);
        if (r.unique) {
          ++local.counts[support(r.strategy).mask()];
        } else {
          ++local.degenerate;
        }
      });
  return merge_census(config, std::move(locals));
}

StatReport evaluate_census(const SupportHistogram& hist, const TolerancePolicy& tol) {
  if (hist.trials < tol.min_trials) {
    throw TooFewTrials("census has " + std::to_string(hist.trials) + " trials; policy minimum is " +
                       std::to_string(tol.min_trials));
  }
  const int n = hist.n;
  if (n < 1 || n > ActionSet::kMaxActions) throw OutOfRange("histogram has an invalid n");
  // The report enumerates every nonempty subset (zero-count rows included),
  // which only makes sense at desk scale.
  if (n > 20) throw TooLarge("per-subset census reports are capped at n = 20");

  StatReport report;
  report.n = n;
  report.trials = hist.trials;
  report.degenerate = hist.degenerate;
  report.degenerate_rate = static_cast<double>(hist.degenerate) / static_cast<double>(hist.trials);

  std::uint64_t binned = 0;
  const std::uint64_t full_mask = full_support_set(n).mask();
  for (const auto& [mask, count] : hist.counts) {
    if (mask == 0 || (mask & ~full_mask) != 0) {
      throw OutOfRange("histogram key is not a nonempty subset of the universe");
    }
    binned += count;
  }
  if (binned + hist.degenerate != hist.trials) {
    throw Error("histogram violates counts + degenerate = trials");
  }

  const double p_odd = std::ldexp(1.0, -(n - 1));
  const double expected_count = static_cast<double>(hist.trials) * p_odd;
  double chi2 = 0.0;

  report.bins.reserve(full_mask);
  for (std::uint64_t mask = 1; mask <= full_mask; ++mask) {
    BinStat bin;
    bin.mask = mask;
    bin.cardinality = ActionSet::from_mask(mask).size();
    auto it = hist.counts.find(mask);
    bin.count = it == hist.counts.end() ? 0 : it->second;
    bin.frequency = static_cast<double>(bin.count) / static_cast<double>(hist.trials);
    const bool odd = bin.cardinality % 2 == 1;
    bin.expected = odd ? p_odd : 0.0;
    bin.z = binomial_z(bin.count, hist.trials, bin.expected);
    if (odd) {
      const double diff = static_cast<double>(bin.count) - expected_count;
      chi2 += diff * diff / expected_count;
      if (!std::isnan(bin.z)) report.max_abs_z = std::max(report.max_abs_z, std::fabs(bin.z));
    } else {
      report.even_support_count += bin.count;
    }
    report.bins.push_back(bin);
  }

  report.chi_square = chi2;
  report.dof = (1 << (n - 1)) - 1;
  report.p_value = chi_square_tail(chi2, report.dof);

  if (report.even_support_count > 0) {
    report.failures.push_back("even-support draws observed: " +
                              std::to_string(report.even_support_count));
  }
  if (report.degenerate_rate > tol.max_degenerate_rate) {
    report.failures.push_back("degenerate rate " + json_double(report.degenerate_rate) +
                              " exceeds " + json_double(tol.max_degenerate_rate));
  }
  for (const auto& bin : report.bins) {
    if (bin.cardinality % 2 == 0) continue;
    if (std::isnan(bin.z) || std::fabs(bin.z) > tol.z_threshold) {
      report.failures.push_back("support " + ActionSet::from_mask(bin.mask).to_string() +
                                " has |z| = " + json_double(std::fabs(bin.z)) + " > " +
                                json_double(tol.z_threshold));
    }
  }
  if (report.dof >= 1 && report.p_value <= tol.min_chi_square_p) {
    report.failures.push_back("chi-square p-value " + json_double(report.p_value) +
                              " below gate " + json_double(tol.min_chi_square_p));
  }
  report.pass = report.failures.empty();
  return report;
}

FrequencyReport run_totally_mixed(const ExperimentConfig& config) {
  config.validate();
  const ActionSet full = full_support_set(config.sampler.n);
  struct Local {
    std::uint64_t hits = 0;
    std::uint64_t degenerate = 0;
  };
  auto locals =
      run_trials<Local>(config.trials, config.workers, [&](std::uint64_t t, Local& local) {
        sampling::RandomStream stream = sampling::substream(config.seed, t);
        const SkewGame g = sampling::draw_game(config.sampler, stream);
        const SolveReport r = analyze(g);
        if (!r.unique) {
          ++local.degenerate;
        } else if (support(r.strategy) == full) {
          ++local.hits;
        }
      });

  FrequencyReport report;
  report.trials = config.trials;
  for (const auto& local : locals) {
    report.hits += local.hits;
    report.degenerate += local.degenerate;
  }
  report.frequency = BigRat(static_cast<unsigned long>(report.hits),
                            static_cast<unsigned long>(report.trials));
  report.frequency.canonicalize();

  const int n = config.sampler.n;
  report.expected = n % 2 == 1 ? std::ldexp(1.0, -(n - 1)) : 0.0;
  report.z = binomial_z(report.hits, report.trials, report.expected);
  const double freq = rat_to_double(report.frequency);
  std::tie(report.ci_low, report.ci_high) =
      wald_interval(freq, report.trials, config.tolerance.z_threshold);
  if (report.expected == 0.0) {
    report.pass = report.hits == 0;
    report.detail = report.pass ? "frequency exactly 0 as required for even n"
                                : "totally mixed optimum observed for even n";
  } else if (report.expected == 1.0) {
    report.pass = report.hits == report.trials;
    report.detail = "n=1: the only strategy is totally mixed";
  } else {
    report.pass = !std::isnan(report.z) && std::fabs(report.z) <= config.tolerance.z_threshold;
  }
  const double degenerate_rate =
      static_cast<double>(report.degenerate) / static_cast<double>(report.trials);
  if (degenerate_rate > config.tolerance.max_degenerate_rate) {
    report.pass = false;
    report.detail += (report.detail.empty() ? "" : "; ");
    report.detail += "degenerate rate above gate";
  }
  return report;
}

ConditionalReport run_conditional(const ExperimentConfig& config) {
  config.validate();
  if (!config.conditioning_set) throw EmptySubset("conditional run needs a conditioning set");
  const ActionSet s = *config.conditioning_set;
  const int n = config.sampler.n;

  struct Local {
    std::uint64_t conditioned = 0;
    std::uint64_t hits = 0;
  };
  auto locals =
      run_trials<Local>(config.trials, config.workers, [&](std::uint64_t t, Local& local) {
        sampling::RandomStream stream = sampling::substream(config.seed, t);
        const SkewGame g = sampling::draw_game(config.sampler, stream);
        if (!subgame_totally_mixed(g, s)) return;
        ++local.conditioned;
        if (has_optimal_with_support(g, s)) ++local.hits;
      });

  ConditionalReport report;
  report.conditioning_set = s;
  report.trials = config.trials;
  for (const auto& local : locals) {
    report.conditioned += local.conditioned;
    report.hits += local.hits;
  }
  if (report.conditioned == 0) {
    throw ConditioningEmpty("no trial had a totally mixed optimal subgame on " + s.to_string());
  }
  report.conditional_frequency = BigRat(static_cast<unsigned long>(report.hits),
                                        static_cast<unsigned long>(report.conditioned));
  report.conditional_frequency.canonicalize();
  report.conditioning_rate = BigRat(static_cast<unsigned long>(report.conditioned),
                                    static_cast<unsigned long>(report.trials));
  report.conditioning_rate.canonicalize();

  report.expected_conditional = std::ldexp(1.0, -(n - s.size()));
  report.expected_rate = s.size() % 2 == 1 ? std::ldexp(1.0, -(s.size() - 1)) : 0.0;
  report.z_conditional = binomial_z(report.hits, report.conditioned, report.expected_conditional);
  report.z_rate = binomial_z(report.conditioned, report.trials, report.expected_rate);
  std::tie(report.ci_low, report.ci_high) = wald_interval(
      rat_to_double(report.conditional_frequency), report.conditioned,
      config.tolerance.z_threshold);

  bool pass = true;
  if (report.expected_conditional >= 1.0) {
    pass = report.hits == report.conditioned;
  } else {
    pass = !std::isnan(report.z_conditional) &&
           std::fabs(report.z_conditional) <= config.tolerance.z_threshold;
  }
  if (report.expected_rate > 0.0 && report.expected_rate < 1.0) {
    pass = pass && !std::isnan(report.z_rate) &&
           std::fabs(report.z_rate) <= config.tolerance.z_threshold;
  }
  report.pass = pass;
  return report;
}

TournamentCensus tournament_census_exact(int n, int workers) {
  const sampling::TournamentEnumerator enumerator(n);
  const std::uint64_t total = enumerator.count();

  auto locals = run_trials<CensusLocal>(total, workers, [&](std::uint64_t t, CensusLocal& local) {
    const SkewGame g = enumerator.at(t);
    const SolveReport r = analyze(g);
    if (r.unique) {
      ++local.counts[support(r.strategy).mask()];
    } else {
      ++local.degenerate;
    }
  });

  TournamentCensus out;
  out.histogram.n = n;
  out.histogram.trials = total;
  out.histogram.seed = 0;
  out.histogram.sampler = "tournament-exhaustive(n=" + std::to_string(n) + ")";
  for (const auto& local : locals) {
    out.histogram.degenerate += local.degenerate;
    for (const auto& [mask, count] : local.counts) out.histogram.counts[mask] += count;
  }

  // The law gives exact counts for the uniform tournament distribution:
  // total * 2^-(n-1) per odd support, zero elsewhere, zero degenerates.
  out.expected_per_odd_support = n == 1 ? total : total >> (n - 1);

  StatReport& stats = out.stats;
  stats.n = n;
  stats.trials = total;
  stats.degenerate = out.histogram.degenerate;
  stats.degenerate_rate = static_cast<double>(stats.degenerate) / static_cast<double>(total);
  const std::uint64_t full_mask = ActionSet::full(n).mask();
  const double p_odd = std::ldexp(1.0, -(n - 1));
  bool exact = out.histogram.degenerate == 0;
  double chi2 = 0.0;
  for (std::uint64_t mask = 1; mask <= full_mask; ++mask) {
    BinStat bin;
    bin.mask = mask;
    bin.cardinality = ActionSet::from_mask(mask).size();
    auto it = out.histogram.counts.find(mask);
    bin.count = it == out.histogram.counts.end() ? 0 : it->second;
    bin.frequency = static_cast<double>(bin.count) / static_cast<double>(total);
    const bool odd = bin.cardinality % 2 == 1;
    bin.expected = odd ? p_odd : 0.0;
    bin.z = binomial_z(bin.count, total, bin.expected);
    if (odd) {
      if (bin.count != out.expected_per_odd_support) {
        exact = false;
        stats.failures.push_back("support " + ActionSet::from_mask(mask).to_string() + " count " +
                                 std::to_string(bin.count) + " != " +
                                 std::to_string(out.expected_per_odd_support));
      }
      const double diff = static_cast<double>(bin.count) - static_cast<double>(total) * p_odd;
      chi2 += diff * diff / (static_cast<double>(total) * p_odd);
      if (!std::isnan(bin.z)) stats.max_abs_z = std::max(stats.max_abs_z, std::fabs(bin.z));
    } else {
      stats.even_support_count += bin.count;
      if (bin.count != 0) {
        exact = false;
        stats.failures.push_back("even support " + ActionSet::from_mask(mask).to_string() +
                                 " has count " + std::to_string(bin.count));
      }
    }
    stats.bins.push_back(bin);
  }
  if (out.histogram.degenerate != 0) {
    stats.failures.push_back("non-unique tournament games observed: " +
                             std::to_string(out.histogram.degenerate));
  }
  stats.chi_square = chi2;
  stats.dof = (1 << (n - 1)) - 1;
  stats.p_value = chi_square_tail(chi2, stats.dof);
  out.exact_match = exact;
  stats.pass = exact;
  return out;
}

FrequencyReport two_by_two_census(std::uint64_t trials, std::uint64_t seed, int workers,
                                  const TolerancePolicy& tol) {
  if (trials < 10000) {
    throw TooFewTrials("the 2x2 experiment needs at least 10^4 trials");
  }

  struct Local {
    std::uint64_t hits = 0;
  };
  auto locals = run_trials<Local>(trials, workers, [&](std::uint64_t t, Local& local) {
    sampling::RandomStream stream = sampling::substream(seed, t);
    // Four iid standard-normal payoffs, sign drawn separately per entry.
    RatVec entries;
    entries.reserve(4);
    for (int k = 0; k < 4; ++k) {
      BigRat magnitude = rat_from_double(stream.next_gaussian_magnitude());
      if (!stream.next_bit()) magnitude = -magnitude;
      entries.push_back(std::move(magnitude));
    }
    BimatrixZeroSum game;
    game.payoffs = {{entries[0], entries[1]}, {entries[2], entries[3]}};
    if (row_full_support_optimal(game)) ++local.hits;
  });

  FrequencyReport report;
  report.trials = trials;
  for (const auto& local : locals) report.hits += local.hits;
  report.frequency =
      BigRat(static_cast<unsigned long>(report.hits), static_cast<unsigned long>(trials));
  report.frequency.canonicalize();
  report.expected = 1.0 / 3.0;
  report.z = binomial_z(report.hits, trials, report.expected);
  std::tie(report.ci_low, report.ci_high) =
      wald_interval(rat_to_double(report.frequency), trials, tol.z_threshold);
  report.pass = !std::isnan(report.z) && std::fabs(report.z) <= tol.z_threshold;
  return report;
}

ReportFormat parse_format(const std::string& text) {
  if (text == "csv") return ReportFormat::Csv;
  if (text == "json") return ReportFormat::Json;
  throw ParseError("unknown report format: " + text + " (expected csv or json)");
}

namespace {

ordered_json report_header(const std::string& kind, const std::string& sampler,
                           std::uint64_t seed, std::uint64_t trials) {
  ordered_json j;
  j["tool"] = "symzero";
  j["version"] = kVersion;
  j["rng"] = sampling::kGeneratorName;
  j["kind"] = kind;
  j["sampler"] = sampler;
  j["seed"] = seed;
  j["trials"] = trials;
  return j;
}

ordered_json json_or_null(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

}  // namespace

std::string census_report_json(const SupportHistogram& hist, const StatReport& stats) {
  ordered_json j = report_header("census", hist.sampler, hist.seed, hist.trials);
  j["n"] = stats.n;
  j["degenerate"] = stats.degenerate;
  j["degenerate_rate"] = stats.degenerate_rate;
  j["even_support_count"] = stats.even_support_count;
  j["chi_square"] = stats.chi_square;
  j["dof"] = stats.dof;
  j["p_value"] = stats.p_value;
  j["max_abs_z"] = stats.max_abs_z;
  j["pass"] = stats.pass;
  j["failures"] = stats.failures;
  ordered_json bins = ordered_json::array();
  for (const auto& bin : stats.bins) {
    ordered_json b;
    b["mask"] = bin.mask;
    b["set"] = ActionSet::from_mask(bin.mask).to_string();
    b["cardinality"] = bin.cardinality;
    b["count"] = bin.count;
    b["frequency"] = bin.frequency;
    b["expected"] = bin.expected;
    b["z"] = json_or_null(bin.z);
    bins.push_back(std::move(b));
  }
  j["supports"] = std::move(bins);
  return j.dump(2) + "\n";
}

std::string census_report_csv(const SupportHistogram& hist, const StatReport& stats) {
  std::string out = "mask,cardinality,count,frequency,expected,z\n";
  (void)hist;
  for (const auto& bin : stats.bins) {
    out += std::to_string(bin.mask);
    out += ",";
    out += std::to_string(bin.cardinality);
    out += ",";
    out += std::to_string(bin.count);
    out += ",";
    out += json_double(bin.frequency);
    out += ",";
    out += json_double(bin.expected);
    out += ",";
    out += std::isnan(bin.z) ? "" : json_double(bin.z);
    out += "\n";
  }
  return out;
}

std::string frequency_report_json(const FrequencyReport& report, const std::string& kind,
                                  const std::string& sampler, std::uint64_t seed) {
  ordered_json j = report_header(kind, sampler, seed, report.trials);
  j["hits"] = report.hits;
  j["degenerate"] = report.degenerate;
  j["frequency"] = rat_to_string(report.frequency);
  j["frequency_float"] = rat_to_double(report.frequency);
  j["expected"] = report.expected;
  j["z"] = json_or_null(report.z);
  j["ci"] = {report.ci_low, report.ci_high};
  j["pass"] = report.pass;
  if (!report.detail.empty()) j["detail"] = report.detail;
  return j.dump(2) + "\n";
}

std::string frequency_report_csv(const FrequencyReport& report) {
  std::string out = "hits,trials,degenerate,frequency,expected,z,ci_low,ci_high,pass\n";
  out += std::to_string(report.hits) + "," + std::to_string(report.trials) + "," +
         std::to_string(report.degenerate) + "," + rat_to_string(report.frequency) + "," +
         json_double(report.expected) + "," + (std::isnan(report.z) ? "" : json_double(report.z)) +
         "," + json_double(report.ci_low) + "," + json_double(report.ci_high) + "," +
         (report.pass ? "true" : "false") + "\n";
  return out;
}

std::string conditional_report_json(const ConditionalReport& report, const std::string& sampler,
                                    std::uint64_t seed) {
  ordered_json j = report_header("conditional", sampler, seed, report.trials);
  j["conditioning_set"] = report.conditioning_set.to_string();
  j["conditioning_mask"] = report.conditioning_set.mask();
  j["conditioned"] = report.conditioned;
  j["hits"] = report.hits;
  j["conditional_frequency"] = rat_to_string(report.conditional_frequency);
  j["conditional_frequency_float"] = rat_to_double(report.conditional_frequency);
  j["conditioning_rate"] = rat_to_string(report.conditioning_rate);
  j["conditioning_rate_float"] = rat_to_double(report.conditioning_rate);
  j["expected_conditional"] = report.expected_conditional;
  j["expected_rate"] = report.expected_rate;
  j["z_conditional"] = json_or_null(report.z_conditional);
  j["z_rate"] = json_or_null(report.z_rate);
  j["ci"] = {report.ci_low, report.ci_high};
  j["pass"] = report.pass;
  return j.dump(2) + "\n";
}

std::string conditional_report_csv(const ConditionalReport& report) {
  std::string out =
      "set,conditioned,hits,trials,conditional_frequency,conditioning_rate,expected_conditional,"
      "expected_rate,z_conditional,z_rate,pass\n";
  out += report.conditioning_set.to_string() + "," + std::to_string(report.conditioned) + "," +
         std::to_string(report.hits) + "," + std::to_string(report.trials) + "," +
         rat_to_string(report.conditional_frequency) + "," +
         rat_to_string(report.conditioning_rate) + "," +
         json_double(report.expected_conditional) + "," + json_double(report.expected_rate) + "," +
         (std::isnan(report.z_conditional) ? "" : json_double(report.z_conditional)) + "," +
         (std::isnan(report.z_rate) ? "" : json_double(report.z_rate)) + "," +
         (report.pass ? "true" : "false") + "\n";
  return out;
}

std::string solve_report_json(const SkewGame& game, const SolveReport& report) {
  ordered_json j;
  j["tool"] = "symzero";
  j["version"] = kVersion;
  j["kind"] = "solve";
  j["n"] = game.n();
  j["value"] = rat_to_string(report.value);
  j["unique"] = report.unique;
  j["quasi_strict"] = report.quasi_strict;
  j["maximal_support"] = report.maximal_support.to_string();
  j["maximal_support_mask"] = report.maximal_support.mask();
  j["support"] = support(report.strategy).to_string();
  ordered_json strategy = ordered_json::array();
  for (const auto& v : report.strategy.probs()) strategy.push_back(rat_to_string(v));
  j["strategy"] = std::move(strategy);
  return j.dump(2) + "\n";
}

std::string solve_report_csv(const SkewGame& game, const SolveReport& report) {
  std::string strategy;
  for (const auto& v : report.strategy.probs()) {
    if (!strategy.empty()) strategy += " ";
    strategy += rat_to_string(v);
  }
  std::string out = "n,value,unique,quasi_strict,maximal_support_mask,maximal_support,strategy\n";
  out += std::to_string(game.n()) + "," + rat_to_string(report.value) + "," +
         (report.unique ? "true" : "false") + "," + (report.quasi_strict ? "true" : "false") + "," +
         std::to_string(report.maximal_support.mask()) + "," +
         report.maximal_support.to_string() + "," + strategy + "\n";
  return out;
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open report file for writing: " + path);
  out << contents;
  if (!out) throw IoError("failed writing report file: " + path);
}

}  // namespace symzero::experiments
