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

// Acceptance suite: reproduces the headline support-distribution results at
// desk scale with pinned seeds and tolerances, plus the exhaustive and
// randomized property suites. Prints one [PASS]/[FAIL] line per criterion
// and exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "symzero/experiments.hpp"
#include "symzero/oracle.hpp"
#include "symzero/sampling.hpp"
#include "symzero/skew_linalg.hpp"
#include "symzero/solver.hpp"

using namespace symzero;
using namespace symzero::experiments;

namespace {

int failures = 0;
std::vector<std::string> problems;

struct Criterion {
  std::string name;
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

void run_criterion(const std::string& name, const std::function<void(Criterion&)>& body) {
  Criterion c;
  c.name = name;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.notes.push_back(std::string("exception: ") + e.what());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("[%s] %s (%.1fs)\n", c.ok ? "PASS" : "FAIL", name.c_str(), seconds);
  for (const auto& note : c.notes) std::printf("       %s\n", note.c_str());
  if (!c.ok) {
    ++failures;
    problems.push_back(name);
  }
  std::fflush(stdout);
}

ExperimentConfig odd_int_config(int n, std::uint64_t trials, std::uint64_t seed) {
  ExperimentConfig c;
  c.sampler = sampling::odd_int_spec(n, 4);
  c.trials = trials;
  c.seed = seed;
  return c;
}

double freq_of(const SupportHistogram& hist, std::uint64_t mask) {
  auto it = hist.counts.find(mask);
  const std::uint64_t count = it == hist.counts.end() ? 0 : it->second;
  return static_cast<double>(count) / static_cast<double>(hist.trials);
}

// Checks a census against the 2^-(n-1) law with a per-bin absolute band.
void check_census_band(Criterion& c, const SupportHistogram& hist, double band,
                       std::uint64_t max_degenerate) {
  const int n = hist.n;
  const double expected = std::ldexp(1.0, -(n - 1));
  int odd_bins = 0;
  for (std::uint64_t mask = 1; mask <= ActionSet::full(n).mask(); ++mask) {
    const ActionSet s = ActionSet::from_mask(mask);
    const double freq = freq_of(hist, mask);
    if (s.size() % 2 == 1) {
      ++odd_bins;
      c.require(std::fabs(freq - expected) <= band,
                "support " + s.to_string() + " frequency " + std::to_string(freq) +
                    " outside " + std::to_string(expected) + " +/- " + std::to_string(band));
    } else {
      c.require(freq == 0.0, "even support " + s.to_string() + " observed");
    }
  }
  c.require(odd_bins == (1 << (n - 1)), "odd bin count mismatch");
  c.require(hist.degenerate <= max_degenerate,
            "degenerate draws " + std::to_string(hist.degenerate) + " above limit " +
                std::to_string(max_degenerate));
}

SkewGame all_zero(int n) {
  return SkewGame::from_upper(n, RatVec(static_cast<std::size_t>(n) * (n - 1) / 2, BigRat(0)));
}

std::vector<SkewGame> mixed_corpus(int count, std::uint64_t seed) {
  std::vector<SkewGame> games;
  games.reserve(count);
  sampling::RandomStream stream(seed);
  while (static_cast<int>(games.size()) < count) {
    const int n = 1 + static_cast<int>(stream.next_below(5));
    switch (stream.next_below(4)) {
      case 0:
        games.push_back(sampling::odd_int_game(n, 4, stream));
        break;
      case 1:
        games.push_back(sampling::gaussian_game(n, stream));
        break;
      case 2:
        games.push_back(sampling::uniform_game(n, BigRat(1), stream));
        break;
      default:
        games.push_back(sampling::tournament_game(n, stream));
        break;
    }
  }
  return games;
}

// Determinant by plain elimination, independent of the Pfaffian code path.
BigRat det_by_elimination(std::vector<RatVec> a) {
  const int n = static_cast<int>(a.size());
  BigRat det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (sgn(a[r][col]) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return BigRat(0);
    if (pivot != col) {
      std::swap(a[col], a[pivot]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (sgn(a[r][col]) == 0) continue;
      const BigRat factor = a[r][col] / a[col][col];
      for (int k = col; k < n; ++k) a[r][k] -= factor * a[col][k];
    }
  }
  return det;
}

std::vector<SkewGame> degenerate_fixtures() {
  std::vector<SkewGame> games;
  for (int n = 2; n <= 5; ++n) games.push_back(all_zero(n));
  games.push_back(SkewGame::from_upper(
      4, {BigRat(1), BigRat(-1), BigRat(-1), BigRat(1), BigRat(1), BigRat(0)}));
  games.push_back(SkewGame::from_upper(
      4, {BigRat(1), BigRat(-1), BigRat(0), BigRat(1), BigRat(0), BigRat(0)}));
  games.push_back(SkewGame::from_upper(
      4, {BigRat(1), BigRat(0), BigRat(-1), BigRat(1), BigRat(0), BigRat(1)}));
  games.push_back(SkewGame::from_upper(5, {BigRat(1), BigRat(0), BigRat(-1), BigRat(1), BigRat(1),
                                           BigRat(0), BigRat(1), BigRat(1), BigRat(1), BigRat(1)}));
  return games;
}

void criterion_1(Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  const SupportHistogram h3 = run_census(odd_int_config(3, 100000, 1));
  const double seconds_n3 =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  check_census_band(c, h3, 0.006, 0);
  c.require(seconds_n3 < 60.0, "n=3 census took " + std::to_string(seconds_n3) + "s (>= 60s)");
  c.notes.push_back("n=3: max deviation band 0.006 held; runtime " +
                    std::to_string(seconds_n3) + "s");

  const SupportHistogram h5 = run_census(odd_int_config(5, 100000, 1));
  check_census_band(c, h5, 0.0031, 0);
  c.notes.push_back("n=5: 16 odd bins inside 0.0625 +/- 0.0031");
}

void criterion_2(Criterion& c) {
  const FrequencyReport even = run_totally_mixed(odd_int_config(4, 100000, 1));
  c.require(even.hits == 0, "even n=4 totally-mixed frequency not exactly 0");

  const FrequencyReport odd = run_totally_mixed(odd_int_config(5, 100000, 1));
  const double freq = rat_to_double(odd.frequency);
  c.require(std::fabs(freq - 0.0625) <= 0.0031,
            "n=5 totally-mixed frequency " + std::to_string(freq) + " outside 0.0625 +/- 0.0031");
  c.notes.push_back("n=4 frequency exactly 0; n=5 frequency " + rat_to_string(odd.frequency));
}

void criterion_3(Criterion& c) {
  ExperimentConfig config = odd_int_config(5, 100000, 1);
  config.conditioning_set = ActionSet::of({1, 2, 3});
  const ConditionalReport r = run_conditional(config);
  const double cond = rat_to_double(r.conditional_frequency);
  const double rate = rat_to_double(r.conditioning_rate);
  c.require(std::fabs(cond - 0.25) <= 0.011,
            "conditional frequency " + std::to_string(cond) + " outside 0.25 +/- 0.011");
  c.require(std::fabs(rate - 0.25) <= 0.006,
            "conditioning rate " + std::to_string(rate) + " outside 0.25 +/- 0.006");
  c.notes.push_back("conditional " + rat_to_string(r.conditional_frequency) + ", rate " +
                    rat_to_string(r.conditioning_rate) + " (" + std::to_string(r.conditioned) +
                    " conditioned trials)");
}

void criterion_4(Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  const TournamentCensus t5 = tournament_census_exact(5);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.require(seconds < 10.0, "n=5 exhaustive run took " + std::to_string(seconds) + "s (>= 10s)");
  c.require(t5.histogram.trials == 1024, "n=5 should enumerate 1024 games");
  c.require(t5.histogram.degenerate == 0, "non-unique tournament game observed");
  c.require(t5.exact_match, "n=5 counts are not exactly 64 per odd support");

  std::map<int, std::uint64_t> by_card;
  for (const auto& [mask, count] : t5.histogram.counts) {
    by_card[ActionSet::from_mask(mask).size()] += count;
  }
  c.require(by_card[1] == 320 && by_card[3] == 640 && by_card[5] == 64,
            "cardinality totals differ from 320/640/64");

  const TournamentCensus t3 = tournament_census_exact(3);
  c.require(t3.histogram.trials == 8 && t3.exact_match, "n=3 exhaustive census not exact");
  for (const auto& [mask, count] : t3.histogram.counts) {
    c.require(count == 2, "n=3 support count is not 2");
  }
  c.notes.push_back("n=5: 64 games per odd support, totals 320/640/64; runtime " +
                    std::to_string(seconds) + "s");
}

void criterion_5(Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  const FrequencyReport r = two_by_two_census(1000000, 1);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const double freq = rat_to_double(r.frequency);
  c.require(std::fabs(freq - 0.3333) <= 0.002,
            "full-support frequency " + std::to_string(freq) + " outside 0.3333 +/- 0.002");
  c.require(seconds < 120.0, "run took " + std::to_string(seconds) + "s (>= 120s)");
  c.notes.push_back("frequency " + rat_to_string(r.frequency) + " = " + std::to_string(freq) +
                    "; runtime " + std::to_string(seconds) + "s");
}

void criterion_6(Criterion& c) {
  ExperimentConfig config;
  config.sampler = sampling::gaussian_spec(3);
  config.trials = 100000;
  config.seed = 1;
  const SupportHistogram h3 = run_census(config);
  // Degenerate rate gate is 1e-4; bins must still obey the law.
  check_census_band(c, h3, 0.006, static_cast<std::uint64_t>(1e-4 * 100000));
  c.notes.push_back("gaussian n=3: degenerate draws " + std::to_string(h3.degenerate) +
                    " out of 100000");

  config.sampler = sampling::gaussian_spec(5);
  const SupportHistogram h5 = run_census(config);
  check_census_band(c, h5, 0.0031, static_cast<std::uint64_t>(1e-4 * 100000));
  c.notes.push_back("gaussian n=5: degenerate draws " + std::to_string(h5.degenerate) +
                    " out of 100000");
}

void criterion_7(Criterion& c) {
  sampling::RandomStream stream(20260810);

  // The flip transform identity and the group laws, exact, 1000 random
  // instances each.
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(stream.next_below(5));
    const SkewGame g = sampling::odd_int_game(n, 4, stream);
    const ActionSet s = ActionSet::from_mask(stream.next_u64() & ActionSet::full(n).mask());
    const ActionSet t = ActionSet::from_mask(stream.next_u64() & ActionSet::full(n).mask());
    RatVec v;
    for (int i = 0; i < n; ++i) v.emplace_back(static_cast<long>(stream.next_below(19)) - 9);

    c.require(mat_vec(flip(g, s), flip_vec(v, s, n)) == flip_vec(mat_vec(g, v), s, n),
              "flip transform identity violated");
    c.require(flip(flip(g, s), t) == flip(g, s.sym_diff(t)), "group law violated");
    c.require(flip(g, s) == flip(g, s.complement(n)), "complement law violated");
    c.require(flip(flip(g, s), s) == g, "self-inverse violated");
    if (!c.ok) return;
  }
  c.notes.push_back("flip transform identity and group laws: 1000 exact instances");

  // Odd-support law and the equalizer equality over a 10,000-game corpus.
  int unique_games = 0;
  for (const SkewGame& g : mixed_corpus(10000, 424242)) {
    const SolveReport r = analyze(g);
    if (r.unique) {
      ++unique_games;
      c.require(support(r.strategy).size() % 2 == 1, "unique optimum with even support");
      c.require(r.quasi_strict, "unique optimum failed quasi-strictness");
    }
    c.require(equalized_actions(g) == r.maximal_support, "equalizer equality violated");
    if (!c.ok) return;
  }
  c.require(equalized_actions(all_zero(4)) == maximal_support(all_zero(4)),
            "equalizer equality violated on the all-zero game");
  c.notes.push_back("odd-support law + equalizer equality: 10000-game corpus, " +
                    std::to_string(unique_games) + " unique-optimum games, zero exceptions");

  // Oracle equivalence on 500 random games, n <= 5.
  sampling::RandomStream ostream(5555);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(ostream.next_below(5));
    const SkewGame g = trial % 2 == 0 ? sampling::odd_int_game(n, 3, ostream)
                                      : sampling::gaussian_game(n, ostream);
    const auto census = oracle::brute_supports(g);
    c.require(census.unique == is_unique(g), "oracle/solver uniqueness mismatch");
    ActionSet oracle_max;
    for (const auto& s : census.supports) oracle_max = oracle_max.unite(s);
    c.require(oracle_max == maximal_support(g), "oracle/solver maximal support mismatch");
    for (std::uint64_t mask = 1; mask <= ActionSet::full(n).mask(); ++mask) {
      const ActionSet s = ActionSet::from_mask(mask);
      c.require(census.supports.count(s) ==
                    static_cast<std::size_t>(has_optimal_with_support(g, s)),
                "oracle/solver achievable-support mismatch");
    }
    if (!c.ok) return;
  }
  c.notes.push_back("oracle equivalence: 500 games, identical verdicts and support sets");

  // Pfaffian suite: 1000 random even matrices <= 8x8 against the matching
  // oracle and the determinant; kernel membership; Kaplansky agreement.
  sampling::RandomStream pstream(8888);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 * (1 + static_cast<int>(pstream.next_below(4)));
    const SkewGame g = sampling::odd_int_game(n, 4, pstream);
    const auto rows = g.rows();
    const BigRat pf = pfaffian(rows);
    c.require(pf == oracle::pfaffian_by_matchings(rows), "pfaffian disagrees with matching sum");
    c.require(pf * pf == det_by_elimination(rows), "Pf^2 != det");
    if (!c.ok) return;
  }
  sampling::RandomStream kstream(9999);
  int kaplansky_hits = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + 2 * static_cast<int>(kstream.next_below(3));
    const SkewGame g = sampling::odd_int_game(n, 4, kstream);
    const RatVec w = kernel_vector(g);
    c.require(support(mat_vec(g, w)).empty() && neg_support(mat_vec(g, w)).empty(),
              "kernel vector not in the kernel");
    const SolveReport r = analyze(g);
    const auto kap = kaplansky_totally_mixed(g);
    const bool solver_tm = r.unique && support(r.strategy) == ActionSet::full(n);
    c.require(kap.has_value() == solver_tm, "Kaplansky verdict disagrees with the solver");
    if (kap) {
      ++kaplansky_hits;
      c.require(kap->probs() == r.strategy.probs(), "Kaplansky strategy differs from solver");
    }
    if (!c.ok) return;
  }
  c.notes.push_back("pfaffian suite: 1000 matrices; Kaplansky agreement on 1000 games (" +
                    std::to_string(kaplansky_hits) + " totally mixed)");

  // Singular-submatrix witness on every constructed multi-optimum fixture.
  for (const SkewGame& g : degenerate_fixtures()) {
    const auto witness = oracle::singular_submatrix_witness(g);
    c.require(witness.has_value(), "multi-optimum fixture yielded no witness");
    if (witness) {
      c.require(witness->size() % 2 == 0, "witness has odd cardinality");
      c.require(pfaffian(restrict(g, *witness).rows()) == 0, "witness submatrix not singular");
    }
  }
  c.notes.push_back("singular-submatrix witness found for every degenerate fixture");
}

}  // namespace

int main() {
  std::printf("symzero acceptance suite\n");
  run_criterion("criterion 1: odd-int census law at n=3 and n=5", criterion_1);
  run_criterion("criterion 2: totally mixed frequency (n=4 exact zero, n=5 band)", criterion_2);
  run_criterion("criterion 3: conditional extension at n=5, S={1,2,3}", criterion_3);
  run_criterion("criterion 4: exact tournament counts at n=5 and n=3", criterion_4);
  run_criterion("criterion 5: 2x2 full-support frequency one third", criterion_5);
  run_criterion("criterion 6: gaussian census cross-check at n=3 and n=5", criterion_6);
  run_criterion("criterion 7: property suites (exact)", criterion_7);

  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed:\n", failures);
  for (const auto& name : problems) std::printf("  - %s\n", name.c_str());
  return 1;
}
