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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "symzero/errors.hpp"
#include "symzero/experiments.hpp"
#include "symzero/game_io.hpp"
#include "symzero/oracle.hpp"
#include "symzero/sampling.hpp"
#include "symzero/skew_linalg.hpp"
#include "symzero/solver.hpp"
#include "symzero/version.hpp"

namespace py = pybind11;
using namespace symzero;

namespace {

py::object fraction_type() {
  static py::object type = py::module_::import("fractions").attr("Fraction");
  return type;
}

py::object rat_to_py(const BigRat& q) { return fraction_type()(rat_to_string(q)); }

BigRat rat_from_py(py::handle obj) {
  if (py::isinstance<py::int_>(obj) || py::isinstance<py::str>(obj)) {
    return rat_from_string(py::str(obj).cast<std::string>());
  }
  if (py::isinstance<py::float_>(obj)) {
    return rat_from_double(obj.cast<double>());
  }
  if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator")) {
    const BigInt num(py::str(obj.attr("numerator")).cast<std::string>());
    const BigInt den(py::str(obj.attr("denominator")).cast<std::string>());
    BigRat q(num, den);
    q.canonicalize();
    return q;
  }
  throw ParseError("cannot interpret " + py::str(obj).cast<std::string>() + " as a rational");
}

RatVec vec_from_py(py::handle seq) {
  RatVec out;
  for (py::handle item : py::iter(seq)) out.push_back(rat_from_py(item));
  return out;
}

py::list vec_to_py(const RatVec& v) {
  py::list out;
  for (const auto& x : v) out.append(rat_to_py(x));
  return out;
}

std::vector<RatVec> matrix_from_py(py::handle rows) {
  std::vector<RatVec> out;
  for (py::handle row : py::iter(rows)) out.push_back(vec_from_py(row));
  return out;
}

ActionSet set_from_py(py::handle obj) {
  if (py::isinstance<py::int_>(obj)) {
    return ActionSet::from_mask(obj.cast<std::uint64_t>());
  }
  ActionSet s;
  for (py::handle item : py::iter(obj)) {
    const int a = item.cast<int>();
    if (a < 1 || a > ActionSet::kMaxActions) {
      throw OutOfRange("action " + std::to_string(a) + " outside 1..63");
    }
    s = s.with(a);
  }
  return s;
}

py::set set_to_py(ActionSet s) {
  py::set out;
  for (int a : s.actions()) out.add(py::int_(a));
  return out;
}

Strategy strategy_from_py(py::handle seq) { return Strategy(vec_from_py(seq)); }

py::dict frequency_report_to_py(const experiments::FrequencyReport& r) {
  py::dict d;
  d["frequency"] = rat_to_py(r.frequency);
  d["hits"] = r.hits;
  d["trials"] = r.trials;
  d["degenerate"] = r.degenerate;
  d["expected"] = r.expected;
  d["z"] = r.z;
  d["ci"] = py::make_tuple(r.ci_low, r.ci_high);
  d["passed"] = r.pass;
  d["detail"] = r.detail;
  return d;
}

experiments::ExperimentConfig config_from_py(const sampling::SamplerSpec& spec,
                                             std::uint64_t trials, std::uint64_t seed,
                                             int workers) {
  experiments::ExperimentConfig c;
  c.sampler = spec;
  c.trials = trials;
  c.seed = seed;
  c.workers = workers;
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact-arithmetic solver and experiment engine for symmetric zero-sum games";
  m.attr("__version__") = kVersion;
  m.attr("GENERATOR") = sampling::kGeneratorName;

  py::register_exception<Error>(m, "SymzeroError", PyExc_ValueError);

  // ---- core types -------------------------------------------------------
  py::class_<SkewGame>(m, "SkewGame")
      .def(py::init([](py::handle rows) { return make_game(matrix_from_py(rows)); }),
           py::arg("entries"), "Validates skew-symmetry (G = -G^T)")
      .def_static(
          "from_upper",
          [](int n, py::handle values) { return SkewGame::from_upper(n, vec_from_py(values)); },
          py::arg("n"), py::arg("values"),
          "Builds a game from the strict upper triangle, row-major")
      .def_property_readonly("n", &SkewGame::n)
      .def("at", [](const SkewGame& g, int i, int j) { return rat_to_py(g.at(i, j)); },
           py::arg("i"), py::arg("j"), "1-indexed entry access")
      .def("entries",
           [](const SkewGame& g) {
             py::list out;
             for (const auto& row : g.rows()) out.append(vec_to_py(row));
             return out;
           })
      .def("upper_triangle", [](const SkewGame& g) { return vec_to_py(g.upper_triangle()); })
      .def("__eq__", [](const SkewGame& a, const SkewGame& b) { return a == b; })
      .def("__repr__", [](const SkewGame& g) {
        return "SkewGame(n=" + std::to_string(g.n()) + ")";
      });

  py::class_<sampling::SamplerSpec>(m, "SamplerSpec")
      .def_property_readonly("n", [](const sampling::SamplerSpec& s) { return s.n; })
      .def("describe", &sampling::SamplerSpec::describe)
      .def("__repr__", [](const sampling::SamplerSpec& s) {
        return "SamplerSpec(" + s.describe() + ")";
      });

  py::class_<experiments::SupportHistogram>(m, "SupportHistogram")
      .def_property_readonly("n", [](const experiments::SupportHistogram& h) { return h.n; })
      .def_property_readonly("trials",
                             [](const experiments::SupportHistogram& h) { return h.trials; })
      .def_property_readonly("degenerate",
                             [](const experiments::SupportHistogram& h) { return h.degenerate; })
      .def_property_readonly("seed", [](const experiments::SupportHistogram& h) { return h.seed; })
      .def_property_readonly("sampler",
                             [](const experiments::SupportHistogram& h) { return h.sampler; })
      .def_property_readonly("counts", [](const experiments::SupportHistogram& h) {
        py::dict out;
        for (const auto& [mask, count] : h.counts) {
          out[py::frozenset(set_to_py(ActionSet::from_mask(mask)))] = count;
        }
        return out;
      });

  py::class_<experiments::StatReport>(m, "StatReport")
      .def_property_readonly("passed", [](const experiments::StatReport& r) { return r.pass; })
      .def_property_readonly("chi_square",
                             [](const experiments::StatReport& r) { return r.chi_square; })
      .def_property_readonly("dof", [](const experiments::StatReport& r) { return r.dof; })
      .def_property_readonly("p_value", [](const experiments::StatReport& r) { return r.p_value; })
      .def_property_readonly("max_abs_z",
                             [](const experiments::StatReport& r) { return r.max_abs_z; })
      .def_property_readonly("even_support_count",
                             [](const experiments::StatReport& r) { return r.even_support_count; })
      .def_property_readonly("degenerate_rate",
                             [](const experiments::StatReport& r) { return r.degenerate_rate; })
      .def_property_readonly("failures",
                             [](const experiments::StatReport& r) { return r.failures; })
      .def_property_readonly("bins", [](const experiments::StatReport& r) {
        py::list out;
        for (const auto& bin : r.bins) {
          py::dict d;
          d["support"] = py::frozenset(set_to_py(ActionSet::from_mask(bin.mask)));
          d["cardinality"] = bin.cardinality;
          d["count"] = bin.count;
          d["frequency"] = bin.frequency;
          d["expected"] = bin.expected;
          d["z"] = bin.z;
          out.append(d);
        }
        return out;
      });

  // ---- core operations ---------------------------------------------------
  m.def("restrict", [](const SkewGame& g, py::handle s) { return restrict(g, set_from_py(s)); },
        py::arg("game"), py::arg("actions"), "Principal subgame G_S");
  m.def("restrict_vector",
        [](py::handle v, py::handle s, int n) {
          return vec_to_py(restrict_vec(vec_from_py(v), set_from_py(s), n));
        },
        py::arg("vector"), py::arg("actions"), py::arg("n"));
  m.def("flip", [](const SkewGame& g, py::handle s) { return flip(g, set_from_py(s)); },
        py::arg("game"), py::arg("actions"),
        "Sign-flip automorphism: negates entries with exactly one index in the set");
  m.def("flip_vector",
        [](py::handle v, py::handle s, int n) {
          return vec_to_py(flip_vec(vec_from_py(v), set_from_py(s), n));
        },
        py::arg("vector"), py::arg("actions"), py::arg("n"));
  m.def("support", [](py::handle v) { return set_to_py(support(vec_from_py(v))); },
        py::arg("vector"), "Indices with strictly positive coordinates");
  m.def("neg_support", [](py::handle v) { return set_to_py(neg_support(vec_from_py(v))); },
        py::arg("vector"));
  m.def("mat_vec",
        [](const SkewGame& g, py::handle v) { return vec_to_py(mat_vec(g, vec_from_py(v))); },
        py::arg("game"), py::arg("vector"));
  m.def("expected_payoff",
        [](const SkewGame& g, py::handle q, py::handle p) {
          return rat_to_py(expected_payoff(g, strategy_from_py(q), strategy_from_py(p)));
        },
        py::arg("game"), py::arg("row_strategy"), py::arg("col_strategy"));

  // ---- skew linear algebra ------------------------------------------------
  m.def("pfaffian", [](py::handle rows) { return rat_to_py(pfaffian(matrix_from_py(rows))); },
        py::arg("matrix"), "Exact Pfaffian of an even-size skew-symmetric matrix");
  m.def("principal_pfaffians",
        [](const SkewGame& g) { return vec_to_py(principal_pfaffians(g)); }, py::arg("game"));
  m.def("kernel_vector", [](const SkewGame& g) { return vec_to_py(kernel_vector(g)); },
        py::arg("game"));
  m.def("rank", [](const SkewGame& g) { return rank(g); }, py::arg("game"));
  m.def("kaplansky_totally_mixed",
        [](const SkewGame& g) -> py::object {
          const auto p = kaplansky_totally_mixed(g);
          if (!p) return py::none();
          return vec_to_py(p->probs());
        },
        py::arg("game"),
        "The unique totally mixed optimal strategy when the principal Pfaffians alternate");
  m.def("kernel_sign_class",
        [](const SkewGame& g) -> py::object {
          const auto s = kernel_sign_class(g);
          if (!s) return py::none();
          return py::frozenset(set_to_py(*s));
        },
        py::arg("game"));

  // ---- solver --------------------------------------------------------------
  m.def("some_optimal", [](const SkewGame& g) { return vec_to_py(some_optimal(g).probs()); },
        py::arg("game"), "A vertex of the optimal polytope P(G)");
  m.def("max_coordinate",
        [](const SkewGame& g, int i) { return rat_to_py(max_coordinate(g, i)); },
        py::arg("game"), py::arg("action"));
  m.def("min_coordinate",
        [](const SkewGame& g, int i) { return rat_to_py(min_coordinate(g, i)); },
        py::arg("game"), py::arg("action"));
  m.def("maximal_support", [](const SkewGame& g) { return set_to_py(maximal_support(g)); },
        py::arg("game"));
  m.def("equalized_actions", [](const SkewGame& g) { return set_to_py(equalized_actions(g)); },
        py::arg("game"));
  m.def("is_unique", [](const SkewGame& g) { return is_unique(g); }, py::arg("game"));
  m.def("is_quasi_strict",
        [](const SkewGame& g, py::handle p) { return is_quasi_strict(g, strategy_from_py(p)); },
        py::arg("game"), py::arg("strategy"));
  m.def("analyze",
        [](const SkewGame& g) {
          const SolveReport r = analyze(g);
          py::dict d;
          d["strategy"] = vec_to_py(r.strategy.probs());
          d["support"] = py::frozenset(set_to_py(support(r.strategy)));
          d["maximal_support"] = py::frozenset(set_to_py(r.maximal_support));
          d["unique"] = r.unique;
          d["quasi_strict"] = r.quasi_strict;
          d["value"] = rat_to_py(r.value);
          return d;
        },
        py::arg("game"), "Full solve report for a symmetric game");
  m.def("has_optimal_with_support",
        [](const SkewGame& g, py::handle s) {
          return has_optimal_with_support(g, set_from_py(s));
        },
        py::arg("game"), py::arg("actions"));
  m.def("subgame_totally_mixed",
        [](const SkewGame& g, py::handle s) { return subgame_totally_mixed(g, set_from_py(s)); },
        py::arg("game"), py::arg("actions"));
  m.def("solve_bimatrix_zero_sum",
        [](py::handle payoffs) {
          BimatrixZeroSum game;
          game.payoffs = matrix_from_py(payoffs);
          const BimatrixSolution sol = solve_bimatrix_zero_sum(game);
          py::dict d;
          d["value"] = rat_to_py(sol.value);
          d["row"] = vec_to_py(sol.row.probs());
          d["col"] = vec_to_py(sol.col.probs());
          return d;
        },
        py::arg("payoffs"), "Exact value and maximin pair of a general zero-sum game");
  m.def("row_full_support_optimal",
        [](py::handle payoffs) {
          BimatrixZeroSum game;
          game.payoffs = matrix_from_py(payoffs);
          return row_full_support_optimal(game);
        },
        py::arg("payoffs"));

  // ---- oracle ---------------------------------------------------------------
  m.def("oracle_vertices",
        [](const SkewGame& g) {
          py::list out;
          for (const auto& v : oracle::vertices_of_optimal_set(g).vertices) {
            out.append(vec_to_py(v.probs()));
          }
          return out;
        },
        py::arg("game"), "Brute-force vertex enumeration of P(G); n <= 6");
  m.def("oracle_supports",
        [](const SkewGame& g) {
          const auto census = oracle::brute_supports(g);
          py::list supports;
          for (const auto& s : census.supports) supports.append(py::frozenset(set_to_py(s)));
          return py::make_tuple(supports, census.unique);
        },
        py::arg("game"));
  m.def("pfaffian_by_matchings",
        [](py::handle rows) { return rat_to_py(oracle::pfaffian_by_matchings(matrix_from_py(rows))); },
        py::arg("matrix"));
  m.def("singular_submatrix_witness",
        [](const SkewGame& g) -> py::object {
          const auto w = oracle::singular_submatrix_witness(g);
          if (!w) return py::none();
          return py::frozenset(set_to_py(*w));
        },
        py::arg("game"));

  // ---- sampling ---------------------------------------------------------------
  m.def("odd_int_sampler", &sampling::odd_int_spec, py::arg("n"), py::arg("bound") = 4);
  m.def("gaussian_sampler", &sampling::gaussian_spec, py::arg("n"));
  m.def("uniform_sampler",
        [](int n, py::handle half_width) {
          return sampling::uniform_spec(n, rat_from_py(half_width));
        },
        py::arg("n"), py::arg("half_width") = py::int_(1));
  m.def("tournament_sampler", &sampling::tournament_spec, py::arg("n"));
  m.def("constant_sampler", [](const SkewGame& g) { return sampling::constant_spec(g); },
        py::arg("game"));
  m.def("symmetrized", [](const sampling::SamplerSpec& s) { return sampling::symmetrized(s); },
        py::arg("base"), "Wraps a sampler with a uniform random flip");
  m.def("draw_game",
        [](const sampling::SamplerSpec& spec, std::uint64_t seed, std::uint64_t trial) {
          spec.validate();
          sampling::RandomStream stream = sampling::substream(seed, trial);
          return sampling::draw_game(spec, stream);
        },
        py::arg("sampler"), py::arg("seed"), py::arg("trial") = 0,
        "Deterministic draw on the (seed, trial) substream");
  m.def("all_tournaments",
        [](int n) {
          sampling::TournamentEnumerator en(n);
          py::list out;
          while (en.has_next()) out.append(en.next());
          return out;
        },
        py::arg("n"), "All 2^(n(n-1)/2) tournament games; n <= 7");

  // ---- experiments ---------------------------------------------------------------
  m.def("run_census",
        [](const sampling::SamplerSpec& spec, std::uint64_t trials, std::uint64_t seed,
           int workers) {
          return experiments::run_census(config_from_py(spec, trials, seed, workers));
        },
        py::arg("sampler"), py::arg("trials"), py::arg("seed"), py::arg("workers") = 0);
  m.def("evaluate_census",
        [](const experiments::SupportHistogram& hist, double z_threshold,
           std::uint64_t min_trials) {
          experiments::TolerancePolicy tol;
          tol.z_threshold = z_threshold;
          tol.min_trials = min_trials;
          return experiments::evaluate_census(hist, tol);
        },
        py::arg("histogram"), py::arg("z_threshold") = 4.0, py::arg("min_trials") = 1000);
  m.def("run_totally_mixed",
        [](const sampling::SamplerSpec& spec, std::uint64_t trials, std::uint64_t seed,
           int workers) {
          return frequency_report_to_py(
              experiments::run_totally_mixed(config_from_py(spec, trials, seed, workers)));
        },
        py::arg("sampler"), py::arg("trials"), py::arg("seed"), py::arg("workers") = 0);
  m.def("run_conditional",
        [](const sampling::SamplerSpec& spec, py::handle conditioning_set, std::uint64_t trials,
           std::uint64_t seed, int workers) {
          auto config = config_from_py(spec, trials, seed, workers);
          config.conditioning_set = set_from_py(conditioning_set);
          const auto r = experiments::run_conditional(config);
          py::dict d;
          d["conditional_frequency"] = rat_to_py(r.conditional_frequency);
          d["conditioning_rate"] = rat_to_py(r.conditioning_rate);
          d["conditioned"] = r.conditioned;
          d["hits"] = r.hits;
          d["trials"] = r.trials;
          d["expected_conditional"] = r.expected_conditional;
          d["expected_rate"] = r.expected_rate;
          d["z_conditional"] = r.z_conditional;
          d["z_rate"] = r.z_rate;
          d["passed"] = r.pass;
          return d;
        },
        py::arg("sampler"), py::arg("conditioning_set"), py::arg("trials"), py::arg("seed"),
        py::arg("workers") = 0);
  m.def("tournament_census_exact",
        [](int n, int workers) {
          const auto census = experiments::tournament_census_exact(n, workers);
          py::dict d;
          d["histogram"] = census.histogram;
          d["stats"] = census.stats;
          d["expected_per_odd_support"] = census.expected_per_odd_support;
          d["exact_match"] = census.exact_match;
          return d;
        },
        py::arg("n"), py::arg("workers") = 0);
  m.def("two_by_two_census",
        [](std::uint64_t trials, std::uint64_t seed, int workers) {
          return frequency_report_to_py(experiments::two_by_two_census(trials, seed, workers));
        },
        py::arg("trials"), py::arg("seed"), py::arg("workers") = 0);

  // ---- game files ---------------------------------------------------------------
  m.def("read_game_file", &read_game_file, py::arg("path"));
  m.def("write_game_file", &write_game_file, py::arg("path"), py::arg("game"));
}
