# Copyright 2026 The symzero Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact-arithmetic solver and experiment engine for symmetric zero-sum games.

A symmetric zero-sum game is a skew-symmetric payoff matrix G; its optimal
strategies are exactly the probability vectors p with G p <= 0. Everything
here computes over exact rationals (``fractions.Fraction`` on the Python
side), so support sets, uniqueness verdicts and Pfaffians carry no floating
point error.
"""

from symzero._core import (  # noqa: F401
    GENERATOR,
    SamplerSpec,
    SkewGame,
    StatReport,
    SupportHistogram,
    SymzeroError,
    __version__,
    all_tournaments,
    analyze,
    draw_game,
    equalized_actions,
    evaluate_census,
    expected_payoff,
    flip,
    flip_vector,
    gaussian_sampler,
    has_optimal_with_support,
    is_quasi_strict,
    is_unique,
    kaplansky_totally_mixed,
    kernel_sign_class,
    kernel_vector,
    constant_sampler,
    mat_vec,
    max_coordinate,
    maximal_support,
    min_coordinate,
    neg_support,
    odd_int_sampler,
    oracle_supports,
    oracle_vertices,
    pfaffian,
    pfaffian_by_matchings,
    principal_pfaffians,
    rank,
    read_game_file,
    restrict,
    restrict_vector,
    row_full_support_optimal,
    run_census,
    run_conditional,
    run_totally_mixed,
    singular_submatrix_witness,
    solve_bimatrix_zero_sum,
    some_optimal,
    subgame_totally_mixed,
    support,
    symmetrized,
    tournament_census_exact,
    tournament_sampler,
    two_by_two_census,
    uniform_sampler,
    write_game_file,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
