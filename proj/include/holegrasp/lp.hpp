// Copyright 2026 The holegrasp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "holegrasp/wrench.hpp"

namespace holegrasp {

struct LpTolerances {
  double bound = 1e-9;     // slack allowed on k_i >= lower_bound
  double equality = 1e-7;  // inf-norm slack on sum k_i F_i = rhs
};

inline constexpr int kSimplexIterationCap = 10000;

// Find k minimizing sum k_i subject to sum k_i * columns[i] = rhs and
// k_i >= lower_bound. Three equality rows (moment, fx, fy).
struct LpProblem {
  std::vector<Wrench> columns;
  Wrench rhs;
  double lower_bound = 0.0;
};

struct LpOutcome {
  bool feasible = false;
  std::vector<double> coefficients;  // one per column when feasible
  double objective = 0.0;            // sum of coefficients when feasible
  int iterations = 0;
};

// Two-phase simplex, Bland's rule. A problem whose phase-one residual is
// within `tol.equality` is reported feasible. Throws NumericalError past
// kSimplexIterationCap pivots.
LpOutcome solve_lp(const LpProblem& problem, const LpTolerances& tol = {});

// F_ext + sum k_i F_i = 0 with k_i >= 0.
LpOutcome solve_force_balance(const WrenchBasis& basis, const Wrench& ext,
                              const LpTolerances& tol = {});

// sum k_i F_i = 0 with k_i >= 1 (first-order form closure).
LpOutcome solve_form_closure(const WrenchBasis& basis,
                             const LpTolerances& tol = {});

// ||sum k_i F_i - rhs||_inf.
double residual_norm(const std::vector<Wrench>& columns,
                     const std::vector<double>& coefficients,
                     const Wrench& rhs);

// Independent check of force balance: enumerates every subset of at most
// three basis columns, solves its least-squares system and accepts when an
// exact, componentwise non-negative solution exists. By Caratheodory this is
// cone membership of -ext.
bool oracle_force_balance(const WrenchBasis& basis, const Wrench& ext,
                          const LpTolerances& tol = {});

// Same enumeration over an arbitrary column list and target.
bool oracle_cone_contains(const std::vector<Wrench>& columns,
                          const Wrench& target, const LpTolerances& tol = {});

}  // namespace holegrasp
