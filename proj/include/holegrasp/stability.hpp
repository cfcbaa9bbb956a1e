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

#include <cstdint>
#include <optional>
#include <vector>

#include "holegrasp/lp.hpp"

namespace holegrasp {

enum class StabilityMode { force_balance, form_closure };

const char* to_string(StabilityMode mode);

// True iff the LP selected by `mode` is feasible at cfg. Expects a
// validated configuration.
bool is_stable(const ObjectSpec& object, const GraspConfig& cfg,
               const FrictionSet& friction, StabilityMode mode,
               const LpTolerances& tol = {});

// Row-major boolean grid. Rows index the first axis, columns index beta.
struct FeasibilityGrid {
  std::vector<double> rows;
  std::vector<double> betas;
  std::vector<std::uint8_t> cells;

  bool at(std::size_t row, std::size_t col) const {
    return cells[row * betas.size() + col] != 0;
  }
  std::size_t feasible_count() const;
};

// Stable region in the (alpha, beta) plane at fixed l_a.
struct RegionMap {
  double contact_ratio = 0.0;
  FrictionSet friction;
  StabilityMode mode = StabilityMode::force_balance;
  FeasibilityGrid grid;  // rows are alpha values

  const std::vector<double>& alpha_axis() const { return grid.rows; }
  const std::vector<double>& beta_axis() const { return grid.betas; }
  bool feasible(std::size_t alpha_index, std::size_t beta_index) const {
    return grid.at(alpha_index, beta_index);
  }
};

// Stable region in the (l_a, beta) plane at fixed alpha.
struct ContactRatioMap {
  double gripper_angle = 0.0;
  FrictionSet friction;
  StabilityMode mode = StabilityMode::force_balance;
  FeasibilityGrid grid;  // rows are l_a values
};

struct SweepOptions {
  unsigned threads = 1;
  LpTolerances tol{};
};

// alpha in (0, 90) deg exclusive, beta in [0, 90] deg inclusive.
std::vector<double> default_alpha_grid(double step_rad = 0.5 * kPi / 180.0);
std::vector<double> default_beta_grid(double step_rad = 0.5 * kPi / 180.0);
std::vector<double> default_contact_ratios();

// Cell (i, j) is is_stable at (alpha_i, beta_j). Output does not depend on
// `options.threads`. Per-cell solver failures are rethrown with the cell
// coordinates in the message.
RegionMap region_sweep(const ObjectSpec& object, const HoleContact& contact,
                       const FrictionSet& friction, double contact_ratio,
                       const std::vector<double>& alpha_grid,
                       const std::vector<double>& beta_grid, StabilityMode mode,
                       const SweepOptions& options = {});

ContactRatioMap contact_ratio_sweep(const ObjectSpec& object,
                                    const HoleContact& contact,
                                    const FrictionSet& friction,
                                    double gripper_angle,
                                    const std::vector<double>& ratio_grid,
                                    const std::vector<double>& beta_grid,
                                    StabilityMode mode,
                                    const SweepOptions& options = {});

struct BetaBound {
  enum class Kind { finite, not_finite, infeasible_at_start };
  Kind kind = Kind::not_finite;
  double value = 0.0;  // rad, meaningful when finite
  // Every feasible->infeasible transition found, refined; value is the first.
  std::vector<double> transitions;

  bool finite() const { return kind == Kind::finite; }
};

struct BetaSearchOptions {
  double coarse_step = kPi / 180.0;
  double resolution = 1e-4;
  LpTolerances tol{};
};

// Upper tilt bound of force balance for a fixed (l_a, alpha): coarse
// bracketing over [0, pi/2] followed by bisection of each transition.
BetaBound beta_upper_bound(const ObjectSpec& object, const HoleContact& contact,
                           const FrictionSet& friction, double contact_ratio,
                           double gripper_angle,
                           const BetaSearchOptions& options = {});

// Smallest alpha on the grid k * resolution (0 < alpha < pi/2) with force
// balance at (l_a, beta).
std::optional<double> min_alpha(const ObjectSpec& object,
                                const HoleContact& contact,
                                const FrictionSet& friction,
                                double contact_ratio, double tilt,
                                double resolution = 0.5 * kPi / 180.0,
                                const LpTolerances& tol = {});

}  // namespace holegrasp
