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

#include "holegrasp/stability.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <numeric>
#include <string>
#include <thread>

namespace holegrasp {
namespace {

void check_axis(const std::vector<double>& axis, const char* name, double lo,
                double hi, bool open_low, bool open_high) {
  for (std::size_t i = 0; i < axis.size(); ++i) {
    const double v = axis[i];
    const bool low_ok = open_low ? v > lo : v >= lo;
    const bool high_ok = open_high ? v < hi : v <= hi;
    if (!std::isfinite(v) || !low_ok || !high_ok)
      throw DomainError(std::string(name) + " axis value out of range at index " +
                        std::to_string(i));
    if (i > 0 && !(v > axis[i - 1]))
      throw DomainError(std::string(name) + " axis must be strictly increasing");
  }
}

void check_ratio(double la) {
  if (!(std::isfinite(la) && la > 0.0 && la <= 1.0))
    throw ValidationError(std::vector<ConfigIssue>{{"l_a_out_of_range", "l_a must satisfy 0 < l_a <= 1"}});
}

// Evaluates fill(i, j) over a rows x cols grid. Threads stride over the flat
// index; each cell is written exactly once, so the result is independent of
// the thread count. The first failure in index order is rethrown.
FeasibilityGrid fill_grid(std::vector<double> rows, std::vector<double> betas,
                          unsigned threads,
                          const std::function<bool(std::size_t, std::size_t)>& cell) {
  FeasibilityGrid grid{std::move(rows), std::move(betas), {}};
  const std::size_t nr = grid.rows.size();
  const std::size_t nc = grid.betas.size();
  const std::size_t total = nr * nc;
  grid.cells.assign(total, 0);
  std::vector<std::string> errors(total);
  std::vector<std::uint8_t> failed(total, 0);

  auto work = [&](std::size_t start, std::size_t stride) {
    for (std::size_t k = start; k < total; k += stride) {
      try {
        grid.cells[k] = cell(k / nc, k % nc) ? 1 : 0;
      } catch (const std::exception& e) {
        failed[k] = 1;
        errors[k] = e.what();
      }
    }
  };

  const std::size_t workers =
      std::clamp<std::size_t>(threads == 0 ? 1 : threads, 1, std::max<std::size_t>(total, 1));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work, t, workers);
  }

  for (std::size_t k = 0; k < total; ++k) {
    if (failed[k])
      throw NumericalError("cell (" + std::to_string(k / nc) + ", " +
                           std::to_string(k % nc) + "): " + errors[k]);
  }
  return grid;
}

}  // namespace

const char* to_string(StabilityMode mode) {
  return mode == StabilityMode::force_balance ? "force_balance" : "form_closure";
}

bool is_stable(const ObjectSpec& object, const GraspConfig& cfg,
               const FrictionSet& friction, StabilityMode mode,
               const LpTolerances& tol) {
  const auto basis = basis_wrenches(object, cfg, friction);
  if (mode == StabilityMode::form_closure) return solve_form_closure(basis, tol).feasible;
  return solve_force_balance(basis, gravity_wrench(object), tol).feasible;
}

std::size_t FeasibilityGrid::feasible_count() const {
  return static_cast<std::size_t>(std::count(cells.begin(), cells.end(), 1));
}

std::vector<double> default_alpha_grid(double step_rad) {
  if (!(step_rad > 0.0)) throw DomainError("alpha grid step must be > 0");
  std::vector<double> out;
  for (int k = 1;; ++k) {
    const double v = k * step_rad;
    if (v >= kPi / 2.0 - 1e-12) break;
    out.push_back(v);
  }
  return out;
}

std::vector<double> default_beta_grid(double step_rad) {
  if (!(step_rad > 0.0)) throw DomainError("beta grid step must be > 0");
  std::vector<double> out;
  for (int k = 0;; ++k) {
    const double v = k * step_rad;
    if (v > kPi / 2.0 + 1e-12) break;
    out.push_back(std::min(v, kPi / 2.0));
  }
  return out;
}

std::vector<double> default_contact_ratios() { return {0.5, 0.6, 0.7, 0.8, 0.9}; }

RegionMap region_sweep(const ObjectSpec& object, const HoleContact& contact,
                       const FrictionSet& friction, double contact_ratio,
                       const std::vector<double>& alpha_grid,
                       const std::vector<double>& beta_grid, StabilityMode mode,
                       const SweepOptions& options) {
  check_object(object);
  check_ratio(contact_ratio);
  check_axis(alpha_grid, "alpha", 0.0, kPi / 2.0, true, true);
  check_axis(beta_grid, "beta", 0.0, kPi / 2.0, false, false);

  RegionMap map;
  map.contact_ratio = contact_ratio;
  map.friction = friction;
  map.mode = mode;
  map.grid = fill_grid(alpha_grid, beta_grid, options.threads,
                       [&](std::size_t i, std::size_t j) {
                         GraspConfig cfg{contact_ratio, alpha_grid[i], beta_grid[j],
                                         contact.delta, contact.x};
                         return is_stable(object, cfg, friction, mode, options.tol);
                       });
  return map;
}

ContactRatioMap contact_ratio_sweep(const ObjectSpec& object,
                                    const HoleContact& contact,
                                    const FrictionSet& friction,
                                    double gripper_angle,
                                    const std::vector<double>& ratio_grid,
                                    const std::vector<double>& beta_grid,
                                    StabilityMode mode,
                                    const SweepOptions& options) {
  check_object(object);
  if (!(gripper_angle > 0.0 && gripper_angle < kPi / 2.0))
    throw DomainError("alpha must satisfy 0 < alpha < pi/2");
  check_axis(ratio_grid, "l_a", 0.0, 1.0, true, false);
  check_axis(beta_grid, "beta", 0.0, kPi / 2.0, false, false);

  ContactRatioMap map;
  map.gripper_angle = gripper_angle;
  map.friction = friction;
  map.mode = mode;
  map.grid = fill_grid(ratio_grid, beta_grid, options.threads,
                       [&](std::size_t i, std::size_t j) {
                         GraspConfig cfg{ratio_grid[i], gripper_angle, beta_grid[j],
                                         contact.delta, contact.x};
                         return is_stable(object, cfg, friction, mode, options.tol);
                       });
  return map;
}

BetaBound beta_upper_bound(const ObjectSpec& object, const HoleContact& contact,
                           const FrictionSet& friction, double contact_ratio,
                           double gripper_angle,
                           const BetaSearchOptions& options) {
  // Validates the (l_a, alpha) pair once; beta = 0 is always in range.
  make_config(object, contact, contact_ratio, gripper_angle, 0.0);

  auto stable_at = [&](double beta) {
    GraspConfig cfg{contact_ratio, gripper_angle, beta, contact.delta, contact.x};
    return is_stable(object, cfg, friction, StabilityMode::force_balance, options.tol);
  };

  BetaBound bound;
  if (!stable_at(0.0)) {
    bound.kind = BetaBound::Kind::infeasible_at_start;
    return bound;
  }

  const auto coarse = default_beta_grid(options.coarse_step);
  std::vector<double> grid = coarse;
  if (grid.back() < kPi / 2.0) grid.push_back(kPi / 2.0);

  bool previous = true;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const bool current = stable_at(grid[i]);
    if (previous && !current) {
      double lo = grid[i - 1];
      double hi = grid[i];
      while (hi - lo > options.resolution) {
        const double mid = 0.5 * (lo + hi);
        (stable_at(mid) ? lo : hi) = mid;
      }
      bound.transitions.push_back(0.5 * (lo + hi));
    }
    previous = current;
  }

  if (bound.transitions.empty()) {
    bound.kind = BetaBound::Kind::not_finite;
  } else {
    bound.kind = BetaBound::Kind::finite;
    bound.value = bound.transitions.front();
  }
  return bound;
}

std::optional<double> min_alpha(const ObjectSpec& object,
                                const HoleContact& contact,
                                const FrictionSet& friction,
                                double contact_ratio, double tilt,
                                double resolution, const LpTolerances& tol) {
  for (double alpha : default_alpha_grid(resolution)) {
    const auto cfg = make_config(object, contact, contact_ratio, alpha, tilt);
    if (is_stable(object, cfg, friction, StabilityMode::force_balance, tol)) return alpha;
  }
  return std::nullopt;
}

}  // namespace holegrasp
