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

#include <functional>

#include "doctest.h"
#include "support.hpp"

using namespace hgtest;

namespace {

constexpr double kTwoDeg = 2.0 * kPi / 180.0;

bool stable(double la, double alpha, double beta, const FrictionSet& f,
            StabilityMode mode = StabilityMode::force_balance) {
  return is_stable(bushing(), bushing_config(la, alpha, beta), f, mode);
}

RegionMap sweep(const FrictionSet& f, double la, double step = kTwoDeg,
                StabilityMode mode = StabilityMode::force_balance, unsigned threads = 1) {
  return region_sweep(bushing(), bushing_contact(), f, la, default_alpha_grid(step),
                      default_beta_grid(step), mode, {threads, {}});
}

// Frictionless closure residual: with unit S load, H and G loads that cancel
// the force rows, the leftover moment about the center.
struct ClosureWitness {
  double la;
  double alpha;

  double load_h(double beta) const { return std::sin(beta) / std::cos(alpha - beta); }
  double load_g(double beta) const { return std::cos(beta) - load_h(beta) * std::sin(alpha - beta); }

  double moment(double beta) const {
    const auto hc = bushing_contact();
    const double a = 34.0, b = 17.0, l = 2.0 * a * la;
    const double arm_h = a * std::sin(alpha) + (b - hc.delta) * std::cos(alpha);
    const double arm_g = -a * std::cos(beta) + b * std::sin(beta);
    return (l - a) + load_h(beta) * arm_h + load_g(beta) * arm_g;
  }

  // Root of moment() where both supporting loads are positive, by bisection.
  std::optional<double> root() const {
    const double step = 0.25 * kPi / 180.0;
    for (double lo = step; lo + step < kPi / 2.0; lo += step) {
      double hi = lo + step;
      if (load_h(lo) <= 0 || load_g(lo) <= 0 || load_h(hi) <= 0 || load_g(hi) <= 0) continue;
      if ((moment(lo) > 0) == (moment(hi) > 0)) continue;
      double l = lo;
      for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (l + hi);
        ((moment(mid) > 0) == (moment(l) > 0) ? l : hi) = mid;
      }
      return 0.5 * (l + hi);
    }
    return std::nullopt;
  }
};

}  // namespace

TEST_CASE("frictionless grasps fail both tests at beta = 0") {
  for (double la : default_contact_ratios())
    for (double alpha : default_alpha_grid(kTwoDeg)) {
      CHECK_FALSE(stable(la, alpha, 0.0, kFrictionless, StabilityMode::form_closure));
      CHECK_FALSE(stable(la, alpha, 0.0, kFrictionless));
    }
}

TEST_CASE("a configuration inside the all-friction region is stable and fails without friction") {
  CHECK(stable(0.9, deg(18.0), 0.0, kAllContacts));
  CHECK_FALSE(stable(0.9, deg(18.0), 0.0, kFrictionless));
}

TEST_CASE("frictionless form closure exists on a measure-zero tilt") {
  for (const auto& [la, alpha_deg, expected_deg] :
       {std::tuple{0.9, 10.0, 10.25}, std::tuple{0.9, 45.0, 4.41}, std::tuple{0.5, 45.0, 29.21}}) {
    CAPTURE(la);
    CAPTURE(alpha_deg);
    const ClosureWitness w{la, deg(alpha_deg)};
    const auto beta = w.root();
    REQUIRE(beta.has_value());
    CHECK(*beta * 180.0 / kPi == doctest::Approx(expected_deg).epsilon(0.01));
    CHECK(stable(la, w.alpha, *beta, kFrictionless, StabilityMode::form_closure));
    CHECK_FALSE(stable(la, w.alpha, *beta + deg(0.5), kFrictionless, StabilityMode::form_closure));
    CHECK_FALSE(stable(la, w.alpha, *beta - deg(0.5), kFrictionless, StabilityMode::form_closure));
  }
}

TEST_CASE("1x1 sweep equals the point query") {
  for (double la : {0.5, 0.9})
    for (double alpha : {deg(10.0), deg(60.0)})
      for (double beta : {0.0, deg(45.0)}) {
        const auto map = region_sweep(bushing(), bushing_contact(), kGroundOnly, la, {alpha}, {beta},
                                      StabilityMode::force_balance);
        REQUIRE(map.grid.cells.size() == 1);
        CHECK(map.feasible(0, 0) == stable(la, alpha, beta, kGroundOnly));
      }
}

TEST_CASE("sweep axes follow the default grid contract") {
  const auto alphas = default_alpha_grid();
  const auto betas = default_beta_grid();
  CHECK(alphas.size() == 179);
  CHECK(betas.size() == 181);
  CHECK(alphas.front() > 0.0);
  CHECK(alphas.back() < kPi / 2.0);
  CHECK(betas.front() == 0.0);
  CHECK(betas.back() == kPi / 2.0);
  for (std::size_t i = 1; i < alphas.size(); ++i) CHECK(alphas[i] > alphas[i - 1]);
  for (std::size_t i = 1; i < betas.size(); ++i) CHECK(betas[i] > betas[i - 1]);
}

TEST_CASE("adding friction never removes a stable cell") {
  const std::array<FrictionSet, 3> sets = {kFrictionless, kGroundOnly, kAllContacts};
  for (double la : default_contact_ratios()) {
    const auto m0 = sweep(sets[0], la);
    const auto m1 = sweep(sets[1], la);
    const auto m2 = sweep(sets[2], la);
    for (std::size_t c = 0; c < m0.grid.cells.size(); ++c) {
      CHECK(m0.grid.cells[c] <= m1.grid.cells[c]);
      CHECK(m1.grid.cells[c] <= m2.grid.cells[c]);
    }
    CHECK(m0.grid.feasible_count() < m1.grid.feasible_count());
  }
}

TEST_CASE("random friction pairs respect set inclusion") {
  CaseSampler rng(31);
  for (int i = 0; i < 5; ++i) {
    const FrictionSet lo(rng.uniform(0, 0.3), rng.uniform(0, 0.3), rng.uniform(0, 0.3));
    const FrictionSet hi(lo.mu_s() + rng.uniform(0, 0.3), lo.mu_h() + rng.uniform(0, 0.3),
                         lo.mu_g() + rng.uniform(0, 0.3));
    const double la = rng.uniform(0.3, 1.0);
    const auto a = sweep(lo, la, deg(3.0));
    const auto b = sweep(hi, la, deg(3.0));
    for (std::size_t c = 0; c < a.grid.cells.size(); ++c) CHECK(a.grid.cells[c] <= b.grid.cells[c]);
  }
}

TEST_CASE("larger l_a reaches smaller alpha and loses high beta") {
  std::optional<double> prev_min;
  double prev_max_beta = kPi;
  for (double la : default_contact_ratios()) {
    const auto m = sweep(kGroundOnly, la, deg(0.5));
    const auto found = min_alpha(bushing(), bushing_contact(), kGroundOnly, la, 0.0);
    REQUIRE(found.has_value());
    if (prev_min) CHECK(*found <= *prev_min);
    prev_min = found;
    double max_beta = -1.0;
    for (std::size_t i = 0; i < m.alpha_axis().size(); ++i)
      for (std::size_t j = 0; j < m.beta_axis().size(); ++j)
        if (m.feasible(i, j)) max_beta = std::max(max_beta, m.beta_axis()[j]);
    CHECK(max_beta <= prev_max_beta);
    prev_max_beta = max_beta;
  }
}

TEST_CASE("sweeps are identical across thread counts") {
  const auto one = sweep(kAllContacts, 0.7, deg(1.0), StabilityMode::force_balance, 1);
  const auto many = sweep(kAllContacts, 0.7, deg(1.0), StabilityMode::force_balance, 7);
  CHECK(one.grid.cells == many.grid.cells);
  CHECK(one.grid.rows == many.grid.rows);
}

TEST_CASE("sweep rejects an invalid contact ratio") {
  CHECK_THROWS_AS(sweep(kGroundOnly, 1.5), ValidationError);
}

TEST_CASE("contact ratio map rows agree with point queries") {
  const std::vector<double> ratios = {0.3, 0.6, 0.9};
  const auto betas = default_beta_grid(deg(5.0));
  const auto map = contact_ratio_sweep(bushing(), bushing_contact(), kAllContacts, kPi / 10.0, ratios,
                                       betas, StabilityMode::force_balance, {3, {}});
  for (std::size_t i = 0; i < ratios.size(); ++i)
    for (std::size_t j = 0; j < betas.size(); ++j)
      CHECK(map.grid.at(i, j) == stable(ratios[i], kPi / 10.0, betas[j], kAllContacts));
}

TEST_CASE("finite tilt bound exceeds the corner angle and brackets the transition") {
  const auto bound = beta_upper_bound(bushing(), bushing_contact(), kGroundOnly, 0.9, deg(45.0));
  REQUIRE(bound.finite());
  CHECK(bound.value > std::atan(34.0 / 17.0));
  CHECK(bound.value <= kPi / 2.0);
  CHECK(stable(0.9, deg(45.0), bound.value - 2e-4, kGroundOnly));
  CHECK_FALSE(stable(0.9, deg(45.0), bound.value + 2e-4, kGroundOnly));
  CHECK(bound.transitions.size() == 1);
}

TEST_CASE("tilt bound does not depend on alpha for the ground-friction set") {
  const auto a = beta_upper_bound(bushing(), bushing_contact(), kGroundOnly, 0.9, deg(30.0));
  const auto b = beta_upper_bound(bushing(), bushing_contact(), kGroundOnly, 0.9, deg(70.0));
  REQUIRE(a.finite());
  REQUIRE(b.finite());
  CHECK(a.value == doctest::Approx(b.value).epsilon(1e-3));
}

TEST_CASE("small l_a keeps balance through vertical") {
  // Ground-only friction: unbounded for l_a <= 1 - b / (2 a mu_G) = 0.375.
  for (double la : {0.1, 0.3, 0.37}) {
    const auto bound = beta_upper_bound(bushing(), bushing_contact(), kGroundOnly, la, deg(70.0));
    CHECK(bound.kind == BetaBound::Kind::not_finite);
  }
  const auto above = beta_upper_bound(bushing(), bushing_contact(), kGroundOnly, 0.38, deg(70.0));
  CHECK(above.finite());
}

TEST_CASE("alpha at the edge of the start region has a small bound") {
  const auto bound = beta_upper_bound(bushing(), bushing_contact(), kGroundOnly, 0.3, deg(60.0));
  REQUIRE(bound.finite());
  CHECK(bound.value < deg(2.0));
}

TEST_CASE("tilt bound search reports an unstable start") {
  const auto bound = beta_upper_bound(bushing(), bushing_contact(), kFrictionless, 0.9, deg(45.0));
  CHECK(bound.kind == BetaBound::Kind::infeasible_at_start);
}

TEST_CASE("frictionless grasps have no minimum alpha") {
  for (double la : default_contact_ratios())
    CHECK_FALSE(min_alpha(bushing(), bushing_contact(), kFrictionless, la, 0.0).has_value());
}

TEST_CASE("minimum alpha is the first stable grid point") {
  const auto found = min_alpha(bushing(), bushing_contact(), kGroundOnly, 0.7, 0.0);
  REQUIRE(found.has_value());
  CHECK(stable(0.7, *found, 0.0, kGroundOnly));
  CHECK_FALSE(stable(0.7, *found - deg(0.5), 0.0, kGroundOnly));
}
