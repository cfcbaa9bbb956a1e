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

#include "holegrasp/wrench.hpp"

#include <cmath>

namespace holegrasp {

FrictionSet::FrictionSet(double mu_s, double mu_h, double mu_g)
    : mu_s_(mu_s), mu_h_(mu_h), mu_g_(mu_g) {
  for (double mu : {mu_s, mu_h, mu_g}) {
    if (!(std::isfinite(mu) && mu >= 0.0))
      throw DomainError("friction coefficients must be finite and >= 0");
  }
  gamma_s_ = std::atan(mu_s_);
  gamma_h_ = std::atan(mu_h_);
  gamma_g_ = std::atan(mu_g_);
}

bool FrictionSet::dominated_by(const FrictionSet& other) const noexcept {
  return mu_s_ <= other.mu_s_ && mu_h_ <= other.mu_h_ && mu_g_ <= other.mu_g_;
}

WrenchBasis basis_wrenches(const ObjectSpec& object, const GraspConfig& cfg,
                           const FrictionSet& friction) {
  using std::cos;
  using std::sin;
  const double a = object.half_length;
  const double b = object.half_height;
  const double l = cfg.contact_distance(object);
  const double alpha = cfg.gripper_angle;
  const double beta = cfg.tilt;
  const double arm_h = b - cfg.delta;
  const double gs = friction.gamma_s();
  const double gh = friction.gamma_h();
  const double gg = friction.gamma_g();

  WrenchBasis basis;
  auto& w = basis.wrenches;
  w[0] = {(l - a) * cos(gs) - b * sin(gs), sin(beta + gs), -cos(beta + gs)};
  w[1] = {(l - a) * cos(gs) + b * sin(gs), sin(beta - gs), -cos(beta - gs)};
  w[2] = {a * sin(alpha - gh) + arm_h * cos(alpha - gh),
          -cos(alpha - beta - gh), sin(alpha - beta - gh)};
  w[3] = {a * sin(alpha + gh) + arm_h * cos(alpha + gh),
          -cos(alpha - beta + gh), sin(alpha - beta + gh)};
  w[4] = {-a * cos(gg - beta) - b * sin(gg - beta), -sin(gg), cos(gg)};
  w[5] = {-a * cos(gg + beta) + b * sin(gg + beta), sin(gg), cos(gg)};
  return basis;
}

Wrench gravity_wrench(const ObjectSpec& object) {
  return {0.0, 0.0, -object.weight};
}

}  // namespace holegrasp
