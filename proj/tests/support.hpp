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

// Fixtures and an independent cone-membership oracle shared by the tests.
#pragma once

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "holegrasp/maneuver.hpp"

namespace hgtest {

using namespace holegrasp;

inline double deg(double d) { return d * kPi / 180.0; }

// 68 x 34 x 28 mm bushing with a 20 mm finger.
inline ObjectSpec bushing() { return make_cylinder(34.0, 34.0, 28.0); }
inline GripperSpec bushing_gripper() { return {20.0, 82.0}; }
inline HoleContact bushing_contact() { return hole_contact(bushing_gripper(), bushing()); }

inline const FrictionSet kFrictionless{};
inline const FrictionSet kGroundOnly{0.0, 0.0, 0.4};
inline const FrictionSet kAllContacts{0.2, 0.4, 0.4};

inline GraspConfig bushing_config(double la, double alpha, double beta) {
  return make_config(bushing(), bushing_contact(), la, alpha, beta);
}

inline WrenchBasis bushing_basis(double la, double alpha, double beta, const FrictionSet& f) {
  return basis_wrenches(bushing(), bushing_config(la, alpha, beta), f);
}

// Cone membership by Cramer's rule on every nonsingular column triple, plus
// exact projections onto column pairs and single columns for targets that
// lie on a lower-dimensional face.
class CramerOracle {
 public:
  explicit CramerOracle(double coeff_tol = 1e-9, double residual_tol = 1e-7)
      : coeff_tol_(coeff_tol), residual_tol_(residual_tol) {}

  bool contains(const std::vector<Wrench>& cols, const Wrench& t) const {
    if (norm(t) <= residual_tol_) return true;
    const std::size_t n = cols.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (single(cols[i], t)) return true;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (pair(cols[i], cols[j], t)) return true;
        for (std::size_t k = j + 1; k < n; ++k)
          if (triple(cols[i], cols[j], cols[k], t)) return true;
      }
    }
    return false;
  }

  bool force_balance(const WrenchBasis& basis, const Wrench& ext) const {
    return contains({basis.wrenches.begin(), basis.wrenches.end()}, -ext);
  }

 private:
  static double dot(const Wrench& a, const Wrench& b) {
    return a.moment * b.moment + a.fx * b.fx + a.fy * b.fy;
  }
  static double norm(const Wrench& w) {
    return std::max({std::abs(w.moment), std::abs(w.fx), std::abs(w.fy)});
  }
  static double det(const Wrench& a, const Wrench& b, const Wrench& c) {
    return a.moment * (b.fx * c.fy - b.fy * c.fx) - b.moment * (a.fx * c.fy - a.fy * c.fx) +
           c.moment * (a.fx * b.fy - a.fy * b.fx);
  }

  bool single(const Wrench& a, const Wrench& t) const {
    const double aa = dot(a, a);
    if (aa == 0.0) return false;
    const double k = dot(a, t) / aa;
    return k >= -coeff_tol_ && norm(t + (-k) * a) <= residual_tol_;
  }

  bool pair(const Wrench& a, const Wrench& b, const Wrench& t) const {
    const double aa = dot(a, a), ab = dot(a, b), bb = dot(b, b);
    const double g = aa * bb - ab * ab;
    if (std::abs(g) <= 1e-12 * std::max(1.0, aa * bb)) return false;
    const double at = dot(a, t), bt = dot(b, t);
    const double ka = (at * bb - bt * ab) / g;
    const double kb = (bt * aa - at * ab) / g;
    if (ka < -coeff_tol_ || kb < -coeff_tol_) return false;
    return norm(t + (-ka) * a + (-kb) * b) <= residual_tol_;
  }

  bool triple(const Wrench& a, const Wrench& b, const Wrench& c, const Wrench& t) const {
    const double d = det(a, b, c);
    if (std::abs(d) <= 1e-12) return false;
    const double ka = det(t, b, c) / d;
    const double kb = det(a, t, c) / d;
    const double kc = det(a, b, t) / d;
    if (ka < -coeff_tol_ || kb < -coeff_tol_ || kc < -coeff_tol_) return false;
    return norm(t + (-ka) * a + (-kb) * b + (-kc) * c) <= residual_tol_;
  }

  double coeff_tol_;
  double residual_tol_;
};

// Uniform valid configuration: bushing-like cylinders and prisms, l_a in
// (0.05, 1], alpha in (1, 89) deg, beta in [0, 90] deg, mu in [0, 0.6].
struct SampledCase {
  ObjectSpec object;
  GraspConfig cfg;
  FrictionSet friction;
};

class CaseSampler {
 public:
  explicit CaseSampler(std::uint64_t seed) : rng_(seed) {}

  SampledCase next() {
    const double a = uniform(10.0, 90.0);
    const double outer = uniform(10.0, 70.0);
    const double inner = outer * uniform(0.5, 0.95);
    const bool cyl = uniform(0.0, 1.0) < 0.7;
    const ObjectSpec obj =
        cyl ? make_cylinder(a, outer, inner) : make_prism(a, outer / 2.0, outer, inner);
    const GripperSpec grip{inner * uniform(0.1, 0.9), 2.0 * a + 20.0};
    const HoleContact hc = hole_contact(grip, obj);
    const GraspConfig cfg = make_config(obj, hc, uniform(0.05, 1.0), uniform(deg(1.0), deg(89.0)),
                                        uniform(0.0, kPi / 2.0));
    const FrictionSet f(uniform(0.0, 0.6), uniform(0.0, 0.6), uniform(0.0, 0.6));
    return {obj, cfg, f};
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace hgtest
