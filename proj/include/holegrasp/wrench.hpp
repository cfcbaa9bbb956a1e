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

#include <array>
#include <string_view>

#include "holegrasp/geometry.hpp"

namespace holegrasp {

// Planar wrench: moment about the object's center of mass, then force.
struct Wrench {
  double moment = 0.0;
  double fx = 0.0;
  double fy = 0.0;

  friend bool operator==(const Wrench&, const Wrench&) = default;
  friend Wrench operator+(const Wrench& l, const Wrench& r) {
    return {l.moment + r.moment, l.fx + r.fx, l.fy + r.fy};
  }
  friend Wrench operator*(double s, const Wrench& w) {
    return {s * w.moment, s * w.fx, s * w.fy};
  }
  friend Wrench operator-(const Wrench& w) { return {-w.moment, -w.fx, -w.fy}; }
};

// Coulomb friction at the three contacts and the cone half-angles atan(mu).
class FrictionSet {
 public:
  FrictionSet() = default;
  // Throws DomainError if any coefficient is negative or non-finite.
  FrictionSet(double mu_s, double mu_h, double mu_g);

  static FrictionSet frictionless() { return {}; }

  double mu_s() const noexcept { return mu_s_; }
  double mu_h() const noexcept { return mu_h_; }
  double mu_g() const noexcept { return mu_g_; }
  double gamma_s() const noexcept { return gamma_s_; }
  double gamma_h() const noexcept { return gamma_h_; }
  double gamma_g() const noexcept { return gamma_g_; }

  // Componentwise mu <= other.mu.
  bool dominated_by(const FrictionSet& other) const noexcept;

 private:
  double mu_s_ = 0.0, mu_h_ = 0.0, mu_g_ = 0.0;
  double gamma_s_ = 0.0, gamma_h_ = 0.0, gamma_g_ = 0.0;
};

enum class ContactEdge : int { S1 = 0, S2, H1, H2, G1, G2 };

inline constexpr std::array<std::string_view, 6> kEdgeLabels = {
    "S1", "S2", "H1", "H2", "G1", "G2"};

// Friction-cone edges of the three contacts, fixed order S1..G2.
struct WrenchBasis {
  std::array<Wrench, 6> wrenches{};

  const Wrench& operator[](ContactEdge e) const {
    return wrenches[static_cast<std::size_t>(e)];
  }
};

// Unit contact wrenches for contacts S (finger on the outer surface),
// H (finger on the hole rim) and G (ground corner).
WrenchBasis basis_wrenches(const ObjectSpec& object, const GraspConfig& cfg,
                           const FrictionSet& friction);

// (0, 0, -m*g); acts at the reference point so carries no moment.
Wrench gravity_wrench(const ObjectSpec& object);

}  // namespace holegrasp
