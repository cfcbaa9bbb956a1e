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

#include "holegrasp/geometry.hpp"

#include <cmath>
#include <sstream>

namespace holegrasp {
namespace {

std::string join_issues(const std::vector<ConfigIssue>& issues) {
  std::ostringstream os;
  os << "invalid grasp configuration:";
  for (const auto& issue : issues) os << " [" << issue.code << "] " << issue.message << ";";
  return os.str();
}

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

ValidationError::ValidationError(std::vector<ConfigIssue> issues)
    : Error(join_issues(issues)), issues_(std::move(issues)) {}

void check_object(const ObjectSpec& object) {
  if (!positive(object.half_length)) throw DomainError("object: a must be > 0");
  if (!positive(object.half_height)) throw DomainError("object: b must be > 0");
  if (!positive(object.outer_diameter)) throw DomainError("object: D must be > 0");
  if (!positive(object.inner_diameter) || !(object.inner_diameter < object.outer_diameter))
    throw DomainError("object: hole diameter must satisfy 0 < d < D");
  if (!positive(object.weight)) throw DomainError("object: weight m*g must be > 0");
  if (object.cylinder && object.half_height != object.outer_diameter / 2.0)
    throw DomainError("object: cylinders require b = D/2");
}

ObjectSpec make_cylinder(double half_length, double outer_diameter,
                         double inner_diameter, double weight) {
  ObjectSpec o{half_length, outer_diameter / 2.0, outer_diameter,
               inner_diameter, weight, true};
  check_object(o);
  return o;
}

ObjectSpec make_prism(double half_length, double half_height,
                      double outer_diameter, double inner_diameter,
                      double weight) {
  ObjectSpec o{half_length, half_height, outer_diameter, inner_diameter,
               weight, false};
  check_object(o);
  return o;
}

void check_gripper(const GripperSpec& gripper) {
  if (!positive(gripper.finger_width)) throw DomainError("gripper: w must be > 0");
  if (!positive(gripper.stroke)) throw DomainError("gripper: stroke must be > 0");
}

double compute_x(const GripperSpec& gripper, const ObjectSpec& object) {
  const double w = gripper.finger_width;
  const double d = object.inner_diameter;
  if (!positive(w)) throw DomainError("finger width w must be > 0");
  if (!positive(d) || !(w < d))
    throw DomainError("finger width w must be smaller than hole diameter d");
  const double ratio = w / d;
  return 0.5 * d * std::sqrt(1.0 - ratio * ratio);
}

double compute_delta(const ObjectSpec& object, double x) {
  // x = d/2 is the vanishing-finger limit and gives the wall thickness.
  if (!(x > 0.0 && x <= object.inner_diameter / 2.0))
    throw DomainError("x must satisfy 0 < x <= d/2");
  return object.outer_diameter / 2.0 - x;
}

HoleContact hole_contact(const GripperSpec& gripper, const ObjectSpec& object) {
  const double x = compute_x(gripper, object);
  return {x, compute_delta(object, x)};
}

std::vector<ConfigIssue> validate_config(const GraspConfig& cfg,
                                         const ObjectSpec& object) {
  std::vector<ConfigIssue> issues;
  const double la = cfg.contact_ratio;
  if (!(std::isfinite(la) && la > 0.0 && la <= 1.0))
    issues.push_back({"l_a_out_of_range", "l_a must satisfy 0 < l_a <= 1"});

  const double alpha = cfg.gripper_angle;
  if (alpha == 0.0) {
    issues.push_back({"alpha_degenerate_pinch",
                      "alpha = 0 degenerates to a pinch grasp (no finger in the hole)"});
  } else if (alpha == kPi / 2.0) {
    issues.push_back({"alpha_direct_hole_grasp",
                      "alpha = pi/2 is a direct hole grasp, not a pivot configuration"});
  } else if (!(std::isfinite(alpha) && alpha > 0.0 && alpha < kPi / 2.0)) {
    issues.push_back({"alpha_out_of_range", "alpha must satisfy 0 < alpha < pi/2"});
  }

  const double beta = cfg.tilt;
  if (!(std::isfinite(beta) && beta >= 0.0 && beta <= kPi / 2.0))
    issues.push_back({"beta_out_of_range", "beta must satisfy 0 <= beta <= pi/2"});

  const double half_d = object.outer_diameter / 2.0;
  if (!(std::isfinite(cfg.delta) && cfg.delta > 0.0 && cfg.delta < half_d)) {
    issues.push_back({"delta_out_of_range", "delta must satisfy 0 < delta < D/2"});
  } else if (std::abs(cfg.delta - (half_d - cfg.x)) > 1e-12 * half_d) {
    issues.push_back({"delta_inconsistent", "delta must equal D/2 - x"});
  }
  return issues;
}

GraspConfig make_config(const ObjectSpec& object, const HoleContact& contact,
                        double contact_ratio, double gripper_angle,
                        double tilt) {
  GraspConfig cfg{contact_ratio, gripper_angle, tilt, contact.delta, contact.x};
  auto issues = validate_config(cfg, object);
  if (!issues.empty()) throw ValidationError(std::move(issues));
  return cfg;
}

}  // namespace holegrasp
