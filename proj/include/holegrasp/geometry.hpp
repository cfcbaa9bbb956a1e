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

#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace holegrasp {

inline constexpr double kPi = std::numbers::pi;

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on physical parameters does not hold (e.g. finger wider
// than the hole).
class DomainError : public Error {
 public:
  using Error::Error;
};

// The LP solver failed to terminate; indicates a bug, not a model state.
class NumericalError : public Error {
 public:
  using Error::Error;
};

struct ConfigIssue {
  std::string code;
  std::string message;
};

// One or more configuration ranges were violated. `issues()` lists each.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<ConfigIssue> issues);
  const std::vector<ConfigIssue>& issues() const noexcept { return issues_; }

 private:
  std::vector<ConfigIssue> issues_;
};

// Rigid hollow object, drawn in the plane as a 2a x 2b rectangle with a hole
// of diameter d opening on its right end face. Lengths in mm.
struct ObjectSpec {
  double half_length = 0.0;     // a
  double half_height = 0.0;     // b
  double outer_diameter = 0.0;  // D
  double inner_diameter = 0.0;  // d
  double weight = 1.0;          // m*g in solver units
  bool cylinder = true;
};

// Cylinders get b = D/2; throws DomainError on invalid dimensions.
ObjectSpec make_cylinder(double half_length, double outer_diameter,
                         double inner_diameter, double weight = 1.0);
ObjectSpec make_prism(double half_length, double half_height,
                      double outer_diameter, double inner_diameter,
                      double weight = 1.0);

// Throws DomainError naming the first violated invariant.
void check_object(const ObjectSpec& object);

struct GripperSpec {
  double finger_width = 0.0;  // w, mm
  double stroke = 0.0;        // max jaw opening, mm
};

void check_gripper(const GripperSpec& gripper);

// Distance from the finger face to the hole axis once the finger rests on the
// hole rim: x = (d/2) sqrt(1 - (w/d)^2). Requires 0 < w < d.
double compute_x(const GripperSpec& gripper, const ObjectSpec& object);

// delta = D/2 - x, the distance from contact H to the object's outer corner.
// Requires 0 < x <= d/2; x = d/2 gives the wall thickness.
double compute_delta(const ObjectSpec& object, double x);

// Location of the in-hole contact H for a given gripper/object pair.
struct HoleContact {
  double x = 0.0;
  double delta = 0.0;
};

HoleContact hole_contact(const GripperSpec& gripper, const ObjectSpec& object);

// Grasp configuration. `contact_ratio` is l_a = l / (2a), where l is the
// distance from contact S to the hole-side corner; `gripper_angle` is alpha
// and `tilt` is beta, the object-ground angle.
struct GraspConfig {
  double contact_ratio = 0.0;
  double gripper_angle = 0.0;
  double tilt = 0.0;
  double delta = 0.0;
  double x = 0.0;

  // l in mm for the given object.
  double contact_distance(const ObjectSpec& object) const {
    return 2.0 * object.half_length * contact_ratio;
  }
};

// Checks every range constraint and reports each violation separately.
// Empty result means valid. Codes:
//   l_a_out_of_range, alpha_degenerate_pinch (alpha == 0),
//   alpha_direct_hole_grasp (alpha == pi/2), alpha_out_of_range,
//   beta_out_of_range, delta_out_of_range, delta_inconsistent.
std::vector<ConfigIssue> validate_config(const GraspConfig& cfg,
                                         const ObjectSpec& object);

// Builds a configuration with delta and x derived from the contact, and
// throws ValidationError if any range is violated.
GraspConfig make_config(const ObjectSpec& object, const HoleContact& contact,
                        double contact_ratio, double gripper_angle,
                        double tilt);

}  // namespace holegrasp
