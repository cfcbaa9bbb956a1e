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

#include <optional>
#include <utility>
#include <vector>

#include "holegrasp/stability.hpp"

namespace holegrasp {

// World frame: ground is y = 0, gravity along -y, x to the right. Angles are
// counter-clockwise.
struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

Point2 rotate_about(const Point2& p, const Point2& center, double angle);
double distance(const Point2& p, const Point2& q);

// Gripper pose: position of the jaw midpoint and the world angle of the
// palm-to-fingertip axis.
struct GripperPose {
  double x = 0.0;
  double y = 0.0;
  double phi = 0.0;

  Point2 position() const { return {x, y}; }
};

// Object pose: world position of the geometric center and tilt beta of the
// long axis. The hole opens on the +x end face in the object frame.
struct ObjectPose {
  double x = 0.0;
  double y = 0.0;
  double tilt = 0.0;
};

// Object lying on the ground with its center at x = center_x.
ObjectPose resting_pose(const ObjectSpec& object, double center_x = 0.0);

// Contact points in world coordinates for a given object pose.
struct ContactPoints {
  Point2 s;  // finger on the outer surface
  Point2 h;  // finger on the hole rim
  Point2 g;  // ground corner (pivot)
};

ContactPoints contact_points(const ObjectSpec& object, const GraspConfig& cfg,
                             const ObjectPose& pose);

// Gripper pose at the grasp: midpoint of S and H, axis at beta - pi/2 - alpha.
GripperPose grasp_pose(const ObjectSpec& object, const GraspConfig& cfg,
                       const ObjectPose& pose);

struct PivotPlan {
  GripperPose start;
  Point2 pivot;          // P_c, the ground corner G
  double radius = 0.0;   // |P_i - P_c|
  double theta = 0.0;    // total pivot angle
  std::vector<GripperPose> waypoints;
  ObjectPose object_start;
  ObjectPose object_end;

  // Object tilt carried by waypoint k.
  double object_tilt_at(std::size_t k) const;
};

struct PivotOptions {
  int waypoints = 64;
  // When set, theta is clamped to the finite beta_ub (if any) for this
  // friction set, measured from the starting tilt.
  std::optional<FrictionSet> clamp_to_beta_ub;
};

// Circular arc of the gripper about the object's ground corner, with the
// gripper rigidly attached to the rotating object. Throws DomainError for
// theta outside [0, pi/2], fewer than two waypoints, or a gripper center
// below the ground.
PivotPlan plan_pivot(const ObjectSpec& object, const GraspConfig& cfg,
                     const ObjectPose& object_pose, double theta,
                     const PivotOptions& options = {});

struct AlignPlan {
  Point2 fingertip;  // H, held fixed
  std::vector<GripperPose> waypoints;
};

// Rotates the gripper about H until its axis is parallel to the (vertical)
// object: the relative angle steps uniformly from alpha down to 0.
AlignPlan align_phase(const ObjectSpec& object, const GraspConfig& cfg,
                      const ObjectPose& vertical_pose, int waypoints);

// Relative gripper/object angle carried by an align waypoint.
double relative_angle(const GripperPose& pose, const ObjectPose& object_pose);

// Prescribed l_a(beta): piecewise linear through knots with increasing beta
// and non-increasing l_a (sliding at S only shortens l).
class ContactSchedule {
 public:
  // Throws DomainError on fewer than one knot, non-increasing beta,
  // increasing l_a or l_a outside (0, 1].
  explicit ContactSchedule(std::vector<std::pair<double, double>> knots);

  static ContactSchedule linear(double ratio_start, double ratio_end,
                                double beta_start = 0.0, double beta_end = kPi / 2.0);
  static ContactSchedule constant(double ratio, double beta_start = 0.0,
                                  double beta_end = kPi / 2.0);

  double at(double beta) const;
  double beta_begin() const { return knots_.front().first; }
  double beta_end() const { return knots_.back().first; }
  const std::vector<std::pair<double, double>>& knots() const { return knots_; }

 private:
  std::vector<std::pair<double, double>> knots_;
};

struct TrajectorySample {
  double tilt = 0.0;
  double contact_ratio = 0.0;
  bool stable = false;
};

struct GraspTrajectory {
  std::vector<TrajectorySample> samples;
  std::pair<double, double> initial_mark;  // (beta, l_a)
  std::pair<double, double> final_mark;

  // Number of leading samples that are stable.
  std::size_t stable_prefix() const;
};

// Force-balance stability at (l_a(beta), alpha, beta) for each beta sample.
// beta_grid must be non-decreasing and inside the schedule's domain.
GraspTrajectory simulate_grasp_trajectory(const ObjectSpec& object,
                                          const HoleContact& contact,
                                          const FrictionSet& friction,
                                          double gripper_angle,
                                          const ContactSchedule& schedule,
                                          const std::vector<double>& beta_grid,
                                          const LpTolerances& tol = {});

}  // namespace holegrasp
