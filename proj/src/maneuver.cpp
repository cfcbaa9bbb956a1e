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

#include "holegrasp/maneuver.hpp"

#include <cmath>
#include <string>

namespace holegrasp {
namespace {

Point2 to_world(const ObjectPose& pose, double ox, double oy) {
  const double c = std::cos(pose.tilt);
  const double s = std::sin(pose.tilt);
  return {pose.x + c * ox - s * oy, pose.y + s * ox + c * oy};
}

void require_valid(const GraspConfig& cfg, const ObjectSpec& object) {
  auto issues = validate_config(cfg, object);
  if (!issues.empty()) throw ValidationError(std::move(issues));
}

constexpr double kGroundSlack = 1e-9;

}  // namespace

Point2 rotate_about(const Point2& p, const Point2& center, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const double dx = p.x - center.x;
  const double dy = p.y - center.y;
  return {center.x + c * dx - s * dy, center.y + s * dx + c * dy};
}

double distance(const Point2& p, const Point2& q) {
  return std::hypot(p.x - q.x, p.y - q.y);
}

ObjectPose resting_pose(const ObjectSpec& object, double center_x) {
  return {center_x, object.half_height, 0.0};
}

ContactPoints contact_points(const ObjectSpec& object, const GraspConfig& cfg,
                             const ObjectPose& pose) {
  const double a = object.half_length;
  const double b = object.half_height;
  const double l = cfg.contact_distance(object);
  return {to_world(pose, a - l, b), to_world(pose, a, b - cfg.delta),
          to_world(pose, -a, -b)};
}

GripperPose grasp_pose(const ObjectSpec& object, const GraspConfig& cfg,
                       const ObjectPose& pose) {
  const auto pts = contact_points(object, cfg, pose);
  return {0.5 * (pts.s.x + pts.h.x), 0.5 * (pts.s.y + pts.h.y),
          pose.tilt - kPi / 2.0 - cfg.gripper_angle};
}

double PivotPlan::object_tilt_at(std::size_t k) const {
  if (waypoints.size() < 2) return object_start.tilt;
  const double frac = static_cast<double>(k) / static_cast<double>(waypoints.size() - 1);
  return object_start.tilt + theta * frac;
}

PivotPlan plan_pivot(const ObjectSpec& object, const GraspConfig& cfg,
                     const ObjectPose& object_pose, double theta,
                     const PivotOptions& options) {
  require_valid(cfg, object);
  if (options.waypoints < 2) throw DomainError("pivot plan needs at least 2 waypoints");
  if (!(std::isfinite(theta) && theta >= 0.0))
    throw DomainError("pivot angle theta must be >= 0");
  if (theta > kPi / 2.0) throw DomainError("pivot angle theta must not exceed pi/2");
  if (!(object_pose.tilt >= 0.0 && object_pose.tilt <= kPi / 2.0))
    throw DomainError("object tilt must lie in [0, pi/2]");

  if (options.clamp_to_beta_ub) {
    const auto bound = beta_upper_bound(object, {cfg.x, cfg.delta},
                                        *options.clamp_to_beta_ub, cfg.contact_ratio,
                                        cfg.gripper_angle);
    if (bound.finite()) theta = std::min(theta, std::max(0.0, bound.value - object_pose.tilt));
  }
  if (object_pose.tilt + theta > kPi / 2.0 + 1e-12)
    throw DomainError("object tilt after pivoting would exceed pi/2");

  GraspConfig at_start = cfg;
  at_start.tilt = object_pose.tilt;

  PivotPlan plan;
  plan.start = grasp_pose(object, at_start, object_pose);
  plan.pivot = contact_points(object, at_start, object_pose).g;
  plan.radius = distance(plan.start.position(), plan.pivot);
  plan.theta = theta;
  plan.object_start = object_pose;

  const int n = options.waypoints;
  plan.waypoints.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double t = theta * (static_cast<double>(k) / (n - 1));
    const Point2 p = rotate_about(plan.start.position(), plan.pivot, t);
    if (p.y < -kGroundSlack)
      throw DomainError("gripper center passes below the ground at waypoint " +
                        std::to_string(k));
    plan.waypoints.push_back({p.x, p.y, plan.start.phi + t});
  }

  const Point2 center =
      rotate_about({object_pose.x, object_pose.y}, plan.pivot, theta);
  plan.object_end = {center.x, center.y, object_pose.tilt + theta};
  return plan;
}

double relative_angle(const GripperPose& pose, const ObjectPose& object_pose) {
  return object_pose.tilt - kPi / 2.0 - pose.phi;
}

AlignPlan align_phase(const ObjectSpec& object, const GraspConfig& cfg,
                      const ObjectPose& vertical_pose, int waypoints) {
  require_valid(cfg, object);
  if (waypoints < 2) throw DomainError("align phase needs at least 2 waypoints");
  if (std::abs(vertical_pose.tilt - kPi / 2.0) > 1e-9)
    throw DomainError("align phase expects a vertical object (beta = pi/2)");

  GraspConfig upright = cfg;
  upright.tilt = vertical_pose.tilt;
  const GripperPose start = grasp_pose(object, upright, vertical_pose);

  AlignPlan plan;
  plan.fingertip = contact_points(object, upright, vertical_pose).h;
  plan.waypoints.reserve(static_cast<std::size_t>(waypoints));
  for (int k = 0; k < waypoints; ++k) {
    // Relative angle goes alpha -> 0, so the gripper turns by alpha - rho.
    const double rho = cfg.gripper_angle * (1.0 - static_cast<double>(k) / (waypoints - 1));
    const double turn = cfg.gripper_angle - rho;
    const Point2 p = rotate_about(start.position(), plan.fingertip, turn);
    plan.waypoints.push_back({p.x, p.y, start.phi + turn});
  }
  return plan;
}

ContactSchedule::ContactSchedule(std::vector<std::pair<double, double>> knots)
    : knots_(std::move(knots)) {
  if (knots_.empty()) throw DomainError("schedule needs at least one knot");
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    const auto [beta, la] = knots_[i];
    if (!std::isfinite(beta)) throw DomainError("schedule beta must be finite");
    if (!(la > 0.0 && la <= 1.0)) throw DomainError("schedule l_a must satisfy 0 < l_a <= 1");
    if (i == 0) continue;
    if (!(beta > knots_[i - 1].first))
      throw DomainError("schedule beta knots must be strictly increasing");
    if (la > knots_[i - 1].second)
      throw DomainError("schedule l_a must be non-increasing (sliding only shortens l)");
  }
}

ContactSchedule ContactSchedule::linear(double ratio_start, double ratio_end,
                                        double beta_start, double beta_end) {
  return ContactSchedule({{beta_start, ratio_start}, {beta_end, ratio_end}});
}

ContactSchedule ContactSchedule::constant(double ratio, double beta_start,
                                          double beta_end) {
  return ContactSchedule({{beta_start, ratio}, {beta_end, ratio}});
}

double ContactSchedule::at(double beta) const {
  constexpr double kSlack = 1e-12;
  if (beta < beta_begin() - kSlack || beta > beta_end() + kSlack)
    throw DomainError("beta outside the schedule's domain");
  if (beta <= knots_.front().first) return knots_.front().second;
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    const auto [b1, l1] = knots_[i];
    if (beta <= b1) {
      const auto [b0, l0] = knots_[i - 1];
      const double t = (beta - b0) / (b1 - b0);
      return l0 + t * (l1 - l0);
    }
  }
  return knots_.back().second;
}

std::size_t GraspTrajectory::stable_prefix() const {
  std::size_t n = 0;
  while (n < samples.size() && samples[n].stable) ++n;
  return n;
}

GraspTrajectory simulate_grasp_trajectory(const ObjectSpec& object,
                                          const HoleContact& contact,
                                          const FrictionSet& friction,
                                          double gripper_angle,
                                          const ContactSchedule& schedule,
                                          const std::vector<double>& beta_grid,
                                          const LpTolerances& tol) {
  GraspTrajectory traj;
  traj.initial_mark = {schedule.beta_begin(), schedule.at(schedule.beta_begin())};
  traj.final_mark = {schedule.beta_end(), schedule.at(schedule.beta_end())};
  traj.samples.reserve(beta_grid.size());
  for (std::size_t i = 0; i < beta_grid.size(); ++i) {
    if (i > 0 && beta_grid[i] < beta_grid[i - 1])
      throw DomainError("trajectory beta grid must be non-decreasing");
    const double beta = beta_grid[i];
    const double la = schedule.at(beta);
    const auto cfg = make_config(object, contact, la, gripper_angle, beta);
    traj.samples.push_back(
        {beta, la, is_stable(object, cfg, friction, StabilityMode::force_balance, tol)});
  }
  return traj;
}

}  // namespace holegrasp
