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

#include <string>
#include <string_view>
#include <vector>

#include "holegrasp/maneuver.hpp"
#include "holegrasp/stats.hpp"

namespace holegrasp {

class IoError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Nine significant digits, "%.9g". Every number written to CSV/JSON goes
// through here so repeated runs are byte-identical.
std::string format_number(double v);

double rad_to_deg(double rad);
double deg_to_rad(double deg);

struct CatalogEntry {
  std::string name;
  ObjectSpec object;
  GripperSpec gripper;
};

class Catalog {
 public:
  Catalog() = default;
  explicit Catalog(std::vector<CatalogEntry> entries);

  const CatalogEntry* find(std::string_view name) const;
  const std::vector<CatalogEntry>& entries() const { return entries_; }

 private:
  std::vector<CatalogEntry> entries_;
};

// Accepts a single object document, an array of them, or {"objects": [...]}.
// Object schema:
//   {"name": str, "a_mm": num, "b_mm": num|null, "D_mm": num, "d_mm": num,
//    "cylinder": bool, "gripper": {"w_mm": num, "stroke_mm": num},
//    "weight": num (optional, m*g, default 1)}
Catalog parse_catalog(std::string_view json);
Catalog load_catalog(const std::string& path);

std::string catalog_entry_json(const CatalogEntry& entry);

// Header row "alpha_deg,<beta_deg...>", then one row per alpha with 0/1 cells.
std::string region_csv(const RegionMap& map);
std::string region_json(const RegionMap& map, const CatalogEntry& entry);

// Same layout with "l_a" in the first column.
std::string contact_ratio_map_csv(const ContactRatioMap& map);
std::string contact_ratio_map_json(const ContactRatioMap& map, const CatalogEntry& entry);

// {"p_c": [x, y], "r": num, "theta_rad": num, "waypoints": [{"x", "y", "phi"}]}
std::string pivot_plan_json(const PivotPlan& plan);
std::string align_plan_json(const AlignPlan& plan);

// beta_deg,l_a,stable
std::string trajectory_csv(const GraspTrajectory& traj);
std::string trajectory_json(const GraspTrajectory& traj, double gripper_angle,
                            const FrictionSet& friction);

// label,m,fx,fy
std::string wrench_csv(const WrenchBasis& basis);

// Aligned text table with percentages, and the CSV equivalent (proportions).
std::string ci_table_text(const std::vector<NamedInterval>& rows);
std::string ci_table_csv(const std::vector<NamedInterval>& rows);

}  // namespace holegrasp
