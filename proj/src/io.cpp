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

#include "holegrasp/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace holegrasp {
namespace {

using ordered_json = nlohmann::ordered_json;

// Rounds to nine significant digits so nlohmann's shortest round-trip output
// matches format_number.
double sig9(double v) { return std::stod(format_number(v)); }

double required_number(const ordered_json& j, const char* key, const std::string& who) {
  if (!j.contains(key) || !j.at(key).is_number())
    throw ParseError(who + ": missing numeric field \"" + key + "\"");
  return j.at(key).get<double>();
}

CatalogEntry parse_entry(const ordered_json& j) {
  if (!j.is_object()) throw ParseError("catalog entry must be a JSON object");
  if (!j.contains("name") || !j.at("name").is_string())
    throw ParseError("catalog entry: missing string field \"name\"");
  CatalogEntry e;
  e.name = j.at("name").get<std::string>();

  const double a = required_number(j, "a_mm", e.name);
  const double outer = required_number(j, "D_mm", e.name);
  const double inner = required_number(j, "d_mm", e.name);
  const bool cylinder = j.value("cylinder", true);
  double weight = 1.0;
  if (j.contains("weight")) weight = required_number(j, "weight", e.name);

  const bool has_b = j.contains("b_mm") && !j.at("b_mm").is_null();
  if (has_b && !j.at("b_mm").is_number())
    throw ParseError(e.name + ": \"b_mm\" must be a number or null");

  try {
    if (cylinder) {
      e.object = make_cylinder(a, outer, inner, weight);
      if (has_b && j.at("b_mm").get<double>() != e.object.half_height)
        throw DomainError("cylinders require b_mm = D_mm / 2");
    } else {
      if (!has_b) throw DomainError("prisms require an explicit b_mm");
      e.object = make_prism(a, j.at("b_mm").get<double>(), outer, inner, weight);
    }
    if (!j.contains("gripper") || !j.at("gripper").is_object())
      throw ParseError(e.name + ": missing \"gripper\" object");
    const auto& g = j.at("gripper");
    e.gripper = {required_number(g, "w_mm", e.name + ".gripper"),
                 required_number(g, "stroke_mm", e.name + ".gripper")};
    check_gripper(e.gripper);
  } catch (const DomainError& err) {
    throw DomainError(e.name + ": " + err.what());
  }
  return e;
}

ordered_json friction_json(const FrictionSet& f) {
  return {{"mu_S", sig9(f.mu_s())}, {"mu_H", sig9(f.mu_h())}, {"mu_G", sig9(f.mu_g())}};
}

ordered_json axis_deg(const std::vector<double>& axis) {
  ordered_json out = ordered_json::array();
  for (double v : axis) out.push_back(sig9(rad_to_deg(v)));
  return out;
}

ordered_json axis_plain(const std::vector<double>& axis) {
  ordered_json out = ordered_json::array();
  for (double v : axis) out.push_back(sig9(v));
  return out;
}

std::string grid_csv(const FeasibilityGrid& grid, const char* row_label, bool rows_in_deg) {
  std::string out = row_label;
  for (double b : grid.betas) {
    out += ',';
    out += format_number(rad_to_deg(b));
  }
  out += '\n';
  for (std::size_t i = 0; i < grid.rows.size(); ++i) {
    out += format_number(rows_in_deg ? rad_to_deg(grid.rows[i]) : grid.rows[i]);
    for (std::size_t j = 0; j < grid.betas.size(); ++j) out += grid.at(i, j) ? ",1" : ",0";
    out += '\n';
  }
  return out;
}

ordered_json entry_json(const CatalogEntry& e) {
  ordered_json j;
  j["name"] = e.name;
  j["a_mm"] = sig9(e.object.half_length);
  j["b_mm"] = sig9(e.object.half_height);
  j["D_mm"] = sig9(e.object.outer_diameter);
  j["d_mm"] = sig9(e.object.inner_diameter);
  j["cylinder"] = e.object.cylinder;
  j["weight"] = sig9(e.object.weight);
  j["gripper"] = {{"w_mm", sig9(e.gripper.finger_width)},
                  {"stroke_mm", sig9(e.gripper.stroke)}};
  return j;
}

ordered_json pose_json(const GripperPose& p) {
  return {{"x", sig9(p.x)}, {"y", sig9(p.y)}, {"phi", sig9(p.phi)}};
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string percent(double proportion) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", 100.0 * proportion);
  return buf;
}

}  // namespace

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

double rad_to_deg(double rad) { return rad * 180.0 / kPi; }
double deg_to_rad(double deg) { return deg * kPi / 180.0; }

Catalog::Catalog(std::vector<CatalogEntry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    for (std::size_t k = 0; k < i; ++k)
      if (entries_[i].name == entries_[k].name)
        throw ParseError("duplicate object name in catalog: " + entries_[i].name);
}

const CatalogEntry* Catalog::find(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

Catalog parse_catalog(std::string_view json) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("catalog is not valid JSON: ") + e.what());
  }
  std::vector<CatalogEntry> entries;
  if (doc.is_array()) {
    for (const auto& item : doc) entries.push_back(parse_entry(item));
  } else if (doc.is_object() && doc.contains("objects")) {
    if (!doc.at("objects").is_array()) throw ParseError("\"objects\" must be an array");
    for (const auto& item : doc.at("objects")) entries.push_back(parse_entry(item));
  } else {
    entries.push_back(parse_entry(doc));
  }
  return Catalog(std::move(entries));
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open catalog file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

std::string catalog_entry_json(const CatalogEntry& entry) { return dump(entry_json(entry)); }

std::string region_csv(const RegionMap& map) { return grid_csv(map.grid, "alpha_deg", true); }

std::string region_json(const RegionMap& map, const CatalogEntry& entry) {
  ordered_json j;
  j["object"] = entry_json(entry);
  j["friction"] = friction_json(map.friction);
  j["l_a"] = sig9(map.contact_ratio);
  j["mode"] = to_string(map.mode);
  j["rows"] = "alpha_deg";
  j["alpha_deg"] = axis_deg(map.grid.rows);
  j["beta_deg"] = axis_deg(map.grid.betas);
  j["feasible_cells"] = map.grid.feasible_count();
  return dump(j);
}

std::string contact_ratio_map_csv(const ContactRatioMap& map) {
  return grid_csv(map.grid, "l_a", false);
}

std::string contact_ratio_map_json(const ContactRatioMap& map, const CatalogEntry& entry) {
  ordered_json j;
  j["object"] = entry_json(entry);
  j["friction"] = friction_json(map.friction);
  j["alpha_rad"] = sig9(map.gripper_angle);
  j["mode"] = to_string(map.mode);
  j["rows"] = "l_a";
  j["l_a"] = axis_plain(map.grid.rows);
  j["beta_deg"] = axis_deg(map.grid.betas);
  j["feasible_cells"] = map.grid.feasible_count();
  return dump(j);
}

std::string pivot_plan_json(const PivotPlan& plan) {
  ordered_json j;
  j["p_c"] = {sig9(plan.pivot.x), sig9(plan.pivot.y)};
  j["r"] = sig9(plan.radius);
  j["theta_rad"] = sig9(plan.theta);
  ordered_json wps = ordered_json::array();
  for (const auto& w : plan.waypoints) wps.push_back(pose_json(w));
  j["waypoints"] = std::move(wps);
  return dump(j);
}

std::string align_plan_json(const AlignPlan& plan) {
  ordered_json j;
  j["fingertip"] = {sig9(plan.fingertip.x), sig9(plan.fingertip.y)};
  ordered_json wps = ordered_json::array();
  for (const auto& w : plan.waypoints) wps.push_back(pose_json(w));
  j["waypoints"] = std::move(wps);
  return dump(j);
}

std::string trajectory_csv(const GraspTrajectory& traj) {
  std::string out = "beta_deg,l_a,stable\n";
  for (const auto& s : traj.samples) {
    out += format_number(rad_to_deg(s.tilt));
    out += ',';
    out += format_number(s.contact_ratio);
    out += s.stable ? ",1\n" : ",0\n";
  }
  return out;
}

std::string trajectory_json(const GraspTrajectory& traj, double gripper_angle,
                            const FrictionSet& friction) {
  ordered_json j;
  j["alpha_rad"] = sig9(gripper_angle);
  j["friction"] = friction_json(friction);
  j["initial_mark"] = {{"beta_deg", sig9(rad_to_deg(traj.initial_mark.first))},
                       {"l_a", sig9(traj.initial_mark.second)}};
  j["final_mark"] = {{"beta_deg", sig9(rad_to_deg(traj.final_mark.first))},
                     {"l_a", sig9(traj.final_mark.second)}};
  j["samples"] = traj.samples.size();
  j["stable_prefix"] = traj.stable_prefix();
  return dump(j);
}

std::string wrench_csv(const WrenchBasis& basis) {
  std::string out = "label,m,fx,fy\n";
  for (std::size_t i = 0; i < basis.wrenches.size(); ++i) {
    const auto& w = basis.wrenches[i];
    out += std::string(kEdgeLabels[i]) + ',' + format_number(w.moment) + ',' +
           format_number(w.fx) + ',' + format_number(w.fy) + '\n';
  }
  return out;
}

std::string ci_table_text(const std::vector<NamedInterval>& rows) {
  std::size_t name_width = 6;
  for (const auto& r : rows) name_width = std::max(name_width, r.name.size());
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-*s  %9s  %9s  %12s  %12s\n",
                static_cast<int>(name_width), "object", "success", "rate",
                "95% CI lower", "95% CI upper");
  out += line;
  for (const auto& r : rows) {
    const std::string ratio =
        std::to_string(r.record.successes) + "/" + std::to_string(r.record.trials);
    const double rate = static_cast<double>(r.record.successes) / r.record.trials;
    std::snprintf(line, sizeof line, "%-*s  %9s  %9s  %12s  %12s\n",
                  static_cast<int>(name_width), r.name.c_str(), ratio.c_str(),
                  percent(rate).c_str(), percent(r.interval.lower).c_str(),
                  percent(r.interval.upper).c_str());
    out += line;
  }
  return out;
}

std::string ci_table_csv(const std::vector<NamedInterval>& rows) {
  std::string out = "name,successes,trials,z,lower,upper\n";
  for (const auto& r : rows) {
    out += r.name + ',' + std::to_string(r.record.successes) + ',' +
           std::to_string(r.record.trials) + ',' + format_number(r.record.z) + ',' +
           format_number(r.interval.lower) + ',' + format_number(r.interval.upper) + '\n';
  }
  return out;
}

}  // namespace holegrasp
