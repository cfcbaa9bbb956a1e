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

#include "holegrasp/holegrasp.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>
#include <variant>

#include "holegrasp/io.hpp"

using namespace holegrasp;

struct hg_catalog {
  Catalog catalog;
};

struct hg_object {
  CatalogEntry entry;
  HoleContact contact;
};

struct hg_region {
  std::variant<RegionMap, ContactRatioMap> map;
  CatalogEntry entry;

  const FeasibilityGrid& grid() const {
    return std::visit([](const auto& m) -> const FeasibilityGrid& { return m.grid; }, map);
  }
};

struct hg_plan {
  PivotPlan plan;
  ObjectSpec object;
  GraspConfig cfg;
};

struct hg_align {
  AlignPlan plan;
};

struct hg_trajectory {
  GraspTrajectory traj;
  double alpha;
  FrictionSet friction;
};

namespace {

thread_local std::string g_last_error;

// Bad enum or index passed across the C boundary.
struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

hg_status fail(hg_status code, std::string message) {
  g_last_error = std::move(message);
  return code;
}

// Runs `body`, translating library exceptions into status codes.
template <class F>
hg_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const InvalidArgument& e) {
    return fail(HG_ERR_INVALID_ARGUMENT, e.what());
  } catch (const ValidationError& e) {
    return fail(HG_ERR_VALIDATION, e.what());
  } catch (const DomainError& e) {
    return fail(HG_ERR_VALIDATION, e.what());
  } catch (const IoError& e) {
    return fail(HG_ERR_IO, e.what());
  } catch (const ParseError& e) {
    return fail(HG_ERR_PARSE, e.what());
  } catch (const NumericalError& e) {
    return fail(HG_ERR_NUMERICAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(HG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HG_ERR_INTERNAL, "unknown error");
  }
}

#define HG_REQUIRE(ptr)                                               \
  do {                                                                \
    if ((ptr) == nullptr)                                             \
      return fail(HG_ERR_INVALID_ARGUMENT, #ptr " must not be null"); \
  } while (0)

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

FrictionSet to_friction(const hg_friction* f) {
  return f == nullptr ? FrictionSet{} : FrictionSet(f->mu_s, f->mu_h, f->mu_g);
}

StabilityMode to_mode(hg_mode mode) {
  if (mode == HG_FORM_CLOSURE) return StabilityMode::form_closure;
  if (mode == HG_FORCE_BALANCE) return StabilityMode::force_balance;
  throw InvalidArgument("unknown stability mode");
}

GraspConfig config_for(const hg_object* object, double l_a, double alpha, double beta) {
  return make_config(object->entry.object, object->contact, l_a, alpha, beta);
}

WrenchBasis basis_from(const hg_wrench in[6]) {
  WrenchBasis basis;
  for (std::size_t i = 0; i < 6; ++i) basis.wrenches[i] = {in[i].moment, in[i].fx, in[i].fy};
  return basis;
}

void write_outcome(const LpOutcome& outcome, int* feasible, double coefficients[6]) {
  *feasible = outcome.feasible ? 1 : 0;
  if (coefficients != nullptr && outcome.feasible)
    for (std::size_t i = 0; i < 6; ++i) coefficients[i] = outcome.coefficients[i];
}

std::unique_ptr<hg_object> make_object(CatalogEntry entry) {
  check_object(entry.object);
  check_gripper(entry.gripper);
  auto obj = std::make_unique<hg_object>();
  obj->contact = hole_contact(entry.gripper, entry.object);
  obj->entry = std::move(entry);
  return obj;
}

}  // namespace

extern "C" {

const char* hg_version(void) { return "1.0.0"; }

const char* hg_last_error(void) { return g_last_error.c_str(); }

void hg_string_free(char* s) { std::free(s); }

hg_status hg_catalog_load(const char* path, hg_catalog** out) {
  HG_REQUIRE(path);
  HG_REQUIRE(out);
  return guarded([&] {
    *out = new hg_catalog{load_catalog(path)};
    return HG_OK;
  });
}

hg_status hg_catalog_parse(const char* json, hg_catalog** out) {
  HG_REQUIRE(json);
  HG_REQUIRE(out);
  return guarded([&] {
    *out = new hg_catalog{parse_catalog(json)};
    return HG_OK;
  });
}

size_t hg_catalog_size(const hg_catalog* catalog) {
  return catalog == nullptr ? 0 : catalog->catalog.entries().size();
}

const char* hg_catalog_name(const hg_catalog* catalog, size_t index) {
  if (catalog == nullptr || index >= catalog->catalog.entries().size()) return nullptr;
  return catalog->catalog.entries()[index].name.c_str();
}

hg_status hg_catalog_get(const hg_catalog* catalog, const char* name, hg_object** out) {
  HG_REQUIRE(catalog);
  HG_REQUIRE(name);
  HG_REQUIRE(out);
  return guarded([&] {
    const auto* entry = catalog->catalog.find(name);
    if (entry == nullptr)
      return fail(HG_ERR_NOT_FOUND, std::string("object not found in catalog: ") + name);
    *out = make_object(*entry).release();
    return HG_OK;
  });
}

void hg_catalog_free(hg_catalog* catalog) { delete catalog; }

hg_status hg_object_create(const hg_object_desc* desc, hg_object** out) {
  HG_REQUIRE(desc);
  HG_REQUIRE(out);
  return guarded([&] {
    CatalogEntry entry;
    entry.name = desc->name != nullptr ? desc->name : "";
    const double weight = desc->weight > 0.0 ? desc->weight : 1.0;
    entry.object = desc->cylinder
                       ? make_cylinder(desc->a_mm, desc->D_mm, desc->d_mm, weight)
                       : make_prism(desc->a_mm, desc->b_mm, desc->D_mm, desc->d_mm, weight);
    entry.gripper = {desc->w_mm, desc->stroke_mm};
    *out = make_object(std::move(entry)).release();
    return HG_OK;
  });
}

hg_status hg_object_describe(const hg_object* object, hg_object_desc* out) {
  HG_REQUIRE(object);
  HG_REQUIRE(out);
  const auto& e = object->entry;
  *out = {e.name.c_str(),        e.object.half_length,    e.object.half_height,
          e.object.outer_diameter, e.object.inner_diameter, e.object.weight,
          e.object.cylinder ? 1 : 0, e.gripper.finger_width, e.gripper.stroke};
  return HG_OK;
}

hg_status hg_object_hole_contact(const hg_object* object, double* x_mm, double* delta_mm) {
  HG_REQUIRE(object);
  if (x_mm != nullptr) *x_mm = object->contact.x;
  if (delta_mm != nullptr) *delta_mm = object->contact.delta;
  return HG_OK;
}

void hg_object_free(hg_object* object) { delete object; }

hg_status hg_validate_config(const hg_object* object, double l_a, double alpha, double beta,
                             char** issues) {
  HG_REQUIRE(object);
  return guarded([&] {
    if (issues != nullptr) *issues = nullptr;
    GraspConfig cfg{l_a, alpha, beta, object->contact.delta, object->contact.x};
    const auto found = validate_config(cfg, object->entry.object);
    if (found.empty()) return HG_OK;
    std::string text;
    for (const auto& issue : found) text += issue.code + ": " + issue.message + "\n";
    if (issues != nullptr) *issues = copy_string(text);
    return fail(HG_ERR_VALIDATION, text);
  });
}

hg_status hg_wrench_basis(const hg_object* object, double l_a, double alpha, double beta,
                          const hg_friction* friction, hg_wrench out[6]) {
  HG_REQUIRE(object);
  HG_REQUIRE(out);
  return guarded([&] {
    const auto basis = basis_wrenches(object->entry.object, config_for(object, l_a, alpha, beta),
                                      to_friction(friction));
    for (std::size_t i = 0; i < 6; ++i)
      out[i] = {basis.wrenches[i].moment, basis.wrenches[i].fx, basis.wrenches[i].fy};
    return HG_OK;
  });
}

hg_status hg_wrench_csv(const hg_object* object, double l_a, double alpha, double beta,
                        const hg_friction* friction, char** csv) {
  HG_REQUIRE(object);
  HG_REQUIRE(csv);
  return guarded([&] {
    const auto basis = basis_wrenches(object->entry.object, config_for(object, l_a, alpha, beta),
                                      to_friction(friction));
    *csv = copy_string(wrench_csv(basis));
    return HG_OK;
  });
}

hg_status hg_gravity_wrench(const hg_object* object, hg_wrench* out) {
  HG_REQUIRE(object);
  HG_REQUIRE(out);
  const auto g = gravity_wrench(object->entry.object);
  *out = {g.moment, g.fx, g.fy};
  return HG_OK;
}

hg_status hg_solve_force_balance(const hg_wrench basis[6], const hg_wrench* ext, int* feasible,
                                 double coefficients[6]) {
  HG_REQUIRE(basis);
  HG_REQUIRE(ext);
  HG_REQUIRE(feasible);
  return guarded([&] {
    write_outcome(solve_force_balance(basis_from(basis), {ext->moment, ext->fx, ext->fy}),
                  feasible, coefficients);
    return HG_OK;
  });
}

hg_status hg_solve_form_closure(const hg_wrench basis[6], int* feasible,
                                double coefficients[6]) {
  HG_REQUIRE(basis);
  HG_REQUIRE(feasible);
  return guarded([&] {
    write_outcome(solve_form_closure(basis_from(basis)), feasible, coefficients);
    return HG_OK;
  });
}

hg_status hg_is_stable(const hg_object* object, double l_a, double alpha, double beta,
                       const hg_friction* friction, hg_mode mode, int* stable) {
  HG_REQUIRE(object);
  HG_REQUIRE(stable);
  return guarded([&] {
    *stable = is_stable(object->entry.object, config_for(object, l_a, alpha, beta),
                        to_friction(friction), to_mode(mode))
                  ? 1
                  : 0;
    return HG_OK;
  });
}

hg_status hg_region_sweep(const hg_object* object, const hg_friction* friction, double l_a,
                          const double* alphas, size_t n_alpha, const double* betas,
                          size_t n_beta, hg_mode mode, unsigned threads, hg_region** out) {
  HG_REQUIRE(object);
  HG_REQUIRE(alphas);
  HG_REQUIRE(betas);
  HG_REQUIRE(out);
  return guarded([&] {
    auto map = region_sweep(object->entry.object, object->contact, to_friction(friction), l_a,
                            {alphas, alphas + n_alpha}, {betas, betas + n_beta},
                            to_mode(mode), {threads, {}});
    *out = new hg_region{std::move(map), object->entry};
    return HG_OK;
  });
}

hg_status hg_contact_ratio_sweep(const hg_object* object, const hg_friction* friction,
                                 double alpha, const double* ratios, size_t n_ratio,
                                 const double* betas, size_t n_beta, hg_mode mode,
                                 unsigned threads, hg_region** out) {
  HG_REQUIRE(object);
  HG_REQUIRE(ratios);
  HG_REQUIRE(betas);
  HG_REQUIRE(out);
  return guarded([&] {
    auto map = contact_ratio_sweep(object->entry.object, object->contact, to_friction(friction),
                                   alpha, {ratios, ratios + n_ratio}, {betas, betas + n_beta},
                                   to_mode(mode), {threads, {}});
    *out = new hg_region{std::move(map), object->entry};
    return HG_OK;
  });
}

size_t hg_region_rows(const hg_region* region) {
  return region == nullptr ? 0 : region->grid().rows.size();
}

size_t hg_region_cols(const hg_region* region) {
  return region == nullptr ? 0 : region->grid().betas.size();
}

int hg_region_cell(const hg_region* region, size_t row, size_t col) {
  if (region == nullptr) return -1;
  const auto& g = region->grid();
  if (row >= g.rows.size() || col >= g.betas.size()) return -1;
  return g.at(row, col) ? 1 : 0;
}

size_t hg_region_feasible_count(const hg_region* region) {
  return region == nullptr ? 0 : region->grid().feasible_count();
}

hg_status hg_region_csv(const hg_region* region, char** csv) {
  HG_REQUIRE(region);
  HG_REQUIRE(csv);
  return guarded([&] {
    *csv = copy_string(std::visit(
        [](const auto& m) {
          if constexpr (std::is_same_v<std::decay_t<decltype(m)>, RegionMap>)
            return region_csv(m);
          else
            return contact_ratio_map_csv(m);
        },
        region->map));
    return HG_OK;
  });
}

hg_status hg_region_json(const hg_region* region, char** json) {
  HG_REQUIRE(region);
  HG_REQUIRE(json);
  return guarded([&] {
    *json = copy_string(std::visit(
        [&](const auto& m) {
          if constexpr (std::is_same_v<std::decay_t<decltype(m)>, RegionMap>)
            return region_json(m, region->entry);
          else
            return contact_ratio_map_json(m, region->entry);
        },
        region->map));
    return HG_OK;
  });
}

void hg_region_free(hg_region* region) { delete region; }

hg_status hg_beta_upper_bound(const hg_object* object, const hg_friction* friction, double l_a,
                              double alpha, hg_beta_bound* out) {
  HG_REQUIRE(object);
  HG_REQUIRE(out);
  return guarded([&] {
    const auto bound = beta_upper_bound(object->entry.object, object->contact,
                                        to_friction(friction), l_a, alpha);
    out->kind = bound.kind == BetaBound::Kind::finite       ? HG_BETA_FINITE
                : bound.kind == BetaBound::Kind::not_finite ? HG_BETA_NOT_FINITE
                                                            : HG_BETA_INFEASIBLE_AT_START;
    out->value_rad = bound.value;
    out->transitions = bound.transitions.size();
    return HG_OK;
  });
}

hg_status hg_min_alpha(const hg_object* object, const hg_friction* friction, double l_a,
                       double beta, double resolution, int* found, double* alpha) {
  HG_REQUIRE(object);
  HG_REQUIRE(found);
  return guarded([&] {
    const auto result = min_alpha(object->entry.object, object->contact, to_friction(friction),
                                  l_a, beta, resolution);
    *found = result.has_value() ? 1 : 0;
    if (result && alpha != nullptr) *alpha = *result;
    return HG_OK;
  });
}

hg_status hg_plan_pivot(const hg_object* object, double l_a, double alpha,
                        const hg_pose* object_pose, double theta, int waypoints,
                        const hg_friction* clamp_friction, hg_plan** out) {
  HG_REQUIRE(object);
  HG_REQUIRE(out);
  return guarded([&] {
    const auto& spec = object->entry.object;
    const ObjectPose pose = object_pose != nullptr
                                ? ObjectPose{object_pose->x, object_pose->y, object_pose->phi}
                                : resting_pose(spec);
    const auto cfg = config_for(object, l_a, alpha, pose.tilt);
    PivotOptions options;
    options.waypoints = waypoints;
    if (clamp_friction != nullptr) options.clamp_to_beta_ub = to_friction(clamp_friction);
    *out = new hg_plan{plan_pivot(spec, cfg, pose, theta, options), spec, cfg};
    return HG_OK;
  });
}

size_t hg_plan_size(const hg_plan* plan) {
  return plan == nullptr ? 0 : plan->plan.waypoints.size();
}

hg_status hg_plan_waypoint(const hg_plan* plan, size_t index, hg_pose* out) {
  HG_REQUIRE(plan);
  HG_REQUIRE(out);
  if (index >= plan->plan.waypoints.size())
    return fail(HG_ERR_INVALID_ARGUMENT, "waypoint index out of range");
  const auto& w = plan->plan.waypoints[index];
  *out = {w.x, w.y, w.phi};
  return HG_OK;
}

hg_status hg_plan_geometry(const hg_plan* plan, double* pc_x, double* pc_y, double* radius,
                           double* theta) {
  HG_REQUIRE(plan);
  if (pc_x != nullptr) *pc_x = plan->plan.pivot.x;
  if (pc_y != nullptr) *pc_y = plan->plan.pivot.y;
  if (radius != nullptr) *radius = plan->plan.radius;
  if (theta != nullptr) *theta = plan->plan.theta;
  return HG_OK;
}

hg_status hg_plan_final_object_pose(const hg_plan* plan, hg_pose* out) {
  HG_REQUIRE(plan);
  HG_REQUIRE(out);
  const auto& p = plan->plan.object_end;
  *out = {p.x, p.y, p.tilt};
  return HG_OK;
}

hg_status hg_plan_json(const hg_plan* plan, char** json) {
  HG_REQUIRE(plan);
  HG_REQUIRE(json);
  return guarded([&] {
    *json = copy_string(pivot_plan_json(plan->plan));
    return HG_OK;
  });
}

void hg_plan_free(hg_plan* plan) { delete plan; }

hg_status hg_plan_align(const hg_plan* plan, int waypoints, hg_align** out) {
  HG_REQUIRE(plan);
  HG_REQUIRE(out);
  return guarded([&] {
    *out = new hg_align{align_phase(plan->object, plan->cfg, plan->plan.object_end, waypoints)};
    return HG_OK;
  });
}

size_t hg_align_size(const hg_align* align) {
  return align == nullptr ? 0 : align->plan.waypoints.size();
}

hg_status hg_align_waypoint(const hg_align* align, size_t index, hg_pose* out) {
  HG_REQUIRE(align);
  HG_REQUIRE(out);
  if (index >= align->plan.waypoints.size())
    return fail(HG_ERR_INVALID_ARGUMENT, "waypoint index out of range");
  const auto& w = align->plan.waypoints[index];
  *out = {w.x, w.y, w.phi};
  return HG_OK;
}

hg_status hg_align_fingertip(const hg_align* align, double* x, double* y) {
  HG_REQUIRE(align);
  if (x != nullptr) *x = align->plan.fingertip.x;
  if (y != nullptr) *y = align->plan.fingertip.y;
  return HG_OK;
}

hg_status hg_align_json(const hg_align* align, char** json) {
  HG_REQUIRE(align);
  HG_REQUIRE(json);
  return guarded([&] {
    *json = copy_string(align_plan_json(align->plan));
    return HG_OK;
  });
}

void hg_align_free(hg_align* align) { delete align; }

hg_status hg_simulate(const hg_object* object, const hg_friction* friction, double alpha,
                      const double* knot_beta, const double* knot_la, size_t n_knots,
                      const double* betas, size_t n_beta, hg_trajectory** out) {
  HG_REQUIRE(object);
  HG_REQUIRE(knot_beta);
  HG_REQUIRE(knot_la);
  HG_REQUIRE(out);
  if (n_beta > 0 && betas == nullptr)
    return fail(HG_ERR_INVALID_ARGUMENT, "betas must not be null");
  return guarded([&] {
    std::vector<std::pair<double, double>> knots;
    for (size_t i = 0; i < n_knots; ++i) knots.emplace_back(knot_beta[i], knot_la[i]);
    const ContactSchedule schedule(std::move(knots));
    const auto fr = to_friction(friction);
    std::vector<double> grid;
    if (n_beta > 0) grid.assign(betas, betas + n_beta);
    auto traj = simulate_grasp_trajectory(object->entry.object, object->contact, fr, alpha,
                                          schedule, grid);
    *out = new hg_trajectory{std::move(traj), alpha, fr};
    return HG_OK;
  });
}

size_t hg_trajectory_size(const hg_trajectory* traj) {
  return traj == nullptr ? 0 : traj->traj.samples.size();
}

hg_status hg_trajectory_sample(const hg_trajectory* traj, size_t index, double* beta,
                               double* l_a, int* stable) {
  HG_REQUIRE(traj);
  if (index >= traj->traj.samples.size())
    return fail(HG_ERR_INVALID_ARGUMENT, "sample index out of range");
  const auto& s = traj->traj.samples[index];
  if (beta != nullptr) *beta = s.tilt;
  if (l_a != nullptr) *l_a = s.contact_ratio;
  if (stable != nullptr) *stable = s.stable ? 1 : 0;
  return HG_OK;
}

size_t hg_trajectory_stable_prefix(const hg_trajectory* traj) {
  return traj == nullptr ? 0 : traj->traj.stable_prefix();
}

hg_status hg_trajectory_csv(const hg_trajectory* traj, char** csv) {
  HG_REQUIRE(traj);
  HG_REQUIRE(csv);
  return guarded([&] {
    *csv = copy_string(trajectory_csv(traj->traj));
    return HG_OK;
  });
}

hg_status hg_trajectory_json(const hg_trajectory* traj, char** json) {
  HG_REQUIRE(traj);
  HG_REQUIRE(json);
  return guarded([&] {
    *json = copy_string(trajectory_json(traj->traj, traj->alpha, traj->friction));
    return HG_OK;
  });
}

void hg_trajectory_free(hg_trajectory* traj) { delete traj; }

hg_status hg_wilson_ci(int successes, int trials, double z, double* lower, double* upper) {
  HG_REQUIRE(lower);
  HG_REQUIRE(upper);
  return guarded([&] {
    const auto ci = wilson_ci({successes, trials, z});
    *lower = ci.lower;
    *upper = ci.upper;
    return HG_OK;
  });
}

hg_status hg_ci_table(const char* const* names, const int* successes, const int* trials,
                      size_t n, double z, int as_csv, char** out) {
  HG_REQUIRE(out);
  if (n > 0 && (successes == nullptr || trials == nullptr))
    return fail(HG_ERR_INVALID_ARGUMENT, "successes and trials must not be null");
  return guarded([&] {
    std::vector<NamedRecord> records;
    records.reserve(n);
    for (size_t i = 0; i < n; ++i) {
      std::string name = names != nullptr && names[i] != nullptr
                             ? names[i]
                             : std::to_string(successes[i]) + "/" + std::to_string(trials[i]);
      records.push_back({std::move(name), {successes[i], trials[i], z}});
    }
    const auto rows = batch_ci(records);
    *out = copy_string(as_csv ? ci_table_csv(rows) : ci_table_text(rows));
    return HG_OK;
  });
}

}  // extern "C"
