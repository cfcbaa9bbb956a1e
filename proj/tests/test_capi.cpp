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

// Exercises the shared library through its C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdlib>
#include <string>

#include "doctest.h"
#include "holegrasp/holegrasp.h"

namespace {

const double kPi = 3.14159265358979323846;
const hg_friction kGround{0.0, 0.0, 0.4};
const hg_friction kAll{0.2, 0.4, 0.4};

struct Bushing {
  hg_object* obj = nullptr;
  Bushing() {
    hg_object_desc d{};
    d.name = "bushing";
    d.a_mm = 34;
    d.D_mm = 34;
    d.d_mm = 28;
    d.cylinder = 1;
    d.w_mm = 20;
    d.stroke_mm = 82;
    REQUIRE(hg_object_create(&d, &obj) == HG_OK);
  }
  ~Bushing() { hg_object_free(obj); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  hg_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and error state") {
  CHECK(std::string(hg_version()).size() > 0);
  double lo = 0, hi = 0;
  CHECK(hg_wilson_ci(11, 10, 1.96, &lo, &hi) == HG_ERR_VALIDATION);
  CHECK(std::string(hg_last_error()).size() > 0);
  CHECK(hg_wilson_ci(9, 10, 1.96, &lo, &hi) == HG_OK);
  CHECK(lo == doctest::Approx(0.595844).epsilon(1e-5));
}

TEST_CASE("null arguments are rejected") {
  CHECK(hg_catalog_load(nullptr, nullptr) == HG_ERR_INVALID_ARGUMENT);
  CHECK(hg_wilson_ci(1, 2, 1.96, nullptr, nullptr) == HG_ERR_INVALID_ARGUMENT);
  hg_catalog_free(nullptr);
  hg_object_free(nullptr);
  hg_region_free(nullptr);
  hg_string_free(nullptr);
}

TEST_CASE("catalog handles") {
  hg_catalog* cat = nullptr;
  REQUIRE(hg_catalog_load(HOLEGRASP_TEST_CATALOG, &cat) == HG_OK);
  CHECK(hg_catalog_size(cat) == 7);
  CHECK(std::string(hg_catalog_name(cat, 0)) == "bushing");
  CHECK(hg_catalog_name(cat, 99) == nullptr);
  hg_object* obj = nullptr;
  CHECK(hg_catalog_get(cat, "nope", &obj) == HG_ERR_NOT_FOUND);
  REQUIRE(hg_catalog_get(cat, "bushing", &obj) == HG_OK);
  double x = 0, delta = 0;
  CHECK(hg_object_hole_contact(obj, &x, &delta) == HG_OK);
  CHECK(x == doctest::Approx(std::sqrt(96.0)));
  hg_object_desc d{};
  CHECK(hg_object_describe(obj, &d) == HG_OK);
  CHECK(std::string(d.name) == "bushing");
  CHECK(d.b_mm == 17.0);
  hg_object_free(obj);
  hg_catalog_free(cat);

  CHECK(hg_catalog_load("/nonexistent.json", &cat) == HG_ERR_IO);
  CHECK(hg_catalog_parse("{", &cat) == HG_ERR_PARSE);
}

TEST_CASE("invalid object description") {
  hg_object_desc d{};
  d.a_mm = 34;
  d.D_mm = 34;
  d.d_mm = 28;
  d.cylinder = 1;
  d.w_mm = 30;  // wider than the hole
  d.stroke_mm = 82;
  hg_object* obj = nullptr;
  CHECK(hg_object_create(&d, &obj) == HG_ERR_VALIDATION);
  CHECK(obj == nullptr);
}

TEST_CASE("configuration validation lists issues") {
  Bushing b;
  char* issues = nullptr;
  CHECK(hg_validate_config(b.obj, 0.9, 0.3, 0.0, &issues) == HG_OK);
  CHECK(issues == nullptr);
  CHECK(hg_validate_config(b.obj, 1.5, 0.0, 0.0, &issues) == HG_ERR_VALIDATION);
  const std::string text = take(issues);
  CHECK(text.find("l_a_out_of_range") != std::string::npos);
  CHECK(text.find("alpha_degenerate_pinch") != std::string::npos);
}

TEST_CASE("wrenches and the two LPs") {
  Bushing b;
  hg_wrench basis[6];
  REQUIRE(hg_wrench_basis(b.obj, 0.9, kPi / 10, 0.0, &kAll, basis) == HG_OK);
  hg_wrench g{};
  REQUIRE(hg_gravity_wrench(b.obj, &g) == HG_OK);
  CHECK(g.fy == -1.0);
  int feasible = -1;
  double k[6];
  REQUIRE(hg_solve_force_balance(basis, &g, &feasible, k) == HG_OK);
  CHECK(feasible == 1);
  double fy = g.fy;
  for (int i = 0; i < 6; ++i) fy += k[i] * basis[i].fy;
  CHECK(std::abs(fy) <= 1e-7);
  const hg_friction none{0, 0, 0};
  hg_wrench bare[6];
  REQUIRE(hg_wrench_basis(b.obj, 0.9, kPi / 10, 0.0, &none, bare) == HG_OK);
  REQUIRE(hg_solve_form_closure(bare, &feasible, nullptr) == HG_OK);
  CHECK(feasible == 0);

  int stable = -1;
  CHECK(hg_is_stable(b.obj, 0.9, kPi / 10, 0.0, &kAll, HG_FORCE_BALANCE, &stable) == HG_OK);
  CHECK(stable == 1);
  CHECK(hg_is_stable(b.obj, 0.9, kPi / 10, 0.0, &kAll, static_cast<hg_mode>(7), &stable) ==
        HG_ERR_INVALID_ARGUMENT);
  CHECK(hg_is_stable(b.obj, 0.0, kPi / 10, 0.0, &kAll, HG_FORCE_BALANCE, &stable) ==
        HG_ERR_VALIDATION);

  char* csv = nullptr;
  REQUIRE(hg_wrench_csv(b.obj, 0.9, kPi / 10, 0.0, &kAll, &csv) == HG_OK);
  CHECK(take(csv).rfind("label,m,fx,fy\n", 0) == 0);
}

TEST_CASE("region handles") {
  Bushing b;
  const double alphas[] = {0.3, 0.6, 0.9};
  const double betas[] = {0.0, 0.5, 1.0, 1.5};
  hg_region* r1 = nullptr;
  hg_region* r4 = nullptr;
  REQUIRE(hg_region_sweep(b.obj, &kAll, 0.9, alphas, 3, betas, 4, HG_FORCE_BALANCE, 1, &r1) == HG_OK);
  REQUIRE(hg_region_sweep(b.obj, &kAll, 0.9, alphas, 3, betas, 4, HG_FORCE_BALANCE, 4, &r4) == HG_OK);
  CHECK(hg_region_rows(r1) == 3);
  CHECK(hg_region_cols(r1) == 4);
  CHECK(hg_region_cell(r1, 3, 0) == -1);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 4; ++j) {
      int stable = -1;
      hg_is_stable(b.obj, 0.9, alphas[i], betas[j], &kAll, HG_FORCE_BALANCE, &stable);
      CHECK(hg_region_cell(r1, i, j) == stable);
    }
  char* c1 = nullptr;
  char* c4 = nullptr;
  REQUIRE(hg_region_csv(r1, &c1) == HG_OK);
  REQUIRE(hg_region_csv(r4, &c4) == HG_OK);
  CHECK(take(c1) == take(c4));
  char* j = nullptr;
  REQUIRE(hg_region_json(r1, &j) == HG_OK);
  CHECK(take(j).find("\"mode\": \"force_balance\"") != std::string::npos);
  hg_region_free(r1);
  hg_region_free(r4);

  const double bad_alpha[] = {0.0};
  hg_region* r = nullptr;
  CHECK(hg_region_sweep(b.obj, &kAll, 0.9, bad_alpha, 1, betas, 4, HG_FORCE_BALANCE, 1, &r) ==
        HG_ERR_VALIDATION);

  const double ratios[] = {0.5, 0.9};
  REQUIRE(hg_contact_ratio_sweep(b.obj, &kAll, kPi / 10, ratios, 2, betas, 4, HG_FORCE_BALANCE, 2,
                                 &r) == HG_OK);
  char* csv = nullptr;
  REQUIRE(hg_region_csv(r, &csv) == HG_OK);
  CHECK(take(csv).rfind("l_a,", 0) == 0);
  hg_region_free(r);
}

TEST_CASE("tilt bound and minimum alpha") {
  Bushing b;
  hg_beta_bound bound{};
  REQUIRE(hg_beta_upper_bound(b.obj, &kGround, 0.9, kPi / 4, &bound) == HG_OK);
  CHECK(bound.kind == HG_BETA_FINITE);
  CHECK(bound.value_rad > std::atan(2.0));
  const hg_friction none{0, 0, 0};
  REQUIRE(hg_beta_upper_bound(b.obj, &none, 0.9, kPi / 4, &bound) == HG_OK);
  CHECK(bound.kind == HG_BETA_INFEASIBLE_AT_START);

  int found = -1;
  double alpha = 0;
  REQUIRE(hg_min_alpha(b.obj, &kGround, 0.9, 0.0, kPi / 360, &found, &alpha) == HG_OK);
  CHECK(found == 1);
  REQUIRE(hg_min_alpha(b.obj, &none, 0.9, 0.0, kPi / 360, &found, &alpha) == HG_OK);
  CHECK(found == 0);
}

TEST_CASE("plan and align handles") {
  Bushing b;
  hg_plan* plan = nullptr;
  REQUIRE(hg_plan_pivot(b.obj, 0.9, kPi / 10, nullptr, kPi / 2, 10, nullptr, &plan) == HG_OK);
  CHECK(hg_plan_size(plan) == 10);
  double px, py, r, theta;
  REQUIRE(hg_plan_geometry(plan, &px, &py, &r, &theta) == HG_OK);
  CHECK(px == -34.0);
  for (size_t k = 0; k < 10; ++k) {
    hg_pose w{};
    REQUIRE(hg_plan_waypoint(plan, k, &w) == HG_OK);
    CHECK(std::hypot(w.x - px, w.y - py) == doctest::Approx(r).epsilon(1e-12));
  }
  hg_pose w{};
  CHECK(hg_plan_waypoint(plan, 10, &w) == HG_ERR_INVALID_ARGUMENT);
  hg_pose end{};
  REQUIRE(hg_plan_final_object_pose(plan, &end) == HG_OK);
  CHECK(end.phi == doctest::Approx(kPi / 2));

  hg_align* align = nullptr;
  REQUIRE(hg_plan_align(plan, 5, &align) == HG_OK);
  CHECK(hg_align_size(align) == 5);
  double fx, fy;
  REQUIRE(hg_align_fingertip(align, &fx, &fy) == HG_OK);
  char* json = nullptr;
  REQUIRE(hg_align_json(align, &json) == HG_OK);
  CHECK(take(json).find("fingertip") != std::string::npos);
  hg_align_free(align);
  REQUIRE(hg_plan_json(plan, &json) == HG_OK);
  CHECK(take(json).find("\"p_c\"") != std::string::npos);
  hg_plan_free(plan);

  CHECK(hg_plan_pivot(b.obj, 0.9, kPi / 10, nullptr, 2.0, 10, nullptr, &plan) == HG_ERR_VALIDATION);
}

TEST_CASE("trajectory handles") {
  Bushing b;
  const double kb[] = {0.0, kPi / 2};
  const double kl[] = {0.9, 0.65};
  double betas[181];
  for (int i = 0; i < 181; ++i) betas[i] = std::min(i * kPi / 360, kPi / 2);
  hg_trajectory* t = nullptr;
  REQUIRE(hg_simulate(b.obj, &kAll, kPi / 10, kb, kl, 2, betas, 181, &t) == HG_OK);
  CHECK(hg_trajectory_size(t) == 181);
  CHECK(hg_trajectory_stable_prefix(t) > 90);
  double beta, la;
  int stable;
  REQUIRE(hg_trajectory_sample(t, 180, &beta, &la, &stable) == HG_OK);
  CHECK(la == doctest::Approx(0.65));
  char* csv = nullptr;
  REQUIRE(hg_trajectory_csv(t, &csv) == HG_OK);
  CHECK(take(csv).rfind("beta_deg,l_a,stable\n", 0) == 0);
  hg_trajectory_free(t);

  const double rising[] = {0.5, 0.9};
  CHECK(hg_simulate(b.obj, &kAll, kPi / 10, kb, rising, 2, betas, 181, &t) == HG_ERR_VALIDATION);
}

TEST_CASE("CI table through the C interface") {
  const char* names[] = {"a", "b"};
  const int k[] = {10, 0};
  const int n[] = {10, 10};
  char* out = nullptr;
  REQUIRE(hg_ci_table(names, k, n, 2, 1.96, 1, &out) == HG_OK);
  const std::string csv = take(out);
  CHECK(csv.find("a,10,10,1.96,0.722459831,1\n") != std::string::npos);
  CHECK(csv.find("b,0,10,1.96,0,0.277540169\n") != std::string::npos);
}
