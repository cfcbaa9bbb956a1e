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

/*
 * C interface to libholegrasp.
 *
 * All handles are opaque and owned by the caller once returned; release each
 * with its matching *_free function. Functions return an hg_status; on
 * failure hg_last_error() describes the problem. Strings returned through a
 * char** are heap allocated and must be released with hg_string_free.
 *
 * Units: lengths in mm, angles in radians.
 */
#ifndef HOLEGRASP_H_
#define HOLEGRASP_H_

#include <stddef.h>

#if defined(_WIN32)
#  if defined(HOLEGRASP_BUILDING)
#    define HG_API __declspec(dllexport)
#  else
#    define HG_API __declspec(dllimport)
#  endif
#else
#  define HG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hg_status {
  HG_OK = 0,
  HG_ERR_INVALID_ARGUMENT = 1, /* null pointer, bad enum, index out of range */
  HG_ERR_VALIDATION = 2,       /* geometry or configuration range violated */
  HG_ERR_IO = 3,
  HG_ERR_PARSE = 4,
  HG_ERR_NOT_FOUND = 5,
  HG_ERR_NUMERICAL = 6,        /* solver failed to terminate */
  HG_ERR_INTERNAL = 7
} hg_status;

typedef enum hg_mode { HG_FORCE_BALANCE = 0, HG_FORM_CLOSURE = 1 } hg_mode;

typedef enum hg_beta_kind {
  HG_BETA_FINITE = 0,
  HG_BETA_NOT_FINITE = 1,
  HG_BETA_INFEASIBLE_AT_START = 2
} hg_beta_kind;

typedef struct hg_friction {
  double mu_s;
  double mu_h;
  double mu_g;
} hg_friction;

typedef struct hg_wrench {
  double moment;
  double fx;
  double fy;
} hg_wrench;

/* Gripper pose (jaw midpoint, axis angle) or object pose (center, tilt). */
typedef struct hg_pose {
  double x;
  double y;
  double phi;
} hg_pose;

typedef struct hg_beta_bound {
  hg_beta_kind kind;
  double value_rad;   /* valid when kind == HG_BETA_FINITE */
  size_t transitions; /* feasible->infeasible transitions detected */
} hg_beta_bound;

typedef struct hg_object_desc {
  const char* name; /* may be NULL on input; owned by the handle on output */
  double a_mm;
  double b_mm;      /* ignored for cylinders (b = D/2) */
  double D_mm;
  double d_mm;
  double weight;    /* m*g in solver units; <= 0 selects the default of 1 */
  int cylinder;
  double w_mm;
  double stroke_mm;
} hg_object_desc;

typedef struct hg_catalog hg_catalog;
typedef struct hg_object hg_object;
typedef struct hg_region hg_region;
typedef struct hg_plan hg_plan;
typedef struct hg_align hg_align;
typedef struct hg_trajectory hg_trajectory;

HG_API const char* hg_version(void);
/* Message for the last failing call on this thread; "" if none. */
HG_API const char* hg_last_error(void);
HG_API void hg_string_free(char* s);

/* Object catalog (JSON). */
HG_API hg_status hg_catalog_load(const char* path, hg_catalog** out);
HG_API hg_status hg_catalog_parse(const char* json, hg_catalog** out);
HG_API size_t hg_catalog_size(const hg_catalog* catalog);
HG_API const char* hg_catalog_name(const hg_catalog* catalog, size_t index);
HG_API hg_status hg_catalog_get(const hg_catalog* catalog, const char* name, hg_object** out);
HG_API void hg_catalog_free(hg_catalog* catalog);

/* Object + gripper. */
HG_API hg_status hg_object_create(const hg_object_desc* desc, hg_object** out);
HG_API hg_status hg_object_describe(const hg_object* object, hg_object_desc* out);
HG_API hg_status hg_object_hole_contact(const hg_object* object, double* x_mm, double* delta_mm);
HG_API void hg_object_free(hg_object* object);

/* Returns HG_ERR_VALIDATION and, if issues != NULL, one "code: message" line
 * per violated constraint. *issues is set to NULL on success. */
HG_API hg_status hg_validate_config(const hg_object* object, double l_a, double alpha,
                                    double beta, char** issues);

/* Basis wrenches in order S1, S2, H1, H2, G1, G2. */
HG_API hg_status hg_wrench_basis(const hg_object* object, double l_a, double alpha,
                                 double beta, const hg_friction* friction, hg_wrench out[6]);
HG_API hg_status hg_wrench_csv(const hg_object* object, double l_a, double alpha, double beta,
                               const hg_friction* friction, char** csv);
HG_API hg_status hg_gravity_wrench(const hg_object* object, hg_wrench* out);

/* Force balance: F_ext + sum k_i F_i = 0, k_i >= 0. `coefficients` may be
 * NULL; otherwise receives six values when *feasible. */
HG_API hg_status hg_solve_force_balance(const hg_wrench basis[6], const hg_wrench* ext,
                                        int* feasible, double coefficients[6]);
/* Form closure: sum k_i F_i = 0, k_i >= 1. */
HG_API hg_status hg_solve_form_closure(const hg_wrench basis[6], int* feasible,
                                       double coefficients[6]);

HG_API hg_status hg_is_stable(const hg_object* object, double l_a, double alpha, double beta,
                              const hg_friction* friction, hg_mode mode, int* stable);

/* (alpha, beta) map at fixed l_a. `threads` does not affect the result. */
HG_API hg_status hg_region_sweep(const hg_object* object, const hg_friction* friction,
                                 double l_a, const double* alphas, size_t n_alpha,
                                 const double* betas, size_t n_beta, hg_mode mode,
                                 unsigned threads, hg_region** out);
/* (l_a, beta) map at fixed alpha. */
HG_API hg_status hg_contact_ratio_sweep(const hg_object* object, const hg_friction* friction,
                                        double alpha, const double* ratios, size_t n_ratio,
                                        const double* betas, size_t n_beta, hg_mode mode,
                                        unsigned threads, hg_region** out);
HG_API size_t hg_region_rows(const hg_region* region);
HG_API size_t hg_region_cols(const hg_region* region);
/* 1 feasible, 0 infeasible, -1 bad index. */
HG_API int hg_region_cell(const hg_region* region, size_t row, size_t col);
HG_API size_t hg_region_feasible_count(const hg_region* region);
HG_API hg_status hg_region_csv(const hg_region* region, char** csv);
HG_API hg_status hg_region_json(const hg_region* region, char** json);
HG_API void hg_region_free(hg_region* region);

HG_API hg_status hg_beta_upper_bound(const hg_object* object, const hg_friction* friction,
                                     double l_a, double alpha, hg_beta_bound* out);
/* *found = 0 when no alpha on the grid balances. */
HG_API hg_status hg_min_alpha(const hg_object* object, const hg_friction* friction, double l_a,
                              double beta, double resolution, int* found, double* alpha);

/* object_pose: center (x, y) and tilt (phi); NULL places the object resting
 * on the ground centred at x = 0. clamp_friction: NULL disables clamping
 * theta to beta_ub. */
HG_API hg_status hg_plan_pivot(const hg_object* object, double l_a, double alpha,
                               const hg_pose* object_pose, double theta, int waypoints,
                               const hg_friction* clamp_friction, hg_plan** out);
HG_API size_t hg_plan_size(const hg_plan* plan);
HG_API hg_status hg_plan_waypoint(const hg_plan* plan, size_t index, hg_pose* out);
HG_API hg_status hg_plan_geometry(const hg_plan* plan, double* pc_x, double* pc_y,
                                  double* radius, double* theta);
HG_API hg_status hg_plan_final_object_pose(const hg_plan* plan, hg_pose* out);
HG_API hg_status hg_plan_json(const hg_plan* plan, char** json);
HG_API void hg_plan_free(hg_plan* plan);

/* Align phase starting from the plan's final (vertical) object pose. */
HG_API hg_status hg_plan_align(const hg_plan* plan, int waypoints, hg_align** out);
HG_API size_t hg_align_size(const hg_align* align);
HG_API hg_status hg_align_waypoint(const hg_align* align, size_t index, hg_pose* out);
HG_API hg_status hg_align_fingertip(const hg_align* align, double* x, double* y);
HG_API hg_status hg_align_json(const hg_align* align, char** json);
HG_API void hg_align_free(hg_align* align);

/* l_a schedule given as knots (beta, l_a), piecewise linear. */
HG_API hg_status hg_simulate(const hg_object* object, const hg_friction* friction, double alpha,
                             const double* knot_beta, const double* knot_la, size_t n_knots,
                             const double* betas, size_t n_beta, hg_trajectory** out);
HG_API size_t hg_trajectory_size(const hg_trajectory* traj);
HG_API hg_status hg_trajectory_sample(const hg_trajectory* traj, size_t index, double* beta,
                                      double* l_a, int* stable);
HG_API size_t hg_trajectory_stable_prefix(const hg_trajectory* traj);
HG_API hg_status hg_trajectory_csv(const hg_trajectory* traj, char** csv);
HG_API hg_status hg_trajectory_json(const hg_trajectory* traj, char** json);
HG_API void hg_trajectory_free(hg_trajectory* traj);

/* Wilson score interval. */
HG_API hg_status hg_wilson_ci(int successes, int trials, double z, double* lower,
                              double* upper);
/* Table of intervals; as_csv selects CSV (proportions) over aligned text. */
HG_API hg_status hg_ci_table(const char* const* names, const int* successes, const int* trials,
                             size_t n, double z, int as_csv, char** out);

#ifdef __cplusplus
}
#endif

#endif /* HOLEGRASP_H_ */
