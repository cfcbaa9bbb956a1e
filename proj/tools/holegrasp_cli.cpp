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

// holegrasp command-line front end. Links only the C API.
//
// Exit codes: 0 success, 1 solver/internal failure, 2 invalid input,
// 3 I/O failure, 4 beta-ub search infeasible at beta = 0.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "holegrasp/holegrasp.h"

#ifndef HOLEGRASP_DEFAULT_CATALOG
#define HOLEGRASP_DEFAULT_CATALOG "objects.json"
#endif

namespace {

constexpr double kPi = std::numbers::pi;

enum ExitCode { kOk = 0, kFailure = 1, kInvalid = 2, kIo = 3, kInfeasibleAtStart = 4 };

// Thrown inside subcommands; carries the process exit code.
struct CliError {
  int code;
  std::string message;
};

int exit_code_for(hg_status s) {
  switch (s) {
    case HG_OK: return kOk;
    case HG_ERR_IO: return kIo;
    case HG_ERR_NUMERICAL:
    case HG_ERR_INTERNAL: return kFailure;
    default: return kInvalid;
  }
}

void check(hg_status s, const std::string& context) {
  if (s != HG_OK) throw CliError{exit_code_for(s), context + ": " + hg_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using CatalogPtr = std::unique_ptr<hg_catalog, Deleter<hg_catalog, hg_catalog_free>>;
using ObjectPtr = std::unique_ptr<hg_object, Deleter<hg_object, hg_object_free>>;
using RegionPtr = std::unique_ptr<hg_region, Deleter<hg_region, hg_region_free>>;
using PlanPtr = std::unique_ptr<hg_plan, Deleter<hg_plan, hg_plan_free>>;
using AlignPtr = std::unique_ptr<hg_align, Deleter<hg_align, hg_align_free>>;
using TrajectoryPtr = std::unique_ptr<hg_trajectory, Deleter<hg_trajectory, hg_trajectory_free>>;

std::string take(char* s) {
  std::string out = s != nullptr ? s : "";
  hg_string_free(s);
  return out;
}

std::string fmt(double v) {
  if (v == 0.0) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

double parse_number(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw CliError{kInvalid, what + ": not a number: '" + text + "'"};
  }
}

// "18deg", "0.3rad", "0.3" (radians), "pi/10", "2pi/5".
double parse_angle(const std::string& text, const std::string& what) {
  static const std::regex pi_form(R"(^([0-9.]*)\*?pi(?:/([0-9.]+))?$)");
  std::smatch m;
  if (std::regex_match(text, m, pi_form)) {
    const double k = m[1].str().empty() ? 1.0 : parse_number(m[1].str(), what);
    const double div = m[2].matched ? parse_number(m[2].str(), what) : 1.0;
    return k * kPi / div;
  }
  auto ends_with = [&](const std::string& suffix) {
    return text.size() > suffix.size() &&
           text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with("deg"))
    return parse_number(text.substr(0, text.size() - 3), what) * kPi / 180.0;
  if (ends_with("rad")) return parse_number(text.substr(0, text.size() - 3), what);
  return parse_number(text, what);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

hg_friction parse_friction(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3)
    throw CliError{kInvalid, "--mu: expected three values mu_S,mu_H,mu_G"};
  return {parse_number(parts[0], "--mu"), parse_number(parts[1], "--mu"),
          parse_number(parts[2], "--mu")};
}

std::vector<double> parse_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  for (const auto& p : split(text, ',')) out.push_back(parse_number(p, what));
  if (out.empty()) throw CliError{kInvalid, what + ": empty list"};
  return out;
}

std::string mode_name(hg_mode m) { return m == HG_FORM_CLOSURE ? "form_closure" : "force_balance"; }

// (0, pi/2) exclusive at multiples of step.
std::vector<double> open_grid(double step) {
  if (!(step > 0.0)) throw CliError{kInvalid, "grid step must be > 0"};
  std::vector<double> out;
  for (int k = 1; k * step < kPi / 2.0 - 1e-12; ++k) out.push_back(k * step);
  return out;
}

// [0, pi/2] inclusive at multiples of step (clamped to pi/2).
std::vector<double> closed_grid(double lo, double hi, double step) {
  if (!(step > 0.0)) throw CliError{kInvalid, "grid step must be > 0"};
  std::vector<double> out;
  for (int k = 0; lo + k * step <= hi + 1e-12; ++k) out.push_back(std::min(lo + k * step, hi));
  return out;
}

struct Common {
  std::string catalog = HOLEGRASP_DEFAULT_CATALOG;
  std::string object;
  std::string mu = "0.2,0.4,0.4";
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--catalog", c.catalog, "Object catalog JSON")->capture_default_str();
  cmd->add_option("--object", c.object, "Object name in the catalog")->required();
  cmd->add_option("--mu", c.mu, "Friction mu_S,mu_H,mu_G")->capture_default_str();
}

ObjectPtr load_object(const Common& c) {
  hg_catalog* raw_catalog = nullptr;
  check(hg_catalog_load(c.catalog.c_str(), &raw_catalog), "loading catalog");
  CatalogPtr catalog(raw_catalog);
  hg_object* raw = nullptr;
  check(hg_catalog_get(catalog.get(), c.object.c_str(), &raw), "--object");
  return ObjectPtr(raw);
}

struct PendingFile {
  std::filesystem::path path;
  std::string contents;
};

// Files are only written once every result has been computed.
void write_all(const std::vector<PendingFile>& files) {
  for (const auto& f : files) {
    std::error_code ec;
    if (f.path.has_parent_path()) std::filesystem::create_directories(f.path.parent_path(), ec);
    std::ofstream out(f.path, std::ios::binary | std::ios::trunc);
    if (!out) throw CliError{kIo, "cannot write " + f.path.string()};
    out << f.contents;
    if (!out) throw CliError{kIo, "failed writing " + f.path.string()};
  }
}

std::string la_tag(double la) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", la);
  return buf;
}

// region -----------------------------------------------------------------

struct RegionArgs {
  Common common;
  std::string la = "0.5,0.6,0.7,0.8,0.9";
  std::string mode = "force_balance";
  std::string alpha_step = "0.5deg";
  std::string beta_step = "0.5deg";
  unsigned parallel = 1;
  std::string out = ".";
};

int run_region(const RegionArgs& args) {
  const hg_friction friction = parse_friction(args.common.mu);
  const auto ratios = parse_list(args.la, "--la");
  const hg_mode mode = args.mode == "form_closure" ? HG_FORM_CLOSURE : HG_FORCE_BALANCE;
  const auto alphas = open_grid(parse_angle(args.alpha_step, "--alpha-step"));
  const auto betas = closed_grid(0.0, kPi / 2.0, parse_angle(args.beta_step, "--beta-step"));
  const auto object = load_object(args.common);

  std::vector<PendingFile> files;
  for (double la : ratios) {
    hg_region* raw = nullptr;
    check(hg_region_sweep(object.get(), &friction, la, alphas.data(), alphas.size(),
                          betas.data(), betas.size(), mode, args.parallel, &raw),
          "--la " + fmt(la));
    RegionPtr region(raw);
    char* csv = nullptr;
    char* json = nullptr;
    check(hg_region_csv(region.get(), &csv), "region csv");
    const std::string csv_text = take(csv);
    check(hg_region_json(region.get(), &json), "region json");
    const std::string stem = args.common.object + "_la" + la_tag(la) + "_" + mode_name(mode);
    const std::filesystem::path dir(args.out);
    files.push_back({dir / (stem + ".csv"), csv_text});
    files.push_back({dir / (stem + ".json"), take(json)});
    std::cout << stem << ": " << hg_region_feasible_count(region.get()) << " feasible of "
              << alphas.size() * betas.size() << " cells\n";
  }
  write_all(files);
  return kOk;
}

// beta-ub ----------------------------------------------------------------

struct BetaArgs {
  Common common;
  double la = 0.9;
  std::string alpha;
  std::string out;
};

int run_beta_ub(const BetaArgs& args) {
  const hg_friction friction = parse_friction(args.common.mu);
  const double alpha = parse_angle(args.alpha, "--alpha");
  const auto object = load_object(args.common);
  hg_beta_bound bound{};
  check(hg_beta_upper_bound(object.get(), &friction, args.la, alpha, &bound), "beta-ub");

  std::string json;
  int code = kOk;
  switch (bound.kind) {
    case HG_BETA_FINITE:
      json = "{\"beta_ub_rad\": " + fmt(bound.value_rad) +
             ", \"beta_ub_deg\": " + fmt(bound.value_rad * 180.0 / kPi) +
             ", \"transitions\": " + std::to_string(bound.transitions) + "}\n";
      break;
    case HG_BETA_NOT_FINITE:
      json = "{\"beta_ub_rad\": \"none\"}\n";
      break;
    case HG_BETA_INFEASIBLE_AT_START:
      json = "{\"error\": \"infeasible_at_start\"}\n";
      code = kInfeasibleAtStart;
      break;
  }
  std::cout << json;
  if (!args.out.empty()) write_all({{args.out, json}});
  return code;
}

// traj -------------------------------------------------------------------

struct TrajArgs {
  Common common;
  double la = 0.9;
  std::string alpha;
  std::string theta = "90deg";
  int waypoints = 64;
  int align_waypoints = 16;
  bool clamp = false;
  double center_x = 0.0;
  std::string out = ".";
};

int run_traj(const TrajArgs& args) {
  const hg_friction friction = parse_friction(args.common.mu);
  const double alpha = parse_angle(args.alpha, "--alpha");
  const double theta = parse_angle(args.theta, "--theta");
  const auto object = load_object(args.common);

  hg_object_desc desc{};
  check(hg_object_describe(object.get(), &desc), "object");
  const hg_pose resting{args.center_x, desc.b_mm, 0.0};

  hg_plan* raw_plan = nullptr;
  check(hg_plan_pivot(object.get(), args.la, alpha, &resting, theta, args.waypoints,
                      args.clamp ? &friction : nullptr, &raw_plan),
        "traj");
  PlanPtr plan(raw_plan);
  char* plan_json = nullptr;
  check(hg_plan_json(plan.get(), &plan_json), "plan json");

  const std::filesystem::path dir(args.out);
  std::vector<PendingFile> files{{dir / (args.common.object + "_pivot_plan.json"), take(plan_json)}};

  hg_pose end{};
  check(hg_plan_final_object_pose(plan.get(), &end), "plan");
  if (std::abs(end.phi - kPi / 2.0) <= 1e-9) {
    hg_align* raw_align = nullptr;
    check(hg_plan_align(plan.get(), args.align_waypoints, &raw_align), "align");
    AlignPtr align(raw_align);
    char* align_json = nullptr;
    check(hg_align_json(align.get(), &align_json), "align json");
    files.push_back({dir / (args.common.object + "_align.json"), take(align_json)});
  } else {
    std::cerr << "note: pivot ends at " << fmt(end.phi * 180.0 / kPi)
              << " deg; align phase needs a vertical object and was skipped\n";
  }
  write_all(files);
  return kOk;
}

// simulate ---------------------------------------------------------------

struct SimulateArgs {
  Common common;
  std::string alpha;
  std::string schedule;
  std::string theta = "90deg";
  std::string beta_step = "0.5deg";
  double la_step = 0.01;
  unsigned parallel = 1;
  std::string out = ".";
};

int run_simulate(const SimulateArgs& args) {
  const hg_friction friction = parse_friction(args.common.mu);
  const double alpha = parse_angle(args.alpha, "--alpha");
  const double theta = parse_angle(args.theta, "--theta");
  const double beta_step = parse_angle(args.beta_step, "--beta-step");

  // "0.9:0.65" -> knots evenly spread over [0, theta]; a single value is constant.
  std::vector<double> ratios;
  for (const auto& p : split(args.schedule, ':')) ratios.push_back(parse_number(p, "--la-schedule"));
  if (ratios.empty()) throw CliError{kInvalid, "--la-schedule: empty"};
  if (ratios.size() == 1) ratios.push_back(ratios.front());
  std::vector<double> knot_beta;
  for (std::size_t i = 0; i < ratios.size(); ++i)
    knot_beta.push_back(theta * static_cast<double>(i) / static_cast<double>(ratios.size() - 1));

  const auto betas = closed_grid(0.0, theta, beta_step);
  if (!(args.la_step > 0.0)) throw CliError{kInvalid, "--la-step must be > 0"};
  std::vector<double> la_axis;
  for (int k = 1; k * args.la_step <= 1.0 + 1e-12; ++k) la_axis.push_back(std::min(k * args.la_step, 1.0));

  const auto object = load_object(args.common);

  hg_trajectory* raw_traj = nullptr;
  check(hg_simulate(object.get(), &friction, alpha, knot_beta.data(), ratios.data(), ratios.size(),
                    betas.data(), betas.size(), &raw_traj),
        "simulate");
  TrajectoryPtr traj(raw_traj);

  hg_region* raw_region = nullptr;
  check(hg_contact_ratio_sweep(object.get(), &friction, alpha, la_axis.data(), la_axis.size(),
                               betas.data(), betas.size(), HG_FORCE_BALANCE, args.parallel,
                               &raw_region),
        "simulate region");
  RegionPtr region(raw_region);

  char* traj_csv = nullptr;
  char* traj_json = nullptr;
  char* region_csv = nullptr;
  char* region_json = nullptr;
  check(hg_trajectory_csv(traj.get(), &traj_csv), "trajectory csv");
  std::string traj_csv_text = take(traj_csv);
  check(hg_trajectory_json(traj.get(), &traj_json), "trajectory json");
  std::string traj_json_text = take(traj_json);
  check(hg_region_csv(region.get(), &region_csv), "region csv");
  std::string region_csv_text = take(region_csv);
  check(hg_region_json(region.get(), &region_json), "region json");

  const std::filesystem::path dir(args.out);
  const std::string stem = args.common.object;
  write_all({{dir / (stem + "_trajectory.csv"), std::move(traj_csv_text)},
             {dir / (stem + "_trajectory.json"), std::move(traj_json_text)},
             {dir / (stem + "_la_beta.csv"), std::move(region_csv_text)},
             {dir / (stem + "_la_beta.json"), take(region_json)}});

  const std::size_t n = hg_trajectory_size(traj.get());
  std::cout << stem << ": stable for " << hg_trajectory_stable_prefix(traj.get()) << " of " << n
            << " samples\n";
  return kOk;
}

// wrench -----------------------------------------------------------------

struct WrenchArgs {
  Common common;
  double la = 0.9;
  std::string alpha;
  std::string beta = "0";
  std::string out;
};

int run_wrench(const WrenchArgs& args) {
  const hg_friction friction = parse_friction(args.common.mu);
  const double alpha = parse_angle(args.alpha, "--alpha");
  const double beta = parse_angle(args.beta, "--beta");
  const auto object = load_object(args.common);
  char* csv = nullptr;
  check(hg_wrench_csv(object.get(), args.la, alpha, beta, &friction, &csv), "wrench");
  const std::string text = take(csv);
  if (args.out.empty())
    std::cout << text;
  else
    write_all({{args.out, text}});
  return kOk;
}

// ci ---------------------------------------------------------------------

struct CiArgs {
  std::vector<std::string> pairs;
  std::string csv_in;
  std::string csv_out;
  double z = 1.96;
};

int run_ci(const CiArgs& args) {
  std::vector<std::string> names;
  std::vector<int> successes;
  std::vector<int> trials;

  auto add = [&](std::string name, const std::string& s, const std::string& n) {
    names.push_back(std::move(name));
    successes.push_back(static_cast<int>(parse_number(s, "successes")));
    trials.push_back(static_cast<int>(parse_number(n, "trials")));
  };

  for (const auto& item : args.pairs) {
    // Optional "name=" prefix before successes/trials.
    std::string name;
    std::string ratio = item;
    if (const auto eq = item.find('='); eq != std::string::npos) {
      name = item.substr(0, eq);
      ratio = item.substr(eq + 1);
    }
    const auto parts = split(ratio, '/');
    if (parts.size() != 2) throw CliError{kInvalid, "expected successes/trials, got '" + item + "'"};
    add(name.empty() ? ratio : name, parts[0], parts[1]);
  }

  if (!args.csv_in.empty()) {
    std::ifstream in(args.csv_in);
    if (!in) throw CliError{kIo, "cannot open " + args.csv_in};
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto cols = split(line, ',');
      if (first && cols.size() >= 2 && cols[1] == "successes") {
        first = false;
        continue;
      }
      first = false;
      if (cols.size() != 3) throw CliError{kInvalid, args.csv_in + ": expected name,successes,trials"};
      add(cols[0], cols[1], cols[2]);
    }
  }

  std::vector<const char*> name_ptrs;
  for (const auto& n : names) name_ptrs.push_back(n.c_str());

  char* table = nullptr;
  check(hg_ci_table(name_ptrs.data(), successes.data(), trials.data(), names.size(), args.z, 0,
                    &table),
        "ci");
  const std::string text = take(table);
  std::string csv_text;
  if (!args.csv_out.empty()) {
    char* csv = nullptr;
    check(hg_ci_table(name_ptrs.data(), successes.data(), trials.data(), names.size(), args.z, 1,
                      &csv),
          "ci");
    csv_text = take(csv);
  }
  std::cout << text;
  if (!args.csv_out.empty()) write_all({{args.csv_out, csv_text}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stability analysis and trajectory generation for hole grasps of hollow objects"};
  app.require_subcommand(1);

  RegionArgs region;
  auto* region_cmd = app.add_subcommand("region", "Stable-region maps in the alpha-beta plane");
  add_common(region_cmd, region.common);
  region_cmd->add_option("--la", region.la, "Comma-separated l_a values")->capture_default_str();
  region_cmd->add_option("--mode", region.mode, "force_balance | form_closure")
      ->check(CLI::IsMember({"force_balance", "form_closure"}))
      ->capture_default_str();
  region_cmd->add_option("--alpha-step", region.alpha_step)->capture_default_str();
  region_cmd->add_option("--beta-step", region.beta_step)->capture_default_str();
  region_cmd->add_option("--parallel", region.parallel, "Worker threads")->capture_default_str();
  region_cmd->add_option("--out", region.out, "Output directory")->capture_default_str();

  BetaArgs beta;
  auto* beta_cmd = app.add_subcommand("beta-ub", "Upper tilt bound of force balance");
  add_common(beta_cmd, beta.common);
  beta_cmd->add_option("--la", beta.la)->capture_default_str();
  beta_cmd->add_option("--alpha", beta.alpha, "Gripper angle (e.g. 60deg, pi/10)")->required();
  beta_cmd->add_option("--out", beta.out, "Also write the JSON result to this file");

  TrajArgs traj;
  auto* traj_cmd = app.add_subcommand("traj", "Pivot and align waypoints");
  add_common(traj_cmd, traj.common);
  traj_cmd->add_option("--la", traj.la)->capture_default_str();
  traj_cmd->add_option("--alpha", traj.alpha)->required();
  traj_cmd->add_option("--theta", traj.theta)->capture_default_str();
  traj_cmd->add_option("--waypoints", traj.waypoints)->capture_default_str();
  traj_cmd->add_option("--align-waypoints", traj.align_waypoints)->capture_default_str();
  traj_cmd->add_flag("--clamp-beta-ub", traj.clamp, "Limit theta to beta_ub for --mu");
  traj_cmd->add_option("--center-x", traj.center_x, "Object center x, mm")->capture_default_str();
  traj_cmd->add_option("--out", traj.out)->capture_default_str();

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Grasp trajectory over a prescribed l_a schedule");
  add_common(sim_cmd, sim.common);
  sim_cmd->add_option("--alpha", sim.alpha)->required();
  sim_cmd->add_option("--la-schedule", sim.schedule, "l_a knots, e.g. 0.9:0.65")->required();
  sim_cmd->add_option("--theta", sim.theta)->capture_default_str();
  sim_cmd->add_option("--beta-step", sim.beta_step)->capture_default_str();
  sim_cmd->add_option("--la-step", sim.la_step, "l_a step of the region map")->capture_default_str();
  sim_cmd->add_option("--parallel", sim.parallel)->capture_default_str();
  sim_cmd->add_option("--out", sim.out)->capture_default_str();

  WrenchArgs wrench;
  auto* wrench_cmd = app.add_subcommand("wrench", "Dump the six basis contact wrenches");
  add_common(wrench_cmd, wrench.common);
  wrench_cmd->add_option("--la", wrench.la)->capture_default_str();
  wrench_cmd->add_option("--alpha", wrench.alpha)->required();
  wrench_cmd->add_option("--beta", wrench.beta)->capture_default_str();
  wrench_cmd->add_option("--out", wrench.out, "CSV file (default stdout)");

  CiArgs ci;
  auto* ci_cmd = app.add_subcommand("ci", "Wilson score intervals for success counts");
  ci_cmd->add_option("pairs", ci.pairs, "[name=]successes/trials ...");
  ci_cmd->add_option("--csv", ci.csv_in, "CSV input: name,successes,trials");
  ci_cmd->add_option("--out-csv", ci.csv_out, "Also write the table as CSV");
  ci_cmd->add_option("--z", ci.z, "Critical value")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInvalid;
  }

  try {
    if (*region_cmd) return run_region(region);
    if (*beta_cmd) return run_beta_ub(beta);
    if (*traj_cmd) return run_traj(traj);
    if (*sim_cmd) return run_simulate(sim);
    if (*wrench_cmd) return run_wrench(wrench);
    if (*ci_cmd) return run_ci(ci);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  }
  return kFailure;
}
