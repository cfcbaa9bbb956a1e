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

#include "holegrasp/lp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace holegrasp {
namespace {

constexpr int kRows = 3;
constexpr double kPivotEps = 1e-12;
constexpr double kCostEps = 1e-11;

std::array<double, kRows> as_array(const Wrench& w) {
  return {w.moment, w.fx, w.fy};
}

// Dense tableau for  min c.u  s.t.  A u = b, u >= 0  with one artificial
// column per row. Columns [0, n) are structural, [n, n + 3) artificial.
class Tableau {
 public:
  Tableau(const std::vector<Wrench>& columns, const std::array<double, kRows>& rhs)
      : n_(static_cast<int>(columns.size())),
        width_(n_ + kRows),
        cells_(static_cast<std::size_t>(kRows * width_), 0.0),
        allowed_(static_cast<std::size_t>(width_), true) {
    for (int r = 0; r < kRows; ++r) {
      const double sign = rhs[r] < 0.0 ? -1.0 : 1.0;
      for (int j = 0; j < n_; ++j) at(r, j) = sign * as_array(columns[j])[r];
      at(r, n_ + r) = 1.0;
      rhs_[r] = sign * rhs[r];
      basis_[r] = n_ + r;
    }
  }

  // Runs simplex iterations for cost vector `cost` (size width_).
  void optimize(const std::vector<double>& cost, int& iterations) {
    for (;;) {
      if (++iterations > kSimplexIterationCap)
        throw NumericalError("simplex exceeded iteration cap of " +
                             std::to_string(kSimplexIterationCap));
      const int enter = entering(cost);
      if (enter < 0) return;
      const int leave = leaving(enter);
      if (leave < 0)
        throw NumericalError("simplex reported an unbounded direction");
      pivot(leave, enter);
    }
  }

  double value_of(const std::vector<double>& cost) const {
    double v = 0.0;
    for (int r = 0; r < kRows; ++r) v += cost[basis_[r]] * rhs_[r];
    return v;
  }

  // Pivots basic artificials out where a structural column allows it, then
  // bars every artificial from re-entering.
  void retire_artificials() {
    for (int r = 0; r < kRows; ++r) {
      if (basis_[r] < n_) continue;
      int best = -1;
      double best_mag = kPivotEps;
      for (int j = 0; j < n_; ++j) {
        if (std::abs(at(r, j)) > best_mag) {
          best = j;
          best_mag = std::abs(at(r, j));
        }
      }
      if (best >= 0) pivot(r, best);
    }
    for (int j = n_; j < width_; ++j) allowed_[j] = false;
  }

  std::vector<double> structural_solution() const {
    std::vector<double> u(static_cast<std::size_t>(n_), 0.0);
    for (int r = 0; r < kRows; ++r)
      if (basis_[r] < n_) u[basis_[r]] = std::max(0.0, rhs_[r]);
    return u;
  }

  int structural_count() const { return n_; }
  int width() const { return width_; }

 private:
  double& at(int r, int j) { return cells_[static_cast<std::size_t>(r * width_ + j)]; }
  double at(int r, int j) const { return cells_[static_cast<std::size_t>(r * width_ + j)]; }

  bool is_basic(int j) const {
    return std::find(basis_.begin(), basis_.end(), j) != basis_.end();
  }

  // Bland: lowest-index column with negative reduced cost.
  int entering(const std::vector<double>& cost) const {
    for (int j = 0; j < width_; ++j) {
      if (!allowed_[j] || is_basic(j)) continue;
      double reduced = cost[j];
      for (int r = 0; r < kRows; ++r) reduced -= cost[basis_[r]] * at(r, j);
      if (reduced < -kCostEps) return j;
    }
    return -1;
  }

  // Minimum ratio; ties broken by lowest basic variable index.
  int leaving(int enter) const {
    int row = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < kRows; ++r) {
      const double coef = at(r, enter);
      if (coef <= kPivotEps) continue;
      const double ratio = rhs_[r] / coef;
      if (ratio < best - 1e-15 ||
          (std::abs(ratio - best) <= 1e-15 && basis_[r] < basis_[row])) {
        best = ratio;
        row = r;
      }
    }
    return row;
  }

  void pivot(int row, int col) {
    const double p = at(row, col);
    for (int j = 0; j < width_; ++j) at(row, j) /= p;
    rhs_[row] /= p;
    for (int r = 0; r < kRows; ++r) {
      if (r == row) continue;
      const double f = at(r, col);
      if (f == 0.0) continue;
      for (int j = 0; j < width_; ++j) at(r, j) -= f * at(row, j);
      rhs_[r] -= f * rhs_[row];
    }
    basis_[row] = col;
  }

  int n_;
  int width_;
  std::vector<double> cells_;
  std::vector<bool> allowed_;
  std::array<double, kRows> rhs_{};
  std::array<int, kRows> basis_{};
};

// Solves the s x s system M y = v by Gaussian elimination with partial
// pivoting; false when M is numerically singular.
template <std::size_t S>
bool solve_square(std::array<std::array<double, S>, S> m, std::array<double, S> v,
                  std::size_t s, std::array<double, S>& y) {
  double scale = 0.0;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) scale = std::max(scale, std::abs(m[i][j]));
  if (scale == 0.0) return false;
  for (std::size_t c = 0; c < s; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < s; ++r)
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    if (std::abs(m[piv][c]) <= 1e-12 * scale) return false;
    std::swap(m[piv], m[c]);
    std::swap(v[piv], v[c]);
    for (std::size_t r = c + 1; r < s; ++r) {
      const double f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < s; ++k) m[r][k] -= f * m[c][k];
      v[r] -= f * v[c];
    }
  }
  for (std::size_t i = s; i-- > 0;) {
    double acc = v[i];
    for (std::size_t k = i + 1; k < s; ++k) acc -= m[i][k] * y[k];
    y[i] = acc / m[i][i];
  }
  return true;
}

}  // namespace

double residual_norm(const std::vector<Wrench>& columns,
                     const std::vector<double>& coefficients,
                     const Wrench& rhs) {
  Wrench sum{};
  for (std::size_t i = 0; i < columns.size(); ++i)
    sum = sum + coefficients[i] * columns[i];
  return std::max({std::abs(sum.moment - rhs.moment), std::abs(sum.fx - rhs.fx),
                   std::abs(sum.fy - rhs.fy)});
}

LpOutcome solve_lp(const LpProblem& problem, const LpTolerances& tol) {
  const double lb = problem.lower_bound;
  // Shift k = lb + u so every variable is simply u >= 0.
  Wrench shifted = problem.rhs;
  for (const auto& c : problem.columns) shifted = shifted + (-lb) * c;

  Tableau tableau(problem.columns, as_array(shifted));
  const int n = tableau.structural_count();
  LpOutcome out;

  std::vector<double> phase_one(static_cast<std::size_t>(tableau.width()), 0.0);
  for (int j = n; j < tableau.width(); ++j) phase_one[j] = 1.0;
  tableau.optimize(phase_one, out.iterations);
  if (tableau.value_of(phase_one) > tol.equality) return out;

  tableau.retire_artificials();
  std::vector<double> phase_two(static_cast<std::size_t>(tableau.width()), 0.0);
  for (int j = 0; j < n; ++j) phase_two[j] = 1.0;
  tableau.optimize(phase_two, out.iterations);

  auto u = tableau.structural_solution();
  out.coefficients.resize(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out.coefficients[i] = lb + u[i];
  if (residual_norm(problem.columns, out.coefficients, problem.rhs) > tol.equality) {
    out.coefficients.clear();
    return out;
  }
  out.feasible = true;
  for (double k : out.coefficients) out.objective += k;
  return out;
}

LpOutcome solve_force_balance(const WrenchBasis& basis, const Wrench& ext,
                              const LpTolerances& tol) {
  LpProblem p{{basis.wrenches.begin(), basis.wrenches.end()}, -ext, 0.0};
  return solve_lp(p, tol);
}

LpOutcome solve_form_closure(const WrenchBasis& basis, const LpTolerances& tol) {
  LpProblem p{{basis.wrenches.begin(), basis.wrenches.end()}, Wrench{}, 1.0};
  return solve_lp(p, tol);
}

bool oracle_cone_contains(const std::vector<Wrench>& columns,
                          const Wrench& target, const LpTolerances& tol) {
  const auto t = as_array(target);
  if (std::max({std::abs(t[0]), std::abs(t[1]), std::abs(t[2])}) <= tol.equality)
    return true;

  const std::size_t n = columns.size();
  std::vector<std::array<double, kRows>> cols;
  cols.reserve(n);
  for (const auto& c : columns) cols.push_back(as_array(c));

  // Every subset of 1..3 columns, encoded as a bitmask.
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::array<std::size_t, kRows> idx{};
    std::size_t s = 0;
    bool too_many = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      if (s == kRows) {
        too_many = true;
        break;
      }
      idx[s++] = j;
    }
    if (too_many) continue;

    // Normal equations (A^T A) y = A^T t over the chosen columns.
    std::array<std::array<double, kRows>, kRows> m{};
    std::array<double, kRows> v{};
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t k = 0; k < s; ++k)
        for (int r = 0; r < kRows; ++r) m[i][k] += cols[idx[i]][r] * cols[idx[k]][r];
      for (int r = 0; r < kRows; ++r) v[i] += cols[idx[i]][r] * t[r];
    }
    std::array<double, kRows> y{};
    if (!solve_square(m, v, s, y)) continue;

    bool nonnegative = true;
    for (std::size_t i = 0; i < s; ++i) nonnegative = nonnegative && y[i] >= -tol.bound;
    if (!nonnegative) continue;

    double worst = 0.0;
    for (int r = 0; r < kRows; ++r) {
      double acc = -t[r];
      for (std::size_t i = 0; i < s; ++i) acc += y[i] * cols[idx[i]][r];
      worst = std::max(worst, std::abs(acc));
    }
    if (worst <= tol.equality) return true;
  }
  return false;
}

bool oracle_force_balance(const WrenchBasis& basis, const Wrench& ext,
                          const LpTolerances& tol) {
  return oracle_cone_contains({basis.wrenches.begin(), basis.wrenches.end()}, -ext, tol);
}

}  // namespace holegrasp
