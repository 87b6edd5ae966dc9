// Copyright 2026 The mecoff Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mecoff/box_lp.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mecoff {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kCostTol = 1e-11;

// Dense tableau. Column layout: [x (n) | upper slacks (n) | row slacks |
// artificials | rhs]. Row layout: general rows first, then x_j + u_j = 1.
class Tableau {
 public:
  Tableau(int rows, int cols) : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * (cols + 1), 0.0),
      basis_(rows, -1) {}

  double& at(int r, int c) { return data_[static_cast<std::size_t>(r) * (cols_ + 1) + c]; }
  double at(int r, int c) const { return data_[static_cast<std::size_t>(r) * (cols_ + 1) + c]; }
  double& rhs(int r) { return at(r, cols_); }
  double rhs(int r) const { return at(r, cols_); }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int& basic(int r) { return basis_[r]; }
  int basic(int r) const { return basis_[r]; }

  void Pivot(int pr, int pc) {
    const double inv = 1.0 / at(pr, pc);
    for (int c = 0; c <= cols_; ++c) at(pr, c) *= inv;
    at(pr, pc) = 1.0;
    for (int r = 0; r < rows_; ++r) {
      if (r == pr) continue;
      const double f = at(r, pc);
      if (f == 0.0) continue;
      for (int c = 0; c <= cols_; ++c) at(r, c) -= f * at(pr, c);
      at(r, pc) = 0.0;
    }
    basis_[pr] = pc;
  }

  // Minimizes cost . z over columns [0, active_cols). Returns false if
  // unbounded (cannot happen on a box, kept as a guard).
  bool Minimize(const std::vector<double>& cost, int active_cols) {
    for (int iter = 0; iter < 10000; ++iter) {
      int entering = -1;
      for (int c = 0; c < active_cols; ++c) {
        double reduced = cost[c];
        for (int r = 0; r < rows_; ++r) reduced -= cost[basis_[r]] * at(r, c);
        if (reduced < -kCostTol) {
          entering = c;
          break;
        }
      }
      if (entering < 0) return true;
      int leaving = -1;
      double best_ratio = 0.0;
      for (int r = 0; r < rows_; ++r) {
        const double a = at(r, entering);
        if (a <= kPivotTol) continue;
        const double ratio = std::max(rhs(r), 0.0) / a;
        if (leaving < 0 || ratio < best_ratio - 1e-15 ||
            (ratio <= best_ratio + 1e-15 && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) return false;
      Pivot(leaving, entering);
    }
    throw std::runtime_error("box LP: iteration limit reached");
  }

 private:
  int rows_;
  int cols_;
  std::vector<double> data_;
  std::vector<int> basis_;
};

}  // namespace

LpResult SolveBoxLp(std::span<const double> costs, std::span<const LpRow> rows) {
  const int n = static_cast<int>(costs.size());
  const int num_general = static_cast<int>(rows.size());
  int num_slacks = 0;
  for (const LpRow& row : rows) {
    if (static_cast<int>(row.coeffs.size()) != n) {
      throw std::invalid_argument("box LP: row length differs from cost length");
    }
    if (!row.equality) ++num_slacks;
  }

  // A general row needs an artificial unless it is an inequality with a
  // non-negative right-hand side, whose slack can start in the basis.
  std::vector<bool> needs_artificial(num_general);
  int num_artificial = 0;
  for (int r = 0; r < num_general; ++r) {
    needs_artificial[r] = rows[r].equality || rows[r].rhs < 0.0;
    if (needs_artificial[r]) ++num_artificial;
  }

  const int slack_begin = 2 * n;
  const int art_begin = slack_begin + num_slacks;
  const int total_cols = art_begin + num_artificial;
  Tableau t(num_general + n, total_cols);

  int slack_col = slack_begin;
  int art_col = art_begin;
  for (int r = 0; r < num_general; ++r) {
    const LpRow& row = rows[r];
    const double sign = row.rhs < 0.0 ? -1.0 : 1.0;
    for (int j = 0; j < n; ++j) t.at(r, j) = sign * row.coeffs[j];
    t.rhs(r) = sign * row.rhs;
    if (!row.equality) {
      t.at(r, slack_col) = sign;
      if (!needs_artificial[r]) t.basic(r) = slack_col;
      ++slack_col;
    }
    if (needs_artificial[r]) {
      t.at(r, art_col) = 1.0;
      t.basic(r) = art_col;
      ++art_col;
    }
  }
  for (int j = 0; j < n; ++j) {
    const int r = num_general + j;
    t.at(r, j) = 1.0;
    t.at(r, n + j) = 1.0;
    t.rhs(r) = 1.0;
    t.basic(r) = n + j;
  }

  double scale = 1.0;
  for (const LpRow& row : rows) scale = std::max(scale, std::abs(row.rhs));

  if (num_artificial > 0) {
    std::vector<double> phase1(total_cols, 0.0);
    for (int c = art_begin; c < total_cols; ++c) phase1[c] = 1.0;
    t.Minimize(phase1, total_cols);
    double infeasibility = 0.0;
    for (int r = 0; r < t.rows(); ++r) {
      if (t.basic(r) >= art_begin) infeasibility += std::max(t.rhs(r), 0.0);
    }
    if (infeasibility > 1e-9 * scale) return {};
    // Drive remaining artificials out of the basis where possible. Rows where
    // that fails are redundant and keep a zero artificial that never moves.
    for (int r = 0; r < t.rows(); ++r) {
      if (t.basic(r) < art_begin) continue;
      for (int c = 0; c < art_begin; ++c) {
        if (std::abs(t.at(r, c)) > 1e-9) {
          t.Pivot(r, c);
          break;
        }
      }
    }
  }

  std::vector<double> phase2(total_cols, 0.0);
  std::copy(costs.begin(), costs.end(), phase2.begin());
  if (!t.Minimize(phase2, art_begin)) {
    throw std::runtime_error("box LP: unbounded relaxation");
  }

  LpResult result;
  result.feasible = true;
  result.x.assign(n, 0.0);
  for (int r = 0; r < t.rows(); ++r) {
    if (t.basic(r) < n) result.x[t.basic(r)] = std::clamp(t.rhs(r), 0.0, 1.0);
  }
  for (int j = 0; j < n; ++j) result.objective += costs[j] * result.x[j];
  return result;
}

}  // namespace mecoff
