// Copyright 2026 The compnet Authors
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

// Dense two-phase primal simplex with implicit variable bounds.
//
// Every column is kept nonbasic at zero. A variable sitting at its upper
// bound u is represented by the substitution x = u - x~ ("flipped"), which
// negates its column; this keeps the classic tableau update and lets the
// ratio test move basic variables to either of their bounds.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "compnet/lp.hpp"

namespace compnet::lp {
namespace {

constexpr double kPivotTolerance = 1e-9;
constexpr double kCostTolerance = 1e-9;
constexpr double kRatioTieTolerance = 1e-12;
constexpr int kDegeneratePivotsBeforeBland = 50;

struct ColumnPart {
  int col = 0;
  double sign = 1.0;
};

class SimplexSolver {
 public:
  SimplexSolver(const LinearProgram& lp, const SolveOptions& options)
      : lp_(lp), options_(options) {}

  SolveResult solve();

 private:
  double& entry(int row, int col) { return tableau_[row * stride_ + col]; }
  double& rhs(int row) { return tableau_[row * stride_ + num_cols_]; }

  void build();
  void compute_reduced_costs(const std::vector<double>& cost);
  Status run_phase(bool phase_one);
  void pivot(int row, int col);
  void flip_nonbasic(int col);
  void flip_basic_row(int row);
  void drive_out_artificials();
  std::vector<double> column_values();

  const LinearProgram& lp_;
  const SolveOptions& options_;

  int num_rows_ = 0;
  int num_cols_ = 0;
  int stride_ = 0;
  std::vector<double> tableau_;
  std::vector<double> reduced_;
  std::vector<int> basis_;
  std::vector<int> basic_row_;
  std::vector<double> upper_;
  std::vector<char> flipped_;
  std::vector<char> artificial_;
  std::vector<int> unit_col_;
  std::vector<double> row_sign_;
  std::vector<double> phase_two_cost_;

  std::vector<std::vector<ColumnPart>> var_parts_;
  std::vector<double> var_offset_;
  std::int64_t iterations_ = 0;
};

void SimplexSolver::build() {
  const auto& vars = lp_.variables();
  const int nv = lp_.num_variables();
  var_parts_.assign(nv, {});
  var_offset_.assign(nv, 0.0);

  // Structural columns.
  std::vector<double> col_upper;
  std::vector<double> col_cost;
  const double sense = lp_.sense() == Sense::kMaximize ? -1.0 : 1.0;
  for (int j = 0; j < nv; ++j) {
    const Variable& v = vars[j];
    const double c = sense * lp_.objective()[j];
    if (std::isfinite(v.lower)) {
      var_offset_[j] = v.lower;
      var_parts_[j].push_back({static_cast<int>(col_upper.size()), 1.0});
      col_upper.push_back(v.upper - v.lower);
      col_cost.push_back(c);
    } else if (std::isfinite(v.upper)) {
      var_offset_[j] = v.upper;
      var_parts_[j].push_back({static_cast<int>(col_upper.size()), -1.0});
      col_upper.push_back(kInfinity);
      col_cost.push_back(-c);
    } else {
      var_parts_[j].push_back({static_cast<int>(col_upper.size()), 1.0});
      col_upper.push_back(kInfinity);
      col_cost.push_back(c);
      var_parts_[j].push_back({static_cast<int>(col_upper.size()), -1.0});
      col_upper.push_back(kInfinity);
      col_cost.push_back(-c);
    }
  }
  const int num_structural = static_cast<int>(col_upper.size());

  // Dense rows over structural columns, rhs shifted by variable offsets and
  // normalized to be nonnegative.
  const auto& cons = lp_.constraints();
  num_rows_ = lp_.num_constraints();
  std::vector<std::vector<double>> rows(num_rows_,
                                        std::vector<double>(num_structural));
  std::vector<double> row_rhs(num_rows_);
  std::vector<Relation> relation(num_rows_);
  row_sign_.assign(num_rows_, 1.0);
  int num_slack = 0;
  int num_artificial = 0;
  for (int i = 0; i < num_rows_; ++i) {
    double b = cons[i].rhs;
    for (const Term& t : cons[i].terms) {
      for (const ColumnPart& part : var_parts_[t.var]) {
        rows[i][part.col] += t.coef * part.sign;
      }
      b -= t.coef * var_offset_[t.var];
    }
    relation[i] = cons[i].relation;
    if (b < 0.0) {
      b = -b;
      for (double& a : rows[i]) a = -a;
      row_sign_[i] = -1.0;
      if (relation[i] == Relation::kLessEqual) {
        relation[i] = Relation::kGreaterEqual;
      } else if (relation[i] == Relation::kGreaterEqual) {
        relation[i] = Relation::kLessEqual;
      }
    }
    row_rhs[i] = b;
    switch (relation[i]) {
      case Relation::kLessEqual:
        ++num_slack;
        break;
      case Relation::kGreaterEqual:
        ++num_slack;
        ++num_artificial;
        break;
      case Relation::kEqual:
        ++num_artificial;
        break;
    }
  }

  num_cols_ = num_structural + num_slack + num_artificial;
  stride_ = num_cols_ + 1;
  tableau_.assign(static_cast<std::size_t>(num_rows_) * stride_, 0.0);
  upper_ = col_upper;
  upper_.resize(num_cols_, kInfinity);
  flipped_.assign(num_cols_, 0);
  artificial_.assign(num_cols_, 0);
  phase_two_cost_ = col_cost;
  phase_two_cost_.resize(num_cols_, 0.0);
  basis_.assign(num_rows_, -1);
  basic_row_.assign(num_cols_, -1);
  unit_col_.assign(num_rows_, -1);

  int next_slack = num_structural;
  int next_artificial = num_structural + num_slack;
  for (int i = 0; i < num_rows_; ++i) {
    for (int j = 0; j < num_structural; ++j) entry(i, j) = rows[i][j];
    rhs(i) = row_rhs[i];
    int unit = -1;
    if (relation[i] == Relation::kLessEqual) {
      unit = next_slack++;
    } else {
      if (relation[i] == Relation::kGreaterEqual) {
        entry(i, next_slack++) = -1.0;
      }
      unit = next_artificial++;
      artificial_[unit] = 1;
    }
    entry(i, unit) = 1.0;
    unit_col_[i] = unit;
    basis_[i] = unit;
    basic_row_[unit] = i;
  }
}

void SimplexSolver::compute_reduced_costs(const std::vector<double>& cost) {
  reduced_.assign(num_cols_, 0.0);
  for (int j = 0; j < num_cols_; ++j) {
    reduced_[j] = flipped_[j] ? -cost[j] : cost[j];
  }
  for (int i = 0; i < num_rows_; ++i) {
    const int b = basis_[i];
    const double cb = flipped_[b] ? -cost[b] : cost[b];
    if (cb == 0.0) continue;
    const double* row = &tableau_[i * stride_];
    for (int j = 0; j < num_cols_; ++j) reduced_[j] -= cb * row[j];
  }
  for (int i = 0; i < num_rows_; ++i) reduced_[basis_[i]] = 0.0;
}

void SimplexSolver::pivot(int row, int col) {
  double* prow = &tableau_[row * stride_];
  const double inv = 1.0 / prow[col];
  for (int j = 0; j <= num_cols_; ++j) prow[j] *= inv;
  prow[col] = 1.0;
  for (int i = 0; i < num_rows_; ++i) {
    if (i == row) continue;
    double* r = &tableau_[i * stride_];
    const double factor = r[col];
    if (factor == 0.0) continue;
    for (int j = 0; j <= num_cols_; ++j) {
      if (prow[j] != 0.0) r[j] -= factor * prow[j];
    }
    r[col] = 0.0;
  }
  const double dfactor = reduced_[col];
  if (dfactor != 0.0) {
    for (int j = 0; j < num_cols_; ++j) {
      if (prow[j] != 0.0) reduced_[j] -= dfactor * prow[j];
    }
    reduced_[col] = 0.0;
  }
  basic_row_[basis_[row]] = -1;
  basis_[row] = col;
  basic_row_[col] = row;
}

void SimplexSolver::flip_nonbasic(int col) {
  const double u = upper_[col];
  for (int i = 0; i < num_rows_; ++i) {
    double& a = entry(i, col);
    if (a == 0.0) continue;
    rhs(i) -= a * u;
    a = -a;
  }
  reduced_[col] = -reduced_[col];
  flipped_[col] ^= 1;
}

void SimplexSolver::flip_basic_row(int row) {
  const int col = basis_[row];
  double* r = &tableau_[row * stride_];
  for (int j = 0; j < num_cols_; ++j) {
    if (j != col) r[j] = -r[j];
  }
  r[num_cols_] = upper_[col] - r[num_cols_];
  flipped_[col] ^= 1;
}

Status SimplexSolver::run_phase(bool phase_one) {
  int degenerate_run = 0;
  while (true) {
    if (iterations_ >= options_.max_iterations) return Status::kIterationLimit;
    const bool bland = degenerate_run >= kDegeneratePivotsBeforeBland;

    int enter = -1;
    double best = -kCostTolerance;
    for (int j = 0; j < num_cols_; ++j) {
      if (basic_row_[j] >= 0) continue;
      if (!phase_one && artificial_[j]) continue;
      if (upper_[j] <= 0.0) continue;
      const double d = reduced_[j];
      if (d >= -kCostTolerance) continue;
      if (bland) {
        enter = j;
        break;
      }
      if (d < best) {
        best = d;
        enter = j;
      }
    }
    if (enter < 0) return Status::kOptimal;

    double theta = upper_[enter];
    int leave = -1;
    bool leave_at_upper = false;
    double leave_pivot = 0.0;
    for (int i = 0; i < num_rows_; ++i) {
      const double a = entry(i, enter);
      double limit;
      if (a > kPivotTolerance) {
        limit = std::max(rhs(i), 0.0) / a;
      } else if (a < -kPivotTolerance && std::isfinite(upper_[basis_[i]])) {
        limit = std::max(upper_[basis_[i]] - rhs(i), 0.0) / -a;
      } else {
        continue;
      }
      bool take = false;
      if (limit < theta - kRatioTieTolerance) {
        take = true;
      } else if (leave >= 0 && limit <= theta + kRatioTieTolerance) {
        take = bland ? basis_[i] < basis_[leave]
                     : std::abs(a) > std::abs(leave_pivot);
      }
      if (take) {
        theta = limit;
        leave = i;
        leave_at_upper = a < 0.0;
        leave_pivot = a;
      }
    }
    if (leave < 0 && !std::isfinite(theta)) return Status::kUnbounded;

    degenerate_run = theta <= kRatioTieTolerance ? degenerate_run + 1 : 0;
    ++iterations_;
    if (leave < 0) {
      flip_nonbasic(enter);
      continue;
    }
    if (leave_at_upper) flip_basic_row(leave);
    pivot(leave, enter);
  }
}

void SimplexSolver::drive_out_artificials() {
  for (int i = 0; i < num_rows_; ++i) {
    if (!artificial_[basis_[i]]) continue;
    int best_col = -1;
    double best_abs = 1e-7;
    for (int j = 0; j < num_cols_; ++j) {
      if (artificial_[j] || basic_row_[j] >= 0 || upper_[j] <= 0.0) continue;
      const double a = std::abs(entry(i, j));
      if (a > best_abs) {
        best_abs = a;
        best_col = j;
      }
    }
    if (best_col >= 0) pivot(i, best_col);
  }
}

std::vector<double> SimplexSolver::column_values() {
  std::vector<double> value(num_cols_, 0.0);
  for (int i = 0; i < num_rows_; ++i) value[basis_[i]] = rhs(i);
  for (int j = 0; j < num_cols_; ++j) {
    if (flipped_[j]) value[j] = upper_[j] - value[j];
  }
  return value;
}

SolveResult SimplexSolver::solve() {
  build();
  SolveResult result;

  bool any_artificial = false;
  for (char a : artificial_) any_artificial = any_artificial || a;
  if (any_artificial) {
    std::vector<double> phase_one_cost(num_cols_, 0.0);
    double scale = 1.0;
    for (int j = 0; j < num_cols_; ++j) {
      if (artificial_[j]) phase_one_cost[j] = 1.0;
    }
    for (int i = 0; i < num_rows_; ++i) scale = std::max(scale, rhs(i));
    compute_reduced_costs(phase_one_cost);
    const Status status = run_phase(/*phase_one=*/true);
    if (status != Status::kOptimal) {
      result.status = status;
      return result;
    }
    const std::vector<double> value = column_values();
    double infeasibility = 0.0;
    for (int j = 0; j < num_cols_; ++j) {
      if (artificial_[j]) infeasibility += std::abs(value[j]);
    }
    if (infeasibility > kFeasibilityTolerance * scale) {
      result.status = Status::kInfeasible;
      return result;
    }
    drive_out_artificials();
  }

  compute_reduced_costs(phase_two_cost_);
  const Status status = run_phase(/*phase_one=*/false);
  result.status = status;
  if (status != Status::kOptimal) return result;

  const std::vector<double> value = column_values();
  const int nv = lp_.num_variables();
  result.primal.assign(nv, 0.0);
  double objective = 0.0;
  for (int j = 0; j < nv; ++j) {
    double x = var_offset_[j];
    for (const ColumnPart& part : var_parts_[j]) {
      x += part.sign * value[part.col];
    }
    result.primal[j] = x;
    objective += lp_.objective()[j] * x;
  }
  result.objective = objective;

  const double sense = lp_.sense() == Sense::kMaximize ? -1.0 : 1.0;
  result.dual.assign(num_rows_, 0.0);
  for (int i = 0; i < num_rows_; ++i) {
    const double y = -reduced_[unit_col_[i]];
    result.dual[i] = sense * row_sign_[i] * y;
  }
  result.has_solution = true;
  return result;
}

}  // namespace

SolveResult solve_lp(const LinearProgram& lp, const SolveOptions& options,
                     bool relax) {
  lp.validate();
  if (!relax && lp.has_integral_variables()) {
    throw std::invalid_argument(
        "solve_lp: program has integral variables; use solve_milp");
  }
  SimplexSolver solver(lp, options);
  return solver.solve();
}

}  // namespace compnet::lp
