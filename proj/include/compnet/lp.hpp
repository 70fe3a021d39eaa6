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

#ifndef COMPNET_LP_HPP_
#define COMPNET_LP_HPP_

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace compnet::lp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Primal feasibility tolerance used by the simplex engine.
inline constexpr double kFeasibilityTolerance = 1e-7;
// Tolerance for optimality tests, integrality and value comparisons.
inline constexpr double kOptimalityTolerance = 1e-6;

enum class Relation { kLessEqual, kEqual, kGreaterEqual };
enum class Sense { kMinimize, kMaximize };

enum class Status {
  kOptimal,
  kInfeasible,
  kUnbounded,
  kIterationLimit,
  kNodeLimit,
  kTimeLimit,
};

std::string_view to_string(Status status);

struct Term {
  int var = 0;
  double coef = 0.0;
};

struct Variable {
  std::string name;
  double lower = 0.0;
  double upper = kInfinity;
  bool integral = false;
};

struct Constraint {
  std::string name;
  std::vector<Term> terms;
  Relation relation = Relation::kLessEqual;
  double rhs = 0.0;
};

// A linear (or mixed-integer linear) program in row form. Variables and
// constraints are addressed by the dense indices returned when they are
// added.
class LinearProgram {
 public:
  int add_variable(std::string name, double lower, double upper,
                   bool integral = false);
  int add_constraint(std::string name, std::vector<Term> terms,
                     Relation relation, double rhs);

  void set_sense(Sense sense) { sense_ = sense; }
  void set_objective_coefficient(int var, double coef);
  void set_bounds(int var, double lower, double upper);

  Sense sense() const { return sense_; }
  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::vector<double>& objective() const { return objective_; }
  int num_variables() const { return static_cast<int>(variables_.size()); }
  int num_constraints() const { return static_cast<int>(constraints_.size()); }
  bool has_integral_variables() const;

  // Throws std::invalid_argument on crossed bounds, dangling variable
  // references or non-finite coefficients.
  void validate() const;

 private:
  Sense sense_ = Sense::kMinimize;
  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
  std::vector<double> objective_;
};

struct SolveOptions {
  std::int64_t max_iterations = 200000;
  std::int64_t node_limit = 2000000;
  // Wall-clock limit for branch-and-bound, in seconds.
  double time_limit_seconds = 600.0;
};

struct SolveResult {
  Status status = Status::kInfeasible;
  // Objective value in the sense of the program (max programs report the
  // maximum). For a MILP stopped at a limit this is the incumbent value.
  double objective = 0.0;
  std::vector<double> primal;
  // Shadow price per constraint: d(objective)/d(rhs) at the terminal basis.
  // Only filled for LP solves.
  std::vector<double> dual;
  // Branch-and-bound bookkeeping.
  std::int64_t nodes = 0;
  bool has_solution = false;
};

// Solves the continuous relaxation; integrality flags are ignored only when
// `relax` is true, otherwise integral variables are rejected.
SolveResult solve_lp(const LinearProgram& lp, const SolveOptions& options = {},
                     bool relax = false);

// Depth-first branch-and-bound over the integral variables, branching on
// the most fractional one (ties broken by lowest index).
SolveResult solve_milp(const LinearProgram& lp,
                       const SolveOptions& options = {});

// Human-readable dump of the program, one row per line.
std::string to_lp_text(const LinearProgram& lp);

}  // namespace compnet::lp

#endif  // COMPNET_LP_HPP_
