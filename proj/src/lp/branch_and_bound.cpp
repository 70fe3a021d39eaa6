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

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "compnet/lp.hpp"

namespace compnet::lp {
namespace {

struct Node {
  std::vector<double> lower;
  std::vector<double> upper;
};

}  // namespace

SolveResult solve_milp(const LinearProgram& lp, const SolveOptions& options) {
  lp.validate();
  std::vector<int> integral;
  for (int j = 0; j < lp.num_variables(); ++j) {
    const Variable& v = lp.variables()[j];
    if (!v.integral) continue;
    if (!std::isfinite(v.lower) || !std::isfinite(v.upper)) {
      throw std::invalid_argument("solve_milp: integral variable '" + v.name +
                                  "' must have finite bounds");
    }
    integral.push_back(j);
  }
  if (integral.empty()) {
    throw std::invalid_argument("solve_milp: no integral variables");
  }

  const auto start = std::chrono::steady_clock::now();
  const double sense = lp.sense() == Sense::kMaximize ? -1.0 : 1.0;
  LinearProgram work = lp;

  SolveResult result;
  double incumbent = kInfinity;  // in minimization form
  std::vector<double> incumbent_x;
  Status stop = Status::kOptimal;

  std::vector<Node> stack;
  {
    Node root;
    for (int j : integral) {
      root.lower.push_back(std::ceil(lp.variables()[j].lower - 1e-9));
      root.upper.push_back(std::floor(lp.variables()[j].upper + 1e-9));
    }
    stack.push_back(std::move(root));
  }

  while (!stack.empty()) {
    if (result.nodes >= options.node_limit) {
      stop = Status::kNodeLimit;
      break;
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed > options.time_limit_seconds) {
      stop = Status::kTimeLimit;
      break;
    }
    Node node = std::move(stack.back());
    stack.pop_back();
    ++result.nodes;

    bool empty_domain = false;
    for (std::size_t k = 0; k < integral.size(); ++k) {
      if (node.lower[k] > node.upper[k]) empty_domain = true;
      work.set_bounds(integral[k], node.lower[k], node.upper[k]);
    }
    if (empty_domain) continue;

    const SolveResult relaxed = solve_lp(work, options, /*relax=*/true);
    if (relaxed.status == Status::kInfeasible) continue;
    if (relaxed.status == Status::kUnbounded) {
      if (incumbent_x.empty()) {
        result.status = Status::kUnbounded;
        return result;
      }
      continue;
    }
    if (relaxed.status != Status::kOptimal) {
      stop = relaxed.status;
      break;
    }
    const double bound = sense * relaxed.objective;
    if (!incumbent_x.empty() && bound >= incumbent - kOptimalityTolerance) {
      continue;
    }

    int branch = -1;
    double branch_frac = kOptimalityTolerance;
    for (std::size_t k = 0; k < integral.size(); ++k) {
      const double x = relaxed.primal[integral[k]];
      const double frac = std::min(x - std::floor(x), std::ceil(x) - x);
      if (frac > branch_frac) {
        branch_frac = frac;
        branch = static_cast<int>(k);
      }
    }
    if (branch < 0) {
      incumbent = bound;
      incumbent_x = relaxed.primal;
      for (int j : integral) incumbent_x[j] = std::round(incumbent_x[j]);
      continue;
    }

    const double x = relaxed.primal[integral[branch]];
    Node down = node;
    down.upper[branch] = std::floor(x);
    Node up = std::move(node);
    up.lower[branch] = std::ceil(x);
    // Dive towards the nearer integer first; it is pushed last.
    if (x - std::floor(x) >= 0.5) {
      stack.push_back(std::move(down));
      stack.push_back(std::move(up));
    } else {
      stack.push_back(std::move(up));
      stack.push_back(std::move(down));
    }
  }

  if (incumbent_x.empty()) {
    result.status = stop == Status::kOptimal ? Status::kInfeasible : stop;
    return result;
  }
  result.status = stop;
  result.has_solution = true;
  result.primal = std::move(incumbent_x);
  double objective = 0.0;
  for (int j = 0; j < lp.num_variables(); ++j) {
    objective += lp.objective()[j] * result.primal[j];
  }
  result.objective = objective;
  return result;
}

}  // namespace compnet::lp
