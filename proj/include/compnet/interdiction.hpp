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

#ifndef COMPNET_INTERDICTION_HPP_
#define COMPNET_INTERDICTION_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "compnet/lp.hpp"
#include "compnet/network.hpp"

namespace compnet {

enum class InterdictionMode { kBinary, kPartial };

struct InterdictionProblem {
  ComputingNetwork network;
  NodeIndex source = 0;
  NodeIndex sink = 0;
  double budget = 0.0;
  InterdictionMode mode = InterdictionMode::kBinary;
};

struct GreedyStep {
  Resource resource;
  // +inf for a free resource that still carries flow.
  double score = 0.0;
  // Fraction of the capacity removed at this step.
  double amount = 0.0;
};

struct InterdictionSolution {
  RemovalSpec removal;
  double spent = 0.0;
  // Max flow of the network after the removal.
  double residual_flow = 0.0;
  bool optimal = false;
  std::vector<GreedyStep> trace;
  // Objective of the interdiction MILP, when one was solved.
  std::optional<double> milp_objective;
};

enum class GreedyVariant { kShadow, kCost, kCostAware };

enum class InterdictionMethod {
  kExact,
  kGreedy,
  kGreedyCost,
  kCostAware,
  kOracle,
};

std::string_view to_string(InterdictionMethod method);
// "exact", "greedy", "greedy-cost", "cost-aware", "oracle".
std::optional<InterdictionMethod> parse_interdiction_method(
    std::string_view text);

// Throws ValidationError for bad terminals, a negative or non-finite
// budget, or negative costs.
void validate(const InterdictionProblem& problem);

// MILP over removal indicators z, auxiliary beta and layered potentials p:
//   min sum mu*beta
//   p_v - p_u + beta + z >= 0   for both copies of every link and the
//                               cross edge of every computation node
//   p_s - p_t' >= 1,  sum c*z <= B
lp::LinearProgram build_interdiction_program(const InterdictionProblem& problem);

InterdictionSolution interdict_binary_exact(const InterdictionProblem& problem,
                                            const lp::SolveOptions& options = {});

// Largest shadow price among affordable resources. Requires every cost to
// equal its capacity.
InterdictionSolution interdict_binary_greedy(const InterdictionProblem& problem);
// Largest q*mu/c among resources whose cost fits the remaining budget.
InterdictionSolution interdict_binary_greedy_cost(
    const InterdictionProblem& problem);
// As greedy-cost, with duals taken from the flow LP whose capacities are
// replaced by the interdiction costs.
InterdictionSolution interdict_binary_greedy_cost_aware(
    const InterdictionProblem& problem);

// Same selection rules without the affordability filter; the final pick
// removes whatever fraction the leftover budget pays for.
InterdictionSolution interdict_partial_greedy(const InterdictionProblem& problem,
                                              GreedyVariant variant);

// Ground truth by enumeration. Binary: every maximal affordable subset.
// Partial: every vertex of {0 <= z <= 1, c.z <= B}; the residual flow is
// concave in z, so a vertex is optimal. Throws Error beyond 20 resources.
InterdictionSolution interdict_oracle(const InterdictionProblem& problem);

// Dispatch on method and problem.mode. Partial mode maps exact to the
// oracle.
InterdictionSolution interdict(const InterdictionProblem& problem,
                               InterdictionMethod method,
                               const lp::SolveOptions& options = {});

struct SweepRow {
  double budget = 0.0;
  InterdictionMethod method = InterdictionMethod::kExact;
  double residual_flow = 0.0;
  double spent = 0.0;
  bool optimal = false;
};

// Rows ordered by budget, then by the order of `methods`.
std::vector<SweepRow> budget_sweep(const InterdictionProblem& problem,
                                   const std::vector<double>& budgets,
                                   const std::vector<InterdictionMethod>& methods,
                                   const lp::SolveOptions& options = {});

// Header "budget,method,residual_flow,spent,optimal"; six decimals.
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

// Inclusive grid lo, lo+step, ... <= hi (+1e-9). Throws ValidationError on
// a negative bound or non-positive step.
std::vector<double> budget_grid(double lo, double hi, double step);

}  // namespace compnet

#endif  // COMPNET_INTERDICTION_HPP_
