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

#include "compnet/interdiction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "compnet/flow.hpp"
#include "compnet/layered.hpp"

namespace compnet {
namespace {

struct InterdictionModel {
  lp::LinearProgram program;
  std::vector<Resource> resources;
  std::vector<int> z_var;
};

InterdictionModel build_model(const InterdictionProblem& p) {
  const ComputingNetwork& net = p.network;
  const LayeredGraph g = build_layered(net, p.source, p.sink);
  const std::size_t n = net.num_nodes();
  InterdictionModel m;
  lp::LinearProgram& prog = m.program;
  prog.set_sense(lp::Sense::kMinimize);

  m.resources = net.resources();
  std::vector<int> beta(m.resources.size());
  for (std::size_t i = 0; i < m.resources.size(); ++i) {
    const std::string name = net.name(m.resources[i]);
    m.z_var.push_back(prog.add_variable("z_" + name, 0.0, 1.0, true));
    beta[i] = prog.add_variable("beta_" + name, 0.0, 1.0);
    prog.set_objective_coefficient(beta[i], net.capacity(m.resources[i]));
  }
  std::vector<int> pot(g.num_nodes());
  for (std::size_t v = 0; v < g.num_nodes(); ++v) {
    pot[v] = prog.add_variable("p_" + g.node_label(v, net), 0.0, 1.0);
  }

  std::vector<lp::Term> budget;
  for (std::size_t i = 0; i < m.resources.size(); ++i) {
    const Resource& r = m.resources[i];
    const std::string name = net.name(r);
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    if (r.kind == Resource::Kind::kLink) {
      const Link& l = net.links()[r.index];
      arcs = {{l.from, l.to}, {l.from + n, l.to + n}};
    } else {
      arcs = {{r.index, r.index + n}};
    }
    for (const auto& [u, v] : arcs) {
      prog.add_constraint("arc_" + name + (u >= n ? "'" : ""),
                          {{pot[v], 1.0}, {pot[u], -1.0}, {beta[i], 1.0},
                           {m.z_var[i], 1.0}},
                          lp::Relation::kGreaterEqual, 0.0);
    }
    budget.push_back({m.z_var[i], net.cost(r)});
  }
  prog.add_constraint("separate", {{pot[g.source()], 1.0}, {pot[g.sink()], -1.0}},
                      lp::Relation::kGreaterEqual, 1.0);
  prog.add_constraint("budget", std::move(budget), lp::Relation::kLessEqual,
                      p.budget);
  return m;
}

void finish(const InterdictionProblem& p, InterdictionSolution& sol) {
  sol.spent = removal_cost(p.network, sol.removal);
  sol.residual_flow =
      max_flow(apply_removal(p.network, sol.removal), p.source, p.sink).value;
}

bool costs_equal_capacities(const ComputingNetwork& net) {
  for (const Resource& r : net.resources()) {
    const double mu = net.capacity(r);
    if (std::abs(net.cost(r) - mu) > 1e-9 * std::max(1.0, mu)) return false;
  }
  return true;
}

constexpr double kScoreTolerance = 1e-9;

// Strictly better candidate: higher score, then larger capacity, then
// lexicographically smaller name.
bool better(const ComputingNetwork& net, const Resource& a, double score_a,
            const Resource& b, double score_b) {
  const bool inf_a = std::isinf(score_a);
  const bool inf_b = std::isinf(score_b);
  if (inf_a != inf_b) return inf_a;
  if (!inf_a &&
      std::abs(score_a - score_b) >
          kScoreTolerance * std::max(1.0, std::abs(score_b))) {
    return score_a > score_b;
  }
  const double cap_a = net.capacity(a);
  const double cap_b = net.capacity(b);
  if (std::abs(cap_a - cap_b) > kScoreTolerance) return cap_a > cap_b;
  return net.name(a) < net.name(b);
}

InterdictionSolution run_greedy(const InterdictionProblem& p,
                                GreedyVariant variant, bool partial) {
  validate(p);
  const ComputingNetwork& net = p.network;
  if (variant == GreedyVariant::kShadow && !costs_equal_capacities(net)) {
    throw ValidationError(
        "shadow-price greedy requires interdiction costs equal to capacities");
  }
  InterdictionSolution sol;
  sol.removal = RemovalSpec::none(net, !partial);
  const std::vector<Resource> all = net.resources();
  double remaining = p.budget;

  for (std::size_t iter = 0; iter <= all.size(); ++iter) {
    if (remaining <= 0.0) break;
    const ComputingNetwork current = apply_removal(net, sol.removal);
    const FlowSolution flow = max_flow(current, p.source, p.sink);
    if (flow.value <= kValueTolerance) break;

    std::optional<FlowSolution> cost_flow;
    if (variant == GreedyVariant::kCostAware) {
      ComputingNetwork priced = current;
      for (const Resource& r : all) {
        const double left = 1.0 - sol.removal.fraction(r);
        const double c = left > 0.0 ? net.cost(r) * left : 0.0;
        if (r.kind == Resource::Kind::kLink) {
          priced.set_link_capacity(r.index, c);
        } else {
          priced.set_processing_capacity(r.index, c);
        }
      }
      cost_flow = max_flow(priced, p.source, p.sink);
    }

    std::optional<Resource> best;
    double best_score = 0.0;
    for (const Resource& r : all) {
      if (sol.removal.fraction(r) >= 1.0) continue;
      const double cost = net.cost(r);
      if (!partial && cost > remaining + kScoreTolerance) continue;
      const double q = flow.dual(r);
      double score = 0.0;
      if (cost <= 0.0) {
        if (q <= kScoreTolerance) continue;
        score = std::numeric_limits<double>::infinity();
      } else {
        switch (variant) {
          case GreedyVariant::kShadow:
            score = q;
            break;
          case GreedyVariant::kCost:
            score = q * net.capacity(r) / cost;
            break;
          case GreedyVariant::kCostAware:
            score = cost_flow->dual(r) * net.capacity(r) / cost;
            break;
        }
      }
      if (score <= kScoreTolerance) continue;
      if (!best || better(net, r, score, *best, best_score)) {
        best = r;
        best_score = score;
      }
    }
    if (!best) break;

    const double cost = net.cost(*best);
    double amount = 1.0;
    if (partial && cost > remaining) {
      amount = remaining / cost;
      remaining = 0.0;
    } else {
      remaining = std::max(0.0, remaining - cost);
    }
    sol.removal.set_fraction(*best, amount);
    sol.trace.push_back({*best, best_score, amount});
  }
  finish(p, sol);
  sol.optimal = false;
  return sol;
}

InterdictionSolution binary_oracle(const InterdictionProblem& p,
                                   const std::vector<Resource>& res) {
  const ComputingNetwork& net = p.network;
  InterdictionSolution best;
  best.residual_flow = std::numeric_limits<double>::infinity();
  RemovalSpec removal = RemovalSpec::none(net, true);
  std::vector<char> taken(res.size(), 0);

  auto visit = [&](auto&& self, std::size_t i, double left) -> void {
    if (best.residual_flow <= kValueTolerance) return;
    if (i == res.size()) {
      for (std::size_t j = 0; j < res.size(); ++j) {
        if (!taken[j] && net.cost(res[j]) <= left + kScoreTolerance) return;
      }
      const double value =
          max_flow(apply_removal(net, removal), p.source, p.sink).value;
      if (value < best.residual_flow - 1e-12) {
        best.residual_flow = value;
        best.removal = removal;
      }
      return;
    }
    const double c = net.cost(res[i]);
    if (c <= left + kScoreTolerance) {
      taken[i] = 1;
      removal.set_fraction(res[i], 1.0);
      self(self, i + 1, left - c);
      taken[i] = 0;
      removal.set_fraction(res[i], 0.0);
    }
    self(self, i + 1, left);
  };
  visit(visit, 0, p.budget);
  best.spent = removal_cost(net, best.removal);
  return best;
}

InterdictionSolution partial_oracle(const InterdictionProblem& p,
                                    const std::vector<Resource>& res) {
  const ComputingNetwork& net = p.network;
  InterdictionSolution best;
  best.residual_flow = std::numeric_limits<double>::infinity();
  RemovalSpec removal = RemovalSpec::none(net, false);

  auto evaluate = [&] {
    const double value =
        max_flow(apply_removal(net, removal), p.source, p.sink).value;
    if (value < best.residual_flow - 1e-12) {
      best.residual_flow = value;
      best.removal = removal;
    }
  };
  // Full subsets S with c(S) <= B; at each S also try spending the rest on
  // one more resource that S cannot afford in full.
  auto visit = [&](auto&& self, std::size_t i, double left) -> void {
    if (best.residual_flow <= kValueTolerance) return;
    if (i == res.size()) {
      evaluate();
      for (const Resource& r : res) {
        const double c = net.cost(r);
        if (removal.fraction(r) > 0.0 || c <= left || left <= 0.0) continue;
        removal.set_fraction(r, left / c);
        evaluate();
        removal.set_fraction(r, 0.0);
      }
      return;
    }
    const double c = net.cost(res[i]);
    if (c <= left + kScoreTolerance) {
      removal.set_fraction(res[i], 1.0);
      self(self, i + 1, std::max(0.0, left - c));
      removal.set_fraction(res[i], 0.0);
    }
    self(self, i + 1, left);
  };
  visit(visit, 0, p.budget);
  best.spent = removal_cost(net, best.removal);
  return best;
}

}  // namespace

std::string_view to_string(InterdictionMethod method) {
  switch (method) {
    case InterdictionMethod::kExact:
      return "exact";
    case InterdictionMethod::kGreedy:
      return "greedy";
    case InterdictionMethod::kGreedyCost:
      return "greedy-cost";
    case InterdictionMethod::kCostAware:
      return "cost-aware";
    case InterdictionMethod::kOracle:
      return "oracle";
  }
  return "unknown";
}

std::optional<InterdictionMethod> parse_interdiction_method(
    std::string_view text) {
  for (InterdictionMethod m :
       {InterdictionMethod::kExact, InterdictionMethod::kGreedy,
        InterdictionMethod::kGreedyCost, InterdictionMethod::kCostAware,
        InterdictionMethod::kOracle}) {
    if (text == to_string(m)) return m;
  }
  return std::nullopt;
}

void validate(const InterdictionProblem& p) {
  const std::size_t n = p.network.num_nodes();
  if (p.source >= n || p.sink >= n || p.source == p.sink) {
    throw ValidationError("interdiction: invalid source/sink");
  }
  if (!std::isfinite(p.budget) || p.budget < 0.0) {
    throw ValidationError("interdiction: budget must be finite and >= 0");
  }
  for (const Node& v : p.network.nodes()) {
    if (!(v.interdiction_cost >= 0.0)) {
      throw ValidationError("interdiction: negative cost at node " + v.id);
    }
  }
  for (LinkIndex e = 0; e < p.network.num_links(); ++e) {
    if (!(p.network.links()[e].interdiction_cost >= 0.0)) {
      throw ValidationError("interdiction: negative cost on link " +
                            p.network.link_name(e));
    }
  }
}

lp::LinearProgram build_interdiction_program(const InterdictionProblem& p) {
  validate(p);
  return build_model(p).program;
}

InterdictionSolution interdict_binary_exact(const InterdictionProblem& p,
                                            const lp::SolveOptions& options) {
  validate(p);
  InterdictionSolution sol;
  sol.removal = RemovalSpec::none(p.network, true);
  sol.optimal = true;
  if (!sink_reachable(build_layered(p.network, p.source, p.sink))) {
    sol.milp_objective = 0.0;
    return sol;
  }
  const InterdictionModel model = build_model(p);
  const lp::SolveResult result = lp::solve_milp(model.program, options);
  if (!result.has_solution) {
    throw SolverError("interdiction MILP ended with status " +
                      std::string(lp::to_string(result.status)));
  }
  for (std::size_t i = 0; i < model.resources.size(); ++i) {
    if (result.primal[model.z_var[i]] > 0.5) {
      sol.removal.set_fraction(model.resources[i], 1.0);
    }
  }
  sol.milp_objective = result.objective;
  sol.optimal = result.status == lp::Status::kOptimal;
  finish(p, sol);
  return sol;
}

InterdictionSolution interdict_binary_greedy(const InterdictionProblem& p) {
  return run_greedy(p, GreedyVariant::kShadow, false);
}

InterdictionSolution interdict_binary_greedy_cost(const InterdictionProblem& p) {
  return run_greedy(p, GreedyVariant::kCost, false);
}

InterdictionSolution interdict_binary_greedy_cost_aware(
    const InterdictionProblem& p) {
  return run_greedy(p, GreedyVariant::kCostAware, false);
}

InterdictionSolution interdict_partial_greedy(const InterdictionProblem& p,
                                              GreedyVariant variant) {
  return run_greedy(p, variant, true);
}

InterdictionSolution interdict_oracle(const InterdictionProblem& p) {
  validate(p);
  const ComputingNetwork& net = p.network;
  // Free resources are always worth removing.
  std::vector<Resource> res;
  RemovalSpec free_part = RemovalSpec::none(net, p.mode == InterdictionMode::kBinary);
  for (const Resource& r : net.resources()) {
    if (net.cost(r) <= 0.0) {
      free_part.set_fraction(r, 1.0);
    } else {
      res.push_back(r);
    }
  }
  if (res.size() > 20) {
    throw Error("interdiction oracle: too many resources (" +
                std::to_string(res.size()) + ")");
  }
  InterdictionProblem reduced = p;
  reduced.network = apply_removal(net, free_part);
  InterdictionSolution sol = p.mode == InterdictionMode::kBinary
                                 ? binary_oracle(reduced, res)
                                 : partial_oracle(reduced, res);
  for (const Resource& r : free_part.removed()) sol.removal.set_fraction(r, 1.0);
  sol.removal.binary = p.mode == InterdictionMode::kBinary;
  sol.optimal = true;
  finish(p, sol);
  return sol;
}

InterdictionSolution interdict(const InterdictionProblem& p,
                               InterdictionMethod method,
                               const lp::SolveOptions& options) {
  const bool partial = p.mode == InterdictionMode::kPartial;
  switch (method) {
    case InterdictionMethod::kExact:
      return partial ? interdict_oracle(p) : interdict_binary_exact(p, options);
    case InterdictionMethod::kGreedy:
      return run_greedy(p, GreedyVariant::kShadow, partial);
    case InterdictionMethod::kGreedyCost:
      return run_greedy(p, GreedyVariant::kCost, partial);
    case InterdictionMethod::kCostAware:
      return run_greedy(p, GreedyVariant::kCostAware, partial);
    case InterdictionMethod::kOracle:
      return interdict_oracle(p);
  }
  throw Error("unknown interdiction method");
}

std::vector<SweepRow> budget_sweep(const InterdictionProblem& problem,
                                   const std::vector<double>& budgets,
                                   const std::vector<InterdictionMethod>& methods,
                                   const lp::SolveOptions& options) {
  std::vector<SweepRow> rows;
  InterdictionProblem p = problem;
  for (double b : budgets) {
    p.budget = b;
    for (InterdictionMethod m : methods) {
      const InterdictionSolution sol = interdict(p, m, options);
      rows.push_back({b, m, sol.residual_flow, sol.spent, sol.optimal});
    }
  }
  return rows;
}

std::vector<double> budget_grid(double lo, double hi, double step) {
  if (!(lo >= 0.0) || !(hi >= 0.0) || !std::isfinite(hi)) {
    throw ValidationError("budget grid bounds must be finite and >= 0");
  }
  if (!(step > 0.0)) throw ValidationError("budget grid step must be > 0");
  std::vector<double> grid;
  for (long k = 0;; ++k) {
    const double b = lo + static_cast<double>(k) * step;
    if (b > hi + 1e-9) break;
    grid.push_back(b);
  }
  return grid;
}

}  // namespace compnet
