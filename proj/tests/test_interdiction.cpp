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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "compnet/cuts.hpp"
#include "compnet/flow.hpp"
#include "compnet/interdiction.hpp"
#include "compnet/testkit.hpp"

namespace compnet {
namespace {

constexpr double kTol = 1e-6;

InterdictionProblem problem(const std::string& name, double budget,
                            InterdictionMode mode = InterdictionMode::kBinary) {
  const testkit::Fixture f = testkit::fixture(name);
  return {f.network, f.network.node_index(f.source),
          f.network.node_index(f.sink), budget, mode};
}

double piecewise(double b) {
  if (b <= 1.0) return 1.0 - 0.5 * b;
  if (b <= 1.5) return 1.5 - b;
  return 0.0;
}

TEST(Partial, FigureSixCurve) {
  for (double b : budget_grid(0.0, 2.0, 0.25)) {
    const auto p = problem("fig6", b, InterdictionMode::kPartial);
    EXPECT_NEAR(interdict_oracle(p).residual_flow, piecewise(b), kTol)
        << "B=" << b;
    EXPECT_NEAR(interdict(p, InterdictionMethod::kExact).residual_flow,
                piecewise(b), kTol);
  }
}

// Flow 2 carried by ({s-w-t},w) and ({s-u-v-s-u-t},v). Only the topology
// and the strategy sequence are given in the text; capacities are chosen to
// reproduce that sequence.
TEST(Partial, NonConvexSweepChangesSlope) {
  ComputingNetwork net;
  net.add_node("s", 0);
  net.add_node("w", 1);
  net.add_node("u", 0);
  net.add_node("v", 2);
  net.add_node("t", 0);
  net.add_link("s", "w", 1);
  net.add_link("w", "t", 2);
  net.add_link("s", "u", 2);
  net.add_link("u", "v", 2);
  net.add_link("v", "s", 2);
  net.add_link("u", "t", 1.5);
  const NodeIndex s = 0, t = 4;
  ASSERT_NEAR(max_flow(net, s, t).value, 2.0, kTol);
  auto residual = [&](double b) {
    return interdict_oracle({net, s, t, b, InterdictionMode::kPartial})
        .residual_flow;
  };
  const double expected_slopes[] = {1.0, 0.5, 1.0};
  const double breakpoints[] = {0.0, 1.0, 2.0, 2.5};
  for (int k = 0; k < 3; ++k) {
    const double lo = breakpoints[k], hi = breakpoints[k + 1];
    const double mid = 0.5 * (lo + hi);
    EXPECT_NEAR((residual(lo) - residual(mid)) / (mid - lo), expected_slopes[k],
                kTol);
    EXPECT_NEAR((residual(mid) - residual(hi)) / (hi - mid), expected_slopes[k],
                kTol);
  }
  EXPECT_NEAR(residual(2.5), 0.0, kTol);
}

TEST(Partial, GreedyFigureSixHalfBudget) {
  const auto p = problem("fig6", 0.5, InterdictionMode::kPartial);
  EXPECT_NEAR(interdict_partial_greedy(p, GreedyVariant::kShadow).residual_flow,
              0.75, kTol);
}

TEST(Partial, GreedyUnitSlopeWhenOneBottleneck) {
  // Fig. 4 is a single unit-capacity path: every budget unit removes one
  // unit of flow.
  for (double b : {0.0, 0.2, 0.5, 0.9, 1.0, 1.4}) {
    const auto p = problem("fig4", b, InterdictionMode::kPartial);
    for (GreedyVariant v :
         {GreedyVariant::kShadow, GreedyVariant::kCost,
          GreedyVariant::kCostAware}) {
      const InterdictionSolution sol = interdict_partial_greedy(p, v);
      EXPECT_NEAR(sol.residual_flow, std::max(1.0 - b, 0.0), kTol);
      EXPECT_LE(sol.spent, b + kTol);
    }
  }
}

TEST(Partial, ZeroBudgetIsIdentity) {
  const auto p = problem("fig1", 0.0, InterdictionMode::kPartial);
  const InterdictionSolution sol =
      interdict_partial_greedy(p, GreedyVariant::kCost);
  EXPECT_NEAR(sol.residual_flow, 4.0, kTol);
  EXPECT_TRUE(sol.removal.removed().empty());
  EXPECT_TRUE(sol.trace.empty());
}

TEST(Binary, FigureSixValues) {
  // Whole resources only: nothing below 1.5 cuts any flow.
  for (double b : budget_grid(0.0, 1.75, 0.25)) {
    const auto p = problem("fig6", b);
    const InterdictionSolution exact = interdict_binary_exact(p);
    EXPECT_NEAR(exact.residual_flow, b >= 1.5 - 1e-9 ? 0.0 : 1.0, kTol);
    EXPECT_NEAR(interdict_oracle(p).residual_flow, exact.residual_flow, kTol);
    EXPECT_TRUE(exact.optimal);
  }
}

TEST(Binary, ZeroBudgetStopsBeforeScoring) {
  auto p = problem("fig3", 0.0);
  p.network.set_node_cost(p.network.node_index("u1"), 0.0);
  EXPECT_TRUE(interdict_binary_greedy_cost(p).trace.empty());
}

TEST(Binary, ZeroBudgetKeepsMaxFlow) {
  for (const testkit::Fixture& f : testkit::fixtures()) {
    const auto p = problem(f.name, 0.0);
    const double flow = max_flow(p.network, p.source, p.sink).value;
    const InterdictionSolution exact = interdict_binary_exact(p);
    EXPECT_NEAR(exact.residual_flow, flow, kTol) << f.name;
    EXPECT_TRUE(exact.removal.removed().empty()) << f.name;
    const InterdictionSolution greedy = interdict_binary_greedy(p);
    EXPECT_TRUE(greedy.trace.empty());
    EXPECT_NEAR(greedy.residual_flow, flow, kTol);
  }
}

TEST(Binary, GreedyFigureFiveBudgetTwo) {
  const auto p = problem("fig5", 2.0);
  EXPECT_NEAR(interdict_binary_greedy(p).residual_flow, 0.0, kTol);
  EXPECT_NEAR(interdict_binary_exact(p).residual_flow, 0.0, kTol);
  EXPECT_NEAR(interdict_oracle(p).residual_flow, 0.0, kTol);
}

TEST(Binary, BudgetAboveJointCutClearsFlow) {
  for (const testkit::Fixture& f : testkit::fixtures()) {
    const auto base = problem(f.name, 0.0);
    const double joint =
        min_joint_cut_exact(base.network, base.source, base.sink).value;
    auto p = base;
    p.budget = joint + 1e-9;
    EXPECT_NEAR(interdict_binary_exact(p).residual_flow, 0.0, kTol) << f.name;
  }
}

TEST(Binary, ShadowGreedyRequiresCostsEqualCapacities) {
  auto p = problem("fig3", 1.0);
  p.network.set_link_cost(0, 0.5);
  EXPECT_THROW(interdict_binary_greedy(p), ValidationError);
  EXPECT_NO_THROW(interdict_binary_greedy_cost(p));
}

TEST(Binary, FreeResourceIsTakenFirst) {
  // Nothing else is affordable with this budget.
  auto p = problem("fig3", 0.1);
  const NodeIndex u1 = p.network.node_index("u1");
  p.network.set_node_cost(u1, 0.0);
  for (auto solve : {&interdict_binary_greedy_cost,
                     &interdict_binary_greedy_cost_aware}) {
    const InterdictionSolution sol = solve(p);
    ASSERT_FALSE(sol.trace.empty());
    EXPECT_EQ(sol.trace[0].resource,
              (Resource{Resource::Kind::kNode, u1}));
    EXPECT_TRUE(std::isinf(sol.trace[0].score));
    EXPECT_NEAR(sol.residual_flow, 1.0, kTol);
    EXPECT_NEAR(sol.spent, 0.0, kTol);
  }
}

TEST(Binary, CostScoresMatchShadowWhenCostsEqualCapacities) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = testkit::random_small_network(seed);
    const InterdictionProblem p{inst.network, inst.source, inst.sink, 1.5,
                                InterdictionMode::kBinary};
    const InterdictionSolution a = interdict_binary_greedy(p);
    const InterdictionSolution b = interdict_binary_greedy_cost(p);
    const InterdictionSolution c = interdict_binary_greedy_cost_aware(p);
    ASSERT_EQ(a.trace.size(), b.trace.size()) << "seed " << seed;
    ASSERT_EQ(a.trace.size(), c.trace.size()) << "seed " << seed;
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
      EXPECT_EQ(a.trace[i].resource, b.trace[i].resource);
      EXPECT_EQ(a.trace[i].resource, c.trace[i].resource);
      EXPECT_NEAR(a.trace[i].score, b.trace[i].score, kTol);
    }
    EXPECT_NEAR(a.residual_flow, b.residual_flow, kTol);
  }
}

TEST(Validate, RejectsBadProblems) {
  auto p = problem("fig1", -1.0);
  EXPECT_THROW(validate(p), ValidationError);
  p.budget = std::numeric_limits<double>::infinity();
  EXPECT_THROW(validate(p), ValidationError);
  p.budget = 1.0;
  p.sink = p.source;
  EXPECT_THROW(interdict_binary_exact(p), ValidationError);
}

TEST(Sweep, CsvAndEmptyGrid) {
  const auto p = problem("fig6", 0.0, InterdictionMode::kPartial);
  const auto rows = budget_sweep(p, budget_grid(0.0, 1.5, 0.25),
                                 {InterdictionMethod::kExact});
  ASSERT_EQ(rows.size(), 7u);
  for (const SweepRow& r : rows) {
    EXPECT_NEAR(r.residual_flow, piecewise(r.budget), kTol);
  }
  const std::string csv = sweep_to_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "budget,method,residual_flow,spent,optimal");
  EXPECT_NE(csv.find("1.250000,exact,0.250000"), std::string::npos);

  EXPECT_TRUE(budget_sweep(p, {}, {InterdictionMethod::kExact}).empty());
  EXPECT_EQ(sweep_to_csv({}), "budget,method,residual_flow,spent,optimal\n");
  EXPECT_TRUE(budget_grid(1.0, 0.5, 0.25).empty());
  EXPECT_THROW(budget_grid(0.0, 1.0, 0.0), ValidationError);
  EXPECT_THROW(budget_grid(-1.0, 1.0, 0.5), ValidationError);
}

TEST(Methods, NamesRoundTrip) {
  for (InterdictionMethod m :
       {InterdictionMethod::kExact, InterdictionMethod::kGreedy,
        InterdictionMethod::kGreedyCost, InterdictionMethod::kCostAware,
        InterdictionMethod::kOracle}) {
    EXPECT_EQ(parse_interdiction_method(to_string(m)), m);
  }
  EXPECT_FALSE(parse_interdiction_method("bogus").has_value());
}

class InterdictionCorpus : public ::testing::TestWithParam<std::uint64_t> {
 protected:
  testkit::RandomInstance inst = [this] {
    testkit::SmallNetworkSpec spec;
    spec.independent_costs = GetParam() % 2 == 1;
    return testkit::random_small_network(GetParam(), spec);
  }();

  double total_cost() const {
    double c = 0.0;
    for (const Resource& r : inst.network.resources()) {
      c += inst.network.cost(r);
    }
    return c;
  }
};

TEST_P(InterdictionCorpus, ExactMatchesOracleAndResidual) {
  for (double fraction : {0.15, 0.3, 0.5}) {
    const InterdictionProblem p{inst.network, inst.source, inst.sink,
                                fraction * total_cost(),
                                InterdictionMode::kBinary};
    const InterdictionSolution exact = interdict_binary_exact(p);
    ASSERT_TRUE(exact.optimal);
    EXPECT_NEAR(exact.residual_flow, interdict_oracle(p).residual_flow, kTol);
    ASSERT_TRUE(exact.milp_objective.has_value());
    EXPECT_NEAR(*exact.milp_objective, exact.residual_flow, kTol);
    EXPECT_LE(exact.spent, p.budget + kTol);
    EXPECT_NEAR(exact.spent, removal_cost(p.network, exact.removal), kTol);
    for (auto greedy : {&interdict_binary_greedy_cost,
                        &interdict_binary_greedy_cost_aware}) {
      const InterdictionSolution g = greedy(p);
      EXPECT_GE(g.residual_flow, exact.residual_flow - kTol);
      EXPECT_LE(g.spent, p.budget + kTol);
    }
  }
}

TEST_P(InterdictionCorpus, ExactIsMonotoneInBudget) {
  double previous = std::numeric_limits<double>::infinity();
  for (double fraction : {0.0, 0.1, 0.2, 0.4, 0.7, 1.0}) {
    const InterdictionProblem p{inst.network, inst.source, inst.sink,
                                fraction * total_cost(),
                                InterdictionMode::kBinary};
    const double r = interdict_binary_exact(p).residual_flow;
    EXPECT_LE(r, previous + kTol);
    previous = r;
  }
  EXPECT_NEAR(previous, 0.0, kTol);
}

TEST_P(InterdictionCorpus, PartialOracleBoundsAndGreedy) {
  const double flow = max_flow(inst.network, inst.source, inst.sink).value;
  for (double fraction : {0.1, 0.3}) {
    const InterdictionProblem p{inst.network, inst.source, inst.sink,
                                fraction * total_cost(),
                                InterdictionMode::kPartial};
    const double best = interdict_oracle(p).residual_flow;
    auto binary = p;
    binary.mode = InterdictionMode::kBinary;
    EXPECT_LE(best, interdict_binary_exact(binary).residual_flow + kTol);
    if (GetParam() % 2 == 0) {
      EXPECT_GE(best, std::max(flow - p.budget, 0.0) - kTol);
    }
    for (GreedyVariant v : {GreedyVariant::kCost, GreedyVariant::kCostAware}) {
      const InterdictionSolution g = interdict_partial_greedy(p, v);
      EXPECT_GE(g.residual_flow, best - kTol);
      EXPECT_LE(g.spent, p.budget + kTol);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, InterdictionCorpus,
                         ::testing::Range<std::uint64_t>(0, 40));

}  // namespace
}  // namespace compnet
