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

#include <algorithm>
#include <random>

#include "compnet/flow.hpp"
#include "compnet/testkit.hpp"

namespace compnet {
namespace {

constexpr double kTol = 1e-6;

double flow_of(const testkit::Fixture& f) {
  const ComputingNetwork& net = f.network;
  return max_flow(net, net.node_index(f.source), net.node_index(f.sink)).value;
}

FlowSolution solve(const testkit::Fixture& f) {
  const ComputingNetwork& net = f.network;
  return max_flow(net, net.node_index(f.source), net.node_index(f.sink));
}

// Replaces every capacity of `net` by the vector `mu` (links then nodes).
ComputingNetwork with_capacities(const ComputingNetwork& net,
                                 const std::vector<double>& mu) {
  ComputingNetwork out = net;
  for (LinkIndex e = 0; e < net.num_links(); ++e) {
    out.set_link_capacity(e, mu[e]);
  }
  for (NodeIndex v = 0; v < net.num_nodes(); ++v) {
    out.set_processing_capacity(v, mu[net.num_links() + v]);
  }
  return out;
}

std::vector<double> capacities(const ComputingNetwork& net) {
  std::vector<double> mu;
  for (const Link& l : net.links()) mu.push_back(l.capacity);
  for (const Node& v : net.nodes()) mu.push_back(v.processing_capacity);
  return mu;
}

TEST(MaxFlow, FixtureValues) {
  EXPECT_NEAR(flow_of(testkit::fixture("fig1")), 4.0, kTol);
  EXPECT_NEAR(flow_of(testkit::fixture("fig3")), 2.0, kTol);
  EXPECT_NEAR(flow_of(testkit::fixture("fig4")), 1.0, kTol);
  EXPECT_NEAR(flow_of(testkit::fixture("fig5")), 1.0, kTol);
  EXPECT_NEAR(flow_of(testkit::fixture("fig6")), 1.0, kTol);
  EXPECT_NEAR(flow_of(testkit::fixture("no-processing")), 0.0, kTol);
}

TEST(MaxFlow, SolutionSatisfiesCapacitiesAndDuals) {
  for (const testkit::Fixture& f : testkit::fixtures()) {
    const FlowSolution sol = solve(f);
    const ComputingNetwork& net = f.network;
    const LayeredGraph& g = sol.graph;
    ASSERT_EQ(sol.edge_flows.size(), g.edges().size());
    EXPECT_NEAR(sol.edge_flows[g.return_edge()], sol.value, kTol) << f.name;
    for (LinkIndex e = 0; e < net.num_links(); ++e) {
      EXPECT_LE(sol.edge_flows[g.upper_edge(e)] + sol.edge_flows[g.lower_edge(e)],
                net.links()[e].capacity + kTol);
      EXPECT_GE(sol.link_duals[e], -kTol);
    }
    double dual_objective = 0.0;
    for (LinkIndex e = 0; e < net.num_links(); ++e) {
      dual_objective += sol.link_duals[e] * net.links()[e].capacity;
    }
    for (NodeIndex v = 0; v < net.num_nodes(); ++v) {
      dual_objective += sol.node_duals[v] * net.nodes()[v].processing_capacity;
    }
    EXPECT_NEAR(dual_objective, sol.value, kTol) << f.name;
  }
}

TEST(Decompose, FigureOneFourUnitPaths) {
  const testkit::Fixture f = testkit::fixture("fig1");
  const FlowSolution sol = solve(f);
  const auto paths = decompose(sol);
  double total = 0.0;
  for (const auto& p : paths) {
    total += p.amount;
    EXPECT_TRUE(f.network.is_computation_node(p.processor));
    EXPECT_FALSE(describe(f.network, 0, p).empty());
  }
  EXPECT_NEAR(total, 4.0, kTol);
}

TEST(Decompose, FigureFiveTraversesLinkTwice) {
  const testkit::Fixture f = testkit::fixture("fig5");
  const FlowSolution sol = solve(f);
  const auto paths = decompose(sol);
  ASSERT_FALSE(paths.empty());
  const LinkIndex st = *f.network.find_link(0, 1);
  double total = 0.0;
  for (const auto& p : paths) {
    total += p.amount;
    EXPECT_EQ(std::count(p.path.begin(), p.path.end(), st), 2);
    EXPECT_EQ(f.network.nodes()[p.processor].id, "v");
  }
  EXPECT_NEAR(total, 1.0, kTol);
}

TEST(Decompose, ZeroFlowGivesNoPaths) {
  EXPECT_TRUE(decompose(solve(testkit::fixture("no-processing"))).empty());
}

TEST(Decompose, ConservesValueOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto inst = testkit::random_small_network(seed);
    const FlowSolution sol =
        max_flow(inst.network, inst.source, inst.sink);
    const auto paths = decompose(sol);
    double total = 0.0;
    std::vector<double> link_load(inst.network.num_links(), 0.0);
    std::vector<double> node_load(inst.network.num_nodes(), 0.0);
    for (const auto& p : paths) {
      ASSERT_GT(p.amount, 0.0);
      ASSERT_LE(p.processed_after, p.path.size());
      total += p.amount;
      for (LinkIndex e : p.path) link_load[e] += p.amount;
      node_load[p.processor] += p.amount;
      // The walk is connected and runs from s to t.
      NodeIndex at = inst.source;
      for (std::size_t i = 0; i < p.path.size(); ++i) {
        if (i == p.processed_after) {
          EXPECT_EQ(at, p.processor);
        }
        ASSERT_EQ(inst.network.links()[p.path[i]].from, at);
        at = inst.network.links()[p.path[i]].to;
      }
      if (p.processed_after == p.path.size()) {
        EXPECT_EQ(at, p.processor);
      }
      EXPECT_EQ(at, inst.sink);
    }
    EXPECT_NEAR(total, sol.value, kTol) << "seed " << seed;
    for (LinkIndex e = 0; e < inst.network.num_links(); ++e) {
      EXPECT_LE(link_load[e], inst.network.links()[e].capacity + kTol);
    }
    for (NodeIndex v = 0; v < inst.network.num_nodes(); ++v) {
      EXPECT_LE(node_load[v],
                inst.network.nodes()[v].processing_capacity + kTol);
    }
  }
}

TEST(ClassicalMinCut, SingleEdge) {
  const Digraph g{2, {{0, 1, 5.0}}};
  const ClassicalCut cut = classical_min_cut(g, 0, 1);
  EXPECT_DOUBLE_EQ(cut.value, 5.0);
  EXPECT_EQ(cut.arcs, std::vector<std::size_t>{0});
}

TEST(ClassicalMinCut, TwoParallelPaths) {
  const Digraph g{4, {{0, 1, 5}, {1, 3, 5}, {0, 2, 5}, {2, 3, 5}}};
  const ClassicalCut cut = classical_min_cut(g, 0, 3);
  EXPECT_DOUBLE_EQ(cut.value, 10.0);
  double sum = 0.0;
  for (std::size_t a : cut.arcs) {
    sum += g.arcs[a].capacity;
    EXPECT_TRUE(cut.source_side[g.arcs[a].tail]);
    EXPECT_FALSE(cut.source_side[g.arcs[a].head]);
  }
  EXPECT_DOUBLE_EQ(sum, 10.0);
}

TEST(ClassicalMinCut, DisconnectedIsZero) {
  const Digraph g{3, {{0, 1, 4}}};
  EXPECT_DOUBLE_EQ(classical_min_cut(g, 0, 2).value, 0.0);
}

TEST(PathOracle, FixturesAndRandomInstances) {
  const testkit::Fixture fig1 = testkit::fixture("fig1");
  EXPECT_NEAR(max_flow_path_oracle(fig1.network, 0, 5), 4.0, kTol);
  const testkit::Fixture none = testkit::fixture("no-processing");
  EXPECT_NEAR(max_flow_path_oracle(none.network, 0, 2), 0.0, kTol);
  testkit::SmallNetworkSpec spec;
  spec.max_nodes = 7;
  for (std::uint64_t seed = 100; seed < 150; ++seed) {
    const auto inst = testkit::random_small_network(seed, spec);
    EXPECT_NEAR(max_flow(inst.network, inst.source, inst.sink).value,
                max_flow_path_oracle(inst.network, inst.source, inst.sink),
                kTol)
        << "seed " << seed;
  }
}

TEST(MaxFlowProperty, MonotoneInEveryCapacity) {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto inst = testkit::random_small_network(seed);
    const double base = max_flow(inst.network, inst.source, inst.sink).value;
    std::vector<double> mu = capacities(inst.network);
    const std::size_t i = std::uniform_int_distribution<std::size_t>(
        0, mu.size() - 1)(rng);
    mu[i] += 0.7;
    const double more = max_flow(with_capacities(inst.network, mu),
                                 inst.source, inst.sink)
                            .value;
    EXPECT_GE(more, base - kTol) << "seed " << seed;
  }
}

TEST(MaxFlowProperty, ConcaveInCapacities) {
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> unit(0.0, 3.0);
  const double alphas[] = {0.25, 0.5, 0.75};
  for (int trial = 0; trial < 50; ++trial) {
    const auto inst = testkit::random_small_network(500 + trial);
    const std::size_t k =
        inst.network.num_links() + inst.network.num_nodes();
    std::vector<double> mu1(k), mu2(k), mix(k);
    for (std::size_t i = 0; i < k; ++i) {
      mu1[i] = unit(rng);
      mu2[i] = unit(rng);
    }
    const double alpha = alphas[trial % 3];
    for (std::size_t i = 0; i < k; ++i) {
      mix[i] = alpha * mu1[i] + (1 - alpha) * mu2[i];
    }
    auto f = [&](const std::vector<double>& mu) {
      return max_flow(with_capacities(inst.network, mu), inst.source,
                      inst.sink)
          .value;
    };
    EXPECT_GE(f(mix), alpha * f(mu1) + (1 - alpha) * f(mu2) - kTol)
        << "trial " << trial;
  }
}

TEST(MaxFlowProperty, ShadowPricesAreSupergradients) {
  for (int trial = 0; trial < 50; ++trial) {
    const auto inst = testkit::random_small_network(900 + trial);
    const ComputingNetwork& net = inst.network;
    const FlowSolution sol = max_flow(net, inst.source, inst.sink);
    const std::vector<double> mu = capacities(net);
    for (const Resource& r : net.resources()) {
      const std::size_t i = r.kind == Resource::Kind::kLink
                                ? r.index
                                : net.num_links() + r.index;
      const double eps = 1e-3 * mu[i];
      std::vector<double> lowered = mu;
      lowered[i] -= eps;
      const double f =
          max_flow(with_capacities(net, lowered), inst.source, inst.sink)
              .value;
      EXPECT_LE(f, sol.value - eps * sol.dual(r) + kTol)
          << "trial " << trial << " resource " << net.name(r);
    }
  }
}

}  // namespace
}  // namespace compnet
