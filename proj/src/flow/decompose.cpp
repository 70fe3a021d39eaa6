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

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "compnet/flow.hpp"

namespace compnet {
namespace {

constexpr double kResidual = 1e-9;

// Finds one directed cycle made of edges of `kind` carrying flow.
std::optional<std::vector<std::size_t>> find_cycle(
    const LayeredGraph& g, const std::vector<double>& flow,
    LayerEdgeKind kind) {
  const std::size_t n = g.num_nodes();
  // 0 = unvisited, 1 = on stack, 2 = done
  std::vector<char> state(n, 0);
  std::vector<std::size_t> via(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (state[root] != 0) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto& out = g.out_edges(v);
      if (next == out.size()) {
        state[v] = 2;
        stack.pop_back();
        continue;
      }
      const std::size_t e = out[next++];
      const LayeredEdge& edge = g.edges()[e];
      if (edge.kind != kind || flow[e] <= kResidual) continue;
      if (state[edge.head] == 1) {
        std::vector<std::size_t> cycle{e};
        std::size_t u = v;
        while (u != edge.head) {
          cycle.push_back(via[u]);
          u = g.edges()[via[u]].tail;
        }
        return cycle;
      }
      if (state[edge.head] == 0) {
        state[edge.head] = 1;
        via[edge.head] = e;
        stack.emplace_back(edge.head, 0);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<ComputationPathFlow> decompose(const FlowSolution& solution) {
  const LayeredGraph& g = solution.graph;
  if (solution.edge_flows.size() != g.edges().size()) {
    throw Error("decompose: edge flows do not match the layered graph");
  }
  std::vector<double> flow = solution.edge_flows;

  std::vector<double> imbalance(g.num_nodes(), 0.0);
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    if (flow[e] < -kValueTolerance) {
      throw Error("decompose: negative flow on a layered edge");
    }
    imbalance[g.edges()[e].head] += flow[e];
    imbalance[g.edges()[e].tail] -= flow[e];
  }
  for (double x : imbalance) {
    if (std::abs(x) > kValueTolerance) {
      throw Error("decompose: flow conservation violated");
    }
  }
  flow[g.return_edge()] = 0.0;

  for (LayerEdgeKind kind : {LayerEdgeKind::kUpper, LayerEdgeKind::kLower}) {
    while (auto cycle = find_cycle(g, flow, kind)) {
      double amount = flow[cycle->front()];
      for (std::size_t e : *cycle) amount = std::min(amount, flow[e]);
      for (std::size_t e : *cycle) flow[e] -= amount;
    }
  }

  std::vector<ComputationPathFlow> paths;
  auto source_outflow = [&] {
    double total = 0.0;
    for (std::size_t e : g.out_edges(g.source())) total += flow[e];
    return total;
  };
  while (source_outflow() > kResidual) {
    std::vector<std::size_t> walk;
    std::size_t v = g.source();
    while (v != g.sink()) {
      std::size_t best = g.edges().size();
      for (std::size_t e : g.out_edges(v)) {
        if (flow[e] <= kResidual) continue;
        if (best == g.edges().size() || flow[e] > flow[best]) best = e;
      }
      if (best == g.edges().size()) break;
      walk.push_back(best);
      v = g.edges()[best].head;
      if (walk.size() > g.edges().size()) {
        throw Error("decompose: residual cycle after cancellation");
      }
    }
    if (v != g.sink()) break;  // only numerical residue left

    double amount = flow[walk.front()];
    for (std::size_t e : walk) amount = std::min(amount, flow[e]);
    for (std::size_t e : walk) flow[e] -= amount;

    ComputationPathFlow path;
    path.amount = amount;
    for (std::size_t e : walk) {
      const LayeredEdge& edge = g.edges()[e];
      if (edge.kind == LayerEdgeKind::kCross) {
        path.processor = edge.origin;
        path.processed_after = path.path.size();
      } else {
        path.path.push_back(edge.origin);
      }
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

std::string describe(const ComputingNetwork& net, NodeIndex source,
                     const ComputationPathFlow& path) {
  std::string out = "({" + net.nodes()[source].id;
  for (LinkIndex e : path.path) out += "-" + net.nodes()[net.links()[e].to].id;
  out += "}," + net.nodes()[path.processor].id + ")";
  return out;
}

}  // namespace compnet
