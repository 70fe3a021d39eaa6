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

#include <map>
#include <string>
#include <vector>

#include "compnet/flow.hpp"

namespace compnet {

std::vector<std::vector<std::size_t>> layered_paths(const LayeredGraph& graph,
                                                    std::size_t max_paths) {
  std::vector<std::vector<std::size_t>> paths;
  std::vector<char> on_path(graph.num_nodes(), 0);
  std::vector<std::size_t> edges;

  // Explicit stack of (node, next out-edge position).
  std::vector<std::pair<std::size_t, std::size_t>> stack{{graph.source(), 0}};
  on_path[graph.source()] = 1;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto& out = graph.out_edges(v);
    if (v == graph.sink() || next == out.size()) {
      if (v == graph.sink()) {
        if (paths.size() == max_paths) {
          throw Error("path oracle: more than " + std::to_string(max_paths) +
                      " layered paths");
        }
        paths.push_back(edges);
      }
      on_path[v] = 0;
      stack.pop_back();
      if (!edges.empty()) edges.pop_back();
      continue;
    }
    const std::size_t e = out[next++];
    const LayeredEdge& edge = graph.edges()[e];
    if (edge.kind == LayerEdgeKind::kReturn || edge.capacity <= 0.0 ||
        on_path[edge.head]) {
      continue;
    }
    on_path[edge.head] = 1;
    edges.push_back(e);
    stack.emplace_back(edge.head, 0);
  }
  return paths;
}

double max_flow_path_oracle(const ComputingNetwork& net, NodeIndex s,
                            NodeIndex t, std::size_t max_paths) {
  const LayeredGraph graph = build_layered(net, s, t);
  const auto paths = layered_paths(graph, max_paths);
  if (paths.empty()) return 0.0;

  lp::LinearProgram prog;
  prog.set_sense(lp::Sense::kMaximize);
  std::map<LinkIndex, std::vector<lp::Term>> link_rows;
  std::map<NodeIndex, std::vector<lp::Term>> node_rows;
  for (std::size_t p = 0; p < paths.size(); ++p) {
    const int var = prog.add_variable("x" + std::to_string(p), 0.0,
                                      lp::kInfinity);
    prog.set_objective_coefficient(var, 1.0);
    std::map<LinkIndex, double> uses;
    for (std::size_t e : paths[p]) {
      const LayeredEdge& edge = graph.edges()[e];
      if (edge.kind == LayerEdgeKind::kCross) {
        node_rows[edge.origin].push_back({var, 1.0});
      } else {
        uses[edge.origin] += 1.0;
      }
    }
    for (const auto& [link, count] : uses) {
      link_rows[link].push_back({var, count});
    }
  }
  for (auto& [link, terms] : link_rows) {
    prog.add_constraint("link" + std::to_string(link), std::move(terms),
                        lp::Relation::kLessEqual, net.links()[link].capacity);
  }
  for (auto& [node, terms] : node_rows) {
    prog.add_constraint("node" + std::to_string(node), std::move(terms),
                        lp::Relation::kLessEqual,
                        net.nodes()[node].processing_capacity);
  }
  const lp::SolveResult result = lp::solve_lp(prog);
  if (result.status != lp::Status::kOptimal) {
    throw SolverError("path oracle LP ended with status " +
                      std::string(lp::to_string(result.status)));
  }
  return result.objective;
}

}  // namespace compnet
