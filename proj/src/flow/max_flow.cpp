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

#include <cmath>
#include <string>
#include <vector>

#include "compnet/flow.hpp"

namespace compnet {

MaxFlowModel build_max_flow_model(const ComputingNetwork& net, NodeIndex s,
                                  NodeIndex t) {
  MaxFlowModel model{lp::LinearProgram{}, build_layered(net, s, t), {}, {}, {}};
  const LayeredGraph& g = model.graph;
  lp::LinearProgram& prog = model.program;
  prog.set_sense(lp::Sense::kMaximize);

  model.edge_var.assign(g.edges().size(), -1);
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const LayeredEdge& e = g.edges()[i];
    if (e.capacity <= 0.0) continue;
    std::string name = "f_" + g.node_label(e.tail, net) + "_" +
                       g.node_label(e.head, net);
    // Only the return edge carries a bound; capacities live in rows so that
    // their shadow prices are reported on the rows.
    const double upper =
        e.kind == LayerEdgeKind::kReturn ? e.capacity : lp::kInfinity;
    model.edge_var[i] = prog.add_variable(std::move(name), 0.0, upper);
  }
  prog.set_objective_coefficient(model.edge_var[g.return_edge()], 1.0);

  std::vector<std::vector<lp::Term>> balance(g.num_nodes());
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const int var = model.edge_var[i];
    if (var < 0) continue;
    balance[g.edges()[i].head].push_back({var, 1.0});
    balance[g.edges()[i].tail].push_back({var, -1.0});
  }
  for (std::size_t v = 0; v < g.num_nodes(); ++v) {
    prog.add_constraint("conserve_" + g.node_label(v, net),
                        std::move(balance[v]), lp::Relation::kEqual, 0.0);
  }

  model.link_row.assign(net.num_links(), -1);
  for (LinkIndex e = 0; e < net.num_links(); ++e) {
    const int up = model.edge_var[g.upper_edge(e)];
    const int down = model.edge_var[g.lower_edge(e)];
    if (up < 0) continue;
    model.link_row[e] = prog.add_constraint(
        "cap_" + net.link_name(e), {{up, 1.0}, {down, 1.0}},
        lp::Relation::kLessEqual, net.links()[e].capacity);
  }
  model.node_row.assign(net.num_nodes(), -1);
  for (NodeIndex w = 0; w < net.num_nodes(); ++w) {
    auto cross = g.cross_edge(w);
    if (!cross) continue;
    model.node_row[w] = prog.add_constraint(
        "proc_" + net.nodes()[w].id, {{model.edge_var[*cross], 1.0}},
        lp::Relation::kLessEqual, net.nodes()[w].processing_capacity);
  }
  return model;
}

namespace {

double clean(double x) { return std::abs(x) < 1e-12 ? 0.0 : x; }

}  // namespace

FlowSolution max_flow(const ComputingNetwork& net, NodeIndex s, NodeIndex t,
                      const lp::SolveOptions& options) {
  MaxFlowModel model = build_max_flow_model(net, s, t);
  const lp::SolveResult result = lp::solve_lp(model.program, options);
  if (result.status != lp::Status::kOptimal) {
    throw SolverError("max-flow LP ended with status " +
                      std::string(lp::to_string(result.status)));
  }

  FlowSolution sol;
  sol.value = clean(result.objective);
  sol.edge_flows.assign(model.graph.edges().size(), 0.0);
  for (std::size_t i = 0; i < model.edge_var.size(); ++i) {
    if (model.edge_var[i] >= 0) {
      sol.edge_flows[i] = clean(result.primal[model.edge_var[i]]);
    }
  }
  sol.link_duals.assign(net.num_links(), 0.0);
  for (LinkIndex e = 0; e < net.num_links(); ++e) {
    if (model.link_row[e] >= 0) {
      sol.link_duals[e] = clean(result.dual[model.link_row[e]]);
    }
  }
  sol.node_duals.assign(net.num_nodes(), 0.0);
  for (NodeIndex w = 0; w < net.num_nodes(); ++w) {
    if (model.node_row[w] >= 0) {
      sol.node_duals[w] = clean(result.dual[model.node_row[w]]);
    }
  }
  sol.graph = std::move(model.graph);
  return sol;
}

}  // namespace compnet
