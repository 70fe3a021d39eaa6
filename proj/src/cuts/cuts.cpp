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

#include "compnet/cuts.hpp"

#include <string>
#include <vector>

#include "compnet/flow.hpp"

namespace compnet {
namespace {

struct CutModel {
  lp::LinearProgram program;
  std::vector<int> link_var;
  std::vector<int> node_var;
  std::vector<int> potential_var;
};

CutModel build_cut_model(const ComputingNetwork& net, NodeIndex s,
                         NodeIndex t, CutMode mode) {
  const LayeredGraph g = build_layered(net, s, t);
  CutModel m;
  lp::LinearProgram& prog = m.program;
  prog.set_sense(lp::Sense::kMinimize);
  const std::size_t n = net.num_nodes();

  m.link_var.assign(net.num_links(), -1);
  if (mode != CutMode::kComputation) {
    for (LinkIndex e = 0; e < net.num_links(); ++e) {
      const double mu = net.links()[e].capacity;
      if (mu <= 0.0) continue;
      m.link_var[e] =
          prog.add_variable("y_" + net.link_name(e), 0.0, 1.0, true);
      prog.set_objective_coefficient(m.link_var[e], mu);
    }
  }
  m.node_var.assign(n, -1);
  if (mode != CutMode::kCommunication) {
    for (NodeIndex w = 0; w < n; ++w) {
      if (!net.is_computation_node(w)) continue;
      m.node_var[w] = prog.add_variable("y_" + net.nodes()[w].id, 0.0, 1.0,
                                        true);
      prog.set_objective_coefficient(m.node_var[w],
                                     net.nodes()[w].processing_capacity);
    }
  }
  m.potential_var.resize(g.num_nodes());
  for (std::size_t v = 0; v < g.num_nodes(); ++v) {
    m.potential_var[v] =
        prog.add_variable("p_" + g.node_label(v, net), 0.0, 1.0);
  }

  // Potentials may only drop across removed edges.
  for (LinkIndex e = 0; e < net.num_links(); ++e) {
    const Link& l = net.links()[e];
    if (l.capacity <= 0.0) continue;
    for (std::size_t layer = 0; layer < 2; ++layer) {
      const std::size_t u = l.from + layer * n;
      const std::size_t v = l.to + layer * n;
      std::vector<lp::Term> terms{{m.potential_var[v], 1.0},
                                  {m.potential_var[u], -1.0}};
      if (m.link_var[e] >= 0) terms.push_back({m.link_var[e], 1.0});
      prog.add_constraint(
          (layer == 0 ? "edge_" : "edge'_") + net.link_name(e),
          std::move(terms), lp::Relation::kGreaterEqual, 0.0);
    }
  }
  for (NodeIndex w = 0; w < n; ++w) {
    if (!net.is_computation_node(w)) continue;
    std::vector<lp::Term> terms{{m.potential_var[w + n], 1.0},
                                {m.potential_var[w], -1.0}};
    if (m.node_var[w] >= 0) terms.push_back({m.node_var[w], 1.0});
    prog.add_constraint("node_" + net.nodes()[w].id, std::move(terms),
                        lp::Relation::kGreaterEqual, 0.0);
  }
  prog.add_constraint("separate",
                      {{m.potential_var[g.source()], 1.0},
                       {m.potential_var[g.sink()], -1.0}},
                      lp::Relation::kGreaterEqual, 1.0);
  return m;
}

bool has_computation_path(const ComputingNetwork& net, NodeIndex s,
                          NodeIndex t) {
  return sink_reachable(build_layered(net, s, t));
}

std::vector<char> reach(const ComputingNetwork& net, NodeIndex start,
                        bool forward) {
  std::vector<std::vector<NodeIndex>> adj(net.num_nodes());
  for (const Link& l : net.links()) {
    if (l.capacity <= 0.0) continue;
    if (forward) {
      adj[l.from].push_back(l.to);
    } else {
      adj[l.to].push_back(l.from);
    }
  }
  std::vector<char> seen(net.num_nodes(), 0);
  std::vector<NodeIndex> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    const NodeIndex v = stack.back();
    stack.pop_back();
    for (NodeIndex w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

CutSolution approx_cut(const ComputingNetwork& net, NodeIndex s, NodeIndex t,
                       CutMode mode) {
  const LayeredGraph g = build_layered(net, s, t);
  CutSolution cut;
  cut.mode = mode;

  double link_total = 0.0;
  for (const Link& l : net.links()) link_total += l.capacity;
  // Dearer than removing both copies of every link, so never chosen.
  const double prohibitive = 2.0 * link_total + 1.0;

  Digraph digraph{g.num_nodes(), {}};
  std::vector<std::size_t> origin;  // layered edge per arc
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const LayeredEdge& e = g.edges()[i];
    if (e.kind == LayerEdgeKind::kReturn || e.capacity <= 0.0) continue;
    double cost = e.capacity;
    if (e.kind == LayerEdgeKind::kCross && mode == CutMode::kCommunication) {
      cost = prohibitive;
    }
    digraph.arcs.push_back({e.tail, e.head, cost});
    origin.push_back(i);
  }
  const ClassicalCut classical = classical_min_cut(digraph, g.source(),
                                                   g.sink());
  std::vector<char> link_in(net.num_links(), 0);
  for (std::size_t arc : classical.arcs) {
    const LayeredEdge& e = g.edges()[origin[arc]];
    if (e.kind == LayerEdgeKind::kCross) {
      if (mode == CutMode::kCommunication) {
        throw Error("approx_comm_cut: min cut selected a processing edge");
      }
      cut.nodes.push_back(e.origin);
    } else {
      link_in[e.origin] = 1;
    }
  }
  for (LinkIndex e = 0; e < net.num_links(); ++e) {
    if (link_in[e]) cut.links.push_back(e);
  }
  cut.value = cut_value(net, cut);
  return cut;
}

}  // namespace

std::string_view to_string(CutMode mode) {
  switch (mode) {
    case CutMode::kCommunication:
      return "communication";
    case CutMode::kComputation:
      return "computation";
    case CutMode::kJoint:
      return "joint";
  }
  return "unknown";
}

std::optional<CutMode> parse_cut_mode(std::string_view text) {
  if (text == "comm" || text == "communication") return CutMode::kCommunication;
  if (text == "comp" || text == "computation") return CutMode::kComputation;
  if (text == "joint") return CutMode::kJoint;
  return std::nullopt;
}

double cut_value(const ComputingNetwork& net, const CutSolution& cut) {
  double total = 0.0;
  for (LinkIndex e : cut.links) total += net.links().at(e).capacity;
  for (NodeIndex w : cut.nodes) total += net.nodes().at(w).processing_capacity;
  return total;
}

std::vector<std::size_t> map_cut_to_layered(const LayeredGraph& graph,
                                            const CutSolution& cut) {
  return map_cut_to_layered(graph, cut.links, cut.nodes);
}

bool is_cut(const ComputingNetwork& net, NodeIndex s, NodeIndex t,
            const CutSolution& cut) {
  const LayeredGraph g = build_layered(net, s, t);
  return !sink_reachable(g, map_cut_to_layered(g, cut));
}

CutSolution min_computation_cut(const ComputingNetwork& net, NodeIndex s,
                                NodeIndex t) {
  if (s >= net.num_nodes() || t >= net.num_nodes() || s == t) {
    throw ValidationError("min_computation_cut: invalid source/sink");
  }
  const std::vector<char> from_s = reach(net, s, /*forward=*/true);
  const std::vector<char> to_t = reach(net, t, /*forward=*/false);
  CutSolution cut;
  cut.mode = CutMode::kComputation;
  for (NodeIndex w = 0; w < net.num_nodes(); ++w) {
    if (from_s[w] && to_t[w] && net.is_computation_node(w)) {
      cut.nodes.push_back(w);
    }
  }
  cut.value = cut_value(net, cut);
  return cut;
}

lp::LinearProgram build_cut_program(const ComputingNetwork& net, NodeIndex s,
                                    NodeIndex t, CutMode mode) {
  return build_cut_model(net, s, t, mode).program;
}

CutSolution min_cut_exact(const ComputingNetwork& net, NodeIndex s,
                          NodeIndex t, CutMode mode,
                          const lp::SolveOptions& options) {
  CutSolution cut;
  cut.mode = mode;
  if (!has_computation_path(net, s, t)) return cut;

  const CutModel model = build_cut_model(net, s, t, mode);
  const lp::SolveResult result = lp::solve_milp(model.program, options);
  if (!result.has_solution) {
    throw SolverError("cut MILP ended with status " +
                      std::string(lp::to_string(result.status)));
  }
  for (LinkIndex e = 0; e < net.num_links(); ++e) {
    const int var = model.link_var[e];
    if (var >= 0 && result.primal[var] > 0.5) cut.links.push_back(e);
  }
  for (NodeIndex w = 0; w < net.num_nodes(); ++w) {
    const int var = model.node_var[w];
    if (var >= 0 && result.primal[var] > 0.5) cut.nodes.push_back(w);
  }
  for (int var : model.potential_var) {
    cut.potentials.push_back(result.primal[var]);
  }
  cut.value = cut_value(net, cut);
  cut.optimal = result.status == lp::Status::kOptimal;
  return cut;
}

double min_cut_relaxation(const ComputingNetwork& net, NodeIndex s,
                          NodeIndex t, CutMode mode) {
  if (!has_computation_path(net, s, t)) return 0.0;
  const CutModel model = build_cut_model(net, s, t, mode);
  const lp::SolveResult result =
      lp::solve_lp(model.program, {}, /*relax=*/true);
  if (result.status != lp::Status::kOptimal) {
    throw SolverError("cut relaxation ended with status " +
                      std::string(lp::to_string(result.status)));
  }
  return result.objective;
}

CutSolution approx_comm_cut(const ComputingNetwork& net, NodeIndex s,
                            NodeIndex t) {
  return approx_cut(net, s, t, CutMode::kCommunication);
}

CutSolution approx_joint_cut(const ComputingNetwork& net, NodeIndex s,
                             NodeIndex t) {
  return approx_cut(net, s, t, CutMode::kJoint);
}

}  // namespace compnet
