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

#ifndef COMPNET_FLOW_HPP_
#define COMPNET_FLOW_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "compnet/layered.hpp"
#include "compnet/lp.hpp"
#include "compnet/network.hpp"

namespace compnet {

// Maximum computation flow together with the layered edge flows and the
// shadow prices of the capacity rows.
struct FlowSolution {
  double value = 0.0;
  LayeredGraph graph;
  // Aligned with graph.edges(); the last entry is the return edge.
  std::vector<double> edge_flows;
  // Shadow price of the coupled link row f_uv + f_u'v' <= mu_uv.
  std::vector<double> link_duals;
  // Shadow price of the processing row f_ww' <= mu_w (0 for forwarding
  // nodes, which have no such row).
  std::vector<double> node_duals;

  double dual(const Resource& r) const {
    return r.kind == Resource::Kind::kLink ? link_duals.at(r.index)
                                           : node_duals.at(r.index);
  }
};

// The layered max-flow LP and the index maps needed to read it back.
struct MaxFlowModel {
  lp::LinearProgram program;
  LayeredGraph graph;
  // Variable per layered edge, -1 for edges of zero capacity.
  std::vector<int> edge_var;
  // Capacity row per link / node, -1 when absent.
  std::vector<int> link_row;
  std::vector<int> node_row;
};

MaxFlowModel build_max_flow_model(const ComputingNetwork& net, NodeIndex s,
                                  NodeIndex t);

// Solves the layered LP. Throws SolverError if the LP does not reach
// optimality.
FlowSolution max_flow(const ComputingNetwork& net, NodeIndex s, NodeIndex t,
                      const lp::SolveOptions& options = {});

// A walk from s to t in the original network processed at `processor`. The
// first `processed_after` links are travelled before processing.
struct ComputationPathFlow {
  std::vector<LinkIndex> path;
  std::size_t processed_after = 0;
  NodeIndex processor = 0;
  double amount = 0.0;
};

// Cancels cycles inside each layer, then peels s -> t' paths, each time
// following the heaviest outgoing edge. Throws Error when the flow does
// not conserve at some layered node.
std::vector<ComputationPathFlow> decompose(const FlowSolution& solution);

// "({s-u-v-t},u)"
std::string describe(const ComputingNetwork& net,
                     NodeIndex source,
                     const ComputationPathFlow& path);

struct Arc {
  std::size_t tail = 0;
  std::size_t head = 0;
  double capacity = 0.0;
};

struct Digraph {
  std::size_t num_nodes = 0;
  std::vector<Arc> arcs;
};

struct ClassicalCut {
  // Indices into Digraph::arcs crossing from the source side.
  std::vector<std::size_t> arcs;
  double value = 0.0;
  std::vector<char> source_side;
};

// Plain s-t minimum edge cut (Dinic, residual threshold 1e-9).
ClassicalCut classical_min_cut(const Digraph& graph, std::size_t s,
                               std::size_t t);

// Path formulation: enumerates every simple s -> t' path in the layered
// graph and maximizes the total path flow under the coupled link and node
// capacities. Throws Error when more than `max_paths` paths exist.
double max_flow_path_oracle(const ComputingNetwork& net, NodeIndex s,
                            NodeIndex t, std::size_t max_paths = 10000);

// Simple s -> t' paths of the layered graph as edge index lists (return
// edge and zero-capacity edges excluded).
std::vector<std::vector<std::size_t>> layered_paths(const LayeredGraph& graph,
                                                    std::size_t max_paths);

}  // namespace compnet

#endif  // COMPNET_FLOW_HPP_
