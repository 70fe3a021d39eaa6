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

#ifndef COMPNET_CUTS_HPP_
#define COMPNET_CUTS_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "compnet/layered.hpp"
#include "compnet/lp.hpp"
#include "compnet/network.hpp"

namespace compnet {

// Which resources a cut may remove: links only, processing only, or both.
enum class CutMode { kCommunication, kComputation, kJoint };

std::string_view to_string(CutMode mode);
// Accepts "comm", "comp", "joint" and the long names.
std::optional<CutMode> parse_cut_mode(std::string_view text);

struct CutSolution {
  CutMode mode = CutMode::kJoint;
  std::vector<LinkIndex> links;
  std::vector<NodeIndex> nodes;
  double value = 0.0;
  // Node potentials of the layered graph (empty unless produced by the
  // exact program). p_s - p_t' >= 1 certifies the separation.
  std::vector<double> potentials;
  // False when the MILP stopped at a node or time limit.
  bool optimal = true;
};

// Sum of the capacities of the listed resources.
double cut_value(const ComputingNetwork& net, const CutSolution& cut);

std::vector<std::size_t> map_cut_to_layered(const LayeredGraph& graph,
                                            const CutSolution& cut);

// True iff removing the listed resources leaves no computation path from s
// to t, i.e. t' is unreachable from s in the layered graph.
bool is_cut(const ComputingNetwork& net, NodeIndex s, NodeIndex t,
            const CutSolution& cut);

// Nodes reachable from s intersected with nodes that reach t, restricted to
// computation nodes. Linear time.
CutSolution min_computation_cut(const ComputingNetwork& net, NodeIndex s,
                                NodeIndex t);

// Potential-based cut program over the layered graph: indicators for the
// resources allowed by `mode`, continuous potentials in [0, 1].
lp::LinearProgram build_cut_program(const ComputingNetwork& net, NodeIndex s,
                                    NodeIndex t, CutMode mode);

CutSolution min_cut_exact(const ComputingNetwork& net, NodeIndex s,
                          NodeIndex t, CutMode mode,
                          const lp::SolveOptions& options = {});

inline CutSolution min_joint_cut_exact(const ComputingNetwork& net,
                                       NodeIndex s, NodeIndex t,
                                       const lp::SolveOptions& options = {}) {
  return min_cut_exact(net, s, t, CutMode::kJoint, options);
}
inline CutSolution min_comm_cut_exact(const ComputingNetwork& net, NodeIndex s,
                                      NodeIndex t,
                                      const lp::SolveOptions& options = {}) {
  return min_cut_exact(net, s, t, CutMode::kCommunication, options);
}
inline CutSolution min_comp_cut_exact(const ComputingNetwork& net, NodeIndex s,
                                      NodeIndex t,
                                      const lp::SolveOptions& options = {}) {
  return min_cut_exact(net, s, t, CutMode::kComputation, options);
}

// Optimal value of the cut program with the indicator integrality dropped.
double min_cut_relaxation(const ComputingNetwork& net, NodeIndex s,
                          NodeIndex t, CutMode mode);

// Layered classical min cut with both link copies costed mu_uv and cross
// edges priced out of reach; projected onto the original links. At most
// twice the minimum communication cut.
CutSolution approx_comm_cut(const ComputingNetwork& net, NodeIndex s,
                            NodeIndex t);

// As approx_comm_cut but the cross edge of w costs mu_w, so processing can
// be cut too. At most twice the minimum joint cut.
CutSolution approx_joint_cut(const ComputingNetwork& net, NodeIndex s,
                             NodeIndex t);

}  // namespace compnet

#endif  // COMPNET_CUTS_HPP_
