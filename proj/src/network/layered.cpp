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

#include "compnet/layered.hpp"

#include <algorithm>
#include <vector>

namespace compnet {

std::optional<std::size_t> LayeredGraph::cross_edge(NodeIndex node) const {
  return cross_of_node_.at(node);
}

std::string LayeredGraph::node_label(std::size_t v,
                                     const ComputingNetwork& net) const {
  if (v < num_original_nodes_) return net.nodes()[v].id;
  return net.nodes()[v - num_original_nodes_].id + "'";
}

LayeredGraph build_layered(const ComputingNetwork& net, NodeIndex s,
                           NodeIndex t) {
  const std::size_t n = net.num_nodes();
  if (s >= n || t >= n) throw ValidationError("source or sink out of range");
  if (s == t) throw ValidationError("source and sink must differ");

  LayeredGraph g;
  g.num_original_nodes_ = n;
  g.num_links_ = net.num_links();
  g.source_ = s;
  g.sink_ = t + n;
  g.cross_of_node_.assign(n, std::nullopt);
  g.edges_.reserve(2 * net.num_links() + n + 1);

  for (LinkIndex e = 0; e < net.num_links(); ++e) {
    const Link& l = net.links()[e];
    g.edges_.push_back({l.from, l.to, LayerEdgeKind::kUpper, e, l.capacity});
  }
  for (LinkIndex e = 0; e < net.num_links(); ++e) {
    const Link& l = net.links()[e];
    g.edges_.push_back(
        {l.from + n, l.to + n, LayerEdgeKind::kLower, e, l.capacity});
  }
  for (NodeIndex w = 0; w < n; ++w) {
    if (!net.is_computation_node(w)) continue;
    g.cross_of_node_[w] = g.edges_.size();
    g.edges_.push_back({w, w + n, LayerEdgeKind::kCross, w,
                        net.nodes()[w].processing_capacity});
  }
  // Finite stand-in for an unbounded return edge; it can never bind.
  g.edges_.push_back(
      {t + n, s, LayerEdgeKind::kReturn, 0, net.total_capacity() + 1.0});

  g.out_.assign(2 * n, {});
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    g.out_[g.edges_[i].tail].push_back(i);
  }
  return g;
}

std::vector<std::size_t> map_cut_to_layered(const LayeredGraph& graph,
                                            std::span<const LinkIndex> links,
                                            std::span<const NodeIndex> nodes) {
  std::vector<std::size_t> out;
  for (LinkIndex e : links) {
    if (e >= graph.num_links()) {
      throw ValidationError("cut references an unknown link");
    }
    out.push_back(graph.upper_edge(e));
    out.push_back(graph.lower_edge(e));
  }
  for (NodeIndex w : nodes) {
    if (w >= graph.num_original_nodes()) {
      throw ValidationError("cut references an unknown node");
    }
    if (auto cross = graph.cross_edge(w)) out.push_back(*cross);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool sink_reachable(const LayeredGraph& graph,
                    std::span<const std::size_t> removed) {
  std::vector<char> blocked(graph.edges().size(), 0);
  for (std::size_t e : removed) blocked.at(e) = 1;
  blocked[graph.return_edge()] = 1;

  std::vector<char> seen(graph.num_nodes(), 0);
  std::vector<std::size_t> stack{graph.source()};
  seen[graph.source()] = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    if (v == graph.sink()) return true;
    for (std::size_t e : graph.out_edges(v)) {
      const LayeredEdge& edge = graph.edges()[e];
      if (blocked[e] || edge.capacity <= 0.0 || seen[edge.head]) continue;
      seen[edge.head] = 1;
      stack.push_back(edge.head);
    }
  }
  return false;
}

}  // namespace compnet
