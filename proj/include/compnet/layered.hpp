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

#ifndef COMPNET_LAYERED_HPP_
#define COMPNET_LAYERED_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "compnet/network.hpp"

namespace compnet {

enum class LayerEdgeKind { kUpper, kLower, kCross, kReturn };

struct LayeredEdge {
  std::size_t tail = 0;
  std::size_t head = 0;
  LayerEdgeKind kind = LayerEdgeKind::kUpper;
  // Link index for upper/lower edges, node index for cross edges.
  std::size_t origin = 0;
  double capacity = 0.0;
};

// Two copies of a computing network. Unprocessed traffic travels in the
// upper layer (node v), processed traffic in the lower layer (node v' =
// v + n). Processing at a computation node w is the cross edge (w, w').
// A return edge (t', s) closes the circulation.
//
// Edge order: upper copy of every link, lower copy of every link, one cross
// edge per computation node, then the return edge.
class LayeredGraph {
 public:
  std::size_t num_original_nodes() const { return num_original_nodes_; }
  std::size_t num_nodes() const { return 2 * num_original_nodes_; }
  std::size_t upper(NodeIndex v) const { return v; }
  std::size_t lower(NodeIndex v) const { return v + num_original_nodes_; }
  std::size_t source() const { return source_; }
  std::size_t sink() const { return sink_; }

  const std::vector<LayeredEdge>& edges() const { return edges_; }
  std::size_t upper_edge(LinkIndex link) const { return link; }
  std::size_t lower_edge(LinkIndex link) const { return num_links_ + link; }
  std::optional<std::size_t> cross_edge(NodeIndex node) const;
  std::size_t return_edge() const { return edges_.size() - 1; }
  std::size_t num_links() const { return num_links_; }
  std::size_t num_cross_edges() const { return edges_.size() - 2 * num_links_ - 1; }

  const std::vector<std::size_t>& out_edges(std::size_t v) const {
    return out_[v];
  }

  // "v" for upper nodes and "v'" for lower nodes.
  std::string node_label(std::size_t v, const ComputingNetwork& net) const;

 private:
  friend LayeredGraph build_layered(const ComputingNetwork&, NodeIndex,
                                    NodeIndex);

  std::size_t num_original_nodes_ = 0;
  std::size_t num_links_ = 0;
  std::size_t source_ = 0;
  std::size_t sink_ = 0;
  std::vector<LayeredEdge> edges_;
  std::vector<std::optional<std::size_t>> cross_of_node_;
  std::vector<std::vector<std::size_t>> out_;
};

// Throws ValidationError when s or t is out of range or s == t.
LayeredGraph build_layered(const ComputingNetwork& net, NodeIndex s,
                           NodeIndex t);

// Layered image of a set of removed resources: both copies of every removed
// link plus the cross edge of every removed node. Sorted, no duplicates.
std::vector<std::size_t> map_cut_to_layered(const LayeredGraph& graph,
                                            std::span<const LinkIndex> links,
                                            std::span<const NodeIndex> nodes);

// True when the sink t' is reachable from s without using the return edge,
// zero-capacity edges, or any edge listed in `removed`.
bool sink_reachable(const LayeredGraph& graph,
                    std::span<const std::size_t> removed = {});

}  // namespace compnet

#endif  // COMPNET_LAYERED_HPP_
