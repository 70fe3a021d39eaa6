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

#include "compnet/network.hpp"

#include <cmath>
#include <string>

namespace compnet {
namespace {

void check_nonnegative(double value, const std::string& what) {
  if (!std::isfinite(value) || value < 0.0) {
    throw ValidationError(what + " must be a finite nonnegative number");
  }
}

}  // namespace

NodeIndex ComputingNetwork::add_node(std::string id,
                                     double processing_capacity,
                                     std::optional<double> interdiction_cost) {
  if (id.empty()) throw ValidationError("node id must not be empty");
  if (node_by_id_.count(id) != 0) {
    throw ValidationError("duplicate node id '" + id + "'");
  }
  check_nonnegative(processing_capacity,
                    "processing capacity of node '" + id + "'");
  const double cost = interdiction_cost.value_or(processing_capacity);
  check_nonnegative(cost, "interdiction cost of node '" + id + "'");
  const NodeIndex index = nodes_.size();
  node_by_id_.emplace(id, index);
  nodes_.push_back({std::move(id), processing_capacity, cost});
  return index;
}

LinkIndex ComputingNetwork::add_link(NodeIndex from, NodeIndex to,
                                     double capacity,
                                     std::optional<double> interdiction_cost) {
  if (from >= nodes_.size() || to >= nodes_.size()) {
    throw ValidationError("link endpoint out of range");
  }
  const std::string label = nodes_[from].id + "->" + nodes_[to].id;
  if (from == to) throw ValidationError("self-loop link " + label);
  if (link_by_ends_.count({from, to}) != 0) {
    throw ValidationError("duplicate link " + label);
  }
  check_nonnegative(capacity, "capacity of link " + label);
  const double cost = interdiction_cost.value_or(capacity);
  check_nonnegative(cost, "interdiction cost of link " + label);
  const LinkIndex index = links_.size();
  link_by_ends_.emplace(std::make_pair(from, to), index);
  links_.push_back({from, to, capacity, cost});
  return index;
}

LinkIndex ComputingNetwork::add_link(std::string_view from, std::string_view to,
                                     double capacity,
                                     std::optional<double> interdiction_cost) {
  return add_link(node_index(from), node_index(to), capacity,
                  interdiction_cost);
}

void ComputingNetwork::set_link_capacity(LinkIndex link, double capacity) {
  check_nonnegative(capacity, "link capacity");
  links_.at(link).capacity = capacity;
}

void ComputingNetwork::set_processing_capacity(NodeIndex node,
                                               double capacity) {
  check_nonnegative(capacity, "processing capacity");
  nodes_.at(node).processing_capacity = capacity;
}

void ComputingNetwork::set_link_cost(LinkIndex link, double cost) {
  check_nonnegative(cost, "link interdiction cost");
  links_.at(link).interdiction_cost = cost;
}

void ComputingNetwork::set_node_cost(NodeIndex node, double cost) {
  check_nonnegative(cost, "node interdiction cost");
  nodes_.at(node).interdiction_cost = cost;
}

std::optional<NodeIndex> ComputingNetwork::find_node(
    std::string_view id) const {
  auto it = node_by_id_.find(std::string(id));
  if (it == node_by_id_.end()) return std::nullopt;
  return it->second;
}

NodeIndex ComputingNetwork::node_index(std::string_view id) const {
  if (auto found = find_node(id)) return *found;
  throw ValidationError("unknown node id '" + std::string(id) + "'");
}

std::optional<LinkIndex> ComputingNetwork::find_link(NodeIndex from,
                                                     NodeIndex to) const {
  auto it = link_by_ends_.find({from, to});
  if (it == link_by_ends_.end()) return std::nullopt;
  return it->second;
}

std::vector<NodeIndex> ComputingNetwork::computation_nodes() const {
  std::vector<NodeIndex> out;
  for (NodeIndex v = 0; v < nodes_.size(); ++v) {
    if (is_computation_node(v)) out.push_back(v);
  }
  return out;
}

double ComputingNetwork::capacity(const Resource& r) const {
  return r.kind == Resource::Kind::kLink ? links_.at(r.index).capacity
                                         : nodes_.at(r.index).processing_capacity;
}

double ComputingNetwork::cost(const Resource& r) const {
  return r.kind == Resource::Kind::kLink
             ? links_.at(r.index).interdiction_cost
             : nodes_.at(r.index).interdiction_cost;
}

std::string ComputingNetwork::link_name(LinkIndex link) const {
  const Link& l = links_.at(link);
  return nodes_[l.from].id + "->" + nodes_[l.to].id;
}

std::string ComputingNetwork::name(const Resource& r) const {
  return r.kind == Resource::Kind::kLink ? link_name(r.index)
                                         : nodes_.at(r.index).id;
}

std::vector<Resource> ComputingNetwork::resources() const {
  std::vector<Resource> out;
  for (LinkIndex e = 0; e < links_.size(); ++e) {
    if (links_[e].capacity > 0.0) out.push_back({Resource::Kind::kLink, e});
  }
  for (NodeIndex v = 0; v < nodes_.size(); ++v) {
    if (is_computation_node(v)) out.push_back({Resource::Kind::kNode, v});
  }
  return out;
}

double ComputingNetwork::total_capacity() const {
  double total = 0.0;
  for (const Link& l : links_) total += l.capacity;
  for (const Node& n : nodes_) total += n.processing_capacity;
  return total;
}

RemovalSpec RemovalSpec::none(const ComputingNetwork& net, bool binary) {
  RemovalSpec spec;
  spec.link_fractions.assign(net.num_links(), 0.0);
  spec.node_fractions.assign(net.num_nodes(), 0.0);
  spec.binary = binary;
  return spec;
}

double RemovalSpec::fraction(const Resource& r) const {
  return r.kind == Resource::Kind::kLink ? link_fractions.at(r.index)
                                         : node_fractions.at(r.index);
}

void RemovalSpec::set_fraction(const Resource& r, double value) {
  (r.kind == Resource::Kind::kLink ? link_fractions.at(r.index)
                                   : node_fractions.at(r.index)) = value;
}

std::vector<Resource> RemovalSpec::removed() const {
  std::vector<Resource> out;
  for (std::size_t e = 0; e < link_fractions.size(); ++e) {
    if (link_fractions[e] > 0.0) out.push_back({Resource::Kind::kLink, e});
  }
  for (std::size_t v = 0; v < node_fractions.size(); ++v) {
    if (node_fractions[v] > 0.0) out.push_back({Resource::Kind::kNode, v});
  }
  return out;
}

namespace {

void check_fraction(double z, bool binary) {
  if (!(z >= 0.0 && z <= 1.0)) {
    throw ValidationError("removal fraction " + std::to_string(z) +
                          " outside [0, 1]");
  }
  if (binary && z != 0.0 && z != 1.0) {
    throw ValidationError("binary removal with fractional entry " +
                          std::to_string(z));
  }
}

}  // namespace

ComputingNetwork apply_removal(const ComputingNetwork& net,
                               const RemovalSpec& removal) {
  if (removal.link_fractions.size() != net.num_links() ||
      removal.node_fractions.size() != net.num_nodes()) {
    throw ValidationError("removal spec does not match the network size");
  }
  ComputingNetwork out = net;
  for (LinkIndex e = 0; e < net.num_links(); ++e) {
    const double z = removal.link_fractions[e];
    check_fraction(z, removal.binary);
    out.set_link_capacity(e, z >= 1.0 ? 0.0
                                      : net.links()[e].capacity * (1.0 - z));
  }
  for (NodeIndex v = 0; v < net.num_nodes(); ++v) {
    const double z = removal.node_fractions[v];
    check_fraction(z, removal.binary);
    out.set_processing_capacity(
        v, z >= 1.0 ? 0.0 : net.nodes()[v].processing_capacity * (1.0 - z));
  }
  return out;
}

double removal_cost(const ComputingNetwork& net, const RemovalSpec& removal) {
  double total = 0.0;
  for (LinkIndex e = 0; e < net.num_links(); ++e) {
    total += net.links()[e].interdiction_cost * removal.link_fractions.at(e);
  }
  for (NodeIndex v = 0; v < net.num_nodes(); ++v) {
    total += net.nodes()[v].interdiction_cost * removal.node_fractions.at(v);
  }
  return total;
}

}  // namespace compnet
