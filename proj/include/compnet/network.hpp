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

#ifndef COMPNET_NETWORK_HPP_
#define COMPNET_NETWORK_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace compnet {

using NodeIndex = std::size_t;
using LinkIndex = std::size_t;

// Absolute tolerance for comparing flow and cut values.
inline constexpr double kValueTolerance = 1e-6;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed topology document.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates a model invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An LP/MILP solve ended in a state the caller cannot use.
class SolverError : public Error {
 public:
  using Error::Error;
};

struct Node {
  std::string id;
  double processing_capacity = 0.0;
  double interdiction_cost = 0.0;
};

struct Link {
  NodeIndex from = 0;
  NodeIndex to = 0;
  double capacity = 0.0;
  double interdiction_cost = 0.0;
};

// A removable resource: the transmission capacity of a link or the
// processing capacity of a node.
struct Resource {
  enum class Kind { kLink, kNode };
  Kind kind = Kind::kLink;
  std::size_t index = 0;

  auto operator<=>(const Resource&) const = default;
};

// Directed graph whose links carry transmission capacity and whose nodes
// carry processing capacity. A node with positive processing capacity is a
// computation node; every other node only forwards traffic.
//
// Links of capacity zero are allowed (they appear after a full removal) and
// every solver treats them as absent.
class ComputingNetwork {
 public:
  // A missing interdiction cost defaults to the capacity.
  NodeIndex add_node(std::string id, double processing_capacity,
                     std::optional<double> interdiction_cost = std::nullopt);
  LinkIndex add_link(NodeIndex from, NodeIndex to, double capacity,
                     std::optional<double> interdiction_cost = std::nullopt);
  LinkIndex add_link(std::string_view from, std::string_view to,
                     double capacity,
                     std::optional<double> interdiction_cost = std::nullopt);

  void set_link_capacity(LinkIndex link, double capacity);
  void set_processing_capacity(NodeIndex node, double capacity);
  void set_link_cost(LinkIndex link, double cost);
  void set_node_cost(NodeIndex node, double cost);

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Link>& links() const { return links_; }
  std::size_t num_nodes() const { return nodes_.size(); }
  std::size_t num_links() const { return links_.size(); }

  std::optional<NodeIndex> find_node(std::string_view id) const;
  // Throws ValidationError for an unknown id.
  NodeIndex node_index(std::string_view id) const;
  std::optional<LinkIndex> find_link(NodeIndex from, NodeIndex to) const;

  bool is_computation_node(NodeIndex node) const {
    return nodes_[node].processing_capacity > 0.0;
  }
  std::vector<NodeIndex> computation_nodes() const;

  double capacity(const Resource& r) const;
  double cost(const Resource& r) const;
  // "u->v" for links, the node id for nodes.
  std::string name(const Resource& r) const;
  std::string link_name(LinkIndex link) const;

  // Resources with positive capacity, links first then nodes.
  std::vector<Resource> resources() const;

  // Sum of every link and processing capacity.
  double total_capacity() const;

 private:
  std::vector<Node> nodes_;
  std::vector<Link> links_;
  std::unordered_map<std::string, NodeIndex> node_by_id_;
  std::map<std::pair<NodeIndex, NodeIndex>, LinkIndex> link_by_ends_;
};

// Fraction of each capacity that is removed (0 keeps, 1 removes fully).
struct RemovalSpec {
  std::vector<double> link_fractions;
  std::vector<double> node_fractions;
  bool binary = true;

  static RemovalSpec none(const ComputingNetwork& net, bool binary = true);

  double fraction(const Resource& r) const;
  void set_fraction(const Resource& r, double value);
  // Resources with a positive removed fraction.
  std::vector<Resource> removed() const;
};

// Scales every capacity by (1 - fraction). Throws ValidationError when a
// fraction lies outside [0, 1], when sizes disagree with the network, or
// when a binary spec carries a fractional entry.
ComputingNetwork apply_removal(const ComputingNetwork& net,
                               const RemovalSpec& removal);

// Total interdiction cost of a removal (cost times removed fraction).
double removal_cost(const ComputingNetwork& net, const RemovalSpec& removal);

// Topology JSON: {"nodes":[{"id","processing_capacity","interdiction_cost"?}],
//                 "links":[{"from","to","capacity","interdiction_cost"?}]}
ComputingNetwork load_network(std::string_view text);
ComputingNetwork load_network_file(const std::string& path);
std::string serialize_network(const ComputingNetwork& net);

}  // namespace compnet

#endif  // COMPNET_NETWORK_HPP_
