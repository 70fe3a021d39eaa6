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

#include "compnet/generate.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <unordered_set>

namespace compnet {
namespace {

void check_range(const Range& r, const char* what) {
  if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || r.lo < 0.0 ||
      !(r.lo < r.hi)) {
    throw ValidationError(std::string("invalid ") + what +
                          " range: need 0 <= lo < hi");
  }
}

// Uniform on the open interval (lo, hi).
double draw(std::mt19937_64& rng, const Range& r) {
  std::uniform_real_distribution<double> dist(r.lo, r.hi);
  double x = dist(rng);
  while (x <= r.lo || x >= r.hi) x = dist(rng);
  return x;
}

std::vector<std::string> ordered_nodes(const Topology& topology) {
  if (!topology.nodes.empty()) return topology.nodes;
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (const auto& [u, v] : topology.edges) {
    if (seen.insert(u).second) out.push_back(u);
    if (seen.insert(v).second) out.push_back(v);
  }
  return out;
}

}  // namespace

Topology abilene_topology() {
  Topology t;
  for (int i = 1; i <= 11; ++i) t.nodes.push_back(std::to_string(i));
  t.edges = {{"1", "2"}, {"1", "4"},  {"2", "3"},  {"2", "4"},  {"3", "5"},
             {"4", "6"}, {"5", "6"},  {"5", "7"},  {"6", "8"},  {"7", "8"},
             {"7", "10"}, {"8", "9"}, {"9", "11"}, {"10", "11"}};
  return t;
}

Topology parse_edge_list(std::string_view text) {
  Topology t;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    std::istringstream fields(line);
    std::string u, v, extra;
    if (!(fields >> u)) continue;
    if (!(fields >> v) || (fields >> extra)) {
      throw ParseError("edge list line " + std::to_string(line_no) +
                       ": expected 'u v'");
    }
    t.edges.emplace_back(u, v);
  }
  return t;
}

ComputingNetwork gen_random(const Topology& topology,
                            const RandomNetworkSpec& spec) {
  check_range(spec.link_capacity, "link capacity");
  check_range(spec.node_capacity, "node capacity");
  if (spec.cost_mode == CostMode::kIndependent) {
    check_range(spec.link_cost, "link cost");
    check_range(spec.node_cost, "node cost");
  }

  ComputingNetwork net;
  for (const std::string& id : ordered_nodes(topology)) net.add_node(id, 0.0);
  for (const auto& [u, v] : topology.edges) {
    net.add_link(u, v, 0.0);
    if (spec.bidirectional) net.add_link(v, u, 0.0);
  }

  std::mt19937_64 rng(spec.seed);
  for (LinkIndex e = 0; e < net.num_links(); ++e) {
    const double c = draw(rng, spec.link_capacity);
    net.set_link_capacity(e, c);
    net.set_link_cost(e, c);
  }
  for (NodeIndex v = 0; v < net.num_nodes(); ++v) {
    const double c = draw(rng, spec.node_capacity);
    net.set_processing_capacity(v, c);
    net.set_node_cost(v, c);
  }
  if (spec.cost_mode == CostMode::kIndependent) {
    for (LinkIndex e = 0; e < net.num_links(); ++e) {
      net.set_link_cost(e, draw(rng, spec.link_cost));
    }
    for (NodeIndex v = 0; v < net.num_nodes(); ++v) {
      net.set_node_cost(v, draw(rng, spec.node_cost));
    }
  }
  return net;
}

}  // namespace compnet
