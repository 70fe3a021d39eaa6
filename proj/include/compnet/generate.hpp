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

#ifndef COMPNET_GENERATE_HPP_
#define COMPNET_GENERATE_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "compnet/network.hpp"

namespace compnet {

// Undirected edge list; node order is the order of first appearance unless
// `nodes` lists them explicitly.
struct Topology {
  std::vector<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
};

// The 11-node, 14-edge Abilene backbone, nodes numbered "1".."11".
Topology abilene_topology();

// One "u v" pair per line; blank lines and '#' comments are skipped.
Topology parse_edge_list(std::string_view text);

struct Range {
  double lo = 0.0;
  double hi = 1.0;
};

enum class CostMode { kEqualsCapacity, kIndependent };

struct RandomNetworkSpec {
  Range link_capacity{0.0, 1.0};
  Range node_capacity{0.0, 0.1};
  CostMode cost_mode = CostMode::kEqualsCapacity;
  Range link_cost{0.0, 1.0};
  Range node_cost{0.0, 0.1};
  // Each undirected edge becomes two directed links.
  bool bidirectional = true;
  std::uint64_t seed = 0;
};

// Draws every directed link capacity, then every node capacity, then (for
// independent costs) every link cost and node cost, i.i.d. uniform on the
// open ranges. Deterministic for a fixed seed.
ComputingNetwork gen_random(const Topology& topology,
                            const RandomNetworkSpec& spec);

}  // namespace compnet

#endif  // COMPNET_GENERATE_HPP_
