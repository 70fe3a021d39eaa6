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

// Reference fixtures, brute-force oracles and instance generators used to
// verify the solvers.

#ifndef COMPNET_TESTKIT_HPP_
#define COMPNET_TESTKIT_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "compnet/cuts.hpp"
#include "compnet/network.hpp"

namespace compnet::testkit {

// Where an expected value comes from: printed in the source text, forced by
// the definitions, or computed by an independent oracle.
enum class Provenance { kReported, kTrivial, kDerived };

std::string_view to_string(Provenance provenance);

struct Expectation {
  // "max_flow", "comm_cut", "comp_cut", "joint_cut",
  // "partial_residual@B" or "binary_residual@B".
  std::string metric;
  double value = 0.0;
  Provenance provenance = Provenance::kReported;
  std::string note;
};

struct Fixture {
  std::string name;
  std::string description;
  ComputingNetwork network;
  std::string source;
  std::string sink;
  std::vector<Expectation> expected;
};

std::vector<Fixture> fixtures();
// Throws ValidationError for an unknown name.
Fixture fixture(std::string_view name);
std::vector<std::string> fixture_names();

// Evaluates one metric with the exact solvers (partial residuals with the
// enumeration oracle).
double compute_metric(const Fixture& f, std::string_view metric);

// JSON manifest listing every fixture file and its expectations.
std::string fixture_manifest();

// Minimum cut by subset enumeration, filtered with is_cut. Throws Error for
// more than 22 candidate resources.
CutSolution cut_oracle(const ComputingNetwork& net, NodeIndex s, NodeIndex t,
                       CutMode mode);

// Path formulation of the cut: every simple s -> t' layered path must lose
// at least one of its resources. Solved as a MILP.
double path_cut_oracle(const ComputingNetwork& net, NodeIndex s, NodeIndex t,
                       CutMode mode);

// Exact cover by 3-sets over elements 1..3q.
struct X3CInstance {
  int q = 0;
  std::vector<std::array<int, 3>> triples;
  double k = 0.0;  // big capacity, k >= 2m
};

struct Reduction {
  ComputingNetwork network;
  NodeIndex source = 0;
  NodeIndex sink = 0;
};

// Gadget path s1 -> u_i -> v_i -> t1 per triple (capacities k, 2, 1). Each
// element x threads s2 -> u_i -> v_i -> ... -> t2 through the triples that
// contain it, in index order, with capacity-k connectors. s feeds s1 and s2,
// t1 and t2 feed t, all with capacity k. Only s2 and t1 process, each with
// capacity k.
Reduction build_x3c_reduction(const X3CInstance& inst);

bool has_exact_cover(const X3CInstance& inst);

// A random instance whose first q triples form an exact cover, followed by
// `extra` random triples.
X3CInstance planted_x3c(int q, int extra, std::uint64_t seed);

// A random instance with m triples, every element covered at least once and
// no exact cover (certified by exhaustive search).
X3CInstance no_cover_x3c(int q, int m, std::uint64_t seed);

struct RandomInstance {
  ComputingNetwork network;
  NodeIndex source = 0;
  NodeIndex sink = 0;
};

struct SmallNetworkSpec {
  int max_nodes = 6;
  int max_links = 10;
  // Costs drawn independently of capacities instead of equal to them.
  bool independent_costs = false;
};

// 3..max_nodes nodes, up to max_links distinct directed links, capacities on
// a 0.1 grid in [0.1, 3], roughly half of the nodes processing.
RandomInstance random_small_network(std::uint64_t seed,
                                    const SmallNetworkSpec& spec = {});

}  // namespace compnet::testkit

#endif  // COMPNET_TESTKIT_HPP_
