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

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "compnet/flow.hpp"
#include "compnet/layered.hpp"
#include "compnet/testkit.hpp"

namespace compnet::testkit {
namespace {

std::vector<Resource> candidates(const ComputingNetwork& net, CutMode mode) {
  std::vector<Resource> out;
  for (const Resource& r : net.resources()) {
    const bool link = r.kind == Resource::Kind::kLink;
    if (mode == CutMode::kCommunication && !link) continue;
    if (mode == CutMode::kComputation && link) continue;
    out.push_back(r);
  }
  return out;
}

void validate_x3c(const X3CInstance& inst) {
  if (inst.q < 1) throw ValidationError("x3c: q must be >= 1");
  const int m = static_cast<int>(inst.triples.size());
  if (m < 1) throw ValidationError("x3c: no triples");
  if (inst.k < 2.0 * m) throw ValidationError("x3c: k must be at least 2m");
  for (const auto& tri : inst.triples) {
    for (int x : tri) {
      if (x < 1 || x > 3 * inst.q) {
        throw ValidationError("x3c: triple element out of range");
      }
    }
    if (tri[0] == tri[1] || tri[0] == tri[2] || tri[1] == tri[2]) {
      throw ValidationError("x3c: triple with repeated element");
    }
  }
}

std::array<int, 3> random_triple(int universe, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(1, universe);
  std::array<int, 3> tri{};
  do {
    tri = {pick(rng), pick(rng), pick(rng)};
  } while (tri[0] == tri[1] || tri[0] == tri[2] || tri[1] == tri[2]);
  std::sort(tri.begin(), tri.end());
  return tri;
}

}  // namespace

CutSolution cut_oracle(const ComputingNetwork& net, NodeIndex s, NodeIndex t,
                       CutMode mode) {
  const LayeredGraph g = build_layered(net, s, t);
  const std::vector<Resource> res = candidates(net, mode);
  if (res.size() > 22) {
    throw Error("cut oracle: too many candidate resources (" +
                std::to_string(res.size()) + ")");
  }
  CutSolution best;
  best.mode = mode;
  best.value = std::numeric_limits<double>::infinity();
  std::vector<LinkIndex> links;
  std::vector<NodeIndex> nodes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << res.size());
       ++mask) {
    double value = 0.0;
    links.clear();
    nodes.clear();
    for (std::size_t i = 0; i < res.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      value += net.capacity(res[i]);
      (res[i].kind == Resource::Kind::kLink ? links : nodes)
          .push_back(res[i].index);
    }
    if (value >= best.value) continue;
    if (sink_reachable(g, map_cut_to_layered(g, links, nodes))) continue;
    best.value = value;
    best.links = links;
    best.nodes = nodes;
  }
  return best;
}

double path_cut_oracle(const ComputingNetwork& net, NodeIndex s, NodeIndex t,
                       CutMode mode) {
  const LayeredGraph g = build_layered(net, s, t);
  const auto paths = layered_paths(g, 100000);
  if (paths.empty()) return 0.0;

  lp::LinearProgram prog;
  prog.set_sense(lp::Sense::kMinimize);
  std::map<Resource, int> var;
  for (const Resource& r : candidates(net, mode)) {
    var[r] = prog.add_variable("y_" + net.name(r), 0.0, 1.0, true);
    prog.set_objective_coefficient(var[r], net.capacity(r));
  }
  for (std::size_t p = 0; p < paths.size(); ++p) {
    std::set<Resource> on_path;
    for (std::size_t e : paths[p]) {
      const LayeredEdge& edge = g.edges()[e];
      on_path.insert(edge.kind == LayerEdgeKind::kCross
                         ? Resource{Resource::Kind::kNode, edge.origin}
                         : Resource{Resource::Kind::kLink, edge.origin});
    }
    std::vector<lp::Term> terms;
    for (const Resource& r : on_path) {
      if (auto it = var.find(r); it != var.end()) {
        terms.push_back({it->second, 1.0});
      }
    }
    if (terms.empty()) {
      throw Error("path cut oracle: a path has no removable resource");
    }
    prog.add_constraint("path" + std::to_string(p), std::move(terms),
                        lp::Relation::kGreaterEqual, 1.0);
  }
  const lp::SolveResult result = lp::solve_milp(prog);
  if (result.status != lp::Status::kOptimal) {
    throw SolverError("path cut oracle ended with status " +
                      std::string(lp::to_string(result.status)));
  }
  return result.objective;
}

Reduction build_x3c_reduction(const X3CInstance& inst) {
  validate_x3c(inst);
  const double k = inst.k;
  const int m = static_cast<int>(inst.triples.size());
  Reduction red;
  ComputingNetwork& net = red.network;
  red.source = net.add_node("s", 0);
  net.add_node("s1", 0);
  net.add_node("s2", k);
  net.add_node("t1", k);
  net.add_node("t2", 0);
  red.sink = net.add_node("t", 0);
  auto u = [](int i) { return "u" + std::to_string(i + 1); };
  auto v = [](int i) { return "v" + std::to_string(i + 1); };
  for (int i = 0; i < m; ++i) {
    net.add_node(u(i), 0);
    net.add_node(v(i), 0);
  }
  net.add_link("s", "s1", k);
  net.add_link("s", "s2", k);
  net.add_link("t1", "t", k);
  net.add_link("t2", "t", k);
  for (int i = 0; i < m; ++i) {
    net.add_link("s1", u(i), k);
    net.add_link(u(i), v(i), 2);
    net.add_link(v(i), "t1", 1);
  }
  auto connect = [&](const std::string& a, const std::string& b) {
    if (!net.find_link(net.node_index(a), net.node_index(b))) {
      net.add_link(a, b, k);
    }
  };
  for (int x = 1; x <= 3 * inst.q; ++x) {
    std::string prev = "s2";
    for (int i = 0; i < m; ++i) {
      const auto& tri = inst.triples[i];
      if (std::find(tri.begin(), tri.end(), x) == tri.end()) continue;
      connect(prev, u(i));
      prev = v(i);
    }
    if (prev != "s2") connect(prev, "t2");
  }
  return red;
}

bool has_exact_cover(const X3CInstance& inst) {
  validate_x3c(inst);
  const int n = 3 * inst.q;
  std::vector<char> covered(n + 1, 0);
  auto search = [&](auto&& self) -> bool {
    int first = 1;
    while (first <= n && covered[first]) ++first;
    if (first > n) return true;
    for (const auto& tri : inst.triples) {
      if (std::find(tri.begin(), tri.end(), first) == tri.end()) continue;
      if (covered[tri[0]] || covered[tri[1]] || covered[tri[2]]) continue;
      for (int x : tri) covered[x] = 1;
      const bool found = self(self);
      for (int x : tri) covered[x] = 0;
      if (found) return true;
    }
    return false;
  };
  return search(search);
}

X3CInstance planted_x3c(int q, int extra, std::uint64_t seed) {
  if (q < 1 || extra < 0) throw ValidationError("planted_x3c: bad sizes");
  std::mt19937_64 rng(seed);
  std::vector<int> perm(3 * q);
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  X3CInstance inst;
  inst.q = q;
  for (int i = 0; i < q; ++i) {
    std::array<int, 3> tri{perm[3 * i], perm[3 * i + 1], perm[3 * i + 2]};
    std::sort(tri.begin(), tri.end());
    inst.triples.push_back(tri);
  }
  std::set<std::array<int, 3>> seen(inst.triples.begin(), inst.triples.end());
  const std::size_t distinct = 3 * q * (3 * q - 1) * (3 * q - 2) / 6;
  while (static_cast<int>(inst.triples.size()) < q + extra &&
         seen.size() < distinct) {
    const auto tri = random_triple(3 * q, rng);
    if (seen.insert(tri).second) inst.triples.push_back(tri);
  }
  inst.k = 2.0 * static_cast<double>(inst.triples.size());
  return inst;
}

X3CInstance no_cover_x3c(int q, int m, std::uint64_t seed) {
  if (q < 2 || m < 1) throw ValidationError("no_cover_x3c: bad sizes");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    X3CInstance inst;
    inst.q = q;
    std::set<std::array<int, 3>> seen;
    while (static_cast<int>(inst.triples.size()) < m) {
      const auto tri = random_triple(3 * q, rng);
      if (seen.insert(tri).second) inst.triples.push_back(tri);
    }
    inst.k = 2.0 * m;
    std::vector<char> covered(3 * q + 1, 0);
    for (const auto& tri : inst.triples) {
      for (int x : tri) covered[x] = 1;
    }
    if (std::count(covered.begin() + 1, covered.end(), 0) > 0) continue;
    if (!has_exact_cover(inst)) return inst;
  }
  throw Error("no_cover_x3c: no instance found");
}

RandomInstance random_small_network(std::uint64_t seed,
                                    const SmallNetworkSpec& spec) {
  if (spec.max_nodes < 3 || spec.max_links < 2) {
    throw ValidationError("random_small_network: spec too small");
  }
  std::mt19937_64 rng(seed);
  const int n = std::uniform_int_distribution<int>(3, spec.max_nodes)(rng);
  std::uniform_int_distribution<int> tenths(1, 30);
  std::bernoulli_distribution coin(0.5);

  RandomInstance inst;
  ComputingNetwork& net = inst.network;
  bool any = false;
  for (int i = 0; i < n; ++i) {
    const double cap = coin(rng) ? tenths(rng) / 10.0 : 0.0;
    any = any || cap > 0.0;
    net.add_node("n" + std::to_string(i), cap);
  }
  if (!any) {
    const int w = std::uniform_int_distribution<int>(0, n - 1)(rng);
    net.set_processing_capacity(w, tenths(rng) / 10.0);
  }
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b) pairs.emplace_back(a, b);
    }
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  const int max_links = std::min<int>(spec.max_links, pairs.size());
  const int count = std::uniform_int_distribution<int>(
      std::min(n - 1, max_links), max_links)(rng);
  for (int i = 0; i < count; ++i) {
    net.add_link(pairs[i].first, pairs[i].second, tenths(rng) / 10.0);
  }
  for (NodeIndex w = 0; w < net.num_nodes(); ++w) {
    net.set_node_cost(w, spec.independent_costs
                             ? tenths(rng) / 10.0
                             : net.nodes()[w].processing_capacity);
  }
  for (LinkIndex e = 0; e < net.num_links(); ++e) {
    net.set_link_cost(e, spec.independent_costs ? tenths(rng) / 10.0
                                                : net.links()[e].capacity);
  }
  inst.source = 0;
  inst.sink = n - 1;
  return inst;
}

}  // namespace compnet::testkit
