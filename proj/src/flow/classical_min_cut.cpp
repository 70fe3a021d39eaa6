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
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "compnet/flow.hpp"

namespace compnet {
namespace {

constexpr double kResidual = 1e-9;

class Dinic {
 public:
  Dinic(const Digraph& g) : n_(g.num_nodes), adj_(g.num_nodes) {
    residual_.reserve(2 * g.arcs.size());
    head_.reserve(2 * g.arcs.size());
    for (const Arc& a : g.arcs) {
      adj_[a.tail].push_back(residual_.size());
      head_.push_back(a.head);
      residual_.push_back(a.capacity);
      adj_[a.head].push_back(residual_.size());
      head_.push_back(a.tail);
      residual_.push_back(0.0);
    }
  }

  void run(std::size_t s, std::size_t t) {
    while (build_levels(s, t)) {
      next_.assign(n_, 0);
      while (augment(s, t, std::numeric_limits<double>::infinity()) >
             kResidual) {
      }
    }
  }

  std::vector<char> reachable(std::size_t s) const {
    std::vector<char> seen(n_, 0);
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t e : adj_[v]) {
        if (residual_[e] > kResidual && !seen[head_[e]]) {
          seen[head_[e]] = 1;
          stack.push_back(head_[e]);
        }
      }
    }
    return seen;
  }

 private:
  bool build_levels(std::size_t s, std::size_t t) {
    level_.assign(n_, -1);
    std::queue<std::size_t> queue;
    level_[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop();
      for (std::size_t e : adj_[v]) {
        if (residual_[e] > kResidual && level_[head_[e]] < 0) {
          level_[head_[e]] = level_[v] + 1;
          queue.push(head_[e]);
        }
      }
    }
    return level_[t] >= 0;
  }

  double augment(std::size_t v, std::size_t t, double limit) {
    if (v == t) return limit;
    for (std::size_t& i = next_[v]; i < adj_[v].size(); ++i) {
      const std::size_t e = adj_[v][i];
      const std::size_t w = head_[e];
      if (residual_[e] <= kResidual || level_[w] != level_[v] + 1) continue;
      const double pushed = augment(w, t, std::min(limit, residual_[e]));
      if (pushed > kResidual) {
        residual_[e] -= pushed;
        residual_[e ^ 1] += pushed;
        return pushed;
      }
    }
    return 0.0;
  }

  std::size_t n_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> head_;
  std::vector<double> residual_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace

ClassicalCut classical_min_cut(const Digraph& graph, std::size_t s,
                               std::size_t t) {
  if (s >= graph.num_nodes || t >= graph.num_nodes) {
    throw ValidationError("classical_min_cut: terminal out of range");
  }
  if (s == t) throw ValidationError("classical_min_cut: s and t must differ");
  for (const Arc& a : graph.arcs) {
    if (a.tail >= graph.num_nodes || a.head >= graph.num_nodes) {
      throw ValidationError("classical_min_cut: arc endpoint out of range");
    }
    if (!(a.capacity >= 0.0)) {
      throw ValidationError("classical_min_cut: negative arc cost");
    }
  }

  Dinic dinic(graph);
  dinic.run(s, t);
  ClassicalCut cut;
  cut.source_side = dinic.reachable(s);
  for (std::size_t i = 0; i < graph.arcs.size(); ++i) {
    const Arc& a = graph.arcs[i];
    if (a.capacity > 0.0 && cut.source_side[a.tail] &&
        !cut.source_side[a.head]) {
      cut.arcs.push_back(i);
      cut.value += a.capacity;
    }
  }
  return cut;
}

}  // namespace compnet
