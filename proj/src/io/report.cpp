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

#include "compnet/report.hpp"

#include <cmath>
#include <iomanip>
#include <locale>
#include <sstream>

#include "json.hpp"

namespace compnet {
namespace {

using nlohmann::ordered_json;

// Rounds to the printed precision so JSON and table output agree.
double rounded(double value) {
  const double r = std::round(value * 1e6) / 1e6;
  return r == 0.0 ? 0.0 : r;
}

}  // namespace

std::string format_number(double value) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out << std::fixed << std::setprecision(6) << rounded(value);
  return out.str();
}

std::string flow_to_json(const ComputingNetwork& net, NodeIndex source,
                         const FlowSolution& flow, bool with_paths,
                         bool with_duals) {
  ordered_json doc;
  doc["kind"] = "maxflow";
  doc["value"] = rounded(flow.value);
  ordered_json edges = ordered_json::array();
  const LayeredGraph& g = flow.graph;
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const LayeredEdge& edge = g.edges()[e];
    if (edge.kind == LayerEdgeKind::kReturn) continue;
    edges.push_back({{"from", g.node_label(edge.tail, net)},
                     {"to", g.node_label(edge.head, net)},
                     {"flow", rounded(flow.edge_flows[e])}});
  }
  doc["edge_flows"] = std::move(edges);
  if (with_paths) {
    ordered_json paths = ordered_json::array();
    for (const ComputationPathFlow& p : decompose(flow)) {
      paths.push_back({{"path", describe(net, source, p)},
                       {"processor", net.nodes()[p.processor].id},
                       {"amount", rounded(p.amount)}});
    }
    doc["paths"] = std::move(paths);
  }
  if (with_duals) {
    ordered_json duals = ordered_json::object();
    for (const Resource& r : net.resources()) {
      duals[net.name(r)] = rounded(flow.dual(r));
    }
    doc["duals"] = std::move(duals);
  }
  return doc.dump(2);
}

std::string cut_to_json(const ComputingNetwork& net, const CutSolution& cut,
                        bool verified) {
  ordered_json doc;
  doc["kind"] = "mincut";
  doc["mode"] = std::string(to_string(cut.mode));
  ordered_json links = ordered_json::array();
  for (LinkIndex e : cut.links) links.push_back(net.link_name(e));
  ordered_json nodes = ordered_json::array();
  for (NodeIndex w : cut.nodes) nodes.push_back(net.nodes()[w].id);
  doc["links"] = std::move(links);
  doc["nodes"] = std::move(nodes);
  doc["value"] = rounded(cut.value);
  doc["optimal"] = cut.optimal;
  doc["verified"] = verified;
  return doc.dump(2);
}

std::string interdiction_to_json(const ComputingNetwork& net,
                                 const InterdictionSolution& sol,
                                 double budget, InterdictionMethod method,
                                 bool partial) {
  ordered_json doc;
  doc["kind"] = "interdiction";
  doc["method"] = std::string(to_string(method));
  doc["partial"] = partial;
  doc["budget"] = rounded(budget);
  doc["residual_flow"] = rounded(sol.residual_flow);
  doc["spent"] = rounded(sol.spent);
  doc["optimal"] = sol.optimal;
  ordered_json removed = ordered_json::array();
  for (const Resource& r : sol.removal.removed()) {
    removed.push_back(
        {{"resource", net.name(r)}, {"fraction", rounded(sol.removal.fraction(r))}});
  }
  doc["removed"] = std::move(removed);
  if (!sol.trace.empty()) {
    ordered_json trace = ordered_json::array();
    for (const GreedyStep& step : sol.trace) {
      ordered_json s{{"resource", net.name(step.resource)}};
      if (std::isinf(step.score)) {
        s["score"] = "inf";
      } else {
        s["score"] = rounded(step.score);
      }
      s["amount"] = rounded(step.amount);
      trace.push_back(std::move(s));
    }
    doc["trace"] = std::move(trace);
  }
  if (sol.milp_objective) doc["milp_objective"] = rounded(*sol.milp_objective);
  return doc.dump(2);
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::string out = "budget,method,residual_flow,spent,optimal\n";
  for (const SweepRow& r : rows) {
    out += format_number(r.budget) + "," + std::string(to_string(r.method)) +
           "," + format_number(r.residual_flow) + "," + format_number(r.spent) +
           "," + (r.optimal ? "true" : "false") + "\n";
  }
  return out;
}

std::string sweep_to_json(const std::vector<SweepRow>& rows) {
  ordered_json doc;
  doc["kind"] = "sweep";
  ordered_json out = ordered_json::array();
  for (const SweepRow& r : rows) {
    out.push_back({{"budget", rounded(r.budget)},
                   {"method", std::string(to_string(r.method))},
                   {"residual_flow", rounded(r.residual_flow)},
                   {"spent", rounded(r.spent)},
                   {"optimal", r.optimal}});
  }
  doc["rows"] = std::move(out);
  return doc.dump(2);
}

}  // namespace compnet
