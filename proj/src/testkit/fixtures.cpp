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

#include <string>
#include <vector>

#include "compnet/cuts.hpp"
#include "compnet/flow.hpp"
#include "compnet/generate.hpp"
#include "compnet/interdiction.hpp"
#include "compnet/report.hpp"
#include "compnet/testkit.hpp"
#include "json.hpp"

namespace compnet::testkit {
namespace {

constexpr Provenance R = Provenance::kReported;
constexpr Provenance T = Provenance::kTrivial;
constexpr Provenance D = Provenance::kDerived;

std::string budget_key(std::string_view prefix, double b) {
  std::string text = format_number(b);
  while (text.back() == '0') text.pop_back();
  if (text.back() == '.') text.pop_back();
  return std::string(prefix) + "@" + text;
}

Fixture fig1() {
  Fixture f{"fig1", "two disjoint three-hop paths, four processing nodes", {},
            "s", "t", {}};
  auto& n = f.network;
  n.add_node("s", 0);
  n.add_node("u1", 1);
  n.add_node("v1", 1);
  n.add_node("u2", 1);
  n.add_node("v2", 1);
  n.add_node("t", 0);
  for (auto [a, b] : {std::pair{"s", "u1"}, {"u1", "v1"}, {"v1", "t"},
                      {"s", "u2"}, {"u2", "v2"}, {"v2", "t"}}) {
    n.add_link(a, b, 2);
  }
  f.expected = {
      {"max_flow", 4, R, "the maximum s-t flow is four"},
      {"joint_cut", 4, D, "subset enumeration"},
  };
  return f;
}

void add_fig3(ComputingNetwork& n, const char* a, const char* b) {
  n.add_node(a, 1);
  n.add_node(b, 1);
  n.add_link("s", a, 5);
  n.add_link(a, "t", 5);
  n.add_link("s", b, 5);
  n.add_link(b, "t", 5);
}

void add_fig4(ComputingNetwork& n, const char* a, const char* b) {
  n.add_node(a, 10);
  n.add_node(b, 10);
  n.add_link("s", a, 1);
  n.add_link(a, b, 1);
  n.add_link(b, "t", 1);
}

Fixture fig3() {
  Fixture f{"fig3", "two parallel two-hop paths, scarce processing", {}, "s",
            "t", {}};
  f.network.add_node("s", 0);
  f.network.add_node("t", 0);
  add_fig3(f.network, "u1", "u2");
  f.expected = {
      {"max_flow", 2, R, "figure caption"},
      {"comm_cut", 10, R, "min communication cut = 10"},
      {"joint_cut", 2, R, "removing the two units of computation"},
      {"comp_cut", 2, D, "reachability intersection"},
  };
  return f;
}

Fixture fig4() {
  Fixture f{"fig4", "single three-hop path, abundant processing", {}, "s",
            "t", {}};
  f.network.add_node("s", 0);
  f.network.add_node("t", 0);
  add_fig4(f.network, "u", "v");
  f.expected = {
      {"max_flow", 1, R, "figure caption"},
      {"comp_cut", 20, R, "min computation cut = 20"},
      {"joint_cut", 1, R, "removing any one of the three links"},
      {"comm_cut", 1, D, "subset enumeration"},
  };
  return f;
}

Fixture fig34() {
  Fixture f{"fig3-fig4-parallel", "fig3 and fig4 sharing s and t", {}, "s",
            "t", {}};
  f.network.add_node("s", 0);
  f.network.add_node("t", 0);
  add_fig3(f.network, "u1", "u2");
  add_fig4(f.network, "u", "v");
  f.expected = {
      {"joint_cut", 3, R, "minimum joint cut is 3"},
      {"comm_cut", 11, R, "communication cut is 11"},
      {"comp_cut", 22, R, "computation cut is 22"},
      {"max_flow", 3, D, "sum of the two components"},
  };
  return f;
}

Fixture fig5(double v_capacity) {
  const bool variant = v_capacity != 2.0;
  Fixture f{variant ? "fig5-variant" : "fig5",
            variant ? "fig5 with processing at v reduced to 1.5"
                    : "cycle s->t->v->s, processing only at v",
            {},
            "s",
            "t",
            {}};
  auto& n = f.network;
  n.add_node("s", 0);
  n.add_node("t", 0);
  n.add_node("v", v_capacity);
  n.add_link("s", "t", 2);
  n.add_link("t", "v", 2);
  n.add_link("v", "s", 2);
  f.expected.push_back({"max_flow", 1, R, "the maximum s-t flow is 1"});
  if (variant) {
    f.expected.push_back({"joint_cut", 1.5, R, "node v, value 1.5"});
  } else {
    f.expected.push_back({"joint_cut", 2, R, "min joint cut = 2"});
  }
  return f;
}

Fixture fig6() {
  Fixture f{"fig6", "min cut link (u,t) is not saturated; interdiction example",
            {}, "s", "t", {}};
  auto& n = f.network;
  n.add_node("s", 0);
  n.add_node("u", 0);
  n.add_node("v", 2);
  n.add_node("t", 0);
  n.add_link("s", "u", 2);
  n.add_link("u", "v", 2);
  n.add_link("v", "s", 2);
  n.add_link("u", "t", 1.5);
  f.expected = {
      {"max_flow", 1, R, "the maximum flow remains 1"},
      {"joint_cut", 1.5, R, "link (u,t) with capacity 1.5"},
  };
  for (double b : budget_grid(0.0, 1.5, 0.25)) {
    const double residual = b <= 1.0 ? 1.0 - 0.5 * b : 1.5 - b;
    f.expected.push_back(
        {budget_key("partial_residual", b), residual, R, "piecewise curve"});
  }
  for (double b : budget_grid(0.0, 1.5, 0.25)) {
    f.expected.push_back({budget_key("binary_residual", b),
                          b >= 1.5 ? 0.0 : 1.0, D, "subset enumeration"});
  }
  return f;
}

ComputingNetwork abilene(double cap6, double cap11) {
  ComputingNetwork n;
  const Topology topo = abilene_topology();
  for (const std::string& id : topo.nodes) {
    n.add_node(id, id == "6" ? cap6 : id == "11" ? cap11 : 0.0);
  }
  for (const auto& [a, b] : topo.edges) {
    n.add_link(a, b, 1);
    n.add_link(b, a, 1);
  }
  return n;
}

Fixture abilene_computation() {
  Fixture f{"abilene-computation",
            "unit links, nodes 6 and 11 process 0.5 each",
            abilene(0.5, 0.5),
            "1",
            "3",
            {}};
  f.expected = {
      {"max_flow", 1, R, "max flow between each pair is 1"},
      {"comp_cut", 1, R, "computation cut {6, 11}"},
  };
  return f;
}

Fixture abilene_communication() {
  Fixture f{"abilene-communication", "unit links, nodes 6 and 11 process 5",
            abilene(5, 5), "8", "7", {}};
  f.expected = {
      {"comm_cut", 3, R, "min communication cut for s=8, t=7 is 3"},
      {"max_flow", 2.5, R, "maximum flow is 2.5"},
  };
  return f;
}

Fixture abilene_joint() {
  Fixture f{"abilene-joint", "unit links, node 6 processes 5, node 11 0.5",
            abilene(5, 0.5), "8", "7", {}};
  f.expected = {
      {"joint_cut", 2.5, R, "minimum joint cut is 2.5"},
      {"comm_cut", 3, R, "minimum communication cut 3"},
      {"comp_cut", 5.5, R, "minimum computation cut 5.5"},
      {"max_flow", 2.25, R, "maximum s-t flow is 2.25"},
  };
  return f;
}

Fixture no_processing() {
  Fixture f{"no-processing", "path without computation nodes", {}, "s", "t",
            {}};
  f.network.add_node("s", 0);
  f.network.add_node("u", 0);
  f.network.add_node("t", 0);
  f.network.add_link("s", "u", 3);
  f.network.add_link("u", "t", 3);
  f.expected = {
      {"max_flow", 0, T, "no processing possible"},
      {"joint_cut", 0, T, "already disconnected"},
  };
  return f;
}

}  // namespace

std::string_view to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::kReported:
      return "reported";
    case Provenance::kTrivial:
      return "trivial";
    case Provenance::kDerived:
      return "derived";
  }
  return "unknown";
}

std::vector<Fixture> fixtures() {
  return {fig1(),
          fig3(),
          fig4(),
          fig34(),
          fig5(2.0),
          fig5(1.5),
          fig6(),
          abilene_computation(),
          abilene_communication(),
          abilene_joint(),
          no_processing()};
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const Fixture& f : fixtures()) names.push_back(f.name);
  return names;
}

Fixture fixture(std::string_view name) {
  for (Fixture& f : fixtures()) {
    if (f.name == name) return std::move(f);
  }
  throw ValidationError("unknown fixture '" + std::string(name) + "'");
}

double compute_metric(const Fixture& f, std::string_view metric) {
  const ComputingNetwork& net = f.network;
  const NodeIndex s = net.node_index(f.source);
  const NodeIndex t = net.node_index(f.sink);
  if (metric == "max_flow") return max_flow(net, s, t).value;
  if (metric == "comm_cut") return min_comm_cut_exact(net, s, t).value;
  if (metric == "comp_cut") return min_comp_cut_exact(net, s, t).value;
  if (metric == "joint_cut") return min_joint_cut_exact(net, s, t).value;
  const auto at = metric.find('@');
  if (at != std::string_view::npos) {
    const std::string_view kind = metric.substr(0, at);
    const double budget = std::stod(std::string(metric.substr(at + 1)));
    InterdictionProblem p{net, s, t, budget, InterdictionMode::kBinary};
    if (kind == "partial_residual") {
      p.mode = InterdictionMode::kPartial;
      return interdict_oracle(p).residual_flow;
    }
    if (kind == "binary_residual") {
      return interdict_binary_exact(p).residual_flow;
    }
  }
  throw ValidationError("unknown metric '" + std::string(metric) + "'");
}

std::string fixture_manifest() {
  nlohmann::ordered_json doc;
  doc["format"] = "compnet-fixtures/1";
  doc["provenance_labels"] = {
      {"reported", "value printed in the source text"},
      {"trivial", "forced by the definitions"},
      {"derived", "computed by an independent oracle"}};
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const Fixture& f : fixtures()) {
    nlohmann::ordered_json item;
    item["name"] = f.name;
    item["file"] = f.name + ".json";
    item["description"] = f.description;
    item["source"] = f.source;
    item["sink"] = f.sink;
    nlohmann::ordered_json expected = nlohmann::ordered_json::array();
    for (const Expectation& e : f.expected) {
      expected.push_back({{"metric", e.metric},
                          {"value", e.value},
                          {"provenance", std::string(to_string(e.provenance))},
                          {"note", e.note}});
    }
    item["expected"] = std::move(expected);
    list.push_back(std::move(item));
  }
  doc["fixtures"] = std::move(list);
  return doc.dump(2);
}

}  // namespace compnet::testkit
