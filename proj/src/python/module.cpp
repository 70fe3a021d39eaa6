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

// Python bindings. Terminals are passed as node ids; results come back as
// plain dicts so they serialize without extra glue.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "compnet/cuts.hpp"
#include "compnet/flow.hpp"
#include "compnet/generate.hpp"
#include "compnet/interdiction.hpp"
#include "compnet/testkit.hpp"

namespace py = pybind11;
using namespace compnet;

namespace {

CutMode cut_mode(const std::string& text) {
  if (auto m = parse_cut_mode(text)) return *m;
  throw ValidationError("unknown cut mode '" + text + "'");
}

InterdictionMethod method_of(const std::string& text) {
  if (auto m = parse_interdiction_method(text)) return *m;
  throw ValidationError("unknown interdiction method '" + text + "'");
}

InterdictionProblem make_problem(const ComputingNetwork& net,
                                 const std::string& s, const std::string& t,
                                 double budget, bool partial) {
  return {net, net.node_index(s), net.node_index(t), budget,
          partial ? InterdictionMode::kPartial : InterdictionMode::kBinary};
}

py::dict resource_map(const ComputingNetwork& net,
                      const std::vector<double>& values, bool links) {
  py::dict out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[py::str(links ? net.link_name(i) : net.nodes()[i].id)] = values[i];
  }
  return out;
}

py::dict flow_dict(const ComputingNetwork& net, const std::string& s,
                   const std::string& t) {
  const FlowSolution sol = max_flow(net, net.node_index(s), net.node_index(t));
  py::dict out;
  out["value"] = sol.value;
  out["link_duals"] = resource_map(net, sol.link_duals, true);
  out["node_duals"] = resource_map(net, sol.node_duals, false);
  py::list paths;
  for (const ComputationPathFlow& p : decompose(sol)) {
    paths.append(py::make_tuple(describe(net, net.node_index(s), p), p.amount));
  }
  out["paths"] = paths;
  return out;
}

py::dict cut_dict(const ComputingNetwork& net, const std::string& s,
                  const std::string& t, const std::string& mode,
                  const std::string& method) {
  const NodeIndex si = net.node_index(s), ti = net.node_index(t);
  const CutMode m = cut_mode(mode);
  CutSolution cut;
  if (method == "exact") {
    cut = min_cut_exact(net, si, ti, m);
  } else if (method == "approx" && m == CutMode::kCommunication) {
    cut = approx_comm_cut(net, si, ti);
  } else if (method == "approx" && m == CutMode::kJoint) {
    cut = approx_joint_cut(net, si, ti);
  } else if (method == "fast" && m == CutMode::kComputation) {
    cut = min_computation_cut(net, si, ti);
  } else if (method == "oracle") {
    cut = testkit::cut_oracle(net, si, ti, m);
  } else {
    throw ValidationError("method '" + method + "' does not support mode '" +
                          mode + "'");
  }
  py::dict out;
  out["mode"] = std::string(to_string(cut.mode));
  py::list links, nodes;
  for (LinkIndex e : cut.links) links.append(net.link_name(e));
  for (NodeIndex v : cut.nodes) nodes.append(net.nodes()[v].id);
  out["links"] = links;
  out["nodes"] = nodes;
  out["value"] = cut.value;
  out["optimal"] = cut.optimal;
  out["verified"] = is_cut(net, si, ti, cut);
  return out;
}

py::dict interdiction_dict(const ComputingNetwork& net,
                           const InterdictionSolution& sol) {
  py::dict out;
  out["residual_flow"] = sol.residual_flow;
  out["spent"] = sol.spent;
  out["optimal"] = sol.optimal;
  py::dict removed;
  for (const Resource& r : sol.removal.removed()) {
    removed[py::str(net.name(r))] = sol.removal.fraction(r);
  }
  out["removed"] = removed;
  out["milp_objective"] =
      sol.milp_objective ? py::cast(*sol.milp_objective) : py::none();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Computation-flow, cut and interdiction solvers";

  // Translators run newest first, so the base class goes first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError",
                                          PyExc_ValueError);
  py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);

  py::class_<ComputingNetwork>(m, "Network")
      .def(py::init<>())
      .def_static("from_json", &load_network, py::arg("text"))
      .def_static("from_file", &load_network_file, py::arg("path"))
      .def("to_json", &serialize_network)
      .def(
          "add_node",
          [](ComputingNetwork& n, std::string id, double capacity,
             std::optional<double> cost) {
            n.add_node(std::move(id), capacity, cost);
          },
          py::arg("id"), py::arg("processing_capacity") = 0.0,
          py::arg("interdiction_cost") = py::none())
      .def(
          "add_link",
          [](ComputingNetwork& n, const std::string& from,
             const std::string& to, double capacity,
             std::optional<double> cost) {
            n.add_link(from, to, capacity, cost);
          },
          py::arg("source"), py::arg("target"), py::arg("capacity"),
          py::arg("interdiction_cost") = py::none())
      .def_property_readonly("num_nodes", &ComputingNetwork::num_nodes)
      .def_property_readonly("num_links", &ComputingNetwork::num_links)
      .def_property_readonly("node_ids",
                             [](const ComputingNetwork& n) {
                               std::vector<std::string> ids;
                               for (const Node& v : n.nodes()) ids.push_back(v.id);
                               return ids;
                             })
      .def("__repr__", [](const ComputingNetwork& n) {
        return "<Network " + std::to_string(n.num_nodes()) + " nodes, " +
               std::to_string(n.num_links()) + " links>";
      });

  m.def("max_flow", &flow_dict, py::arg("network"), py::arg("source"),
        py::arg("sink"),
        "Maximum computation flow with shadow prices and a path decomposition.");
  m.def("min_cut", &cut_dict, py::arg("network"), py::arg("source"),
        py::arg("sink"), py::arg("mode") = "joint", py::arg("method") = "exact",
        "Minimum communication, computation or joint cut.");
  m.def(
      "interdict",
      [](const ComputingNetwork& net, const std::string& s,
         const std::string& t, double budget, const std::string& method,
         bool partial) {
        return interdiction_dict(
            net, interdict(make_problem(net, s, t, budget, partial),
                           method_of(method)));
      },
      py::arg("network"), py::arg("source"), py::arg("sink"),
      py::arg("budget"), py::arg("method") = "exact",
      py::arg("partial") = false);
  m.def(
      "budget_sweep",
      [](const ComputingNetwork& net, const std::string& s,
         const std::string& t, const std::vector<double>& budgets,
         const std::vector<std::string>& methods, bool partial) {
        std::vector<InterdictionMethod> parsed;
        for (const std::string& name : methods) parsed.push_back(method_of(name));
        py::list rows;
        for (const SweepRow& r :
             budget_sweep(make_problem(net, s, t, 0.0, partial), budgets,
                          parsed)) {
          py::dict row;
          row["budget"] = r.budget;
          row["method"] = std::string(to_string(r.method));
          row["residual_flow"] = r.residual_flow;
          row["spent"] = r.spent;
          row["optimal"] = r.optimal;
          rows.append(row);
        }
        return rows;
      },
      py::arg("network"), py::arg("source"), py::arg("sink"),
      py::arg("budgets"), py::arg("methods") = std::vector<std::string>{"exact"},
      py::arg("partial") = false);
  m.def("budget_grid", &budget_grid, py::arg("lo"), py::arg("hi"),
        py::arg("step"));
  m.def(
      "gen_abilene",
      [](std::uint64_t seed, bool independent_costs) {
        RandomNetworkSpec spec;
        spec.seed = seed;
        if (independent_costs) spec.cost_mode = CostMode::kIndependent;
        return gen_random(abilene_topology(), spec);
      },
      py::arg("seed") = 0, py::arg("independent_costs") = false);

  m.def("fixture_names", &testkit::fixture_names);
  m.def(
      "fixture",
      [](const std::string& name) {
        testkit::Fixture f = testkit::fixture(name);
        py::dict expected;
        for (const testkit::Expectation& e : f.expected) {
          expected[py::str(e.metric)] = e.value;
        }
        return py::make_tuple(std::move(f.network), f.source, f.sink, expected);
      },
      py::arg("name"),
      "Returns (network, source, sink, expected metric values).");
}
