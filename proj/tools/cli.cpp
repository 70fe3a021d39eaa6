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

#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <locale>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "compnet/cuts.hpp"
#include "compnet/flow.hpp"
#include "compnet/generate.hpp"
#include "compnet/interdiction.hpp"
#include "compnet/report.hpp"
#include "compnet/testkit.hpp"
#include "json.hpp"

namespace compnet::cli {
namespace {

constexpr double kDefaultTimeLimit = 600.0;

struct NetworkArgs {
  std::string network_path;
  std::string fixture_name;
  std::string source;
  std::string dest;
  std::string format = "table";
  std::string dump_lp;
  std::optional<double> time_limit;
  std::optional<std::int64_t> node_limit;
};

struct Resolved {
  ComputingNetwork net;
  NodeIndex s = 0;
  NodeIndex t = 0;
};

void add_network_options(CLI::App* sub, NetworkArgs& args,
                         const std::vector<std::string>& formats) {
  auto* network = sub->add_option("--network", args.network_path,
                                  "Topology JSON file");
  auto* fixture =
      sub->add_option("--fixture", args.fixture_name, "Built-in fixture name");
  network->excludes(fixture);
  sub->add_option("--source", args.source, "Source node id");
  sub->add_option("--dest", args.dest, "Destination node id");
  sub->add_option("--format", args.format, "Output format")
      ->check(CLI::IsMember(formats));
  sub->add_option("--time-limit", args.time_limit,
                  "Branch-and-bound time limit in seconds")
      ->check(CLI::PositiveNumber);
  sub->add_option("--node-limit", args.node_limit,
                  "Branch-and-bound node limit")
      ->check(CLI::PositiveNumber);
  sub->add_option("--dump-lp", args.dump_lp,
                  "Write the solved program in LP text form to this file");
}

Resolved resolve(const NetworkArgs& args) {
  Resolved r;
  std::string source = args.source;
  std::string dest = args.dest;
  if (!args.fixture_name.empty()) {
    const testkit::Fixture f = testkit::fixture(args.fixture_name);
    r.net = f.network;
    if (source.empty()) source = f.source;
    if (dest.empty()) dest = f.sink;
  } else if (!args.network_path.empty()) {
    r.net = load_network_file(args.network_path);
  } else {
    throw ValidationError("one of --network or --fixture is required");
  }
  if (source.empty() || dest.empty()) {
    throw ValidationError("--source and --dest are required with --network");
  }
  r.s = r.net.node_index(source);
  r.t = r.net.node_index(dest);
  if (r.s == r.t) throw ValidationError("source and destination must differ");
  return r;
}

lp::SolveOptions solve_options(const NetworkArgs& args) {
  lp::SolveOptions options;
  options.time_limit_seconds = kDefaultTimeLimit;
  if (const char* env = std::getenv("COMPNET_TIME_LIMIT")) {
    std::istringstream in(env);
    in.imbue(std::locale::classic());
    double value = 0.0;
    if (!(in >> value) || !(value > 0.0)) {
      throw ValidationError("COMPNET_TIME_LIMIT must be a positive number");
    }
    options.time_limit_seconds = value;
  }
  if (args.time_limit) options.time_limit_seconds = *args.time_limit;
  if (args.node_limit) options.node_limit = *args.node_limit;
  return options;
}

void dump(const NetworkArgs& args, const lp::LinearProgram& program) {
  if (args.dump_lp.empty()) return;
  std::ofstream file(args.dump_lp);
  if (!file) throw Error("cannot write " + args.dump_lp);
  file << lp::to_lp_text(program);
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const std::string& s : items) out += (out.empty() ? "" : " ") + s;
  return out.empty() ? "-" : out;
}

std::pair<double, double> parse_pair(const std::string& text,
                                     const std::string& what) {
  std::istringstream in(text);
  in.imbue(std::locale::classic());
  double lo = 0.0;
  double hi = 0.0;
  char colon = 0;
  if (!(in >> lo >> colon >> hi) || colon != ':' || !in.eof()) {
    throw ValidationError(what + " must look like lo:hi");
  }
  return {lo, hi};
}

std::vector<double> parse_grid(const std::string& text) {
  std::istringstream in(text);
  in.imbue(std::locale::classic());
  double lo = 0.0;
  double hi = 0.0;
  double step = 0.0;
  char c1 = 0;
  char c2 = 0;
  if (!(in >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' ||
      !in.eof()) {
    throw ValidationError("--budgets must look like lo:hi:step");
  }
  return budget_grid(lo, hi, step);
}

InterdictionMethod parse_method(const std::string& text) {
  if (auto m = parse_interdiction_method(text)) return *m;
  throw ValidationError("unknown interdiction method '" + text + "'");
}

int cmd_maxflow(const NetworkArgs& args, bool decompose_paths, bool duals,
                std::ostream& out) {
  const Resolved r = resolve(args);
  if (!args.dump_lp.empty()) {
    dump(args, build_max_flow_model(r.net, r.s, r.t).program);
  }
  const FlowSolution flow = max_flow(r.net, r.s, r.t, solve_options(args));
  if (args.format == "json") {
    out << flow_to_json(r.net, r.s, flow, decompose_paths, duals) << "\n";
    return 0;
  }
  out << "max_flow " << format_number(flow.value) << "\n";
  if (decompose_paths) {
    for (const ComputationPathFlow& p : decompose(flow)) {
      out << "path " << describe(r.net, r.s, p) << " "
          << format_number(p.amount) << "\n";
    }
  }
  if (duals) {
    for (const Resource& res : r.net.resources()) {
      out << "dual " << r.net.name(res) << " " << format_number(flow.dual(res))
          << "\n";
    }
  }
  return 0;
}

int cmd_mincut(const NetworkArgs& args, const std::string& mode_text,
               const std::string& method, std::ostream& out) {
  const Resolved r = resolve(args);
  const std::optional<CutMode> mode = parse_cut_mode(mode_text);
  if (!mode) throw ValidationError("unknown cut mode '" + mode_text + "'");

  CutSolution cut;
  if (method == "exact") {
    dump(args, build_cut_program(r.net, r.s, r.t, *mode));
    cut = min_cut_exact(r.net, r.s, r.t, *mode, solve_options(args));
  } else if (method == "approx") {
    if (*mode == CutMode::kComputation) {
      throw ValidationError(
          "--method approx supports comm and joint; use fast for comp");
    }
    cut = *mode == CutMode::kCommunication ? approx_comm_cut(r.net, r.s, r.t)
                                           : approx_joint_cut(r.net, r.s, r.t);
  } else if (method == "fast") {
    if (*mode != CutMode::kComputation) {
      throw ValidationError("--method fast supports --mode comp only");
    }
    cut = min_computation_cut(r.net, r.s, r.t);
  } else {
    cut = testkit::cut_oracle(r.net, r.s, r.t, *mode);
  }
  const bool verified = is_cut(r.net, r.s, r.t, cut);
  if (args.format == "json") {
    out << cut_to_json(r.net, cut, verified) << "\n";
    return 0;
  }
  std::vector<std::string> links;
  for (LinkIndex e : cut.links) links.push_back(r.net.link_name(e));
  std::vector<std::string> nodes;
  for (NodeIndex w : cut.nodes) nodes.push_back(r.net.nodes()[w].id);
  out << "mode " << to_string(cut.mode) << "\n"
      << "method " << method << "\n"
      << "value " << format_number(cut.value) << "\n"
      << "links " << join(links) << "\n"
      << "nodes " << join(nodes) << "\n"
      << "optimal " << (cut.optimal ? "true" : "false") << "\n"
      << "verified " << (verified ? "true" : "false") << "\n";
  return 0;
}

int cmd_interdict(const NetworkArgs& args, double budget,
                  const std::string& method_text, bool partial,
                  std::ostream& out) {
  const Resolved r = resolve(args);
  const InterdictionMethod method = parse_method(method_text);
  const InterdictionProblem problem{
      r.net, r.s, r.t, budget,
      partial ? InterdictionMode::kPartial : InterdictionMode::kBinary};
  if (method == InterdictionMethod::kExact && !partial) {
    dump(args, build_interdiction_program(problem));
  }
  const InterdictionSolution sol =
      interdict(problem, method, solve_options(args));
  if (args.format == "json") {
    out << interdiction_to_json(r.net, sol, budget, method, partial) << "\n";
    return 0;
  }
  out << "method " << to_string(method) << (partial ? " (partial)" : "")
      << "\n"
      << "budget " << format_number(budget) << "\n"
      << "residual_flow " << format_number(sol.residual_flow) << "\n"
      << "spent " << format_number(sol.spent) << "\n"
      << "optimal " << (sol.optimal ? "true" : "false") << "\n";
  for (const Resource& res : sol.removal.removed()) {
    out << "removed " << r.net.name(res) << " "
        << format_number(sol.removal.fraction(res)) << "\n";
  }
  for (const GreedyStep& step : sol.trace) {
    out << "step " << r.net.name(step.resource) << " score "
        << (std::isinf(step.score) ? std::string("inf")
                                   : format_number(step.score))
        << " amount " << format_number(step.amount) << "\n";
  }
  return 0;
}

int cmd_sweep(const NetworkArgs& args, const std::string& grid,
              const std::vector<std::string>& method_names, bool partial,
              std::ostream& out) {
  const Resolved r = resolve(args);
  std::vector<InterdictionMethod> methods;
  for (const std::string& m : method_names) methods.push_back(parse_method(m));
  const InterdictionProblem problem{
      r.net, r.s, r.t, 0.0,
      partial ? InterdictionMode::kPartial : InterdictionMode::kBinary};
  const auto rows =
      budget_sweep(problem, parse_grid(grid), methods, solve_options(args));
  out << (args.format == "json" ? sweep_to_json(rows) + "\n"
                                : sweep_to_csv(rows));
  return 0;
}

struct GenArgs {
  std::string topology = "abilene";
  std::string link_range = "0:1";
  std::string node_range = "0:0.1";
  std::string cost_mode = "equal";
  std::string link_cost_range = "0:1";
  std::string node_cost_range = "0:0.1";
  bool one_way = false;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_gen(const GenArgs& args, std::ostream& out) {
  Topology topo;
  if (args.topology == "abilene") {
    topo = abilene_topology();
  } else {
    std::ifstream file(args.topology);
    if (!file) throw Error("cannot read " + args.topology);
    std::stringstream buffer;
    buffer << file.rdbuf();
    topo = parse_edge_list(buffer.str());
  }
  RandomNetworkSpec spec;
  auto range = [](const std::string& text, const std::string& what) {
    const auto [lo, hi] = parse_pair(text, what);
    return Range{lo, hi};
  };
  spec.link_capacity = range(args.link_range, "--link-range");
  spec.node_capacity = range(args.node_range, "--node-range");
  spec.cost_mode = args.cost_mode == "independent" ? CostMode::kIndependent
                                                   : CostMode::kEqualsCapacity;
  spec.link_cost = range(args.link_cost_range, "--link-cost-range");
  spec.node_cost = range(args.node_cost_range, "--node-cost-range");
  spec.bidirectional = !args.one_way;
  spec.seed = args.seed;
  const std::string text = serialize_network(gen_random(topo, spec)) + "\n";
  if (args.output.empty()) {
    out << text;
  } else {
    std::ofstream file(args.output);
    if (!file) throw Error("cannot write " + args.output);
    file << text;
  }
  return 0;
}

int cmd_fixtures(const std::string& action, const std::string& dir,
                 std::ostream& out) {
  if (action == "list") {
    for (const testkit::Fixture& f : testkit::fixtures()) {
      out << f.name << " (" << f.source << " -> " << f.sink << "): "
          << f.description << "\n";
    }
    return 0;
  }
  if (action == "export") {
    const std::filesystem::path root(dir.empty() ? "fixtures" : dir);
    std::filesystem::create_directories(root);
    for (const testkit::Fixture& f : testkit::fixtures()) {
      std::ofstream file(root / (f.name + ".json"));
      file << serialize_network(f.network) << "\n";
      if (!file) throw Error("cannot write fixture " + f.name);
    }
    std::ofstream manifest(root / "manifest.json");
    manifest << testkit::fixture_manifest() << "\n";
    if (!manifest) throw Error("cannot write manifest");
    out << "exported " << testkit::fixtures().size() << " fixtures to "
        << root.string() << "\n";
    return 0;
  }
  // check: built-in fixtures, or the exported files when a directory is
  // given.
  std::vector<testkit::Fixture> pending;
  if (dir.empty()) {
    pending = testkit::fixtures();
  } else {
    const std::filesystem::path root(dir);
    std::ifstream in(root / "manifest.json");
    if (!in) throw ParseError("cannot open " + (root / "manifest.json").string());
    nlohmann::json manifest;
    try {
      manifest = nlohmann::json::parse(in);
      for (const auto& item : manifest.at("fixtures")) {
        testkit::Fixture f;
        f.name = item.at("name").get<std::string>();
        f.network = load_network_file(
            (root / item.at("file").get<std::string>()).string());
        f.source = item.at("source").get<std::string>();
        f.sink = item.at("sink").get<std::string>();
        for (const auto& e : item.at("expected")) {
          const std::string label = e.at("provenance").get<std::string>();
          f.expected.push_back(
              {e.at("metric").get<std::string>(), e.at("value").get<double>(),
               label == "trivial"   ? testkit::Provenance::kTrivial
               : label == "derived" ? testkit::Provenance::kDerived
                                    : testkit::Provenance::kReported,
               e.value("note", "")});
        }
        pending.push_back(std::move(f));
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("malformed manifest: ") + e.what());
    }
  }
  int failures = 0;
  for (const testkit::Fixture& f : pending) {
    for (const testkit::Expectation& e : f.expected) {
      const double got = testkit::compute_metric(f, e.metric);
      const bool ok = std::abs(got - e.value) <= kValueTolerance;
      failures += ok ? 0 : 1;
      out << (ok ? "ok   " : "FAIL ") << f.name << " " << e.metric
          << " expected " << format_number(e.value) << " got "
          << format_number(got) << " (" << testkit::to_string(e.provenance)
          << ")\n";
    }
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Computing-network flow, cut and interdiction solver",
               "compnet"};
  app.require_subcommand(1);

  NetworkArgs args;
  bool decompose_paths = false;
  bool duals = false;
  auto* maxflow = app.add_subcommand("maxflow", "Maximum computation flow");
  add_network_options(maxflow, args, {"table", "json"});
  maxflow->add_flag("--decompose", decompose_paths,
                    "List computation paths");
  maxflow->add_flag("--duals", duals, "List shadow prices");

  std::string mode = "joint";
  std::string cut_method = "exact";
  auto* mincut = app.add_subcommand("mincut", "Minimum cut");
  add_network_options(mincut, args, {"table", "json"});
  mincut->add_option("--mode", mode, "comm | comp | joint")
      ->check(CLI::IsMember({"comm", "comp", "joint", "communication",
                             "computation"}));
  mincut->add_option("--method", cut_method, "exact | approx | fast | oracle")
      ->check(CLI::IsMember({"exact", "approx", "fast", "oracle"}));

  double budget = 0.0;
  std::string method = "exact";
  bool partial = false;
  auto* inter = app.add_subcommand("interdict", "Budgeted flow interdiction");
  add_network_options(inter, args, {"table", "json"});
  inter->add_option("--budget", budget, "Interdiction budget")
      ->required()
      ->check(CLI::NonNegativeNumber);
  inter->add_option("--method", method,
                    "exact | greedy | greedy-cost | cost-aware | oracle");
  inter->add_flag("--partial", partial, "Allow fractional removal");

  std::string grid;
  std::vector<std::string> methods{"exact"};
  auto* sweep = app.add_subcommand("sweep", "Residual flow over a budget grid");
  add_network_options(sweep, args, {"csv", "json"});
  args.format = "csv";
  sweep->add_option("--budgets", grid, "lo:hi:step")->required();
  sweep->add_option("--methods", methods, "Comma separated methods")
      ->delimiter(',');
  sweep->add_flag("--partial", partial, "Allow fractional removal");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Random capacities on a topology");
  gen->add_option("--topology", gen_args.topology,
                  "'abilene' or an edge-list file");
  gen->add_option("--link-range", gen_args.link_range, "lo:hi");
  gen->add_option("--node-range", gen_args.node_range, "lo:hi");
  gen->add_option("--cost-mode", gen_args.cost_mode, "equal | independent")
      ->check(CLI::IsMember({"equal", "independent"}));
  gen->add_option("--link-cost-range", gen_args.link_cost_range, "lo:hi");
  gen->add_option("--node-cost-range", gen_args.node_cost_range, "lo:hi");
  gen->add_flag("--one-way", gen_args.one_way,
                "Keep edges in the listed direction only");
  gen->add_option("--seed", gen_args.seed, "Random seed");
  gen->add_option("--output", gen_args.output, "Output file (default stdout)");

  std::string action = "list";
  std::string dir;
  auto* fix = app.add_subcommand("fixtures", "Built-in reference networks");
  fix->add_option("action", action, "list | export | check")
      ->check(CLI::IsMember({"list", "export", "check"}));
  fix->add_option("--dir", dir,
                  "Fixture directory (export defaults to ./fixtures; check "
                  "reads it instead of the built-in set)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  // Table is the default for everything but the sweep.
  if (!sweep->parsed() && args.format == "csv") args.format = "table";
  try {
    if (maxflow->parsed()) return cmd_maxflow(args, decompose_paths, duals, out);
    if (mincut->parsed()) return cmd_mincut(args, mode, cut_method, out);
    if (inter->parsed()) return cmd_interdict(args, budget, method, partial, out);
    if (sweep->parsed()) return cmd_sweep(args, grid, methods, partial, out);
    if (gen->parsed()) return cmd_gen(gen_args, out);
    return cmd_fixtures(action, dir, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace compnet::cli
