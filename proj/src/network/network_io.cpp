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

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "compnet/network.hpp"
#include "json.hpp"

namespace compnet {
namespace {

using nlohmann::json;

double number_field(const json& obj, const char* key, const std::string& ctx) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ValidationError(ctx + ": missing field '" + key + "'");
  }
  if (!it->is_number()) {
    throw ValidationError(ctx + ": field '" + key + "' must be a number");
  }
  return it->get<double>();
}

std::optional<double> optional_number(const json& obj, const char* key,
                                      const std::string& ctx) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_number()) {
    throw ValidationError(ctx + ": field '" + key + "' must be a number");
  }
  return it->get<double>();
}

std::string string_field(const json& obj, const char* key,
                         const std::string& ctx) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    throw ValidationError(ctx + ": field '" + key + "' must be a string");
  }
  return it->get<std::string>();
}

}  // namespace

ComputingNetwork load_network(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed topology document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("topology document must be an object");

  ComputingNetwork net;
  const json empty = json::array();
  const json& nodes = doc.contains("nodes") ? doc["nodes"] : empty;
  const json& links = doc.contains("links") ? doc["links"] : empty;
  if (!nodes.is_array() || !links.is_array()) {
    throw ValidationError("'nodes' and 'links' must be arrays");
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const json& n = nodes[i];
    const std::string ctx = "nodes[" + std::to_string(i) + "]";
    if (!n.is_object()) throw ValidationError(ctx + " must be an object");
    net.add_node(string_field(n, "id", ctx),
                 number_field(n, "processing_capacity", ctx),
                 optional_number(n, "interdiction_cost", ctx));
  }
  for (std::size_t i = 0; i < links.size(); ++i) {
    const json& l = links[i];
    const std::string ctx = "links[" + std::to_string(i) + "]";
    if (!l.is_object()) throw ValidationError(ctx + " must be an object");
    const double capacity = number_field(l, "capacity", ctx);
    if (!(capacity > 0.0)) {
      throw ValidationError(ctx + ": link capacity must be positive");
    }
    net.add_link(string_field(l, "from", ctx), string_field(l, "to", ctx),
                 capacity, optional_number(l, "interdiction_cost", ctx));
  }
  return net;
}

ComputingNetwork load_network_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open topology file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_network(buffer.str());
}

std::string serialize_network(const ComputingNetwork& net) {
  json doc;
  doc["nodes"] = json::array();
  doc["links"] = json::array();
  for (const Node& n : net.nodes()) {
    doc["nodes"].push_back({{"id", n.id},
                            {"processing_capacity", n.processing_capacity},
                            {"interdiction_cost", n.interdiction_cost}});
  }
  for (const Link& l : net.links()) {
    doc["links"].push_back({{"from", net.nodes()[l.from].id},
                            {"to", net.nodes()[l.to].id},
                            {"capacity", l.capacity},
                            {"interdiction_cost", l.interdiction_cost}});
  }
  return doc.dump(2);
}

}  // namespace compnet
