// Copyright 2026 The Authors.
//
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

#include "instance.hpp"

#include <fstream>
#include <sstream>

#include "error.hpp"

namespace rrst {

using nlohmann::json;
using nlohmann::ordered_json;

EdgeWeights Instance::first_stage_weights() const {
  EdgeWeights w;
  for (const auto& [id, cost] : costs) w.emplace(id, cost.C);
  return w;
}

EdgeWeights Instance::second_stage_weights() const {
  EdgeWeights w;
  for (const auto& [id, cost] : costs) w.emplace(id, cost.worst_second_stage());
  return w;
}

EdgeWeights Instance::combined_weights() const {
  EdgeWeights w;
  for (const auto& [id, cost] : costs) {
    w.emplace(id, cost.C + cost.worst_second_stage());
  }
  return w;
}

Instance make_instance(MultiGraph graph, CostMap costs, int k) {
  if (graph.node_count() < 1) {
    throw Error(ErrorKind::kValidation, "instance needs at least one node");
  }
  if (!graph.is_connected()) {
    throw Error(ErrorKind::kValidation, "graph is disconnected");
  }
  if (k < 0 || k > graph.node_count() - 1) {
    throw Error(ErrorKind::kValidation,
                "k = " + std::to_string(k) + " outside [0, " +
                    std::to_string(graph.node_count() - 1) + "]");
  }
  for (const Edge& e : graph.edges()) {
    auto it = costs.find(e.id);
    if (it == costs.end()) {
      throw Error(ErrorKind::kValidation,
                  "edge " + std::to_string(e.id.value) + " has no costs");
    }
    const CostTriple& t = it->second;
    if (sgn(t.C) < 0 || sgn(t.c) < 0 || sgn(t.d) < 0) {
      throw Error(ErrorKind::kValidation,
                  "edge " + std::to_string(e.id.value) + " has a negative cost");
    }
  }
  if (costs.size() != graph.edges().size()) {
    throw Error(ErrorKind::kValidation, "costs given for unknown edges");
  }
  return Instance{std::move(graph), std::move(costs), k};
}

Rational parse_cost(const json& value) {
  if (value.is_number_integer()) {
    return Rational(mpz_class(value.dump(), 10));
  }
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_float()) {
    throw Error(ErrorKind::kParse,
                "binary float cost " + value.dump() +
                    " rejected; write it as a string such as \"2.5\"");
  }
  throw Error(ErrorKind::kParse, "cost must be an integer or a string");
}

ordered_json cost_to_json(const Rational& value) {
  return format_rational(value);
}

namespace {

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw Error(ErrorKind::kParse, std::string("missing field \"") + key + "\"");
  }
  return doc.at(key);
}

int require_int(const json& doc, const char* key) {
  const json& v = require(doc, key);
  if (!v.is_number_integer()) {
    throw Error(ErrorKind::kParse, std::string("field \"") + key +
                                       "\" must be an integer");
  }
  return v.get<int>();
}

}  // namespace

Instance instance_from_json(const json& doc) {
  const int nodes = require_int(doc, "nodes");
  const int k = require_int(doc, "k");
  const json& edges = require(doc, "edges");
  if (!edges.is_array()) throw Error(ErrorKind::kParse, "\"edges\" must be an array");
  std::vector<Edge> list;
  CostMap costs;
  for (const json& item : edges) {
    Edge e{EdgeId{require_int(item, "id")}, require_int(item, "u"),
           require_int(item, "v")};
    CostTriple t{parse_cost(require(item, "C")), parse_cost(require(item, "c")),
                 parse_cost(require(item, "d"))};
    if (!costs.emplace(e.id, std::move(t)).second) {
      throw Error(ErrorKind::kValidation,
                  "duplicate edge id " + std::to_string(e.id.value));
    }
    list.push_back(e);
  }
  return make_instance(MultiGraph(nodes, std::move(list)), std::move(costs), k);
}

Instance load_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::kParse, ex.what());
  }
  try {
    return instance_from_json(doc);
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::kParse, ex.what());
  }
}

ordered_json instance_to_json(const Instance& instance) {
  ordered_json doc;
  doc["nodes"] = instance.graph.node_count();
  doc["k"] = instance.k;
  ordered_json edges = ordered_json::array();
  for (const Edge& e : instance.graph.edges()) {
    const CostTriple& t = instance.costs.at(e.id);
    ordered_json item;
    item["id"] = e.id.value;
    item["u"] = e.u;
    item["v"] = e.v;
    item["C"] = cost_to_json(t.C);
    item["c"] = cost_to_json(t.c);
    item["d"] = cost_to_json(t.d);
    edges.push_back(std::move(item));
  }
  doc["edges"] = std::move(edges);
  return doc;
}

std::string serialize_instance(const Instance& instance) {
  return instance_to_json(instance).dump();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace rrst
