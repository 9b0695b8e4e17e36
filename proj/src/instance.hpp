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

#pragma once

#include <map>
#include <string>
#include <string_view>

#include "json.hpp"

#include "graph.hpp"
#include "rational.hpp"

namespace rrst {

// First-stage cost C and second-stage interval [c, c + d].
struct CostTriple {
  Rational C;
  Rational c;
  Rational d;

  // Worst-case second-stage cost: every interval sits at its upper end.
  Rational worst_second_stage() const { return c + d; }

  bool operator==(const CostTriple&) const = default;
};

using CostMap = std::map<EdgeId, CostTriple>;

struct Instance {
  MultiGraph graph;
  CostMap costs;
  int k = 0;

  int node_count() const { return graph.node_count(); }
  int edge_count() const { return graph.edge_count(); }
  // n - 1 - k: the overlap |X ∩ Y| every feasible pair must reach.
  int required_overlap() const { return graph.node_count() - 1 - k; }

  EdgeWeights first_stage_weights() const;
  EdgeWeights second_stage_weights() const;
  EdgeWeights combined_weights() const;

  bool operator==(const Instance&) const = default;
};

// Checks connectivity, 0 <= k <= n-1, non-negative costs and that every
// edge carries a cost triple. Throws kValidation.
Instance make_instance(MultiGraph graph, CostMap costs, int k);

// JSON: {"nodes": n, "k": k, "edges": [{"id","u","v","C","c","d"}, ...]}.
Instance load_instance(std::string_view text);
Instance instance_from_json(const nlohmann::json& doc);
std::string serialize_instance(const Instance& instance);
nlohmann::ordered_json instance_to_json(const Instance& instance);

// Integer or string ("2.5", "5/2") cost; floats are rejected (kParse).
Rational parse_cost(const nlohmann::json& value);
nlohmann::ordered_json cost_to_json(const Rational& value);

// Reads a whole file; throws kIo.
std::string read_text_file(const std::string& path);

}  // namespace rrst
