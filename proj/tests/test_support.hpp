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

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "graph.hpp"
#include "instance.hpp"
#include "matroid.hpp"
#include "separation.hpp"

namespace rrst::testing {

inline std::string data_path(const std::string& name) {
  return std::string(RRST_TEST_DATA_DIR) + "/" + name;
}

inline Instance load_fixture(const std::string& name) {
  return load_instance(read_text_file(data_path(name)));
}

inline std::vector<EdgeId> ids(std::initializer_list<int> values) {
  std::vector<EdgeId> out;
  for (int v : values) out.push_back(EdgeId{v});
  return out;
}

inline std::vector<Edge> complete_edges(int n) {
  std::vector<Edge> edges;
  int id = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back(Edge{EdgeId{id++}, u, v});
  }
  return edges;
}

inline MultiGraph complete_graph(int n) { return MultiGraph(n, complete_edges(n)); }

inline MultiGraph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(Edge{EdgeId{i}, i, (i + 1) % n});
  return MultiGraph(n, edges);
}

inline CostMap uniform_costs(const MultiGraph& g, int C, int c, int d) {
  CostMap costs;
  for (const Edge& e : g.edges()) costs.emplace(e.id, CostTriple{C, c, d});
  return costs;
}

// Recomputes a cut from scratch; empty when it is arithmetically sound.
inline std::string cut_error(const ViolatedCut& cut, const EdgeWeights& point,
                             const MultiGraph* g, const Matroid* m) {
  std::vector<EdgeId> support;
  int rhs = 0;
  if (!g && m) g = m->graph();
  if (cut.node_subset) {
    if (!g) return "node cut without graph";
    const int size = static_cast<int>(cut.subset.size());
    if (size < 2 || size >= g->node_count()) return "subset size out of range";
    support = g->edges_within(cut.subset);
    rhs = size - 1;
  } else {
    if (!m) return "rank cut without matroid";
    for (int v : cut.subset) support.push_back(EdgeId{v});
    rhs = m->rank(support);
  }
  if (support != cut.support) return "support mismatch";
  if (rhs != cut.rhs) return "rhs mismatch";
  Rational lhs = 0;
  for (EdgeId e : support) {
    auto it = point.find(e);
    if (it != point.end()) lhs += it->second;
  }
  if (cut.slack != rhs - lhs) return "slack mismatch";
  if (sgn(cut.slack) >= 0) return "not violated";
  return {};
}

// Random point on g's edges: a random fraction in [0, 1] or an integer,
// scaled so that x(E) stays close to n - 1.
template <typename Gen>
EdgeWeights random_point(Gen& gen, const std::vector<EdgeId>& elements, int den) {
  std::uniform_int_distribution<int> numer(0, den);
  std::bernoulli_distribution integral(0.3);
  EdgeWeights point;
  for (EdgeId e : elements) {
    Rational v(numer(gen), den);
    v.canonicalize();
    if (integral(gen)) v = sgn(v - Rational(1, 2)) > 0 ? 1 : 0;
    point[e] = v;
  }
  return point;
}

}  // namespace rrst::testing
