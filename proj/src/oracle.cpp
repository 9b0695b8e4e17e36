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

#include "oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "error.hpp"

namespace rrst {
namespace {

void enumerate(const MultiGraph& g, std::vector<EdgeId>& prefix,
               std::vector<std::vector<EdgeId>>& out, std::int64_t limit) {
  if (g.node_count() <= 1) {
    if (static_cast<std::int64_t>(out.size()) >= limit) {
      throw Error(ErrorKind::kTooManyTrees,
                  "more than " + std::to_string(limit) + " spanning trees");
    }
    std::vector<EdgeId> tree = prefix;
    std::sort(tree.begin(), tree.end());
    out.push_back(std::move(tree));
    return;
  }
  const EdgeId e = g.edges().front().id;
  prefix.push_back(e);
  enumerate(g.contract_edge(e), prefix, out, limit);
  prefix.pop_back();
  MultiGraph rest = g.delete_edge(e);
  if (rest.is_connected()) enumerate(rest, prefix, out, limit);
}

std::uint64_t mask_of(const std::vector<EdgeId>& set,
                      const std::vector<EdgeId>& universe) {
  std::uint64_t mask = 0;
  for (EdgeId e : set) {
    auto it = std::lower_bound(universe.begin(), universe.end(), e);
    mask |= std::uint64_t{1} << (it - universe.begin());
  }
  return mask;
}

TreePairResult scan_pairs(const std::vector<std::vector<EdgeId>>& bases,
                          const std::vector<EdgeId>& universe, const CostMap& costs,
                          int required) {
  if (universe.size() > 64) {
    throw Error(ErrorKind::kGroundTooLarge, "pair scan supports at most 64 elements");
  }
  std::vector<std::uint64_t> masks;
  std::vector<Rational> first;
  std::vector<Rational> second;
  for (const auto& b : bases) {
    masks.push_back(mask_of(b, universe));
    Rational cx = 0;
    Rational cy = 0;
    for (EdgeId e : b) {
      cx += costs.at(e).C;
      cy += costs.at(e).worst_second_stage();
    }
    first.push_back(cx);
    second.push_back(cy);
  }
  TreePairResult result;
  bool found = false;
  size_t best_i = 0;
  size_t best_j = 0;
  Rational cost;
  for (size_t i = 0; i < bases.size(); ++i) {
    for (size_t j = 0; j < bases.size(); ++j) {
      ++result.pairs_examined;
      if (std::popcount(masks[i] & masks[j]) < required) continue;
      cost = first[i] + second[j];
      if (!found || cost < result.best_cost) {
        found = true;
        result.best_cost = cost;
        best_i = i;
        best_j = j;
      }
    }
  }
  if (!found) throw Error(ErrorKind::kNoBasis, "no feasible pair");
  result.best_X = bases[best_i];
  result.best_Y = bases[best_j];
  return result;
}

}  // namespace

std::vector<std::vector<EdgeId>> enumerate_spanning_trees(const MultiGraph& g,
                                                          std::int64_t limit) {
  if (!g.is_connected()) throw Error(ErrorKind::kNoBasis, "graph is disconnected");
  std::vector<std::vector<EdgeId>> out;
  std::vector<EdgeId> prefix;
  enumerate(g, prefix, out, limit);
  std::sort(out.begin(), out.end());
  return out;
}

Rational count_spanning_trees(const MultiGraph& g) {
  const int n = g.node_count();
  if (n <= 1) return 1;
  const int size = n - 1;
  std::vector<std::vector<Rational>> a(size, std::vector<Rational>(size, 0));
  for (const Edge& e : g.edges()) {
    if (e.u < size) a[e.u][e.u] += 1;
    if (e.v < size) a[e.v][e.v] += 1;
    if (e.u < size && e.v < size) {
      a[e.u][e.v] -= 1;
      a[e.v][e.u] -= 1;
    }
  }
  Rational det = 1;
  for (int col = 0; col < size; ++col) {
    int pivot = col;
    while (pivot < size && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == size) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int row = col + 1; row < size; ++row) {
      if (sgn(a[row][col]) == 0) continue;
      Rational factor = a[row][col] / a[col][col];
      for (int j = col; j < size; ++j) a[row][j] -= factor * a[col][j];
    }
  }
  return det;
}

TreePairResult brute_force_rrst(const Instance& instance) {
  std::vector<std::vector<EdgeId>> trees =
      enumerate_spanning_trees(instance.graph, kMaxPairScanTrees);
  return scan_pairs(trees, instance.graph.edge_ids(), instance.costs,
                    instance.required_overlap());
}

TreePairResult brute_force_rrmb(const MatroidInstance& instance) {
  const auto& ground = instance.matroid.ground();
  if (static_cast<int>(ground.size()) > kMaxPairScanGround) {
    throw Error(ErrorKind::kGroundTooLarge,
                "pair scan supports at most " + std::to_string(kMaxPairScanGround) +
                    " elements");
  }
  return scan_pairs(enumerate_bases(instance.matroid), ground, instance.costs,
                    instance.required_overlap());
}

nlohmann::ordered_json oracle_to_json(const TreePairResult& result) {
  nlohmann::ordered_json doc;
  auto ids = [](const std::vector<EdgeId>& set) {
    nlohmann::json out = nlohmann::json::array();
    for (EdgeId e : set) out.push_back(e.value);
    return out;
  };
  doc["X"] = ids(result.best_X);
  doc["Y"] = ids(result.best_Y);
  doc["total"] = format_rational(result.best_cost);
  doc["pairs_examined"] = result.pairs_examined;
  return doc;
}

}  // namespace rrst
