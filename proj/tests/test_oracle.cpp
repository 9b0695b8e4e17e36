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

#include <algorithm>

#include "doctest.h"
#include "error.hpp"
#include "generator.hpp"
#include "oracle.hpp"
#include "test_support.hpp"

namespace rrst {
namespace {

using testing::complete_graph;
using testing::ids;

Rational tree_cost(const std::vector<EdgeId>& tree, const EdgeWeights& w) {
  Rational total = 0;
  for (EdgeId e : tree) total += w.at(e);
  return total;
}

TEST_CASE("spanning tree counts") {
  CHECK(enumerate_spanning_trees(complete_graph(3)).size() == 3);
  CHECK(enumerate_spanning_trees(complete_graph(4)).size() == 16);
  CHECK(enumerate_spanning_trees(complete_graph(5)).size() == 125);
  CHECK(enumerate_spanning_trees(testing::cycle_graph(4)).size() == 4);
  CHECK(count_spanning_trees(complete_graph(6)) == 1296);
  MultiGraph parallel(2, {Edge{EdgeId{0}, 0, 1}, Edge{EdgeId{1}, 0, 1}});
  CHECK(enumerate_spanning_trees(parallel).size() == 2);
  CHECK(enumerate_spanning_trees(complete_graph(3)).front() == ids({0, 1}));
}

TEST_CASE("enumeration matches the matrix-tree theorem and lists distinct trees") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Instance inst = generate_instance({3 + static_cast<int>(seed % 5), 0.6, 0, 1, seed});
    auto trees = enumerate_spanning_trees(inst.graph);
    CHECK(Rational(static_cast<long>(trees.size())) == count_spanning_trees(inst.graph));
    CHECK(std::is_sorted(trees.begin(), trees.end()));
    CHECK(std::adjacent_find(trees.begin(), trees.end()) == trees.end());
    for (const auto& t : trees) CHECK(is_spanning_tree(inst.graph, t));
  }
}

TEST_CASE("enumeration limits") {
  CHECK_THROWS_AS(enumerate_spanning_trees(complete_graph(6), 100), Error);
  MultiGraph split(3, {Edge{EdgeId{0}, 0, 1}});
  try {
    enumerate_spanning_trees(split);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNoBasis);
  }
}

TEST_CASE("frozen optima") {
  const std::pair<const char*, int> cases[] = {
      {"k3_unit.json", 4},     {"k3_decoupled.json", 6}, {"k4_s11_k1.json", 26},
      {"k4_s12_k2.json", 34}, {"g5_s21_k2.json", 82},   {"g6_s31_k3.json", 122}};
  for (auto [name, expected] : cases) {
    CAPTURE(name);
    TreePairResult r = brute_force_rrst(testing::load_fixture(name));
    CHECK(r.best_cost == expected);
    CHECK(r.pairs_examined > 0);
  }
  TreePairResult k3 = brute_force_rrst(testing::load_fixture("k3_decoupled.json"));
  CHECK(k3.best_X == ids({1, 2}));
  CHECK(k3.best_Y == ids({2, 3}));
  CHECK(k3.pairs_examined == 9);
  CHECK(brute_force_rrmb(load_matroid_instance(read_text_file(testing::data_path("u24.json"))))
            .best_cost == 10);
  CHECK(brute_force_rrmb(load_matroid_instance(read_text_file(testing::data_path("partition.json"))))
            .best_cost == 15);
}

TEST_CASE("oracle extremes match minimum spanning trees") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const int n = 3 + static_cast<int>(seed % 4);
    Instance same = generate_instance({n, 0.5, 0, 9, seed});
    CHECK(brute_force_rrst(same).best_cost ==
          tree_cost(minimum_spanning_tree(same.graph, same.combined_weights()),
                    same.combined_weights()));
    Instance free = generate_instance({n, 0.5, n - 1, 9, seed});
    const EdgeWeights first = free.first_stage_weights();
    const EdgeWeights second = free.second_stage_weights();
    CHECK(brute_force_rrst(free).best_cost ==
          tree_cost(minimum_spanning_tree(free.graph, first), first) +
              tree_cost(minimum_spanning_tree(free.graph, second), second));
  }
}

TEST_CASE("oracle result is feasible and lexicographically first among optima") {
  Instance inst = testing::load_fixture("k3_unit.json");
  TreePairResult r = brute_force_rrst(inst);
  CHECK(r.best_X == ids({0, 1}));
  CHECK(r.best_Y == ids({0, 1}));
  auto json = oracle_to_json(r);
  CHECK(json["total"] == "4");
  CHECK(json["pairs_examined"] == 9);
}

TEST_CASE("matroid oracle rejects large ground sets") {
  std::vector<EdgeId> ground;
  CostMap costs;
  for (int i = 0; i < 17; ++i) {
    ground.push_back(EdgeId{i});
    costs.emplace(EdgeId{i}, CostTriple{1, 1, 0});
  }
  MatroidInstance big = make_matroid_instance(Matroid::uniform(ground, 2), costs, 0);
  try {
    brute_force_rrmb(big);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kGroundTooLarge);
  }
}

}  // namespace
}  // namespace rrst
