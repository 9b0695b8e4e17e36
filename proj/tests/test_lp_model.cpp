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

#include <random>
#include <set>

#include "doctest.h"
#include "generator.hpp"
#include "relaxation_model.hpp"
#include "relaxation_solver.hpp"
#include "separation.hpp"
#include "test_support.hpp"

namespace rrst {
namespace {

using testing::complete_graph;
using testing::cut_error;
using testing::ids;

TEST_CASE("forest separation examples") {
  MultiGraph k3 = complete_graph(3);
  EdgeWeights even;
  for (EdgeId e : k3.edge_ids()) even[e] = Rational(2, 3);
  CHECK_FALSE(separate_forest(even, k3).has_value());
  CHECK_FALSE(separate_forest_exhaustive(even, k3).has_value());

  MultiGraph k4 = complete_graph(4);
  EdgeWeights triangle;
  for (const Edge& e : k4.edges()) triangle[e.id] = (e.u < 3 && e.v < 3) ? 1 : 0;
  auto cut = separate_forest(triangle, k4);
  REQUIRE(cut.has_value());
  CHECK(cut->subset == std::vector<int>{0, 1, 2});
  CHECK(cut->slack == -1);
  CHECK(cut->rhs == 2);
  CHECK(cut_error(*cut, triangle, &k4, nullptr).empty());
}

TEST_CASE("rank separation examples") {
  Matroid u24 = Matroid::uniform(ids({0, 1, 2, 3}), 2);
  EdgeWeights top = {{EdgeId{0}, 1}, {EdgeId{1}, 1}, {EdgeId{2}, 1}, {EdgeId{3}, 0}};
  auto cut = separate_rank(top, u24);
  REQUIRE(cut.has_value());
  CHECK(cut->support == ids({0, 1, 2}));
  CHECK(cut->rhs == 2);
  CHECK(cut->slack == -1);
  CHECK(cut_error(*cut, top, nullptr, &u24).empty());
  EdgeWeights half;
  for (EdgeId e : u24.ground()) half[e] = Rational(1, 2);
  CHECK_FALSE(separate_rank(half, u24).has_value());
}

TEST_CASE("min-cut and exhaustive forest separation agree") {
  std::mt19937 gen(17);
  int violated = 0, clean = 0;
  for (int trial = 0; trial < 500; ++trial) {
    GeneratorParams params;
    params.nodes = 3 + trial % 6;
    params.density = 0.2 + 0.1 * (trial % 7);
    params.seed = 500 + trial;
    MultiGraph g = generate_instance(params).graph;
    EdgeWeights point = testing::random_point(gen, g.edge_ids(), 1 + trial % 5);
    auto fast = separate_forest(point, g, SeparationMode::kMinCut);
    auto slow = separate_forest(point, g, SeparationMode::kExhaustive);
    REQUIRE(fast.has_value() == slow.has_value());
    if (!fast) {
      ++clean;
      continue;
    }
    ++violated;
    CHECK(cut_error(*fast, point, &g, nullptr) == "");
    CHECK(cut_error(*slow, point, &g, nullptr) == "");
    CHECK(fast->slack == slow->slack);
    for (const ViolatedCut& c : forest_cuts(point, g, SeparationMode::kMinCut)) {
      CHECK(cut_error(c, point, &g, nullptr) == "");
    }
  }
  CHECK(violated > 50);
  CHECK(clean > 50);
}

TEST_CASE("matroid rank separation agrees with enumeration") {
  std::mt19937 gen(23);
  for (int trial = 0; trial < 300; ++trial) {
    const MatroidFamily family = trial % 3 == 0   ? MatroidFamily::kUniform
                                 : trial % 3 == 1 ? MatroidFamily::kPartition
                                                  : MatroidFamily::kGraphic;
    Matroid m = family == MatroidFamily::kGraphic
                    ? Matroid::graphic(generate_instance({5, 0.6, 0, 1, 900ull + trial}).graph)
                    : random_matroid_instance(family, 12, 700 + trial).matroid;
    EdgeWeights point = testing::random_point(gen, m.ground(), 1 + trial % 4);
    auto fast = separate_rank(point, m);
    auto slow = separate_rank_exhaustive(point, m);
    REQUIRE(fast.has_value() == slow.has_value());
    if (!fast) continue;
    CHECK(cut_error(*fast, point, nullptr, &m) == "");
    CHECK(cut_error(*slow, point, nullptr, &m) == "");
    if (family == MatroidFamily::kGraphic) {
      CHECK(fast->slack >= slow->slack);
    } else {
      CHECK(fast->slack == slow->slack);
    }
  }
}

TEST_CASE("full relaxation shape") {
  Instance inst = testing::load_fixture("g5_s21_k2.json");
  SolverState state = initial_state(inst);
  RelaxationModel model = build_relaxation(state, inst.costs);
  const int m = inst.edge_count();
  CHECK(model.shape == ModelShape::kFull);
  CHECK(model.lp.variable_count() == 3 * m);
  CHECK(model.base_constraints == 2 + m + m + 1);
  CHECK(model.budget == inst.required_overlap());
  CHECK(model.lazy_rows.empty());
}

TEST_CASE("zero budget forces z to zero") {
  Instance inst = testing::load_fixture("k4_s11_k1.json");
  SolverState state = initial_state(inst);
  state.budget = 0;
  RelaxationModel model = build_relaxation(state, inst.costs);
  RelaxationPoint point = cutting_plane_solve(model);
  for (const auto& [e, v] : point.z) CHECK(v == 0);
}

Rational full_formulation_optimum(const RelaxationModel& base) {
  RelaxationModel model = base;
  for (Side side : {Side::kX, Side::kY}) {
    const MultiGraph& g = side == Side::kX ? model.x_side.graph() : model.y_side.graph();
    const int n = g.node_count();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      const int size = std::popcount(mask);
      if (size < 2 || size >= n) continue;
      ViolatedCut cut;
      cut.side = side;
      for (int v = 0; v < n; ++v) {
        if (mask >> v & 1) cut.subset.push_back(v);
      }
      cut.support = g.edges_within(cut.subset);
      cut.rhs = size - 1;
      model.lp.add_constraint(cut_row(model, cut));
    }
  }
  SolveResult r = solve(model.lp);
  REQUIRE(r.optimal());
  return r.solution.objective_value;
}

TEST_CASE("cutting planes reach the optimum of the full formulation") {
  for (const char* name : {"k3_unit.json", "k3_decoupled.json", "k4_s11_k1.json",
                           "k4_s12_k2.json", "g5_s21_k2.json", "g6_s31_k3.json"}) {
    CAPTURE(name);
    Instance inst = testing::load_fixture(name);
    SolverState state = initial_state(inst);
    const Rational expected = full_formulation_optimum(build_relaxation(state, inst.costs));
    for (bool warm : {true, false}) {
      for (SeparationMode mode : {SeparationMode::kMinCut, SeparationMode::kExhaustive}) {
        RelaxationModel model = build_relaxation(state, inst.costs);
        RelaxationOptions options;
        options.warm_start = warm;
        options.separation = mode;
        RelaxationPoint point = cutting_plane_solve(model, options);
        CHECK(point.objective == expected);
        CHECK_FALSE(separate_forest_exhaustive(point.x, state.x.graph()).has_value());
        CHECK_FALSE(separate_forest_exhaustive(point.y, state.y.graph()).has_value());
        CHECK(point.round_objectives.size() == static_cast<size_t>(point.rounds));
        for (size_t i = 1; i < point.round_objectives.size(); ++i) {
          CHECK(point.round_objectives[i - 1] <= point.round_objectives[i]);
        }
      }
    }
  }
}

TEST_CASE("tight cuts seed the next model") {
  Instance inst = testing::load_fixture("g6_s31_k3.json");
  SolverState state = initial_state(inst);
  RelaxationModel model = build_relaxation(state, inst.costs);
  RelaxationPoint first = cutting_plane_solve(model);
  RelaxationModel seeded = build_relaxation(state, inst.costs, first.tight_cuts);
  CHECK(seeded.lazy_rows.size() == first.tight_cuts.size());
  RelaxationPoint again = cutting_plane_solve(seeded);
  CHECK(again.objective == first.objective);
}

}  // namespace
}  // namespace rrst
