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

#include <set>

#include "doctest.h"
#include "error.hpp"
#include "generator.hpp"
#include "relaxation_solver.hpp"
#include "test_support.hpp"
#include "verify.hpp"

namespace rrst {
namespace {

using testing::ids;

TEST_CASE("generator is deterministic and respects its parameters") {
  GeneratorParams params{7, 0.4, 2, 12, 99};
  CHECK(generate_instance(params) == generate_instance(params));
  params.seed = 100;
  Instance other = generate_instance(params);
  CHECK(other.k == 2);
  CHECK(other.node_count() == 7);
  CHECK(other.graph.is_connected());
  for (const auto& [e, c] : other.costs) {
    for (const Rational* v : {&c.C, &c.c, &c.d}) {
      CHECK(*v >= 0);
      CHECK(*v <= 12);
      CHECK(v->get_den() == 1);
    }
  }
  CHECK(generate_instance({9, 0.0, 0, 5, 3}).edge_count() == 8);
  CHECK(generate_instance({9, 1.0, 0, 5, 3}).edge_count() == 36);
  CHECK_THROWS_AS(generate_instance({0, 0.5, 0, 5, 3}), Error);
  CHECK_THROWS_AS(generate_instance({5, 1.5, 0, 5, 3}), Error);
  CHECK_THROWS_AS(generate_instance({5, 0.5, 5, 5, 3}), Error);
}

TEST_CASE("sampler stays in range") {
  Sampler s(4);
  for (int i = 0; i < 1000; ++i) {
    const int v = s.between(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
    CHECK(s.below(7) < 7);
  }
}

TEST_CASE("connected graph enumeration counts isomorphism classes") {
  const int expected[] = {0, 1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(static_cast<int>(connected_graphs(n).size()) == expected[n]);
  }
}

TEST_CASE("builtin suite covers every graph, k and pattern") {
  auto suite = builtin_small_suite(5);
  CHECK(suite.size() == 414);
  std::set<std::string> names;
  for (const SuiteCase& c : suite) {
    names.insert(c.name);
    CHECK(c.instance.graph.is_connected());
    CHECK(c.instance.k >= 0);
    CHECK(c.instance.k <= c.instance.node_count() - 1);
  }
  CHECK(names.size() == suite.size());
}

TEST_CASE("random matroid instances are valid") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    for (MatroidFamily f : {MatroidFamily::kUniform, MatroidFamily::kPartition}) {
      MatroidInstance m = random_matroid_instance(f, 10, seed);
      CHECK(m.matroid.family() == f);
      CHECK(m.matroid.ground().size() <= 10);
      CHECK(m.k >= 0);
      CHECK(m.k <= m.matroid.full_rank());
    }
  }
}

TEST_CASE("verification catches each kind of tampering") {
  Instance inst = testing::load_fixture("g5_s21_k2.json");
  const Solution good = solve_rrst(inst);
  CHECK_FALSE(verify_solution(inst, good).has_value());

  Solution short_x = good;
  short_x.X.pop_back();
  CHECK(verify_solution(inst, short_x) == "X not spanning");

  Solution bad_y = good;
  bad_y.Y.push_back(EdgeId{999});
  CHECK(verify_solution(inst, bad_y) == "Y not spanning");

  Solution cost = good;
  cost.total += 1;
  CHECK(verify_solution(inst, cost) == "cost mismatch");

  Solution z = good;
  z.Z.push_back(EdgeId{999});
  CHECK(verify_solution(inst, z) == "Z not within X ∩ Y");

  Instance tight = testing::load_fixture("k3_decoupled.json");
  tight.k = 0;
  Solution split = solve_rrst(testing::load_fixture("k3_decoupled.json"));
  auto overlap = verify_solution(tight, split);
  REQUIRE(overlap.has_value());
  CHECK(overlap->rfind("overlap 1 below required 2", 0) == 0);
}

}  // namespace
}  // namespace rrst
