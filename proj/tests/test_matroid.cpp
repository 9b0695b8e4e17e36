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
#include <random>

#include "doctest.h"
#include "error.hpp"
#include "matroid.hpp"
#include "test_support.hpp"

namespace rrst {
namespace {

using testing::complete_graph;
using testing::ids;

std::vector<EdgeId> subset_of(const std::vector<EdgeId>& ground, unsigned mask) {
  std::vector<EdgeId> out;
  for (size_t i = 0; i < ground.size(); ++i) {
    if (mask >> i & 1) out.push_back(ground[i]);
  }
  return out;
}

std::vector<Matroid> sample_matroids() {
  std::vector<Matroid> out;
  out.push_back(Matroid::graphic(complete_graph(4)));
  out.push_back(Matroid::graphic(testing::cycle_graph(5)));
  out.push_back(Matroid::graphic(testing::load_fixture("g6_s31_k3.json").graph));
  out.push_back(Matroid::uniform(ids({0, 1, 2, 3, 4}), 3));
  out.push_back(Matroid::uniform(ids({2, 5, 7}), 0));
  out.push_back(Matroid::partition({PartitionPart{ids({0, 1, 2}), 2},
                                    PartitionPart{ids({3, 4}), 1},
                                    PartitionPart{ids({5}), 0}}));
  std::vector<EdgeId> ground = ids({0, 1, 2, 3, 4});
  out.push_back(Matroid::from_oracle(ground, [](std::span<const EdgeId> s) {
    int low = 0;
    for (EdgeId e : s) low += e.value < 3;
    return s.size() <= 3 && low <= 2;
  }));
  return out;
}

TEST_CASE("rank matches augmentation and is monotone and submodular") {
  for (const Matroid& m : sample_matroids()) {
    const auto& ground = m.ground();
    REQUIRE(ground.size() <= 12);
    const unsigned full = 1u << ground.size();
    std::vector<int> rank(full);
    for (unsigned a = 0; a < full; ++a) {
      auto s = subset_of(ground, a);
      rank[a] = m.rank(s);
      CHECK(rank[a] == rank_by_augmentation(m, s));
      CHECK(rank[a] <= static_cast<int>(s.size()));
      CHECK(m.is_independent(s) == (rank[a] == static_cast<int>(s.size())));
    }
    std::mt19937 gen(7);
    std::uniform_int_distribution<unsigned> pick(0, full - 1);
    for (int trial = 0; trial < 400; ++trial) {
      unsigned a = pick(gen), b = pick(gen);
      CHECK(rank[a | b] + rank[a & b] <= rank[a] + rank[b]);
      CHECK(rank[a & b] <= rank[a]);
    }
  }
}

TEST_CASE("minor ranks follow the deletion and contraction formulas") {
  for (const Matroid& m : sample_matroids()) {
    for (EdgeId e : m.ground()) {
      Matroid del = m.deleted(e);
      Matroid con = m.contracted(e);
      CHECK_FALSE(del.contains(e));
      CHECK_FALSE(con.contains(e));
      CHECK(del.minor_stack().back() == MinorStep{MinorOp::kDelete, e});
      CHECK(con.minor_stack().back() == MinorStep{MinorOp::kContract, e});
      const EdgeId single[] = {e};
      const int re = m.rank(single);
      const auto& rest = del.ground();
      for (unsigned a = 0; a < (1u << rest.size()); a += 3) {
        auto s = subset_of(rest, a);
        CHECK(del.rank(s) == m.rank(s));
        auto with = s;
        with.push_back(e);
        CHECK(con.rank(s) == m.rank(with) - re);
      }
    }
  }
}

TEST_CASE("graphic contraction keeps loops in the ground set") {
  MultiGraph parallel(2, {Edge{EdgeId{0}, 0, 1}, Edge{EdgeId{1}, 0, 1}, Edge{EdgeId{2}, 0, 1}});
  Matroid m = Matroid::graphic(parallel).contracted(EdgeId{0});
  CHECK(m.ground() == ids({1, 2}));
  CHECK(m.full_rank() == 0);
  CHECK(*m.loops() == ids({1, 2}));
  const EdgeId one[] = {EdgeId{1}};
  CHECK_FALSE(m.is_independent(one));
}

TEST_CASE("elements outside the ground set are rejected") {
  Matroid m = Matroid::uniform(ids({0, 1}), 1);
  const EdgeId bad[] = {EdgeId{5}};
  CHECK_THROWS_AS(m.is_independent(bad), Error);
  try {
    m.rank(bad);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kElementNotInGround);
  }
}

TEST_CASE("basis counts") {
  CHECK(enumerate_bases(Matroid::graphic(complete_graph(3))).size() == 3);
  CHECK(enumerate_bases(Matroid::graphic(complete_graph(4))).size() == 16);
  CHECK(enumerate_bases(Matroid::graphic(complete_graph(5))).size() == 125);
  CHECK(enumerate_bases(Matroid::graphic(testing::cycle_graph(4))).size() == 4);
  CHECK(enumerate_bases(Matroid::uniform(ids({0, 1, 2, 3}), 2)).size() == 6);
  Matroid p = Matroid::partition({PartitionPart{ids({0, 1, 2}), 2}, PartitionPart{ids({3, 4}), 1}});
  CHECK(enumerate_bases(p).size() == 6);
  auto bases = enumerate_bases(Matroid::graphic(complete_graph(3)));
  CHECK(bases.front() == ids({0, 1}));
  CHECK(std::is_sorted(bases.begin(), bases.end()));
}

TEST_CASE("greedy basis is a minimum-weight basis") {
  std::mt19937 gen(11);
  std::uniform_int_distribution<int> w(0, 5);
  for (const Matroid& m : sample_matroids()) {
    for (int trial = 0; trial < 5; ++trial) {
      EdgeWeights weights;
      for (EdgeId e : m.ground()) weights[e] = w(gen);
      auto greedy = greedy_min_basis(m, weights);
      CHECK(m.is_independent(greedy));
      CHECK(static_cast<int>(greedy.size()) == m.full_rank());
      Rational best = -1;
      for (const auto& b : enumerate_bases(m)) {
        Rational total = 0;
        for (EdgeId e : b) total += weights[e];
        if (best < 0 || total < best) best = total;
      }
      Rational got = 0;
      for (EdgeId e : greedy) got += weights[e];
      CHECK(got == best);
    }
  }
  CHECK_THROWS_AS(greedy_min_basis(Matroid::uniform(ids({0, 1}), 1), {}, 2), Error);
}

TEST_CASE("graphic instance has rank n - 1 and matroid JSON loads") {
  Instance g = testing::load_fixture("g5_s21_k2.json");
  MatroidInstance mi = graphic_instance(g);
  CHECK(mi.matroid.full_rank() == g.node_count() - 1);
  CHECK(mi.required_overlap() == g.required_overlap());
  MatroidInstance u = load_matroid_instance(read_text_file(testing::data_path("u24.json")));
  CHECK(u.matroid.family() == MatroidFamily::kUniform);
  CHECK(u.matroid.full_rank() == 2);
  MatroidInstance p = load_matroid_instance(read_text_file(testing::data_path("partition.json")));
  CHECK(p.matroid.family() == MatroidFamily::kPartition);
  CHECK(p.matroid.full_rank() == 3);
  CHECK(p.required_overlap() == 2);
  CHECK(load_matroid_instance(R"({"family":"uniform","rank":3,"k":0,"costs":[{"id":0,"C":1,"c":1,"d":0}]})")
            .matroid.full_rank() == 1);
  CHECK_THROWS_AS(load_matroid_instance(R"({"family":"uniform","rank":1,"k":2,"costs":[{"id":0,"C":1,"c":1,"d":0}]})"),
                  Error);
}

}  // namespace
}  // namespace rrst
