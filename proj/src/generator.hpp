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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "instance.hpp"
#include "matroid.hpp"

namespace rrst {

// Seeded source of bounded integers and Bernoulli draws. Uses only the raw
// mt19937_64 stream so output is identical across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}
  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi].
  int between(int lo, int hi);
  bool bernoulli(double p);

 private:
  std::mt19937_64 engine_;
};

struct GeneratorParams {
  int nodes = 5;
  double density = 0.5;
  int k = 0;
  int cost_max = 10;
  std::uint64_t seed = 1;
};

// Random spanning tree plus Bernoulli(density) extra edges; edges sorted by
// (u, v) with ids 0..m-1; integer costs uniform in [0, cost_max]. Throws
// kValidation on out-of-range parameters.
Instance generate_instance(const GeneratorParams& params);

struct SuiteCase {
  std::string name;
  Instance instance;
};

// All non-isomorphic connected graphs on n nodes, in canonical form, as sorted
// (u, v) edge lists.
std::vector<std::vector<std::pair<int, int>>> connected_graphs(int n);

enum class CostPattern { kUnit, kAntiCorrelated, kRandom };

// Cost triples for edges 0..m-1: unit (C = c = 1, d = 0), anti-correlated
// (C = i + 1, c = m - i - 1, d = 1), or random integers in [0, 9].
CostMap pattern_costs(int edge_count, CostPattern pattern, std::uint64_t seed);

// Every connected graph with at most `max_nodes` nodes, every k, all three
// cost patterns.
std::vector<SuiteCase> builtin_small_suite(int max_nodes = 5);

// Random uniform or partition matroid with |ground| <= max_ground, a random
// valid k and random integer costs.
MatroidInstance random_matroid_instance(MatroidFamily family, int max_ground,
                                        std::uint64_t seed);

}  // namespace rrst
