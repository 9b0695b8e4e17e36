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

#include "generator.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "error.hpp"

namespace rrst {
namespace {

const char* pattern_name(CostPattern pattern) {
  switch (pattern) {
    case CostPattern::kUnit:
      return "unit";
    case CostPattern::kAntiCorrelated:
      return "anti";
    case CostPattern::kRandom:
      return "random";
  }
  return "?";
}

std::vector<std::pair<int, int>> pairs_of(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return pairs;
}

bool mask_connected(int n, std::uint32_t mask,
                    const std::vector<std::pair<int, int>>& pairs) {
  DisjointSets sets(n);
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (mask >> i & 1) sets.unite(pairs[i].first, pairs[i].second);
  }
  return sets.set_count() == 1;
}

std::uint32_t canonical_mask(int n, std::uint32_t mask,
                             const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> index(n, std::vector<int>(n, 0));
  for (size_t i = 0; i < pairs.size(); ++i) {
    index[pairs[i].first][pairs[i].second] = static_cast<int>(i);
    index[pairs[i].second][pairs[i].first] = static_cast<int>(i);
  }
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  do {
    std::uint32_t image = 0;
    for (size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1) image |= 1u << index[perm[pairs[i].first]][perm[pairs[i].second]];
    }
    best = std::min(best, image);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Instance build(int n, const std::vector<std::pair<int, int>>& pairs, CostMap costs,
               int k) {
  std::vector<Edge> edges;
  for (size_t i = 0; i < pairs.size(); ++i) {
    edges.push_back(Edge{EdgeId{static_cast<int>(i)}, pairs[i].first, pairs[i].second});
  }
  return make_instance(MultiGraph(n, std::move(edges)), std::move(costs), k);
}

CostMap random_costs(const std::vector<EdgeId>& ids, int cost_max, Sampler& sampler) {
  CostMap costs;
  for (EdgeId e : ids) {
    CostTriple t;
    t.C = sampler.between(0, cost_max);
    t.c = sampler.between(0, cost_max);
    t.d = sampler.between(0, cost_max);
    costs.emplace(e, t);
  }
  return costs;
}

}  // namespace

std::uint64_t Sampler::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorKind::kValidation, "empty sampling range");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw > limit);
  return draw % bound;
}

int Sampler::between(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

bool Sampler::bernoulli(double p) {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return unit < p;
}

Instance generate_instance(const GeneratorParams& params) {
  if (params.nodes < 1) throw Error(ErrorKind::kValidation, "--nodes must be >= 1");
  if (!(params.density >= 0.0 && params.density <= 1.0)) {
    throw Error(ErrorKind::kValidation, "--density must lie in [0, 1]");
  }
  if (params.k < 0 || params.k > params.nodes - 1) {
    throw Error(ErrorKind::kValidation, "--k must lie in [0, nodes - 1]");
  }
  if (params.cost_max < 0) throw Error(ErrorKind::kValidation, "--cost-max must be >= 0");
  Sampler sampler(params.seed);
  const int n = params.nodes;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(order[i], order[sampler.below(static_cast<std::uint64_t>(i) + 1)]);
  }
  std::set<std::pair<int, int>> chosen;
  for (int i = 1; i < n; ++i) {
    int a = order[i];
    int b = order[sampler.below(static_cast<std::uint64_t>(i))];
    chosen.emplace(std::min(a, b), std::max(a, b));
  }
  for (const auto& pair : pairs_of(n)) {
    if (chosen.count(pair)) continue;
    if (sampler.bernoulli(params.density)) chosen.insert(pair);
  }
  std::vector<std::pair<int, int>> pairs(chosen.begin(), chosen.end());
  std::vector<EdgeId> ids;
  for (size_t i = 0; i < pairs.size(); ++i) ids.push_back(EdgeId{static_cast<int>(i)});
  CostMap costs = random_costs(ids, params.cost_max, sampler);
  return build(n, pairs, std::move(costs), params.k);
}

std::vector<std::vector<std::pair<int, int>>> connected_graphs(int n) {
  if (n < 1 || n > 6) throw Error(ErrorKind::kValidation, "graph catalogue covers 1..6 nodes");
  const auto pairs = pairs_of(n);
  std::set<std::uint32_t> seen;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    if (!mask_connected(n, mask, pairs)) continue;
    seen.insert(canonical_mask(n, mask, pairs));
  }
  std::vector<std::vector<std::pair<int, int>>> graphs;
  for (std::uint32_t mask : seen) {
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1) edges.push_back(pairs[i]);
    }
    graphs.push_back(std::move(edges));
  }
  return graphs;
}

CostMap pattern_costs(int edge_count, CostPattern pattern, std::uint64_t seed) {
  std::vector<EdgeId> ids;
  for (int i = 0; i < edge_count; ++i) ids.push_back(EdgeId{i});
  if (pattern == CostPattern::kRandom) {
    Sampler sampler(seed);
    return random_costs(ids, 9, sampler);
  }
  CostMap costs;
  for (int i = 0; i < edge_count; ++i) {
    CostTriple t;
    if (pattern == CostPattern::kUnit) {
      t.C = 1;
      t.c = 1;
      t.d = 0;
    } else {
      t.C = i + 1;
      t.c = edge_count - i - 1;
      t.d = 1;
    }
    costs.emplace(EdgeId{i}, t);
  }
  return costs;
}

std::vector<SuiteCase> builtin_small_suite(int max_nodes) {
  std::vector<SuiteCase> suite;
  for (int n = 1; n <= max_nodes; ++n) {
    const auto graphs = connected_graphs(n);
    for (size_t g = 0; g < graphs.size(); ++g) {
      const int m = static_cast<int>(graphs[g].size());
      for (CostPattern pattern :
           {CostPattern::kUnit, CostPattern::kAntiCorrelated, CostPattern::kRandom}) {
        const std::uint64_t seed = 1000u * n + 10u * g + static_cast<unsigned>(pattern);
        for (int k = 0; k <= n - 1; ++k) {
          std::string name = "n" + std::to_string(n) + "_g" + std::to_string(g) + "_" +
                             pattern_name(pattern) + "_k" + std::to_string(k);
          suite.push_back(
              SuiteCase{std::move(name), build(n, graphs[g], pattern_costs(m, pattern, seed), k)});
        }
      }
    }
  }
  return suite;
}

MatroidInstance random_matroid_instance(MatroidFamily family, int max_ground,
                                        std::uint64_t seed) {
  if (max_ground < 1) throw Error(ErrorKind::kValidation, "max_ground must be >= 1");
  Sampler sampler(seed);
  const int size = sampler.between(1, max_ground);
  std::vector<EdgeId> ground;
  for (int i = 0; i < size; ++i) ground.push_back(EdgeId{i});
  Matroid matroid = Matroid::uniform(ground, 0);
  if (family == MatroidFamily::kUniform) {
    matroid = Matroid::uniform(ground, sampler.between(0, size));
  } else if (family == MatroidFamily::kPartition) {
    const int part_count = sampler.between(1, std::min(size, 4));
    std::vector<PartitionPart> parts(part_count);
    for (EdgeId e : ground) {
      parts[sampler.below(static_cast<std::uint64_t>(part_count))].elements.push_back(e);
    }
    for (PartitionPart& part : parts) {
      part.cap = sampler.between(0, static_cast<int>(part.elements.size()));
    }
    std::erase_if(parts, [](const PartitionPart& part) { return part.elements.empty(); });
    matroid = Matroid::partition(std::move(parts));
  } else {
    throw Error(ErrorKind::kValidation, "random matroids are uniform or partition");
  }
  CostMap costs = random_costs(ground, 9, sampler);
  const int k = sampler.between(0, matroid.full_rank());
  return make_matroid_instance(std::move(matroid), std::move(costs), k);
}

}  // namespace rrst
