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

#include "separation.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>

#include "error.hpp"
#include "max_flow.hpp"

namespace rrst {
namespace {

constexpr int kMaxEnumeration = 20;

Rational value_at(const EdgeWeights& point, EdgeId id) {
  auto it = point.find(id);
  return it == point.end() ? Rational(0) : it->second;
}

void sort_and_dedupe(std::vector<ViolatedCut>& cuts) {
  std::sort(cuts.begin(), cuts.end(), more_violated);
  std::vector<ViolatedCut> unique;
  for (ViolatedCut& c : cuts) {
    bool seen = std::any_of(unique.begin(), unique.end(), [&](const ViolatedCut& u) {
      return u.subset == c.subset;
    });
    if (!seen) unique.push_back(std::move(c));
  }
  cuts = std::move(unique);
}

std::optional<ViolatedCut> node_cut(const EdgeWeights& point, const MultiGraph& g,
                                    std::vector<int> nodes) {
  const int n = g.node_count();
  const int size = static_cast<int>(nodes.size());
  if (size < 2 || size >= n) return std::nullopt;
  std::sort(nodes.begin(), nodes.end());
  ViolatedCut cut;
  cut.node_subset = true;
  cut.support = g.edges_within(nodes);
  cut.subset = std::move(nodes);
  cut.rhs = size - 1;
  Rational lhs = 0;
  for (EdgeId id : cut.support) lhs += value_at(point, id);
  cut.slack = cut.rhs - lhs;
  if (sgn(cut.slack) >= 0) return std::nullopt;
  return cut;
}

template <class Network, class Cap, class Saturated>
void run_forced_cuts(const EdgeWeights& point, const MultiGraph& g,
                     const std::vector<const Edge*>& active, const std::vector<Cap>& capacity,
                     const Cap& unbounded, const Cap& unit, Saturated&& saturated,
                     std::vector<ViolatedCut>& cuts) {
  const int n = g.node_count();
  const int m = static_cast<int>(active.size());
  const int source = 0;
  const int sink = m + n + 1;
  // Minimal source side with `forced` inside and `excluded` (if >= 0) outside,
  // or nothing when no violated set qualifies.
  auto forced_side = [&](int forced, int excluded) -> std::optional<std::vector<int>> {
    Network net(m + n + 2);
    for (int i = 0; i < m; ++i) {
      net.add_arc(source, 1 + i, capacity[i]);
      net.add_arc(1 + i, 1 + m + active[i]->u, unbounded);
      net.add_arc(1 + i, 1 + m + active[i]->v, unbounded);
    }
    for (int v = 0; v < n; ++v) {
      net.add_arc(1 + m + v, sink, v == forced ? Cap(0) : v == excluded ? unbounded : unit);
    }
    if (saturated(net.max_flow(source, sink))) return std::nullopt;
    std::vector<char> side = net.source_side(source);
    // The forced vertex costs nothing on the source side, so adding it keeps
    // the cut minimum.
    std::vector<int> nodes;
    for (int v = 0; v < n; ++v) {
      if (side[1 + m + v] || v == forced) nodes.push_back(v);
    }
    return nodes;
  };
  for (int forced = 0; forced < n; ++forced) {
    auto nodes = forced_side(forced, -1);
    if (!nodes) continue;
    if (static_cast<int>(nodes->size()) < n) {
      if (auto cut = node_cut(point, g, std::move(*nodes))) cuts.push_back(std::move(*cut));
      continue;
    }
    // The whole vertex set is excluded from the family; retry with one more
    // vertex kept out.
    std::optional<ViolatedCut> best;
    for (int excluded = 0; excluded < n; ++excluded) {
      if (excluded == forced) continue;
      auto proper = forced_side(forced, excluded);
      if (!proper) continue;
      auto cut = node_cut(point, g, std::move(*proper));
      if (cut && (!best || more_violated(*cut, *best))) best = std::move(cut);
    }
    if (best) cuts.push_back(std::move(*best));
  }
}

std::vector<ViolatedCut> forest_cuts_min_cut(const EdgeWeights& point,
                                             const MultiGraph& g) {
  const int n = g.node_count();
  std::vector<ViolatedCut> cuts;
  if (n < 3) return cuts;
  std::vector<const Edge*> active;
  Rational total = 0;
  for (const Edge& e : g.edges()) {
    Rational x = value_at(point, e.id);
    if (sgn(x) > 0) {
      active.push_back(&e);
      total += x;
    }
  }
  const int m = static_cast<int>(active.size());
  // Capacities scaled by the common denominator run on integers when the
  // scaled values stay small; the minimal source side does not change.
  mpz_class scale = 1;
  for (const Edge* e : active) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), value_at(point, e->id).get_den_mpz_t());
  }
  const Rational unbounded = total + n;
  const Rational scaled_bound = unbounded * scale * (m + n + 1);
  if (scaled_bound < Rational(std::int64_t{1} << 60)) {
    std::vector<std::int64_t> capacity;
    for (const Edge* e : active) {
      Rational scaled = value_at(point, e->id) * scale;
      capacity.push_back(scaled.get_num().get_si());
    }
    const std::int64_t big = Rational(unbounded * scale).get_num().get_si() + 1;
    const std::int64_t unit = scale.get_si();
    run_forced_cuts<IntegerFlowNetwork>(point, g, active, capacity, big, unit,
                                        [&](std::int64_t flow) {
                                          return Rational(flow) >= total * scale;
                                        },
                                        cuts);
  } else {
    std::vector<Rational> capacity;
    for (const Edge* e : active) capacity.push_back(value_at(point, e->id));
    run_forced_cuts<FlowNetwork>(point, g, active, capacity, unbounded, Rational(1),
                                 [&](const Rational& flow) { return flow >= total; }, cuts);
  }
  sort_and_dedupe(cuts);
  return cuts;
}

std::vector<ViolatedCut> forest_cuts_exhaustive(const EdgeWeights& point,
                                                const MultiGraph& g) {
  const int n = g.node_count();
  if (n > kMaxEnumeration) {
    throw Error(ErrorKind::kGroundTooLarge,
                "exhaustive separation over " + std::to_string(n) + " nodes");
  }
  std::vector<ViolatedCut> cuts;
  if (n < 3) return cuts;
  std::vector<std::pair<uint32_t, Rational>> edges;
  for (const Edge& e : g.edges()) {
    edges.emplace_back((1u << e.u) | (1u << e.v), value_at(point, e.id));
  }
  for (uint32_t mask = 1; mask < (1u << n) - 1; ++mask) {
    const int size = std::popcount(mask);
    if (size < 2) continue;
    Rational lhs = 0;
    for (const auto& [ends, x] : edges) {
      if ((ends & mask) == ends) lhs += x;
    }
    if (lhs <= size - 1) continue;
    std::vector<int> nodes;
    for (int v = 0; v < n; ++v) {
      if (mask & (1u << v)) nodes.push_back(v);
    }
    if (auto cut = node_cut(point, g, std::move(nodes))) cuts.push_back(std::move(*cut));
  }
  sort_and_dedupe(cuts);
  if (static_cast<int>(cuts.size()) > n) cuts.resize(n);
  return cuts;
}

ViolatedCut element_cut(const EdgeWeights& point, const Matroid& m,
                        std::vector<EdgeId> elements) {
  std::sort(elements.begin(), elements.end());
  ViolatedCut cut;
  cut.node_subset = false;
  for (EdgeId e : elements) cut.subset.push_back(e.value);
  cut.rhs = m.rank(elements);
  Rational lhs = 0;
  for (EdgeId e : elements) lhs += value_at(point, e);
  cut.slack = cut.rhs - lhs;
  cut.support = std::move(elements);
  return cut;
}

std::vector<EdgeId> by_value_desc(const EdgeWeights& point,
                                  const std::vector<EdgeId>& elements) {
  std::vector<EdgeId> order = elements;
  std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    int c = cmp(value_at(point, a), value_at(point, b));
    return c != 0 ? c > 0 : a < b;
  });
  return order;
}

std::vector<ViolatedCut> rank_cuts_exhaustive(const EdgeWeights& point,
                                              const Matroid& m) {
  const auto& ground = m.ground();
  const int size = static_cast<int>(ground.size());
  if (size > kMaxEnumeration) {
    throw Error(ErrorKind::kGroundTooLarge,
                "exhaustive rank separation over " + std::to_string(size) + " elements");
  }
  std::vector<ViolatedCut> cuts;
  for (uint32_t mask = 1; mask < (1u << size); ++mask) {
    std::vector<EdgeId> elements;
    Rational lhs = 0;
    for (int i = 0; i < size; ++i) {
      if (mask & (1u << i)) {
        elements.push_back(ground[i]);
        lhs += value_at(point, ground[i]);
      }
    }
    if (lhs <= m.rank(elements)) continue;
    ViolatedCut cut = element_cut(point, m, std::move(elements));
    if (sgn(cut.slack) < 0) cuts.push_back(std::move(cut));
  }
  sort_and_dedupe(cuts);
  if (cuts.size() > ground.size()) cuts.resize(ground.size());
  return cuts;
}

}  // namespace

bool more_violated(const ViolatedCut& a, const ViolatedCut& b) {
  int c = cmp(a.slack, b.slack);
  if (c != 0) return c < 0;
  return a.subset < b.subset;
}

std::vector<ViolatedCut> forest_cuts(const EdgeWeights& point, const MultiGraph& g,
                                     SeparationMode mode) {
  return mode == SeparationMode::kMinCut ? forest_cuts_min_cut(point, g)
                                         : forest_cuts_exhaustive(point, g);
}

std::optional<ViolatedCut> separate_forest(const EdgeWeights& point, const MultiGraph& g,
                                           SeparationMode mode) {
  std::vector<ViolatedCut> cuts = forest_cuts(point, g, mode);
  if (cuts.empty()) return std::nullopt;
  return std::move(cuts.front());
}

std::optional<ViolatedCut> separate_forest_exhaustive(const EdgeWeights& point,
                                                      const MultiGraph& g) {
  return separate_forest(point, g, SeparationMode::kExhaustive);
}

std::vector<ViolatedCut> rank_cuts(const EdgeWeights& point, const Matroid& m,
                                   SeparationMode mode) {
  std::vector<ViolatedCut> cuts;
  switch (m.family()) {
    case MatroidFamily::kGraphic: {
      for (EdgeId loop : *m.loops()) {
        if (sgn(value_at(point, loop)) > 0) {
          cuts.push_back(element_cut(point, m, {loop}));
        }
      }
      for (ViolatedCut& node : forest_cuts(point, *m.graph(), mode)) {
        ViolatedCut cut = element_cut(point, m, node.support);
        if (sgn(cut.slack) < 0) cuts.push_back(std::move(cut));
      }
      ViolatedCut whole = element_cut(point, m, m.ground());
      if (sgn(whole.slack) < 0) cuts.push_back(std::move(whole));
      break;
    }
    case MatroidFamily::kUniform: {
      if (mode == SeparationMode::kExhaustive) return rank_cuts_exhaustive(point, m);
      const int r = m.uniform_rank();
      std::vector<EdgeId> order = by_value_desc(point, m.ground());
      Rational prefix = 0;
      for (size_t j = 0; j < order.size(); ++j) {
        prefix += value_at(point, order[j]);
        if (prefix <= std::min(static_cast<int>(j) + 1, r)) continue;
        cuts.push_back(element_cut(
            point, m, std::vector<EdgeId>(order.begin(), order.begin() + j + 1)));
      }
      break;
    }
    case MatroidFamily::kPartition: {
      if (mode == SeparationMode::kExhaustive) return rank_cuts_exhaustive(point, m);
      // The rank is a sum over parts, so the most violated set is the union
      // of each part's most violated prefix.
      std::vector<EdgeId> chosen;
      for (const PartitionPart& part : *m.parts()) {
        std::vector<EdgeId> order = by_value_desc(point, part.elements);
        Rational prefix = 0;
        Rational best = 0;
        size_t best_len = 0;
        for (size_t j = 0; j < order.size(); ++j) {
          prefix += value_at(point, order[j]);
          Rational violation = prefix - std::min(static_cast<int>(j) + 1, part.cap);
          if (violation > best) {
            best = violation;
            best_len = j + 1;
          }
        }
        chosen.insert(chosen.end(), order.begin(), order.begin() + best_len);
      }
      if (!chosen.empty()) {
        ViolatedCut cut = element_cut(point, m, std::move(chosen));
        if (sgn(cut.slack) < 0) cuts.push_back(std::move(cut));
      }
      break;
    }
    case MatroidFamily::kOracle:
      return rank_cuts_exhaustive(point, m);
  }
  sort_and_dedupe(cuts);
  return cuts;
}

std::optional<ViolatedCut> separate_rank(const EdgeWeights& point, const Matroid& m,
                                         SeparationMode mode) {
  std::vector<ViolatedCut> cuts = rank_cuts(point, m, mode);
  if (cuts.empty()) return std::nullopt;
  return std::move(cuts.front());
}

std::optional<ViolatedCut> separate_rank_exhaustive(const EdgeWeights& point,
                                                    const Matroid& m) {
  std::vector<ViolatedCut> cuts = rank_cuts_exhaustive(point, m);
  if (cuts.empty()) return std::nullopt;
  return std::move(cuts.front());
}

}  // namespace rrst
