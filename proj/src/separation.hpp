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

#include <optional>
#include <vector>

#include "graph.hpp"
#include "matroid.hpp"

namespace rrst {

enum class Side { kX, kY };

enum class SeparationMode { kMinCut, kExhaustive };

// A violated subtour (graph) or rank (matroid) inequality:
//   sum over `support` of the side's variables <= rhs.
struct ViolatedCut {
  Side side = Side::kX;
  // Compact node set for forest cuts, element ids for rank cuts.
  bool node_subset = true;
  std::vector<int> subset;
  std::vector<EdgeId> support;
  int rhs = 0;
  // rhs - lhs at the separated point; always negative.
  Rational slack;
};

// Strict order: more violated first, then lexicographically smaller subset.
bool more_violated(const ViolatedCut& a, const ViolatedCut& b);

// Most violated x(E(U)) <= |U| - 1 with 2 <= |U| < node_count, or nothing.
// Min-cut mode runs one max-flow per forced vertex on
//   source -> edge node (cap x_e), edge node -> endpoints (unbounded),
//   vertex -> sink (cap 1, forced vertex 0).
// When the minimal side is the whole vertex set, the forced vertex is
// retried with each other vertex held outside.
std::optional<ViolatedCut> separate_forest(const EdgeWeights& point, const MultiGraph& g,
                                           SeparationMode mode = SeparationMode::kMinCut);

// Distinct violated sets found in one pass, most violated first. Min-cut
// mode yields at most one per forced vertex; exhaustive mode at most
// node_count sets.
std::vector<ViolatedCut> forest_cuts(const EdgeWeights& point, const MultiGraph& g,
                                     SeparationMode mode);

// Most violated x(U) <= rank(U), or nothing. Uniform and partition matroids
// use sorted prefix checks, oracle matroids enumeration. Graphic matroids use
// the forest separation plus loop and whole-ground checks; the verdict is
// exact, the returned set is the most violated among those candidates.
std::optional<ViolatedCut> separate_rank(const EdgeWeights& point, const Matroid& m,
                                         SeparationMode mode = SeparationMode::kMinCut);
std::vector<ViolatedCut> rank_cuts(const EdgeWeights& point, const Matroid& m,
                                   SeparationMode mode);

// Enumerates every subset. Throws kGroundTooLarge above 20 nodes/elements.
std::optional<ViolatedCut> separate_forest_exhaustive(const EdgeWeights& point,
                                                      const MultiGraph& g);
std::optional<ViolatedCut> separate_rank_exhaustive(const EdgeWeights& point,
                                                    const Matroid& m);

}  // namespace rrst
