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
#include <vector>

#include "graph.hpp"
#include "instance.hpp"
#include "json.hpp"
#include "matroid.hpp"
#include "rational.hpp"

namespace rrst {

inline constexpr std::int64_t kMaxEnumeratedTrees = 1'000'000;
inline constexpr std::int64_t kMaxPairScanTrees = 5'000;
inline constexpr int kMaxPairScanGround = 16;

struct TreePairResult {
  std::vector<EdgeId> best_X;
  std::vector<EdgeId> best_Y;
  Rational best_cost;
  std::int64_t pairs_examined = 0;
};

// Every spanning tree of g exactly once (each sorted, list in lexicographic
// order), by contraction/deletion on the smallest remaining edge. Throws
// kTooManyTrees past `limit` trees and kNoBasis when g is disconnected.
std::vector<std::vector<EdgeId>> enumerate_spanning_trees(
    const MultiGraph& g, std::int64_t limit = kMaxEnumeratedTrees);

// Number of spanning trees by the Matrix-Tree theorem (exact determinant of a
// reduced Laplacian).
Rational count_spanning_trees(const MultiGraph& g);

// Exhaustive scan of all tree pairs with |X ∩ Y| >= n - 1 - k. Ties go to the
// lexicographically smallest (X, Y). Throws kTooManyTrees above
// kMaxPairScanTrees trees.
TreePairResult brute_force_rrst(const Instance& instance);

// Same scan over basis pairs with |X ∩ Y| >= rank(E) - k. Throws
// kGroundTooLarge above kMaxPairScanGround elements.
TreePairResult brute_force_rrmb(const MatroidInstance& instance);

// {"X": [...], "Y": [...], "total": "p/q", "pairs_examined": n}
nlohmann::ordered_json oracle_to_json(const TreePairResult& result);

}  // namespace rrst
