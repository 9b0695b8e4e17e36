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

#include <functional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "graph.hpp"
#include "instance.hpp"

namespace rrst {

enum class MatroidFamily { kGraphic, kUniform, kPartition, kOracle };

struct PartitionPart {
  std::vector<EdgeId> elements;
  int cap = 0;

  bool operator==(const PartitionPart&) const = default;
};

enum class MinorOp { kDelete, kContract };

struct MinorStep {
  MinorOp op;
  EdgeId element;

  bool operator==(const MinorStep&) const = default;
};

using IndependenceOracle = std::function<bool(std::span<const EdgeId>)>;

// A matroid from one of the closed families, together with the minor
// operations applied to it so far. Immutable; minors return new handles.
//
// Graphic matroids keep elements that turned into loops after a contraction
// (they stay in the ground set with rank 0) even though the underlying
// MultiGraph drops them.
class Matroid {
 public:
  static Matroid graphic(MultiGraph graph);
  static Matroid uniform(std::vector<EdgeId> ground, int rank);
  // Parts must be disjoint; caps non-negative.
  static Matroid partition(std::vector<PartitionPart> parts);
  // Arbitrary independence predicate. Test support only: rank is computed by
  // greedy augmentation and separation falls back to enumeration.
  static Matroid from_oracle(std::vector<EdgeId> ground, IndependenceOracle oracle);

  MatroidFamily family() const;
  const std::vector<EdgeId>& ground() const { return ground_; }
  bool contains(EdgeId e) const;
  const std::vector<MinorStep>& minor_stack() const { return minors_; }

  // Throws kElementNotInGround for elements outside the ground set.
  bool is_independent(std::span<const EdgeId> elements) const;
  int rank(std::span<const EdgeId> elements) const;
  int full_rank() const { return rank(ground_); }

  Matroid deleted(EdgeId e) const;
  Matroid contracted(EdgeId e) const;

  // Family internals, for specialised separation.
  const MultiGraph* graph() const;
  const std::vector<EdgeId>* loops() const;
  const std::vector<PartitionPart>* parts() const;
  int uniform_rank() const;

 private:
  struct Graphic {
    MultiGraph graph;
    std::vector<EdgeId> loops;
  };
  struct Uniform {
    int rank;
  };
  struct Partition {
    std::vector<PartitionPart> parts;
  };
  struct Oracle {
    IndependenceOracle independent;
    std::vector<EdgeId> contracted;
  };

  Matroid() = default;
  void check_members(std::span<const EdgeId> elements) const;
  Matroid without(EdgeId e, MinorOp op) const;

  std::variant<Graphic, Uniform, Partition, Oracle> family_;
  std::vector<EdgeId> ground_;
  std::vector<MinorStep> minors_;
};

// Size of a largest independent subset, grown greedily against the
// independence oracle. Family-agnostic reference for Matroid::rank.
int rank_by_augmentation(const Matroid& m, std::span<const EdgeId> elements);

// Minimum-weight basis; ties by smallest EdgeId. The result is sorted.
// Throws kNoBasis when `required_rank` is given and cannot be reached.
std::vector<EdgeId> greedy_min_basis(const Matroid& m, const EdgeWeights& weights,
                                     int required_rank = -1);

inline constexpr int kMaxEnumerationGround = 20;

// All bases, each sorted, in lexicographic order. Throws kGroundTooLarge
// above kMaxEnumerationGround elements.
std::vector<std::vector<EdgeId>> enumerate_bases(const Matroid& m);

struct MatroidInstance {
  Matroid matroid;
  CostMap costs;
  int k = 0;

  // rank(E) - k.
  int required_overlap() const { return matroid.full_rank() - k; }
};

// Validates 0 <= k <= rank(E), non-negative costs, one triple per element.
MatroidInstance make_matroid_instance(Matroid matroid, CostMap costs, int k);
MatroidInstance graphic_instance(const Instance& instance);

// {"family": "graphic"|"uniform"|"partition", ..., "k": k,
//  "costs": [{"id","C","c","d"}, ...]}
MatroidInstance load_matroid_instance(std::string_view text);
MatroidInstance matroid_instance_from_json(const nlohmann::json& doc);
nlohmann::ordered_json matroid_instance_to_json(const MatroidInstance& instance);

}  // namespace rrst
