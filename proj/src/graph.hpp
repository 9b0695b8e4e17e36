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

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "rational.hpp"

namespace rrst {

// Identity of an edge (or matroid element) in the original instance. Stays
// fixed through every contraction and deletion.
struct EdgeId {
  int value = -1;

  auto operator<=>(const EdgeId&) const = default;
};

struct Edge {
  EdgeId id;
  int u = 0;
  int v = 0;

  bool operator==(const Edge&) const = default;
};

// Undirected loopless multigraph over compact nodes [0, node_count).
//
// Every compact node stands for a class of original vertices merged by
// contractions; label(i) is the smallest original vertex of that class and
// labels are kept in increasing order. Edges are stored sorted by EdgeId.
// Values are immutable: contract/delete return new graphs.
class MultiGraph {
 public:
  MultiGraph() = default;

  // Throws kValidation on out-of-range endpoints, self-loops or duplicate ids.
  MultiGraph(int node_count, std::vector<Edge> edges);

  int node_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::vector<EdgeId> edge_ids() const;

  bool contains(EdgeId id) const;
  // Throws kUnknownEdge.
  const Edge& edge(EdgeId id) const;

  // Edge positions incident to a compact node.
  const std::vector<int>& incident(int node) const { return adjacency_[node]; }

  int label(int node) const { return labels_[node]; }
  int original_vertex_count() const {
    return static_cast<int>(node_of_original_.size());
  }
  // Compact node currently holding original vertex `v`.
  int node_of_original(int v) const { return node_of_original_[v]; }

  bool is_connected() const;
  int component_count() const;

  // Deletes `id` and identifies its endpoints. Edges parallel to `id` become
  // self-loops and are dropped; their ids are appended to `loops` if given.
  MultiGraph contract_edge(EdgeId id, std::vector<EdgeId>* loops = nullptr) const;
  MultiGraph delete_edge(EdgeId id) const;

  // Edges with both endpoints in `nodes` (compact indices).
  std::vector<EdgeId> edges_within(std::span<const int> nodes) const;

  bool operator==(const MultiGraph& other) const {
    return edges_ == other.edges_ && labels_ == other.labels_ &&
           node_of_original_ == other.node_of_original_;
  }

 private:
  int position(EdgeId id) const;
  void rebuild_adjacency();

  std::vector<Edge> edges_;
  std::vector<int> labels_;
  std::vector<int> node_of_original_;
  std::vector<std::vector<int>> adjacency_;
};

// Union-find over [0, n) with path halving.
class DisjointSets {
 public:
  explicit DisjointSets(int n);
  int find(int x);
  // False when already joined.
  bool unite(int a, int b);
  int set_count() const { return sets_; }

 private:
  std::vector<int> parent_;
  int sets_;
};

using EdgeWeights = std::map<EdgeId, Rational>;

// Kruskal with ties broken by smallest EdgeId. Throws kNoBasis when `g` is
// disconnected.
std::vector<EdgeId> minimum_spanning_tree(const MultiGraph& g,
                                          const EdgeWeights& weights);

// True iff `edges` (ids of g) form a spanning tree of g.
bool is_spanning_tree(const MultiGraph& g, std::span<const EdgeId> edges);

}  // namespace rrst
