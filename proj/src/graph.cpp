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

#include "graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "error.hpp"

namespace rrst {

MultiGraph::MultiGraph(int node_count, std::vector<Edge> edges)
    : edges_(std::move(edges)) {
  if (node_count < 0) {
    throw Error(ErrorKind::kValidation, "negative node count");
  }
  labels_.resize(node_count);
  std::iota(labels_.begin(), labels_.end(), 0);
  node_of_original_ = labels_;
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.id.value < 0) {
      throw Error(ErrorKind::kValidation, "negative edge id");
    }
    if (i > 0 && edges_[i - 1].id == e.id) {
      throw Error(ErrorKind::kValidation,
                  "duplicate edge id " + std::to_string(e.id.value));
    }
    if (e.u < 0 || e.u >= node_count || e.v < 0 || e.v >= node_count) {
      throw Error(ErrorKind::kValidation,
                  "edge " + std::to_string(e.id.value) + " endpoint out of range");
    }
    if (e.u == e.v) {
      throw Error(ErrorKind::kValidation,
                  "edge " + std::to_string(e.id.value) + " is a self-loop");
    }
  }
  rebuild_adjacency();
}

std::vector<EdgeId> MultiGraph::edge_ids() const {
  std::vector<EdgeId> ids;
  ids.reserve(edges_.size());
  for (const Edge& e : edges_) ids.push_back(e.id);
  return ids;
}

int MultiGraph::position(EdgeId id) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), id,
      [](const Edge& e, EdgeId key) { return e.id < key; });
  if (it == edges_.end() || it->id != id) return -1;
  return static_cast<int>(it - edges_.begin());
}

bool MultiGraph::contains(EdgeId id) const { return position(id) >= 0; }

const Edge& MultiGraph::edge(EdgeId id) const {
  int pos = position(id);
  if (pos < 0) {
    throw Error(ErrorKind::kUnknownEdge,
                "unknown edge " + std::to_string(id.value));
  }
  return edges_[pos];
}

void MultiGraph::rebuild_adjacency() {
  adjacency_.assign(labels_.size(), {});
  for (size_t i = 0; i < edges_.size(); ++i) {
    adjacency_[edges_[i].u].push_back(static_cast<int>(i));
    adjacency_[edges_[i].v].push_back(static_cast<int>(i));
  }
}

int MultiGraph::component_count() const {
  DisjointSets sets(node_count());
  for (const Edge& e : edges_) sets.unite(e.u, e.v);
  return sets.set_count();
}

bool MultiGraph::is_connected() const { return component_count() <= 1; }

MultiGraph MultiGraph::contract_edge(EdgeId id,
                                     std::vector<EdgeId>* loops) const {
  const Edge target = edge(id);
  const int keep = std::min(target.u, target.v);
  const int gone = std::max(target.u, target.v);
  // Compact node `gone` merges into `keep`; nodes above `gone` shift down.
  auto remap = [&](int node) {
    if (node == gone) return keep;
    return node > gone ? node - 1 : node;
  };

  MultiGraph out;
  out.labels_ = labels_;
  out.labels_[keep] = std::min(labels_[keep], labels_[gone]);
  out.labels_.erase(out.labels_.begin() + gone);
  out.node_of_original_.reserve(node_of_original_.size());
  for (int node : node_of_original_) out.node_of_original_.push_back(remap(node));
  out.edges_.reserve(edges_.size() - 1);
  for (const Edge& e : edges_) {
    if (e.id == id) continue;
    Edge moved{e.id, remap(e.u), remap(e.v)};
    if (moved.u == moved.v) {
      if (loops != nullptr) loops->push_back(e.id);
      continue;
    }
    out.edges_.push_back(moved);
  }
  out.rebuild_adjacency();
  return out;
}

MultiGraph MultiGraph::delete_edge(EdgeId id) const {
  int pos = position(id);
  if (pos < 0) {
    throw Error(ErrorKind::kUnknownEdge,
                "unknown edge " + std::to_string(id.value));
  }
  MultiGraph out = *this;
  out.edges_.erase(out.edges_.begin() + pos);
  out.rebuild_adjacency();
  return out;
}

std::vector<EdgeId> MultiGraph::edges_within(std::span<const int> nodes) const {
  std::vector<char> inside(labels_.size(), 0);
  for (int node : nodes) inside[node] = 1;
  std::vector<EdgeId> out;
  for (const Edge& e : edges_) {
    if (inside[e.u] && inside[e.v]) out.push_back(e.id);
  }
  return out;
}

DisjointSets::DisjointSets(int n) : parent_(n), sets_(n) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSets::find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (a > b) std::swap(a, b);
  parent_[b] = a;
  --sets_;
  return true;
}

std::vector<EdgeId> minimum_spanning_tree(const MultiGraph& g,
                                          const EdgeWeights& weights) {
  std::vector<const Edge*> order;
  order.reserve(g.edges().size());
  for (const Edge& e : g.edges()) order.push_back(&e);
  auto weight = [&](EdgeId id) -> const Rational& {
    auto it = weights.find(id);
    if (it == weights.end()) {
      throw Error(ErrorKind::kUnknownEdge,
                  "no weight for edge " + std::to_string(id.value));
    }
    return it->second;
  };
  std::stable_sort(order.begin(), order.end(), [&](const Edge* a, const Edge* b) {
    int c = cmp(weight(a->id), weight(b->id));
    return c != 0 ? c < 0 : a->id < b->id;
  });
  DisjointSets sets(g.node_count());
  std::vector<EdgeId> tree;
  for (const Edge* e : order) {
    if (sets.unite(e->u, e->v)) tree.push_back(e->id);
  }
  if (g.node_count() > 0 && sets.set_count() != 1) {
    throw Error(ErrorKind::kNoBasis, "graph is disconnected");
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

bool is_spanning_tree(const MultiGraph& g, std::span<const EdgeId> edges) {
  if (static_cast<int>(edges.size()) != std::max(0, g.node_count() - 1)) {
    return false;
  }
  DisjointSets sets(g.node_count());
  for (EdgeId id : edges) {
    if (!g.contains(id)) return false;
    const Edge& e = g.edge(id);
    if (!sets.unite(e.u, e.v)) return false;
  }
  return true;
}

}  // namespace rrst
