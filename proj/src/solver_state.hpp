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

#include <variant>
#include <vector>

#include "graph.hpp"
#include "matroid.hpp"

namespace rrst {

// One side (first stage X or second stage Y) of the iterative relaxation:
// the contracted graph G_X (spanning tree variant) or the minor M_X (matroid
// variant) whose ground set is the live element set E_X, plus the elements
// already fixed into the solution.
class SideState {
 public:
  SideState() = default;
  explicit SideState(MultiGraph graph) : structure_(std::move(graph)) {}
  explicit SideState(Matroid matroid) : structure_(std::move(matroid)) {}

  bool is_graph() const { return std::holds_alternative<MultiGraph>(structure_); }
  const MultiGraph& graph() const { return std::get<MultiGraph>(structure_); }
  const Matroid& matroid() const { return std::get<Matroid>(structure_); }

  // Live elements, sorted.
  std::vector<EdgeId> elements() const;
  bool contains(EdgeId e) const;
  // |V_X| - 1 for graphs, rank(E_X) for matroids.
  int target() const;
  // Graph side: |V_X| <= 1. Matroid side: E_X empty.
  bool complete() const;

  const std::vector<EdgeId>& chosen() const { return chosen_; }
  bool has_chosen(EdgeId e) const;

  void remove(EdgeId e);
  // Adds e to the solution and contracts it.
  void fix(EdgeId e);

 private:
  std::variant<MultiGraph, Matroid> structure_;
  std::vector<EdgeId> chosen_;  // sorted
};

// Live tuple of the iterative algorithm.
struct SolverState {
  SideState x;
  SideState y;
  std::vector<EdgeId> ez;  // E_Z, sorted
  int budget = 0;          // L
  std::vector<EdgeId> z;   // Z, sorted
  int required_overlap = 0;
  int iteration = 0;

  bool in_ez(EdgeId e) const;
};

}  // namespace rrst
