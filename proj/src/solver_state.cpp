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

#include "solver_state.hpp"

#include <algorithm>
#include <string>

#include "error.hpp"

namespace rrst {

std::vector<EdgeId> SideState::elements() const {
  if (is_graph()) return graph().edge_ids();
  return matroid().ground();
}

bool SideState::contains(EdgeId e) const {
  return is_graph() ? graph().contains(e) : matroid().contains(e);
}

int SideState::target() const {
  if (is_graph()) return std::max(0, graph().node_count() - 1);
  return matroid().full_rank();
}

bool SideState::complete() const {
  if (is_graph()) return graph().node_count() <= 1;
  return matroid().ground().empty();
}

bool SideState::has_chosen(EdgeId e) const {
  return std::binary_search(chosen_.begin(), chosen_.end(), e);
}

void SideState::remove(EdgeId e) {
  if (is_graph()) {
    structure_ = graph().delete_edge(e);
  } else {
    structure_ = matroid().deleted(e);
  }
}

void SideState::fix(EdgeId e) {
  if (is_graph()) {
    structure_ = graph().contract_edge(e);
  } else {
    structure_ = matroid().contracted(e);
  }
  chosen_.insert(std::lower_bound(chosen_.begin(), chosen_.end(), e), e);
}

bool SolverState::in_ez(EdgeId e) const {
  return std::binary_search(ez.begin(), ez.end(), e);
}

}  // namespace rrst
