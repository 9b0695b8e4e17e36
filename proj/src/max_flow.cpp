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

#include "max_flow.hpp"

#include <queue>

namespace rrst {
namespace {

int sign(const Rational& v) { return sign(v); }
int sign(std::int64_t v) { return (v > 0) - (v < 0); }

}  // namespace

template <class Cap>
BasicFlowNetwork<Cap>::BasicFlowNetwork(int node_count) : arcs_(node_count) {}

template <class Cap>
void BasicFlowNetwork<Cap>::add_arc(int from, int to, const Cap& capacity) {
  arcs_[from].push_back(Arc{to, static_cast<int>(arcs_[to].size()), capacity});
  arcs_[to].push_back(Arc{from, static_cast<int>(arcs_[from].size()) - 1, Cap(0)});
}

template <class Cap>
bool BasicFlowNetwork<Cap>::build_levels(int source, int sink) {
  level_.assign(arcs_.size(), -1);
  std::queue<int> queue;
  level_[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    int node = queue.front();
    queue.pop();
    for (const Arc& arc : arcs_[node]) {
      if (level_[arc.to] < 0 && sign(arc.residual) > 0) {
        level_[arc.to] = level_[node] + 1;
        queue.push(arc.to);
      }
    }
  }
  return level_[sink] >= 0;
}

template <class Cap>
Cap BasicFlowNetwork<Cap>::push(int node, int sink, const Cap& limit) {
  if (node == sink) return limit;
  for (size_t& i = cursor_[node]; i < arcs_[node].size(); ++i) {
    Arc& arc = arcs_[node][i];
    if (sign(arc.residual) <= 0 || level_[arc.to] != level_[node] + 1) continue;
    Cap sent = push(arc.to, sink, limit < arc.residual ? limit : arc.residual);
    if (sign(sent) > 0) {
      arc.residual -= sent;
      arcs_[arc.to][arc.rev].residual += sent;
      return sent;
    }
  }
  return Cap(0);
}

template <class Cap>
Cap BasicFlowNetwork<Cap>::max_flow(int source, int sink) {
  Cap total = 0;
  Cap unbounded = 1;
  for (const Arc& arc : arcs_[source]) unbounded += arc.residual;
  while (build_levels(source, sink)) {
    cursor_.assign(arcs_.size(), 0);
    while (true) {
      Cap sent = push(source, sink, unbounded);
      if (sign(sent) == 0) break;
      total += sent;
    }
  }
  return total;
}

template <class Cap>
std::vector<char> BasicFlowNetwork<Cap>::source_side(int source) const {
  std::vector<char> seen(arcs_.size(), 0);
  std::vector<int> stack = {source};
  seen[source] = 1;
  while (!stack.empty()) {
    int node = stack.back();
    stack.pop_back();
    for (const Arc& arc : arcs_[node]) {
      if (!seen[arc.to] && sign(arc.residual) > 0) {
        seen[arc.to] = 1;
        stack.push_back(arc.to);
      }
    }
  }
  return seen;
}

template class BasicFlowNetwork<Rational>;
template class BasicFlowNetwork<std::int64_t>;

}  // namespace rrst
