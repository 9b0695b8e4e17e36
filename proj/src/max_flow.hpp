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

#include "rational.hpp"

namespace rrst {

// Dinic max-flow over exact capacities (Rational or int64_t).
template <class Cap>
class BasicFlowNetwork {
 public:
  explicit BasicFlowNetwork(int node_count);

  void add_arc(int from, int to, const Cap& capacity);
  Cap max_flow(int source, int sink);
  // Nodes reachable from the source in the final residual graph: the
  // inclusion-minimal source side of a minimum cut.
  std::vector<char> source_side(int source) const;

 private:
  struct Arc {
    int to;
    int rev;
    Cap residual;
  };

  bool build_levels(int source, int sink);
  Cap push(int node, int sink, const Cap& limit);

  std::vector<std::vector<Arc>> arcs_;
  std::vector<int> level_;
  std::vector<size_t> cursor_;
};

using FlowNetwork = BasicFlowNetwork<Rational>;
using IntegerFlowNetwork = BasicFlowNetwork<std::int64_t>;

extern template class BasicFlowNetwork<Rational>;
extern template class BasicFlowNetwork<std::int64_t>;

}  // namespace rrst
