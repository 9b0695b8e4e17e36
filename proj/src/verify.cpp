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

#include "verify.hpp"

#include <algorithm>
#include <iterator>
#include <vector>

namespace rrst {
namespace {

template <class IsBasis>
std::optional<std::string> check(const CostMap& costs, int required,
                                 const Solution& solution, const char* property,
                                 IsBasis&& is_basis) {
  auto known = [&](const std::vector<EdgeId>& set) {
    return std::all_of(set.begin(), set.end(),
                       [&](EdgeId e) { return costs.count(e) > 0; });
  };
  auto distinct = [](std::vector<EdgeId> set) {
    std::sort(set.begin(), set.end());
    return std::adjacent_find(set.begin(), set.end()) == set.end();
  };
  for (auto [label, set] : {std::pair{"X", &solution.X}, std::pair{"Y", &solution.Y}}) {
    if (!known(*set) || !distinct(*set) || !is_basis(*set)) {
      return std::string(label) + " not " + property;
    }
  }
  std::vector<EdgeId> x = solution.X;
  std::vector<EdgeId> y = solution.Y;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  std::vector<EdgeId> common;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
  if (static_cast<int>(common.size()) < required) {
    return "overlap " + std::to_string(common.size()) + " below required " +
           std::to_string(required);
  }
  for (EdgeId e : solution.Z) {
    if (!std::binary_search(common.begin(), common.end(), e)) return std::string("Z not within X ∩ Y");
  }
  Rational first = 0;
  Rational second = 0;
  for (EdgeId e : x) first += costs.at(e).C;
  for (EdgeId e : y) second += costs.at(e).worst_second_stage();
  if (first != solution.first_stage || second != solution.second_stage ||
      first + second != solution.total) {
    return std::string("cost mismatch");
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> verify_solution(const Instance& instance,
                                           const Solution& solution) {
  return check(instance.costs, instance.required_overlap(), solution, "spanning",
               [&](const std::vector<EdgeId>& set) {
                 return is_spanning_tree(instance.graph, set);
               });
}

std::optional<std::string> verify_solution(const MatroidInstance& instance,
                                           const Solution& solution) {
  const int r = instance.matroid.full_rank();
  return check(instance.costs, instance.required_overlap(), solution, "a basis",
               [&](const std::vector<EdgeId>& set) {
                 return static_cast<int>(set.size()) == r &&
                        instance.matroid.is_independent(set);
               });
}

}  // namespace rrst
