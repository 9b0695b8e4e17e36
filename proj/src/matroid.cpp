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

#include "matroid.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "error.hpp"

namespace rrst {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<EdgeId> sorted_unique(std::span<const EdgeId> elements) {
  std::vector<EdgeId> out(elements.begin(), elements.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool sorted_contains(const std::vector<EdgeId>& v, EdgeId e) {
  return std::binary_search(v.begin(), v.end(), e);
}

void sorted_erase(std::vector<EdgeId>& v, EdgeId e) {
  auto it = std::lower_bound(v.begin(), v.end(), e);
  if (it != v.end() && *it == e) v.erase(it);
}

[[noreturn]] void not_in_ground(EdgeId e) {
  throw Error(ErrorKind::kElementNotInGround,
              "element " + std::to_string(e.value) + " not in ground set");
}

// Incremental independence test used by greedy algorithms: try_add(e)
// accepts e iff current ∪ {e} stays independent.
class Augmenter {
 public:
  explicit Augmenter(const Matroid& m) : m_(m) {
    if (const MultiGraph* g = m.graph()) sets_.emplace(g->node_count());
    if (const auto* parts = m.parts()) used_.assign(parts->size(), 0);
  }

  bool try_add(EdgeId e) {
    switch (m_.family()) {
      case MatroidFamily::kGraphic: {
        if (sorted_contains(*m_.loops(), e)) return false;
        const Edge& edge = m_.graph()->edge(e);
        if (!sets_->unite(edge.u, edge.v)) return false;
        break;
      }
      case MatroidFamily::kUniform:
        if (static_cast<int>(current_.size()) >= m_.uniform_rank()) return false;
        break;
      case MatroidFamily::kPartition: {
        const auto& parts = *m_.parts();
        for (size_t i = 0; i < parts.size(); ++i) {
          if (!sorted_contains(parts[i].elements, e)) continue;
          if (used_[i] >= parts[i].cap) return false;
          ++used_[i];
          break;
        }
        break;
      }
      case MatroidFamily::kOracle: {
        current_.push_back(e);
        bool ok = m_.is_independent(current_);
        current_.pop_back();
        if (!ok) return false;
        break;
      }
    }
    current_.push_back(e);
    return true;
  }

  const std::vector<EdgeId>& current() const { return current_; }

 private:
  const Matroid& m_;
  std::optional<DisjointSets> sets_;
  std::vector<int> used_;
  std::vector<EdgeId> current_;
};

}  // namespace

Matroid Matroid::graphic(MultiGraph graph) {
  Matroid m;
  m.ground_ = graph.edge_ids();
  m.family_ = Graphic{std::move(graph), {}};
  return m;
}

Matroid Matroid::uniform(std::vector<EdgeId> ground, int rank) {
  if (rank < 0) throw Error(ErrorKind::kValidation, "uniform rank is negative");
  Matroid m;
  m.ground_ = sorted_unique(ground);
  if (m.ground_.size() != ground.size()) {
    throw Error(ErrorKind::kValidation, "duplicate element in uniform matroid");
  }
  m.family_ = Uniform{rank};
  return m;
}

Matroid Matroid::partition(std::vector<PartitionPart> parts) {
  Matroid m;
  size_t total = 0;
  for (PartitionPart& part : parts) {
    if (part.cap < 0) throw Error(ErrorKind::kValidation, "negative part cap");
    std::sort(part.elements.begin(), part.elements.end());
    total += part.elements.size();
    m.ground_.insert(m.ground_.end(), part.elements.begin(), part.elements.end());
  }
  m.ground_ = sorted_unique(m.ground_);
  if (m.ground_.size() != total) {
    throw Error(ErrorKind::kValidation, "partition parts overlap");
  }
  m.family_ = Partition{std::move(parts)};
  return m;
}

Matroid Matroid::from_oracle(std::vector<EdgeId> ground,
                             IndependenceOracle oracle) {
  Matroid m;
  m.ground_ = sorted_unique(ground);
  m.family_ = Oracle{std::move(oracle), {}};
  return m;
}

MatroidFamily Matroid::family() const {
  return static_cast<MatroidFamily>(family_.index());
}

bool Matroid::contains(EdgeId e) const { return sorted_contains(ground_, e); }

void Matroid::check_members(std::span<const EdgeId> elements) const {
  for (EdgeId e : elements) {
    if (!contains(e)) not_in_ground(e);
  }
}

const MultiGraph* Matroid::graph() const {
  const auto* g = std::get_if<Graphic>(&family_);
  return g ? &g->graph : nullptr;
}

const std::vector<EdgeId>* Matroid::loops() const {
  const auto* g = std::get_if<Graphic>(&family_);
  return g ? &g->loops : nullptr;
}

const std::vector<PartitionPart>* Matroid::parts() const {
  const auto* p = std::get_if<Partition>(&family_);
  return p ? &p->parts : nullptr;
}

int Matroid::uniform_rank() const {
  const auto* u = std::get_if<Uniform>(&family_);
  return u ? u->rank : -1;
}

bool Matroid::is_independent(std::span<const EdgeId> elements) const {
  check_members(elements);
  std::vector<EdgeId> set = sorted_unique(elements);
  return std::visit(
      Overloaded{
          [&](const Graphic& g) {
            DisjointSets sets(g.graph.node_count());
            for (EdgeId e : set) {
              if (sorted_contains(g.loops, e)) return false;
              const Edge& edge = g.graph.edge(e);
              if (!sets.unite(edge.u, edge.v)) return false;
            }
            return true;
          },
          [&](const Uniform& u) { return static_cast<int>(set.size()) <= u.rank; },
          [&](const Partition& p) {
            for (const PartitionPart& part : p.parts) {
              int count = 0;
              for (EdgeId e : set) count += sorted_contains(part.elements, e);
              if (count > part.cap) return false;
            }
            return true;
          },
          [&](const Oracle& o) {
            std::vector<EdgeId> with = set;
            with.insert(with.end(), o.contracted.begin(), o.contracted.end());
            std::sort(with.begin(), with.end());
            return o.independent(with);
          },
      },
      family_);
}

int Matroid::rank(std::span<const EdgeId> elements) const {
  check_members(elements);
  std::vector<EdgeId> set = sorted_unique(elements);
  return std::visit(
      Overloaded{
          [&](const Graphic& g) {
            DisjointSets sets(g.graph.node_count());
            int r = 0;
            for (EdgeId e : set) {
              if (sorted_contains(g.loops, e)) continue;
              const Edge& edge = g.graph.edge(e);
              r += sets.unite(edge.u, edge.v);
            }
            return r;
          },
          [&](const Uniform& u) {
            return std::min(static_cast<int>(set.size()), u.rank);
          },
          [&](const Partition& p) {
            int r = 0;
            for (const PartitionPart& part : p.parts) {
              int count = 0;
              for (EdgeId e : set) count += sorted_contains(part.elements, e);
              r += std::min(count, part.cap);
            }
            return r;
          },
          [&](const Oracle&) { return rank_by_augmentation(*this, set); },
      },
      family_);
}

Matroid Matroid::without(EdgeId e, MinorOp op) const {
  Matroid out = *this;
  sorted_erase(out.ground_, e);
  out.minors_.push_back(MinorStep{op, e});
  return out;
}

Matroid Matroid::deleted(EdgeId e) const {
  if (!contains(e)) not_in_ground(e);
  Matroid out = without(e, MinorOp::kDelete);
  std::visit(Overloaded{
                 [&](Graphic& g) {
                   if (sorted_contains(g.loops, e)) {
                     sorted_erase(g.loops, e);
                   } else {
                     g.graph = g.graph.delete_edge(e);
                   }
                 },
                 [&](Uniform&) {},
                 [&](Partition& p) {
                   for (PartitionPart& part : p.parts) sorted_erase(part.elements, e);
                 },
                 [&](Oracle&) {},
             },
             out.family_);
  return out;
}

Matroid Matroid::contracted(EdgeId e) const {
  if (!contains(e)) not_in_ground(e);
  const EdgeId single[] = {e};
  // A dependent singleton leaves the independent sets unchanged.
  const bool independent_singleton = is_independent(single);
  Matroid out = without(e, MinorOp::kContract);
  std::visit(Overloaded{
                 [&](Graphic& g) {
                   if (!independent_singleton) {
                     sorted_erase(g.loops, e);
                     return;
                   }
                   std::vector<EdgeId> new_loops;
                   g.graph = g.graph.contract_edge(e, &new_loops);
                   g.loops.insert(g.loops.end(), new_loops.begin(), new_loops.end());
                   std::sort(g.loops.begin(), g.loops.end());
                 },
                 [&](Uniform& u) {
                   if (independent_singleton) --u.rank;
                 },
                 [&](Partition& p) {
                   for (PartitionPart& part : p.parts) {
                     if (!sorted_contains(part.elements, e)) continue;
                     sorted_erase(part.elements, e);
                     if (independent_singleton) --part.cap;
                   }
                 },
                 [&](Oracle& o) {
                   if (independent_singleton) o.contracted.push_back(e);
                 },
             },
             out.family_);
  return out;
}

int rank_by_augmentation(const Matroid& m, std::span<const EdgeId> elements) {
  std::vector<EdgeId> set = sorted_unique(elements);
  std::vector<EdgeId> current;
  for (EdgeId e : set) {
    current.push_back(e);
    if (!m.is_independent(current)) current.pop_back();
  }
  return static_cast<int>(current.size());
}

std::vector<EdgeId> greedy_min_basis(const Matroid& m, const EdgeWeights& weights,
                                     int required_rank) {
  std::vector<EdgeId> order = m.ground();
  for (EdgeId e : order) {
    if (!weights.contains(e)) {
      throw Error(ErrorKind::kValidation,
                  "no weight for element " + std::to_string(e.value));
    }
  }
  std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    int c = cmp(weights.at(a), weights.at(b));
    return c != 0 ? c < 0 : a < b;
  });
  Augmenter aug(m);
  for (EdgeId e : order) aug.try_add(e);
  std::vector<EdgeId> basis = aug.current();
  std::sort(basis.begin(), basis.end());
  if (required_rank >= 0 && static_cast<int>(basis.size()) != required_rank) {
    throw Error(ErrorKind::kNoBasis, "matroid has no basis of the demanded size " +
                                         std::to_string(required_rank));
  }
  return basis;
}

std::vector<std::vector<EdgeId>> enumerate_bases(const Matroid& m) {
  const auto& ground = m.ground();
  if (ground.size() > kMaxEnumerationGround) {
    throw Error(ErrorKind::kGroundTooLarge,
                "ground set of " + std::to_string(ground.size()) +
                    " elements exceeds the enumeration limit");
  }
  const int r = m.full_rank();
  std::vector<std::vector<EdgeId>> bases;
  std::vector<EdgeId> current;
  // Independence is hereditary, so dependent prefixes are pruned.
  auto extend = [&](auto&& self, size_t next) -> void {
    if (static_cast<int>(current.size()) == r) {
      bases.push_back(current);
      return;
    }
    const size_t needed = r - current.size();
    for (size_t i = next; i + needed <= ground.size(); ++i) {
      current.push_back(ground[i]);
      if (m.is_independent(current)) self(self, i + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  return bases;
}

MatroidInstance make_matroid_instance(Matroid matroid, CostMap costs, int k) {
  const int r = matroid.full_rank();
  if (k < 0 || k > r) {
    throw Error(ErrorKind::kValidation, "k = " + std::to_string(k) +
                                            " outside [0, " + std::to_string(r) + "]");
  }
  if (costs.size() != matroid.ground().size()) {
    throw Error(ErrorKind::kValidation, "costs do not match the ground set");
  }
  for (EdgeId e : matroid.ground()) {
    auto it = costs.find(e);
    if (it == costs.end()) {
      throw Error(ErrorKind::kValidation,
                  "element " + std::to_string(e.value) + " has no costs");
    }
    const CostTriple& t = it->second;
    if (sgn(t.C) < 0 || sgn(t.c) < 0 || sgn(t.d) < 0) {
      throw Error(ErrorKind::kValidation,
                  "element " + std::to_string(e.value) + " has a negative cost");
    }
  }
  return MatroidInstance{std::move(matroid), std::move(costs), k};
}

MatroidInstance graphic_instance(const Instance& instance) {
  return make_matroid_instance(Matroid::graphic(instance.graph), instance.costs,
                               instance.k);
}

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw Error(ErrorKind::kParse, std::string("missing field \"") + key + "\"");
  }
  return doc.at(key);
}

int int_field(const json& doc, const char* key) {
  const json& v = field(doc, key);
  if (!v.is_number_integer()) {
    throw Error(ErrorKind::kParse, std::string("field \"") + key +
                                       "\" must be an integer");
  }
  return v.get<int>();
}

}  // namespace

MatroidInstance matroid_instance_from_json(const json& doc) {
  const json& family_field = field(doc, "family");
  if (!family_field.is_string()) throw Error(ErrorKind::kParse, "\"family\" must be a string");
  const std::string family = family_field.get<std::string>();
  const int k = int_field(doc, "k");
  CostMap costs;
  for (const json& item : field(doc, "costs")) {
    EdgeId id{int_field(item, "id")};
    CostTriple t{parse_cost(field(item, "C")), parse_cost(field(item, "c")),
                 parse_cost(field(item, "d"))};
    if (!costs.emplace(id, std::move(t)).second) {
      throw Error(ErrorKind::kValidation, "duplicate cost entry " + std::to_string(id.value));
    }
  }
  std::vector<EdgeId> ids;
  for (const auto& [id, t] : costs) ids.push_back(id);

  if (family == "graphic") {
    std::vector<Edge> edges;
    for (const json& item : field(doc, "edges")) {
      edges.push_back(Edge{EdgeId{int_field(item, "id")}, int_field(item, "u"),
                           int_field(item, "v")});
    }
    return make_matroid_instance(
        Matroid::graphic(MultiGraph(int_field(doc, "nodes"), std::move(edges))),
        std::move(costs), k);
  }
  if (family == "uniform") {
    return make_matroid_instance(Matroid::uniform(ids, int_field(doc, "rank")),
                                 std::move(costs), k);
  }
  if (family == "partition") {
    std::vector<PartitionPart> parts;
    for (const json& item : field(doc, "parts")) {
      PartitionPart part;
      for (const json& e : field(item, "elements")) {
        if (!e.is_number_integer()) throw Error(ErrorKind::kParse, "element ids must be integers");
        part.elements.push_back(EdgeId{e.get<int>()});
      }
      part.cap = int_field(item, "cap");
      parts.push_back(std::move(part));
    }
    return make_matroid_instance(Matroid::partition(std::move(parts)),
                                 std::move(costs), k);
  }
  throw Error(ErrorKind::kParse, "unknown matroid family \"" + family + "\"");
}

MatroidInstance load_matroid_instance(std::string_view text) {
  try {
    return matroid_instance_from_json(json::parse(text));
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::kParse, ex.what());
  }
}

ordered_json matroid_instance_to_json(const MatroidInstance& instance) {
  const Matroid& m = instance.matroid;
  ordered_json doc;
  switch (m.family()) {
    case MatroidFamily::kGraphic: {
      doc["family"] = "graphic";
      doc["nodes"] = m.graph()->node_count();
      ordered_json edges = ordered_json::array();
      for (const Edge& e : m.graph()->edges()) {
        edges.push_back({{"id", e.id.value}, {"u", e.u}, {"v", e.v}});
      }
      doc["edges"] = std::move(edges);
      break;
    }
    case MatroidFamily::kUniform:
      doc["family"] = "uniform";
      doc["rank"] = m.uniform_rank();
      break;
    case MatroidFamily::kPartition: {
      doc["family"] = "partition";
      ordered_json parts = ordered_json::array();
      for (const PartitionPart& part : *m.parts()) {
        ordered_json ids = ordered_json::array();
        for (EdgeId e : part.elements) ids.push_back(e.value);
        parts.push_back({{"elements", std::move(ids)}, {"cap", part.cap}});
      }
      doc["parts"] = std::move(parts);
      break;
    }
    case MatroidFamily::kOracle:
      throw Error(ErrorKind::kValidation, "oracle matroids cannot be serialized");
  }
  doc["k"] = instance.k;
  ordered_json costs = ordered_json::array();
  for (const auto& [id, t] : instance.costs) {
    ordered_json item;
    item["id"] = id.value;
    item["C"] = cost_to_json(t.C);
    item["c"] = cost_to_json(t.c);
    item["d"] = cost_to_json(t.d);
    costs.push_back(std::move(item));
  }
  doc["costs"] = std::move(costs);
  return doc;
}

}  // namespace rrst
