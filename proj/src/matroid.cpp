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

#include "rainbow/matroid.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rainbow {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

std::vector<char> membership(const ElementSet& ground) {
  std::vector<char> member(ground.empty() ? 0 : static_cast<std::size_t>(ground.back()) + 1, 0);
  for (ElementId e : ground) member[e] = 1;
  return member;
}

ElementSet iota_set(int n) {
  ElementSet out(static_cast<std::size_t>(n));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

}  // namespace

Matroid::Matroid(ElementSet ground) : ground_(make_set(std::move(ground))) {
  if (!ground_.empty() && ground_.front() < 0) {
    throw std::invalid_argument("negative element id in ground set");
  }
  member_ = membership(ground_);
}

int Matroid::rank(std::span<const ElementId> s) const {
  for (ElementId e : s) {
    if (!contains(e)) {
      throw std::invalid_argument("unknown element id " + std::to_string(e));
    }
  }
  return rank_of(s);
}

GraphicMatroid::GraphicMatroid(Multigraph graph)
    : Matroid(iota_set(graph.edge_count())), graph_(std::move(graph)) {}

std::vector<int> GraphicMatroid::contracted_state(std::span<const ElementId> edges) const {
  std::vector<int> parent(static_cast<std::size_t>(graph_.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  for (ElementId e : edges) {
    const Edge& ed = graph_.edge(e);
    const int a = find_root(parent, ed.u);
    const int b = find_root(parent, ed.v);
    if (a != b) parent[a] = b;
  }
  return parent;
}

int GraphicMatroid::rank_over(const std::vector<int>& state, std::span<const ElementId> s) const {
  std::vector<int> parent = state;
  int r = 0;
  for (ElementId e : s) {
    const Edge& ed = graph_.edge(e);
    const int a = find_root(parent, ed.u);
    const int b = find_root(parent, ed.v);
    if (a != b) {
      parent[a] = b;
      ++r;
    }
  }
  return r;
}

int GraphicMatroid::rank_of(std::span<const ElementId> s) const {
  UnionFind uf(graph_.vertex_count());
  int r = 0;
  for (ElementId e : s) {
    if (uf.unite(graph_.edge(e).u, graph_.edge(e).v)) ++r;
  }
  return r;
}

UniformMatroid::UniformMatroid(int n, int r) : Matroid(iota_set(n)), cap_(r) {
  if (n < 0 || r < 0) throw std::invalid_argument("uniform matroid needs n, r >= 0");
}

int UniformMatroid::rank_of(std::span<const ElementId> s) const {
  return std::min(static_cast<int>(s.size()), cap_);
}

PartitionMatroid::PartitionMatroid(Partition partition, ElementSet ground)
    : Matroid(std::move(ground)), partition_(std::move(partition)) {
  if (!is_subset(partition_.covered(), this->ground())) {
    throw std::invalid_argument("partition class leaves the ground set");
  }
}

int PartitionMatroid::rank_of(std::span<const ElementId> s) const {
  std::vector<char> hit(partition_.class_count(), 0);
  int r = 0;
  for (ElementId e : s) {
    if (auto c = partition_.class_of(e)) {
      if (!hit[*c]) {
        hit[*c] = 1;
        ++r;
      }
    } else {
      ++r;
    }
  }
  return r;
}

MinorView::Flat MinorView::flatten(MatroidPtr root, ElementSet contracted, ElementSet deleted) {
  contracted = make_set(std::move(contracted));
  deleted = make_set(std::move(deleted));
  if (!root) throw std::invalid_argument("minor of a null matroid");
  if (!is_disjoint(contracted, deleted)) {
    throw std::invalid_argument("contracted and deleted sets overlap");
  }
  for (const ElementSet* s : {&contracted, &deleted}) {
    for (ElementId e : *s) {
      if (!root->contains(e)) throw std::invalid_argument("unknown element id " + std::to_string(e));
    }
  }
  if (const auto* inner = dynamic_cast<const MinorView*>(root.get())) {
    return {inner->root(), set_union(inner->contracted(), contracted),
            set_union(inner->deleted(), deleted)};
  }
  return {std::move(root), std::move(contracted), std::move(deleted)};
}

MinorView::MinorView(MatroidPtr root, ElementSet contracted, ElementSet deleted)
    : MinorView(flatten(std::move(root), std::move(contracted), std::move(deleted))) {}

MinorView::MinorView(Flat f)
    : Matroid(set_difference(set_difference(f.root->ground(), f.contracted), f.deleted)),
      root_(std::move(f.root)),
      contracted_(std::move(f.contracted)),
      deleted_(std::move(f.deleted)) {
  contracted_rank_ = root_->rank(contracted_);
  graphic_root_ = dynamic_cast<const GraphicMatroid*>(root_.get());
  if (graphic_root_ != nullptr) graphic_state_ = graphic_root_->contracted_state(contracted_);
}

int MinorView::rank_of(std::span<const ElementId> s) const {
  if (graphic_root_ != nullptr) return graphic_root_->rank_over(graphic_state_, s);
  ElementSet with = contracted_;
  with.insert(with.end(), s.begin(), s.end());
  return root_->rank(with) - contracted_rank_;
}

namespace {

ElementSet sum_ground(const std::vector<MatroidPtr>& components) {
  ElementSet all;
  std::size_t total = 0;
  for (const auto& c : components) {
    if (!c) throw std::invalid_argument("null direct-sum component");
    all.insert(all.end(), c->ground().begin(), c->ground().end());
    total += c->size();
  }
  all = make_set(std::move(all));
  if (all.size() != total) throw std::invalid_argument("direct-sum components overlap");
  return all;
}

}  // namespace

DirectSumView::DirectSumView(std::vector<MatroidPtr> components)
    : Matroid(sum_ground(components)), components_(std::move(components)) {
  owner_.assign(ground().empty() ? 0 : static_cast<std::size_t>(ground().back()) + 1, -1);
  for (std::size_t i = 0; i < components_.size(); ++i) {
    for (ElementId e : components_[i]->ground()) owner_[e] = static_cast<std::int32_t>(i);
  }
}

int DirectSumView::rank_of(std::span<const ElementId> s) const {
  std::vector<ElementSet> split(components_.size());
  for (ElementId e : s) split[owner_[e]].push_back(e);
  int r = 0;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (!split[i].empty()) r += components_[i]->rank(split[i]);
  }
  return r;
}

MatroidPtr make_graphic(Multigraph graph) {
  return std::make_shared<const GraphicMatroid>(std::move(graph));
}

MatroidPtr minor(const MatroidPtr& m, std::span<const ElementId> contract,
                 std::span<const ElementId> drop) {
  ElementSet c(contract.begin(), contract.end());
  ElementSet d(drop.begin(), drop.end());
  for (const ElementSet* s : {&c, &d}) {
    for (ElementId e : *s) {
      if (!m->contains(e)) throw std::invalid_argument("unknown element id " + std::to_string(e));
    }
  }
  return std::make_shared<const MinorView>(m, std::move(c), std::move(d));
}

MatroidPtr restriction(const MatroidPtr& m, std::span<const ElementId> keep) {
  const ElementSet k = make_set({keep.begin(), keep.end()});
  for (ElementId e : k) {
    if (!m->contains(e)) throw std::invalid_argument("unknown element id " + std::to_string(e));
  }
  return minor(m, {}, set_difference(m->ground(), k));
}

MatroidPtr deletion(const MatroidPtr& m, std::span<const ElementId> drop) {
  return minor(m, {}, drop);
}

MatroidPtr contraction(const MatroidPtr& m, std::span<const ElementId> contract) {
  return minor(m, contract, {});
}

MatroidPtr direct_sum(std::vector<MatroidPtr> components) {
  return std::make_shared<const DirectSumView>(std::move(components));
}

ElementSet greedy_basis(const Matroid& m, std::span<const ElementId> candidates) {
  ElementSet kept;
  for (ElementId e : candidates) {
    kept.push_back(e);
    if (m.rank(kept) < static_cast<int>(kept.size())) kept.pop_back();
  }
  return make_set(std::move(kept));
}

namespace {

struct LabeledEdge {
  int u;
  int v;
  ElementId id;
};

// Blocks (biconnected components) of a loopless multigraph, as edge-id lists.
std::vector<ElementSet> blocks(int vertex_count, const std::vector<LabeledEdge>& edges) {
  std::vector<std::vector<std::pair<int, std::size_t>>> adj(static_cast<std::size_t>(vertex_count));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    adj[edges[i].u].emplace_back(edges[i].v, i);
    adj[edges[i].v].emplace_back(edges[i].u, i);
  }
  std::vector<int> disc(static_cast<std::size_t>(vertex_count), -1);
  std::vector<int> low(static_cast<std::size_t>(vertex_count), 0);
  std::vector<std::size_t> stack;
  std::vector<ElementSet> out;
  int timer = 0;
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::function<void(int, std::size_t)> dfs = [&](int u, std::size_t via) {
    disc[u] = low[u] = timer++;
    for (auto [v, idx] : adj[u]) {
      if (idx == via) continue;
      if (disc[v] == -1) {
        stack.push_back(idx);
        dfs(v, idx);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          ElementSet block;
          std::size_t top;
          do {
            top = stack.back();
            stack.pop_back();
            block.push_back(edges[top].id);
          } while (top != idx);
          out.push_back(make_set(std::move(block)));
        }
      } else if (disc[v] < disc[u]) {
        stack.push_back(idx);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  };
  for (int v = 0; v < vertex_count; ++v) {
    if (disc[v] == -1) dfs(v, kNone);
  }
  return out;
}

std::vector<ElementSet> sorted_classes(std::vector<ElementSet> classes) {
  std::sort(classes.begin(), classes.end(),
            [](const ElementSet& a, const ElementSet& b) { return a.front() < b.front(); });
  return classes;
}

// Graph path: works for a graphic matroid and for any minor of one, by
// rebuilding the minor's graph (contracted edges merge their endpoints).
std::optional<std::vector<ElementSet>> graphic_components(const Matroid& m) {
  const GraphicMatroid* g = dynamic_cast<const GraphicMatroid*>(&m);
  std::vector<int> state;
  if (g != nullptr) {
    state = g->contracted_state({});
  } else if (const auto* mv = dynamic_cast<const MinorView*>(&m)) {
    g = dynamic_cast<const GraphicMatroid*>(mv->root().get());
    if (g == nullptr) return std::nullopt;
    state = g->contracted_state(mv->contracted());
  } else {
    return std::nullopt;
  }
  std::vector<int> label(state.size(), -1);
  int n = 0;
  for (std::size_t v = 0; v < state.size(); ++v) {
    const int r = find_root(state, static_cast<int>(v));
    if (label[r] == -1) label[r] = n++;
  }
  std::vector<ElementSet> out;
  std::vector<LabeledEdge> edges;
  for (ElementId e : m.ground()) {
    const Edge& ed = g->graph().edge(e);
    const int a = label[find_root(state, ed.u)];
    const int b = label[find_root(state, ed.v)];
    if (a == b) {
      out.push_back({e});  // loop in the minor
    } else {
      edges.push_back({a, b, e});
    }
  }
  for (auto& b : blocks(n, edges)) out.push_back(std::move(b));
  return sorted_classes(std::move(out));
}

}  // namespace

std::vector<ElementSet> components_by_circuits(const Matroid& m) {
  const ElementSet& ground = m.ground();
  std::vector<int> pos(ground.empty() ? 0 : static_cast<std::size_t>(ground.back()) + 1, -1);
  for (std::size_t i = 0; i < ground.size(); ++i) pos[ground[i]] = static_cast<int>(i);
  UnionFind uf(static_cast<int>(ground.size()));
  const ElementSet basis = greedy_basis(m, ground);
  for (ElementId e : set_difference(ground, basis)) {
    const ElementId single[] = {e};
    if (m.rank(single) == 0) continue;  // loops form their own class
    for (ElementId b : basis) {
      ElementSet swapped = basis;
      *std::lower_bound(swapped.begin(), swapped.end(), b) = e;
      if (m.rank(swapped) == static_cast<int>(basis.size())) uf.unite(pos[e], pos[b]);
    }
  }
  std::map<int, ElementSet> grouped;
  for (ElementId e : ground) grouped[uf.find(pos[e])].push_back(e);
  std::vector<ElementSet> out;
  for (auto& [root, cls] : grouped) out.push_back(std::move(cls));
  return sorted_classes(std::move(out));
}

std::vector<ElementSet> components(const Matroid& m) {
  if (m.size() == 0) return {};
  if (auto fast = graphic_components(m)) return *std::move(fast);
  return components_by_circuits(m);
}

}  // namespace rainbow
