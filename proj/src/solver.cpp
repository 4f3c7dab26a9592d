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

#include "rainbow/solver.hpp"

#include <chrono>
#include <numeric>

#include "rainbow/random.hpp"

namespace rainbow {
namespace {

// Union-find without path compression so unions can be undone in LIFO order.
class RollbackDsu {
 public:
  explicit RollbackDsu(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) const {
    while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
    history_.push_back(b);
    return true;
  }
  void undo() {
    const int b = history_.back();
    history_.pop_back();
    const int a = parent_[static_cast<std::size_t>(b)];
    size_[static_cast<std::size_t>(a)] -= size_[static_cast<std::size_t>(b)];
    parent_[static_cast<std::size_t>(b)] = b;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

struct BudgetExceeded {};

struct Item {
  int u = 0;
  int v = 0;
  std::vector<int> groups;
};

// Assigns every item to one of k forests on n vertices so that each forest
// ends with n-1 items and no group exceeds its per-forest capacity.
class TreeSearch {
 public:
  TreeSearch(int n, int k, std::vector<Item> items, std::vector<int> capacity, const SearchConfig& cfg)
      : n_(n),
        k_(k),
        items_(std::move(items)),
        capacity_(std::move(capacity)),
        cfg_(cfg),
        assign_(items_.size(), -1),
        count_(static_cast<std::size_t>(k), 0),
        use_(static_cast<std::size_t>(k), std::vector<int>(capacity_.size(), 0)),
        start_(std::chrono::steady_clock::now()) {
    for (int t = 0; t < k; ++t) dsu_.emplace_back(n);
    std::vector<int> order(items_.size());
    std::iota(order.begin(), order.end(), 0);
    if (!cfg.deterministic) Rng(cfg.seed, 0x736f6c).shuffle(std::span<int>(order));
    auto tightness = [&](int i) {
      int best = 0;
      for (int gid : items_[static_cast<std::size_t>(i)].groups) best = std::max(best, members_of(gid));
      return best;
    };
    group_size_.assign(capacity_.size(), 0);
    for (const Item& it : items_) {
      for (int gid : it.groups) ++group_size_[static_cast<std::size_t>(gid)];
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return tightness(a) > tightness(b); });
    rank_.assign(items_.size(), 0);
    for (std::size_t r = 0; r < order.size(); ++r) rank_[static_cast<std::size_t>(order[r])] = static_cast<int>(r);
  }

  SearchResult run() {
    SearchResult res;
    const long long need = static_cast<long long>(k_) * std::max(n_ - 1, 0);
    try {
      if (static_cast<long long>(items_.size()) != need) {
        res.status = SearchStatus::Infeasible;
      } else {
        res.status = search(0) ? SearchStatus::Found : SearchStatus::Infeasible;
      }
    } catch (const BudgetExceeded&) {
      res.status = SearchStatus::Exhausted;
    }
    if (res.status == SearchStatus::Found) {
      res.solution.parts.resize(static_cast<std::size_t>(k_));
      for (std::size_t i = 0; i < items_.size(); ++i) {
        res.solution.parts[static_cast<std::size_t>(assign_[i])].push_back(static_cast<ElementId>(i));
      }
    }
    res.nodes = nodes_;
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return res;
  }

 private:
  int members_of(int gid) const { return group_size_.empty() ? 0 : group_size_[static_cast<std::size_t>(gid)]; }

  bool fits(std::size_t i, int t) const {
    const Item& it = items_[i];
    if (count_[static_cast<std::size_t>(t)] >= n_ - 1) return false;
    for (int gid : it.groups) {
      if (use_[static_cast<std::size_t>(t)][static_cast<std::size_t>(gid)] >= capacity_[static_cast<std::size_t>(gid)]) return false;
    }
    const RollbackDsu& d = dsu_[static_cast<std::size_t>(t)];
    return d.find(it.u) != d.find(it.v);
  }

  // Tree t can still become spanning only if its current forest together
  // with every unassigned item it could take connects all vertices.
  bool completable(int t) const {
    UnionFind uf(n_);
    const RollbackDsu& d = dsu_[static_cast<std::size_t>(t)];
    for (int v = 0; v < n_; ++v) uf.unite(v, d.find(v));
    for (std::size_t i = 0; i < items_.size() && uf.components() > 1; ++i) {
      if (assign_[i] >= 0) continue;
      bool blocked = false;
      for (int gid : items_[i].groups) {
        if (use_[static_cast<std::size_t>(t)][static_cast<std::size_t>(gid)] >= capacity_[static_cast<std::size_t>(gid)]) blocked = true;
      }
      if (!blocked) uf.unite(items_[i].u, items_[i].v);
    }
    return uf.components() <= 1;
  }

  void tick() {
    ++nodes_;
    if (nodes_ > cfg_.node_budget) throw BudgetExceeded{};
    if ((nodes_ & 255U) == 0) {
      const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
      if (elapsed > cfg_.time_budget_seconds) throw BudgetExceeded{};
    }
  }

  bool search(std::size_t assigned) {
    tick();
    if (assigned == items_.size()) return true;
    for (int t = 0; t < k_; ++t) {
      if (!completable(t)) return false;
    }
    const int open = std::min(k_ - 1, max_used_ + 1);
    std::size_t best = items_.size();
    int best_options = k_ + 1;
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (assign_[i] >= 0) continue;
      int options = 0;
      for (int t = 0; t <= open; ++t) options += fits(i, t) ? 1 : 0;
      if (options < best_options || (options == best_options && rank_[i] < rank_[best])) {
        best = i;
        best_options = options;
        if (options == 0) return false;
      }
    }
    for (int t = 0; t <= open; ++t) {
      if (!fits(best, t)) continue;
      place(best, t);
      const int saved_max = max_used_;
      max_used_ = std::max(max_used_, t);
      const bool ok = search(assigned + 1);
      max_used_ = saved_max;
      if (ok) return true;
      unplace(best, t);
    }
    return false;
  }

  void place(std::size_t i, int t) {
    assign_[i] = t;
    ++count_[static_cast<std::size_t>(t)];
    for (int gid : items_[i].groups) ++use_[static_cast<std::size_t>(t)][static_cast<std::size_t>(gid)];
    dsu_[static_cast<std::size_t>(t)].unite(items_[i].u, items_[i].v);
  }

  void unplace(std::size_t i, int t) {
    assign_[i] = -1;
    --count_[static_cast<std::size_t>(t)];
    for (int gid : items_[i].groups) --use_[static_cast<std::size_t>(t)][static_cast<std::size_t>(gid)];
    dsu_[static_cast<std::size_t>(t)].undo();
  }

  int n_;
  int k_;
  std::vector<Item> items_;
  std::vector<int> capacity_;
  SearchConfig cfg_;
  std::vector<int> assign_;
  std::vector<int> count_;
  std::vector<std::vector<int>> use_;
  std::vector<RollbackDsu> dsu_;
  std::vector<int> group_size_;
  std::vector<int> rank_;
  int max_used_ = -1;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

void check_config(const SearchConfig& cfg) {
  if (cfg.node_budget == 0 || !(cfg.time_budget_seconds > 0)) throw std::invalid_argument("search budgets must be positive");
}

}  // namespace

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found:
      return "found";
    case SearchStatus::Infeasible:
      return "infeasible";
    case SearchStatus::Exhausted:
      return "exhausted";
  }
  return "unknown";
}

SearchResult solve_rstkf(const RstkfInstance& inst, const SearchConfig& cfg) {
  check_config(cfg);
  if (inst.k < 1) throw std::invalid_argument("k must be positive");
  const Multigraph& g = inst.graph;
  std::vector<Item> items;
  for (const Edge& e : g.edges()) items.push_back({e.u, e.v, {}});
  std::vector<int> capacity;
  for (const auto& cl : inst.partition.classes()) {
    if (cl.back() >= g.edge_count()) throw std::invalid_argument("partition names an unknown edge");
    if (cl.size() < 2) continue;
    const int gid = static_cast<int>(capacity.size());
    capacity.push_back(1);
    for (ElementId e : cl) items[static_cast<std::size_t>(e)].groups.push_back(gid);
  }
  return TreeSearch(std::max(g.vertex_count(), 1), inst.k, std::move(items), std::move(capacity), cfg).run();
}

SearchResult solve_bstkf(const BstkfInstance& inst, const SearchConfig& cfg) {
  check_config(cfg);
  if (inst.k < 1) throw std::invalid_argument("k must be positive");
  const Digraph& d = inst.digraph;
  if (static_cast<int>(inst.g.size()) != d.vertex_count()) throw std::invalid_argument("one indegree bound per vertex required");
  std::vector<Item> items;
  for (const Arc& a : d.arcs()) items.push_back({a.tail, a.head, {a.head}});
  std::vector<int> capacity(inst.g.begin(), inst.g.end());
  for (int c : capacity) {
    if (c < 0) throw std::invalid_argument("indegree bounds must be nonnegative");
  }
  return TreeSearch(std::max(d.vertex_count(), 1), inst.k, std::move(items), std::move(capacity), cfg).run();
}

std::optional<Assignment> solve_nae3sat(const Nae3SatInstance& inst) {
  if (inst.variables > 25) throw InstanceTooLarge("enumeration is limited to 25 variables");
  if (inst.variables < 0) throw std::invalid_argument("negative variable count");
  for (const auto& cl : inst.clauses) {
    for (int x : cl) {
      if (x < 0 || x >= inst.variables) throw std::invalid_argument("clause names an unknown variable");
    }
  }
  const std::uint32_t limit = 1U << inst.variables;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    bool ok = true;
    for (const auto& cl : inst.clauses) {
      const int trues = static_cast<int>((mask >> cl[0]) & 1U) + static_cast<int>((mask >> cl[1]) & 1U) +
                        static_cast<int>((mask >> cl[2]) & 1U);
      if (trues == 0 || trues == 3) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    Assignment out(static_cast<std::size_t>(inst.variables));
    for (int x = 0; x < inst.variables; ++x) out[static_cast<std::size_t>(x)] = ((mask >> x) & 1U) != 0;
    return out;
  }
  return std::nullopt;
}

std::optional<Coloring> solve_kcol(const KColInstance& inst) {
  const Multigraph& h = inst.graph;
  const int n = h.vertex_count();
  if (n > 20) throw InstanceTooLarge("coloring search is limited to 20 vertices");
  if (inst.k < 1) throw std::invalid_argument("k must be positive");
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : h.edges()) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return adj[static_cast<std::size_t>(a)].size() > adj[static_cast<std::size_t>(b)].size(); });
  Coloring color(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, std::size_t pos, int used) -> bool {
    if (pos == order.size()) return true;
    const int v = order[pos];
    for (int c = 1; c <= std::min(inst.k, used + 1); ++c) {
      bool clash = false;
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (color[static_cast<std::size_t>(w)] == c) clash = true;
      }
      if (clash) continue;
      color[static_cast<std::size_t>(v)] = c;
      if (self(self, pos + 1, std::max(used, c))) return true;
      color[static_cast<std::size_t>(v)] = 0;
    }
    return false;
  };
  if (!rec(rec, 0, 0)) return std::nullopt;
  return color;
}

}  // namespace rainbow
