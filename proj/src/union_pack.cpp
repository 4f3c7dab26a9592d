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

#include "rainbow/union_pack.hpp"

#include <deque>
#include <stdexcept>
#include <string>

namespace rainbow {

int UnionPartition::covered() const {
  int total = 0;
  for (const auto& p : parts) total += static_cast<int>(p.size());
  return total;
}

namespace {

// Matroid partition over k copies of one matroid. Positions index the
// ground set; owner_[p] is the copy holding element p or -1.
class Packer {
 public:
  Packer(const Matroid& m, int k)
      : m_(m), k_(k), ground_(m.ground()), owner_(ground_.size(), -1),
        parts_(static_cast<std::size_t>(k)) {}

  void run() {
    for (std::size_t p = 0; p < ground_.size(); ++p) {
      for (int i = 0; i < k_; ++i) {
        if (can_add(i, ground_[p])) {
          assign(p, i);
          break;
        }
      }
    }
    for (std::size_t p = 0; p < ground_.size(); ++p) {
      if (owner_[p] == -1) augment({p});
    }
  }

  UnionPartition result() {
    std::vector<std::size_t> uncovered;
    for (std::size_t p = 0; p < ground_.size(); ++p) {
      if (owner_[p] == -1) uncovered.push_back(p);
    }
    // With no augmenting path left, the reachable set R is spanned inside
    // every copy by its own part, which makes Y = E - R a minimizer.
    std::vector<char> reached;
    if (augment(uncovered, &reached)) {
      throw std::logic_error("matroid union: augmenting path survived saturation");
    }
    ElementSet reach_set;
    ElementSet witness;
    for (std::size_t p = 0; p < ground_.size(); ++p) {
      (reached[p] ? reach_set : witness).push_back(ground_[p]);
    }
    UnionPartition out{parts_, {witness, static_cast<int>(witness.size()) + k_ * m_.rank(reach_set)}};
    if (out.certificate.value != out.covered()) {
      throw std::logic_error("matroid union: certificate value differs from packed size");
    }
    return out;
  }

 private:
  bool can_add(int i, ElementId x) const {
    ElementSet s = parts_[i];
    s.push_back(x);
    return m_.rank(s) == static_cast<int>(s.size());
  }

  bool can_swap(int i, ElementId in, ElementId out) const {
    ElementSet s = parts_[i];
    *std::lower_bound(s.begin(), s.end(), out) = in;
    return m_.rank(s) == static_cast<int>(s.size());
  }

  void assign(std::size_t p, int i) {
    if (owner_[p] != -1) {
      ElementSet& old = parts_[owner_[p]];
      old.erase(std::lower_bound(old.begin(), old.end(), ground_[p]));
    }
    owner_[p] = i;
    ElementSet& now = parts_[i];
    now.insert(std::lower_bound(now.begin(), now.end(), ground_[p]), ground_[p]);
  }

  std::size_t position(ElementId e) const {
    return static_cast<std::size_t>(std::lower_bound(ground_.begin(), ground_.end(), e) - ground_.begin());
  }

  // Breadth-first search in the exchange graph from `sources`. An arc
  // x -> y with label i means y is in copy i and copy i - y + x is
  // independent. On reaching an x that fits some copy directly, the
  // shortest path is applied. Otherwise the reached set is reported.
  bool augment(const std::vector<std::size_t>& sources, std::vector<char>* reached_out = nullptr) {
    const std::size_t n = ground_.size();
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> prev(n, kNone);
    std::vector<int> via(n, -1);
    std::deque<std::size_t> queue;
    for (std::size_t s : sources) {
      seen[s] = 1;
      queue.push_back(s);
    }
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (int i = 0; i < k_; ++i) {
        if (i != owner_[x] && can_add(i, ground_[x])) {
          apply(x, i, prev, via);
          return true;
        }
      }
      for (int i = 0; i < k_; ++i) {
        if (i == owner_[x]) continue;
        for (ElementId y_id : parts_[i]) {
          const std::size_t y = position(y_id);
          if (seen[y] || !can_swap(i, ground_[x], y_id)) continue;
          seen[y] = 1;
          prev[y] = x;
          via[y] = i;
          queue.push_back(y);
        }
      }
    }
    if (reached_out != nullptr) *reached_out = std::move(seen);
    return false;
  }

  void apply(std::size_t last, int sink_copy, const std::vector<std::size_t>& prev,
             const std::vector<int>& via) {
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::pair<std::size_t, int>> moves{{last, sink_copy}};
    for (std::size_t y = last; prev[y] != kNone; y = prev[y]) moves.emplace_back(prev[y], via[y]);
    // Release every moved element first so inserts never collide.
    for (auto [p, i] : moves) {
      if (owner_[p] != -1) {
        ElementSet& old = parts_[owner_[p]];
        old.erase(std::lower_bound(old.begin(), old.end(), ground_[p]));
        owner_[p] = -1;
      }
    }
    for (auto [p, i] : moves) assign(p, i);
    for (int i = 0; i < k_; ++i) {
      if (m_.rank(parts_[i]) != static_cast<int>(parts_[i].size())) {
        throw std::logic_error("matroid union: augmentation produced a dependent part");
      }
    }
  }

  const Matroid& m_;
  int k_;
  const ElementSet& ground_;
  std::vector<int> owner_;
  std::vector<ElementSet> parts_;
};

MatroidPtr borrow(const Matroid& m) { return MatroidPtr(MatroidPtr{}, &m); }

// A tight set of the 2-base matroid m that contains e and avoids f exists
// iff m/e - f fails to be 2-base; the union certificate on m/e - f then
// exhibits one.
std::optional<ElementSet> tight_through(const MatroidPtr& m, ElementId e, ElementId f) {
  const ElementId ce[] = {e};
  const ElementId df[] = {f};
  const MatroidPtr reduced = minor(m, ce, df);
  if (reduced->size() == 0) return std::nullopt;
  UnionPartition packed = max_union_partition(*reduced, 2);
  if (packed.covered() == static_cast<int>(reduced->size())) return std::nullopt;
  ElementSet x = set_difference(reduced->ground(), packed.certificate.witness);
  x.insert(std::lower_bound(x.begin(), x.end(), e), e);
  if (2 * m->rank(x) != static_cast<int>(x.size())) {
    throw std::logic_error("tight-set search: certificate set is not tight");
  }
  return x;
}

}  // namespace

UnionPartition max_union_partition(const Matroid& m, int k) {
  if (k < 1) throw std::invalid_argument("max_union_partition: k must be positive");
  Packer packer(m, k);
  packer.run();
  return packer.result();
}

Factorization k_base_factorize(const Matroid& m, int k) {
  if (k < 1) throw std::invalid_argument("k_base_factorize: k must be positive");
  const int r = m.full_rank();
  if (static_cast<int>(m.size()) != k * r) {
    throw NotKBase("not a " + std::to_string(k) + "-base matroid: |E| = " + std::to_string(m.size()) +
                       " but k * rank(E) = " + std::to_string(k * r),
                   std::nullopt);
  }
  UnionPartition packed = max_union_partition(m, k);
  if (packed.covered() != static_cast<int>(m.size())) {
    throw NotKBase("not a " + std::to_string(k) + "-base matroid: at most " +
                       std::to_string(packed.covered()) + " of " + std::to_string(m.size()) +
                       " elements fit into " + std::to_string(k) + " independent sets",
                   packed.certificate);
  }
  return Factorization{std::move(packed.parts)};
}

bool is_two_base(const Matroid& m) {
  if (static_cast<int>(m.size()) != 2 * m.full_rank()) return false;
  return max_union_partition(m, 2).covered() == static_cast<int>(m.size());
}

bool two_disjoint_bases_exist(const Matroid& m) {
  return max_union_partition(m, 2).covered() == 2 * m.full_rank();
}

std::optional<ElementSet> find_nontrivial_tight_set_unchecked(const MatroidPtr& m) {
  const ElementSet& ground = m->ground();
  if (ground.size() < 2) return std::nullopt;
  const ElementId first = ground.front();
  // Any nontrivial tight X either contains `first` and misses some f, or
  // misses `first` and contains some x.
  for (std::size_t i = 1; i < ground.size(); ++i) {
    if (auto x = tight_through(m, first, ground[i])) return x;
  }
  for (std::size_t i = 1; i < ground.size(); ++i) {
    if (auto x = tight_through(m, ground[i], first)) return x;
  }
  return std::nullopt;
}

std::optional<ElementSet> find_nontrivial_tight_set(const Matroid& m) {
  if (!is_two_base(m)) throw std::invalid_argument("find_nontrivial_tight_set: matroid is not 2-base");
  return find_nontrivial_tight_set_unchecked(borrow(m));
}

}  // namespace rainbow
