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

#include "rainbow/cover.hpp"

#include <stdexcept>

#include "rainbow/rainbow.hpp"
#include "rainbow/union_pack.hpp"

namespace rainbow {

namespace {

void require_lift_input(const Matroid& m, const Partition& p, const ElementSet& x,
                        std::span<const ElementSet> c, const char* who) {
  if (!p.is_bounded(2)) throw std::invalid_argument(std::string(who) + ": partition is not 2-bounded");
  if (!m.is_independent(x)) throw std::invalid_argument(std::string(who) + ": X is not independent");
  if (!is_rainbow(x, p)) throw std::invalid_argument(std::string(who) + ": X is not rainbow");
  ElementSet seen;
  for (const auto& b : c) {
    if (!m.is_basis(b)) throw std::invalid_argument(std::string(who) + ": a supplied set is not a basis");
    if (!is_disjoint(seen, b)) throw std::invalid_argument(std::string(who) + ": supplied bases overlap");
    seen = set_union(seen, b);
  }
}

// Rainbow basis of m containing x, where no partner of x lies in ca or cb.
ElementSet lift_into_pair(const MatroidPtr& m, const Partition& p, const ElementSet& x, const ElementSet& ca,
                          const ElementSet& cb) {
  const ElementSet pair = set_union(ca, cb);
  for (ElementId e : x) {
    if (auto q = p.partner(e); q && set_contains(pair, *q)) {
      throw std::logic_error("lift: a partner of X lies in its base pair");
    }
  }
  const MatroidPtr sub = restriction(m, set_union(x, pair));
  const MatroidPtr shrunk = contraction(sub, x);
  const ElementSet a = greedy_basis(*shrunk, set_difference(ca, x));
  const ElementSet b = greedy_basis(*shrunk, set_difference(cb, x));
  const int r = shrunk->full_rank();
  if (static_cast<int>(a.size()) != r || static_cast<int>(b.size()) != r) {
    throw std::logic_error("lift: a supplied basis does not span after contraction");
  }
  const ElementSet core = set_union(a, b);
  ElementSet out = set_union(rainbow_basis(restriction(shrunk, core), p.restricted_to(core)), x);
  if (!m->is_basis(out) || !is_rainbow(out, p)) throw std::logic_error("lift: result is not a rainbow basis");
  return out;
}

bool in_any(const std::optional<ElementId>& e, const ElementSet& a, const ElementSet& b) {
  return e && (set_contains(a, *e) || set_contains(b, *e));
}

struct Pending {
  ElementSet set;
  std::string provenance;
};

// Sets that are already rainbow bases are kept and empty sets dropped;
// every other set is passed to `lift`.
template <typename Lift>
void lift_all(const Matroid& m, const std::vector<Pending>& pending, Lift lift, RainbowCover& out) {
  for (const auto& item : pending) {
    if (item.set.empty()) continue;
    if (m.is_basis(item.set)) {
      out.entries.push_back({item.set, true, item.provenance});
      continue;
    }
    const auto bases = lift(item.set);
    char tag = 'a';
    for (const auto& b : bases) out.entries.push_back({b, true, item.provenance + " lift " + tag++});
  }
}

void check_cover(const Matroid& m, const Partition& p, const RainbowCover& cover) {
  ElementSet all;
  for (const auto& entry : cover.entries) {
    if (!entry.is_basis || !m.is_basis(entry.set) || !is_rainbow(entry.set, p)) {
      throw std::logic_error("cover: entry '" + entry.provenance + "' is not a rainbow basis");
    }
    all = set_union(all, entry.set);
  }
  if (all != m.ground()) throw std::logic_error("cover: entries do not cover the ground set");
  if (static_cast<int>(cover.entries.size()) > cover.bound) throw std::logic_error("cover: bound exceeded");
}

}  // namespace

ThreeCover cover_three(const MatroidPtr& m, const Partition& p) {
  if (!p.is_bounded(2)) throw std::invalid_argument("cover_three: partition is not 2-bounded");
  const Factorization halves = k_base_factorize(*m, 2);
  ThreeCover out;
  out.basis = rainbow_basis(m, p);
  const ElementSet rest = set_difference(m->ground(), out.basis);
  out.first = set_intersection(rest, halves.parts[0]);
  out.second = set_intersection(rest, halves.parts[1]);
  if (!is_rainbow(out.first, p) || !is_rainbow(out.second, p)) {
    throw std::logic_error("cover_three: complement of the rainbow basis is not rainbow");
  }
  return out;
}

std::pair<ElementSet, ElementSet> split_basis_rainbow(const ElementSet& b, const Partition& p) {
  std::pair<ElementSet, ElementSet> out;
  for (ElementId e : b) {
    const auto q = p.class_of(e);
    const bool clash = q && std::any_of(out.first.begin(), out.first.end(),
                                        [&](ElementId s) { return p.class_of(s) == q; });
    (clash ? out.second : out.first).push_back(e);
  }
  if (!is_rainbow(out.second, p)) throw std::invalid_argument("split_basis_rainbow: partition is not 2-bounded");
  return out;
}

std::pair<ElementSet, ElementSet> lift_to_two_bases(const MatroidPtr& m, const Partition& p, const ElementSet& x,
                                                    const std::array<ElementSet, 4>& c) {
  require_lift_input(*m, p, x, c, "lift_to_two_bases");
  ElementSet x1;
  ElementSet x2;
  for (ElementId e : x) (in_any(p.partner(e), c[0], c[1]) ? x2 : x1).push_back(e);
  return {lift_into_pair(m, p, x1, c[0], c[1]), lift_into_pair(m, p, x2, c[2], c[3])};
}

std::array<ElementSet, 3> lift_to_three_bases(const MatroidPtr& m, const Partition& p, const ElementSet& x,
                                              const std::array<ElementSet, 3>& c) {
  require_lift_input(*m, p, x, c, "lift_to_three_bases");
  std::array<ElementSet, 3> parts;
  for (ElementId e : x) {
    const auto q = p.partner(e);
    std::size_t j = 0;
    while (in_any(q, c[j], c[(j + 1) % 3])) ++j;
    parts[j].push_back(e);
  }
  std::array<ElementSet, 3> out;
  for (std::size_t j = 0; j < 3; ++j) out[j] = lift_into_pair(m, p, parts[j], c[j], c[(j + 1) % 3]);
  return out;
}

RainbowCover cover_k41(const MatroidPtr& m, int k, const Partition& p, std::optional<std::pair<int, int>> alpha_beta) {
  if (k < 4) throw std::invalid_argument("cover_k41: k must be at least 4");
  const auto [alpha, beta] = alpha_beta.value_or(std::pair{k / 2, k % 2});
  if (alpha < 0 || beta < 0 || 2 * alpha + beta != k) {
    throw std::invalid_argument("cover_k41: alpha and beta must be nonnegative with 2 * alpha + beta = k");
  }
  if (!p.is_bounded(2)) throw std::invalid_argument("cover_k41: partition is not 2-bounded");
  const Factorization f = k_base_factorize(*m, k);
  const std::array<ElementSet, 4> c{f.parts[0], f.parts[1], f.parts[2], f.parts[3]};

  RainbowCover out;
  out.bound = 5 * alpha + 4 * beta;
  std::vector<Pending> pending;
  for (int i = 0; i < alpha; ++i) {
    const std::string tag = "pair " + std::to_string(i + 1);
    ThreeCover three = cover_three(restriction(m, set_union(f.parts[2 * i], f.parts[2 * i + 1])), p);
    out.entries.push_back({three.basis, true, tag + " basis"});
    pending.push_back({three.first, tag + " remainder 1"});
    pending.push_back({three.second, tag + " remainder 2"});
  }
  for (int j = 0; j < beta; ++j) {
    const std::string tag = "single " + std::to_string(j + 1);
    auto [s1, s2] = split_basis_rainbow(f.parts[2 * alpha + j], p);
    pending.push_back({s1, tag + " side 1"});
    pending.push_back({s2, tag + " side 2"});
  }
  lift_all(*m, pending, [&](const ElementSet& x) {
    auto [b1, b2] = lift_to_two_bases(m, p, x, c);
    return std::vector<ElementSet>{b1, b2};
  }, out);
  check_cover(*m, p, out);
  return out;
}

RainbowCover cover_k3(const MatroidPtr& m, const Partition& p) {
  if (!p.is_bounded(2)) throw std::invalid_argument("cover_k3: partition is not 2-bounded");
  const Factorization f = k_base_factorize(*m, 3);
  const std::array<ElementSet, 3> c{f.parts[0], f.parts[1], f.parts[2]};

  RainbowCover out;
  out.bound = 13;
  ThreeCover three = cover_three(restriction(m, set_union(c[0], c[1])), p);
  out.entries.push_back({three.basis, true, "pair basis"});
  auto [s1, s2] = split_basis_rainbow(c[2], p);
  const std::vector<Pending> pending{{three.first, "pair remainder 1"},
                                     {three.second, "pair remainder 2"},
                                     {s1, "single side 1"},
                                     {s2, "single side 2"}};
  lift_all(*m, pending, [&](const ElementSet& x) {
    auto b = lift_to_three_bases(m, p, x, c);
    return std::vector<ElementSet>(b.begin(), b.end());
  }, out);
  check_cover(*m, p, out);
  return out;
}

}  // namespace rainbow
