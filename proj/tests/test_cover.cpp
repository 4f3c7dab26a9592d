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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rainbow/cover.hpp"
#include "rainbow/union_pack.hpp"

using namespace rainbow;

namespace {

using Four = std::array<ElementSet, 4>;

Multigraph parallel(int copies) {
  Multigraph g(2);
  for (int i = 0; i < copies; ++i) g.add_edge(0, 1);
  return g;
}

void expect_rainbow_basis_cover(const Matroid& m, const Partition& p, const RainbowCover& cover) {
  ElementSet all;
  for (const auto& entry : cover.entries) {
    EXPECT_TRUE(entry.is_basis);
    EXPECT_TRUE(m.is_basis(entry.set)) << entry.provenance;
    EXPECT_TRUE(is_rainbow(entry.set, p)) << entry.provenance;
    EXPECT_FALSE(entry.provenance.empty());
    all = set_union(all, entry.set);
  }
  EXPECT_EQ(all, m.ground());
  EXPECT_LE(static_cast<int>(cover.entries.size()), cover.bound);
}

void expect_three_cover(const Matroid& m, const Partition& p, const ThreeCover& c) {
  EXPECT_TRUE(m.is_basis(c.basis));
  EXPECT_TRUE(m.is_independent(c.first));
  EXPECT_TRUE(m.is_independent(c.second));
  for (const auto* s : {&c.basis, &c.first, &c.second}) EXPECT_TRUE(is_rainbow(*s, p));
  EXPECT_EQ(set_union(set_union(c.basis, c.first), c.second), m.ground());
}

// A random rainbow independent subset of m.
ElementSet random_rainbow_independent(const Matroid& m, const Partition& p, Rng& rng) {
  std::vector<ElementId> order(m.ground());
  rng.shuffle(std::span<ElementId>(order));
  ElementSet x;
  for (ElementId e : order) {
    if (!rng.coin()) continue;
    ElementSet trial = set_union(x, ElementSet{e});
    if (m.is_independent(trial) && is_rainbow(trial, p)) x = trial;
  }
  return x;
}

}  // namespace

TEST(CoverThree, K4Matchings) {
  auto m = make_graphic(complete_graph(4));
  const Partition p({{0, 5}, {1, 4}, {2, 3}});
  const ThreeCover c = cover_three(m, p);
  expect_three_cover(*m, p, c);
  EXPECT_EQ(c.first.size() + c.second.size(), 3U);
}

TEST(CoverThree, ParallelPair) {
  auto m = make_graphic(parallel(2));
  const ThreeCover c = cover_three(m, Partition({{0, 1}}));
  expect_three_cover(*m, Partition({{0, 1}}), c);
  EXPECT_EQ(c.basis.size(), 1U);
  EXPECT_EQ(c.first.size() + c.second.size(), 1U);
}

TEST(CoverThree, RandomDoubleTrees) {
  Rng rng(50);
  for (int trial = 0; trial < 50; ++trial) {
    KMultipleTree t = random_k_multiple_tree(rng.uniform_int(2, 8), 2, rng.next());
    auto m = make_graphic(t.graph);
    const Partition p = oracle::random_subpartition(m->ground(), rng);
    expect_three_cover(*m, p, cover_three(m, p));
  }
}

TEST(CoverThree, RejectsNonTwoBase) {
  EXPECT_THROW(cover_three(make_graphic(complete_graph(3)), Partition{}), NotKBase);
}

TEST(SplitBasis, SeparatesFullClass) {
  const auto [a, b] = split_basis_rainbow({0, 1, 2}, Partition({{0, 1}}));
  EXPECT_EQ(a, (ElementSet{0, 2}));
  EXPECT_EQ(b, (ElementSet{1}));
}

TEST(SplitBasis, RainbowStaysWhole) {
  const auto [a, b] = split_basis_rainbow({0, 2}, Partition({{0, 1}, {2, 3}}));
  EXPECT_EQ(a, (ElementSet{0, 2}));
  EXPECT_TRUE(b.empty());
}

TEST(SplitBasis, RandomBases) {
  Rng rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    KMultipleTree t = random_k_multiple_tree(rng.uniform_int(2, 9), 3, rng.next());
    auto m = make_graphic(t.graph);
    const Partition p = oracle::random_subpartition(m->ground(), rng);
    const ElementSet& b = t.trees.parts[0];
    const auto [s1, s2] = split_basis_rainbow(b, p);
    EXPECT_EQ(set_union(s1, s2), b);
    EXPECT_TRUE(is_disjoint(s1, s2));
    EXPECT_TRUE(is_rainbow(s1, p));
    EXPECT_TRUE(is_rainbow(s2, p));
    for (const auto& c : p.classes()) {
      if (c.size() == 2 && is_subset(c, b)) {
        EXPECT_EQ(set_intersection(c, s1).size(), 1U);
        EXPECT_EQ(set_intersection(c, s2).size(), 1U);
      }
    }
  }
}

TEST(LiftTwo, EmptyX) {
  KMultipleTree t = random_k_multiple_tree(5, 4, 3);
  auto m = make_graphic(t.graph);
  const Partition p = complete_to_two_uniform(Partition{}, m->ground());
  const auto& f = t.trees.parts;
  const auto [b1, b2] = lift_to_two_bases(m, p, {}, {f[0], f[1], f[2], f[3]});
  for (const auto* b : {&b1, &b2}) {
    EXPECT_TRUE(m->is_basis(*b));
    EXPECT_TRUE(is_rainbow(*b, p));
  }
}

TEST(LiftTwo, FourParallelEdgesEveryChoice) {
  auto m = make_graphic(parallel(4));
  const std::vector<Partition> partitions{Partition({{0, 1}, {2, 3}}), Partition({{0, 2}, {1, 3}}),
                                          Partition({{0, 3}, {1, 2}})};
  for (const auto& p : partitions) {
    for (ElementId x = 0; x < 4; ++x) {
      const auto [b1, b2] = lift_to_two_bases(m, p, {x}, Four{{{0}, {1}, {2}, {3}}});
      EXPECT_EQ(b1.size(), 1U);
      EXPECT_EQ(b2.size(), 1U);
      EXPECT_TRUE(set_contains(set_union(b1, b2), x));
    }
  }
}

TEST(LiftTwo, RandomFourBaseGraphs) {
  Rng rng(52);
  for (int trial = 0; trial < 100; ++trial) {
    KMultipleTree t = random_k_multiple_tree(rng.uniform_int(2, 6), 4, rng.next());
    auto m = make_graphic(t.graph);
    const Partition p = oracle::random_subpartition(m->ground(), rng);
    const ElementSet x = random_rainbow_independent(*m, p, rng);
    const auto& f = t.trees.parts;
    const auto [b1, b2] = lift_to_two_bases(m, p, x, {f[0], f[1], f[2], f[3]});
    for (const auto* b : {&b1, &b2}) {
      EXPECT_TRUE(m->is_basis(*b));
      EXPECT_TRUE(is_rainbow(*b, p));
    }
    EXPECT_TRUE(is_subset(x, set_union(b1, b2)));
  }
}

TEST(LiftTwo, RejectsBadInput) {
  auto m = make_graphic(parallel(4));
  const Partition p({{0, 1}, {2, 3}});
  EXPECT_THROW(lift_to_two_bases(m, p, {0, 1}, Four{{{0}, {1}, {2}, {3}}}), std::invalid_argument);
  EXPECT_THROW(lift_to_two_bases(m, p, {0}, Four{{{0}, {0}, {2}, {3}}}), std::invalid_argument);
  EXPECT_THROW(lift_to_two_bases(m, p, {0}, Four{{{0, 1}, {1}, {2}, {3}}}), std::invalid_argument);
}

TEST(LiftThree, EmptyXAndLonePartner) {
  Multigraph g = parallel(4);
  auto m = make_graphic(g);
  const Partition p({{0, 3}, {1, 2}});
  const auto none = lift_to_three_bases(m, p, {}, {{{0}, {1}, {2}}});
  for (const auto& b : none) EXPECT_TRUE(m->is_basis(b));
  // Element 0 has partner 3, which lies in none of the supplied bases.
  const auto lone = lift_to_three_bases(m, p, {0}, {{{0}, {1}, {2}}});
  EXPECT_EQ(lone[0], ElementSet{0});
}

TEST(LiftThree, RandomThreeBaseGraphs) {
  Rng rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    KMultipleTree t = random_k_multiple_tree(rng.uniform_int(2, 6), 3, rng.next());
    auto m = make_graphic(t.graph);
    const Partition p = oracle::random_subpartition(m->ground(), rng);
    const ElementSet x = random_rainbow_independent(*m, p, rng);
    const auto& f = t.trees.parts;
    const auto bases = lift_to_three_bases(m, p, x, {f[0], f[1], f[2]});
    ElementSet all;
    for (const auto& b : bases) {
      EXPECT_TRUE(m->is_basis(b));
      EXPECT_TRUE(is_rainbow(b, p));
      all = set_union(all, b);
    }
    EXPECT_TRUE(is_subset(x, all));
  }
}

TEST(CoverK41, FourMultipleTree) {
  KMultipleTree t = random_k_multiple_tree(6, 4, 1);
  auto m = make_graphic(t.graph);
  Rng rng(1);
  const Partition p = oracle::random_subpartition(m->ground(), rng);
  const RainbowCover cover = cover_k41(m, 4, p);
  EXPECT_EQ(cover.bound, 10);
  expect_rainbow_basis_cover(*m, p, cover);
}

TEST(CoverK41, FiveMultipleTree) {
  KMultipleTree t = random_k_multiple_tree(5, 5, 2);
  auto m = make_graphic(t.graph);
  Rng rng(2);
  const Partition p = oracle::random_pairing(m->ground(), rng);
  const RainbowCover cover = cover_k41(m, 5, p);
  EXPECT_EQ(cover.bound, 14);
  expect_rainbow_basis_cover(*m, p, cover);
}

TEST(CoverK41, ParallelEdges) {
  auto m = make_graphic(parallel(4));
  const Partition p({{0, 1}, {2, 3}});
  const RainbowCover cover = cover_k41(m, 4, p);
  expect_rainbow_basis_cover(*m, p, cover);
}

TEST(CoverK41, ExplicitAlphaBeta) {
  KMultipleTree t = random_k_multiple_tree(4, 6, 3);
  auto m = make_graphic(t.graph);
  Rng rng(3);
  const Partition p = oracle::random_subpartition(m->ground(), rng);
  const RainbowCover cover = cover_k41(m, 6, p, std::pair{1, 4});
  EXPECT_EQ(cover.bound, 21);
  expect_rainbow_basis_cover(*m, p, cover);
}

TEST(CoverK41, RejectsBadArguments) {
  auto m = make_graphic(parallel(4));
  EXPECT_THROW(cover_k41(m, 3, Partition{}), std::invalid_argument);
  EXPECT_THROW(cover_k41(m, 4, Partition{}, std::pair{1, 1}), std::invalid_argument);
  EXPECT_THROW(cover_k41(m, 5, Partition{}), NotKBase);
}

TEST(CoverK41, RandomInstances) {
  Rng rng(54);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = rng.uniform_int(4, 6);
    KMultipleTree t = random_k_multiple_tree(rng.uniform_int(2, 6), k, rng.next());
    auto m = make_graphic(t.graph);
    const Partition p = oracle::random_subpartition(m->ground(), rng);
    expect_rainbow_basis_cover(*m, p, cover_k41(m, k, p));
  }
}

TEST(CoverK3, SixVertexTripleTree) {
  KMultipleTree t = random_k_multiple_tree(6, 3, 4);
  auto m = make_graphic(t.graph);
  Rng rng(4);
  const Partition p = oracle::random_pairing(m->ground(), rng);
  const RainbowCover cover = cover_k3(m, p);
  EXPECT_EQ(cover.bound, 13);
  expect_rainbow_basis_cover(*m, p, cover);
}

TEST(CoverK3, ThreeParallelEdges) {
  auto m = make_graphic(parallel(3));
  const Partition p({{0, 1}, {2}});
  const RainbowCover cover = cover_k3(m, p);
  expect_rainbow_basis_cover(*m, p, cover);
  EXPECT_LT(cover.entries.size(), 13U);
}

TEST(CoverK3, RandomInstances) {
  Rng rng(55);
  for (int trial = 0; trial < 40; ++trial) {
    KMultipleTree t = random_k_multiple_tree(rng.uniform_int(2, 7), 3, rng.next());
    auto m = make_graphic(t.graph);
    const Partition p = oracle::random_subpartition(m->ground(), rng);
    expect_rainbow_basis_cover(*m, p, cover_k3(m, p));
  }
  EXPECT_THROW(cover_k3(make_graphic(parallel(4)), Partition{}), NotKBase);
}
