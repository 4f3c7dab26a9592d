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
#include "rainbow/rainbow.hpp"
#include "rainbow/union_pack.hpp"

using namespace rainbow;

namespace {

// K4 edges in complete_graph order: 01 02 03 12 13 23.
Partition k4_matchings() { return Partition({{0, 5}, {1, 4}, {2, 3}}); }

Multigraph parallel(int copies) {
  Multigraph g(2);
  for (int i = 0; i < copies; ++i) g.add_edge(0, 1);
  return g;
}

bool is_star(const Multigraph& g, const ElementSet& t) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (std::all_of(t.begin(), t.end(), [&](EdgeId e) { return g.edge(e).u == v || g.edge(e).v == v; })) {
      return true;
    }
  }
  return false;
}

void expect_half_cover(const Matroid& m, const Partition& p, const ElementSet& z, const ElementSet& b) {
  EXPECT_TRUE(m.is_basis(b));
  EXPECT_TRUE(is_rainbow(b, p));
  EXPECT_GE(2 * set_intersection(z, b).size(), z.size());
}

std::vector<MatroidPtr> split_into_components(const MatroidPtr& m) {
  std::vector<MatroidPtr> out;
  for (const auto& c : components(*m)) out.push_back(restriction(m, c));
  return out;
}

ElementSet random_subset(const ElementSet& ground, Rng& rng) {
  ElementSet out;
  for (ElementId e : ground) {
    if (rng.coin()) out.push_back(e);
  }
  return out;
}

void expect_trace_consistent(const HalfCoverTrace& trace, const Partition& p) {
  for (std::size_t i = 0; i < trace.sequences.size(); ++i) {
    const auto& comps = trace.sequence_components[i];
    ElementSet ground;
    for (const auto& c : comps) ground = set_union(ground, c);
    const Partition local = p.restricted_to(ground);
    EXPECT_EQ(check_cyclic_sequence(trace.sequences[i], comps, local), "");
    EXPECT_EQ(check_cyclic_sequence(reversed(trace.sequences[i]), comps, local), "");
  }
  for (std::size_t i = 1; i < trace.measures.size(); ++i) {
    EXPECT_LT(trace.measures[i], trace.measures[i - 1]);
  }
}

}  // namespace

TEST(IsRainbow, Examples) {
  const Partition p({{0, 1}, {2, 3}});
  EXPECT_TRUE(is_rainbow(ElementSet{0, 2}, p));
  EXPECT_FALSE(is_rainbow(ElementSet{0, 1}, p));
  EXPECT_TRUE(is_rainbow(ElementSet{}, p));
}

TEST(Completion, Examples) {
  const ElementSet ground{0, 1, 2, 3};
  const Partition done({{0, 3}, {1, 2}});
  EXPECT_EQ(complete_to_two_uniform(done, ground).classes(), done.classes());
  const Partition fresh = complete_to_two_uniform(Partition{}, ground);
  EXPECT_EQ(fresh.classes(), (std::vector<ElementSet>{{0, 1}, {2, 3}}));
  const Partition singles = complete_to_two_uniform(Partition({{0, 2}, {1}, {3}}), ground);
  EXPECT_EQ(singles.classes(), (std::vector<ElementSet>{{0, 2}, {1, 3}}));
  EXPECT_THROW(complete_to_two_uniform(Partition{}, ElementSet{0, 1, 2}), std::invalid_argument);
}

TEST(Completion, RainbowForCompletionImpliesRainbowForOriginal) {
  Rng rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    ElementSet ground;
    const int n = 2 * rng.uniform_int(1, 6);
    for (int i = 0; i < n; ++i) ground.push_back(i);
    const Partition p = oracle::random_subpartition(ground, rng);
    const Partition full = complete_to_two_uniform(p, ground);
    EXPECT_TRUE(full.is_uniform(2));
    EXPECT_TRUE(full.partitions(ground));
    const ElementSet s = random_subset(ground, rng);
    if (is_rainbow(s, full)) EXPECT_TRUE(is_rainbow(s, p));
  }
}

TEST(CyclicSequence, TwoComponents) {
  // x1 = 0, x2 = 1, y1 = 2, y2 = 3.
  const std::vector<ElementSet> comps{{0, 1}, {2, 3}};
  const Partition p({{0, 2}, {1, 3}});
  const CyclicSequence seq = find_cyclic_sequence(comps, p);
  EXPECT_EQ(seq.e, (std::vector<ElementId>{0, 3}));
  EXPECT_EQ(seq.f, (std::vector<ElementId>{2, 1}));
  EXPECT_EQ(check_cyclic_sequence(seq, comps, p), "");
}

TEST(CyclicSequence, OneComponent) {
  const std::vector<ElementSet> comps{{0, 1}};
  const CyclicSequence seq = find_cyclic_sequence(comps, Partition({{0, 1}}));
  EXPECT_EQ(seq.e, std::vector<ElementId>{0});
  EXPECT_EQ(seq.f, std::vector<ElementId>{1});
}

TEST(CyclicSequence, ThreeComponentCycle) {
  const std::vector<ElementSet> comps{{0, 1}, {2, 3}, {4, 5}};
  const Partition p({{1, 2}, {3, 4}, {5, 0}});
  const CyclicSequence seq = find_cyclic_sequence(comps, p);
  EXPECT_EQ(seq.length(), 3U);
  EXPECT_EQ(check_cyclic_sequence(seq, comps, p), "");
}

TEST(CyclicSequence, RejectsBadInput) {
  EXPECT_THROW(find_cyclic_sequence({ElementSet{0}}, Partition(std::vector<ElementSet>{{0}})), std::invalid_argument);
  EXPECT_THROW(find_cyclic_sequence({{0, 1}, {2, 3}}, Partition({{0, 1}})), std::invalid_argument);
  EXPECT_THROW(find_cyclic_sequence({{0, 1}, {1, 2}}, Partition({{0, 1}, {2}})), std::invalid_argument);
}

TEST(CyclicSequence, CheckerCatchesEachViolation) {
  const std::vector<ElementSet> comps{{0, 1}, {2, 3}};
  const Partition p({{0, 2}, {1, 3}});
  EXPECT_NE(check_cyclic_sequence({{0}, {3}}, comps, p), "");
  EXPECT_NE(check_cyclic_sequence({{0, 1}, {2, 3}}, comps, p), "");
  EXPECT_NE(check_cyclic_sequence({{0, 0}, {2, 2}}, comps, p), "");
  EXPECT_NE(check_cyclic_sequence({}, comps, p), "");
}

TEST(CyclicSequence, RandomWalksAndReversalsStayValid) {
  Rng rng(14);
  for (int trial = 0; trial < 500; ++trial) {
    const int count = rng.uniform_int(1, 6);
    std::vector<ElementSet> comps;
    ElementSet ground;
    ElementId next = 0;
    for (int c = 0; c < count; ++c) {
      ElementSet comp;
      const int size = 2 * rng.uniform_int(1, 3);
      for (int i = 0; i < size; ++i) comp.push_back(next++);
      ground = set_union(ground, comp);
      comps.push_back(comp);
    }
    const Partition p = oracle::random_pairing(ground, rng);
    const ElementId start = ground[rng.uniform(ground.size())];
    const CyclicSequence seq = find_cyclic_sequence(comps, p, start);
    ASSERT_EQ(check_cyclic_sequence(seq, comps, p), "");
    EXPECT_EQ(check_cyclic_sequence(reversed(seq), comps, p), "");
    EXPECT_EQ(reversed(reversed(seq)), seq);
  }
}

TEST(HalfCover, K4MatchingsFullZ) {
  auto m = make_graphic(complete_graph(4));
  const ElementSet z = m->ground();
  const ElementSet b = half_covering_rainbow_basis({m}, z, k4_matchings());
  expect_half_cover(*m, k4_matchings(), z, b);
  EXPECT_EQ(set_intersection(z, b).size(), 3U);
}

TEST(HalfCover, EmptyZ) {
  auto m = make_graphic(complete_graph(4));
  const ElementSet b = half_covering_rainbow_basis({m}, {}, k4_matchings());
  expect_half_cover(*m, k4_matchings(), {}, b);
}

TEST(HalfCover, RejectsBadInput) {
  auto m = make_graphic(complete_graph(4));
  EXPECT_THROW(half_covering_rainbow_basis({m}, {}, Partition({{0, 1}})), std::invalid_argument);
  EXPECT_THROW(half_covering_rainbow_basis({m}, {9}, k4_matchings()), std::invalid_argument);
  auto tri = make_graphic(complete_graph(3));
  EXPECT_THROW(half_covering_rainbow_basis({tri}, {}, Partition({{0, 1}, {2}})), std::invalid_argument);
}

TEST(HalfCover, RandomDoubleTreesAgainstSpanningTreeEnumeration) {
  Rng rng(500);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = rng.uniform_int(2, 5);
    KMultipleTree t = random_k_multiple_tree(n, 2, rng.next());
    auto m = make_graphic(t.graph);
    const Partition p = oracle::random_pairing(m->ground(), rng);
    const ElementSet z = random_subset(m->ground(), rng);
    HalfCoverTrace trace;
    const ElementSet b = half_covering_rainbow_basis(split_into_components(m), z, p, &trace);
    expect_half_cover(*m, p, z, b);
    EXPECT_TRUE(is_spanning_tree(t.graph, b));
    expect_trace_consistent(trace, p);
    bool exists = false;
    for (const auto& tree : oracle::spanning_trees(t.graph)) {
      if (is_rainbow(tree, p) && 2 * set_intersection(z, tree).size() >= z.size()) exists = true;
    }
    EXPECT_TRUE(exists);
  }
}

TEST(HalfCover, TightSplitsOnGluedGadgets) {
  Multigraph k4 = complete_graph(4);
  const IdentifyPart parts[] = {{&k4, 0}, {&k4, 0}, {&k4, 3}};
  Multigraph g = identify_vertices(parts).graph;
  auto m = make_graphic(g);
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Partition p = oracle::random_pairing(m->ground(), rng);
    const ElementSet z = random_subset(m->ground(), rng);
    HalfCoverTrace trace;
    // Pass the whole matroid as one part so the tight-split branch runs.
    const ElementSet b = half_covering_rainbow_basis({m}, z, p, &trace);
    expect_half_cover(*m, p, z, b);
    EXPECT_GT(trace.tight_splits, 0);
    expect_trace_consistent(trace, p);
  }
}

TEST(HalfCover, LargerDoubleTreesWithTrace) {
  Rng rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.uniform_int(6, 10);
    KMultipleTree t = random_k_multiple_tree(n, 2, rng.next());
    auto m = make_graphic(t.graph);
    const Partition p = oracle::random_pairing(m->ground(), rng);
    const ElementSet z = random_subset(m->ground(), rng);
    HalfCoverTrace trace;
    const ElementSet b = half_covering_rainbow_basis({m}, z, p, &trace);
    expect_half_cover(*m, p, z, b);
    expect_trace_consistent(trace, p);
  }
}

TEST(RainbowBasis, K4MatchingsGiveAStar) {
  Multigraph g = complete_graph(4);
  const ElementSet b = rainbow_basis(make_graphic(g), k4_matchings());
  EXPECT_TRUE(is_spanning_tree(g, b));
  EXPECT_TRUE(is_rainbow(b, k4_matchings()));
  EXPECT_TRUE(is_star(g, b));
}

TEST(RainbowBasis, ParallelPair) {
  const ElementSet b = rainbow_basis(make_graphic(parallel(2)), Partition({{0, 1}}));
  EXPECT_EQ(b.size(), 1U);
}

TEST(RainbowBasis, WheelWithAntipodalClasses) {
  Multigraph w = wheel_graph(7);
  std::vector<ElementSet> classes;
  for (int i = 0; i < 7; ++i) classes.push_back({i, 7 + (i + 3) % 7});
  const Partition p(classes);
  const ElementSet b = rainbow_basis(make_graphic(w), p);
  EXPECT_TRUE(is_spanning_tree(w, b));
  EXPECT_TRUE(is_rainbow(b, p));
  const auto trees = oracle::spanning_trees(w);
  EXPECT_TRUE(std::any_of(trees.begin(), trees.end(), [&](const ElementSet& t) { return is_rainbow(t, p); }));
}

TEST(RainbowBasis, HitsEveryClassOnceWhenUniform) {
  Rng rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    KMultipleTree t = random_k_multiple_tree(rng.uniform_int(2, 8), 2, rng.next());
    auto m = make_graphic(t.graph);
    const Partition p = oracle::random_pairing(m->ground(), rng);
    const ElementSet b = rainbow_basis(m, p);
    ASSERT_EQ(b.size(), p.class_count());
    for (const auto& c : p.classes()) EXPECT_EQ(set_intersection(c, b).size(), 1U);
  }
}

TEST(RainbowBasis, SubpartitionsAndErrors) {
  Rng rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    KMultipleTree t = random_k_multiple_tree(rng.uniform_int(2, 8), 2, rng.next());
    auto m = make_graphic(t.graph);
    const Partition p = oracle::random_subpartition(m->ground(), rng);
    const ElementSet b = rainbow_basis(m, p);
    EXPECT_TRUE(m->is_basis(b));
    EXPECT_TRUE(is_rainbow(b, p));
  }
  EXPECT_THROW(rainbow_basis(make_graphic(complete_graph(3)), Partition{}), std::invalid_argument);
  EXPECT_THROW(rainbow_basis(make_graphic(complete_graph(4)), Partition({{0, 1, 2}})), std::invalid_argument);
}

TEST(LogCover, SingleElement) {
  auto m = make_graphic(complete_graph(4));
  EXPECT_EQ(log_cover(m, {2}, k4_matchings()).size(), 1U);
}

TEST(LogCover, EmptyZ) { EXPECT_TRUE(log_cover(make_graphic(complete_graph(4)), {}, k4_matchings()).empty()); }

TEST(LogCover, K4FullGround) {
  auto m = make_graphic(complete_graph(4));
  const auto bases = log_cover(m, m->ground(), k4_matchings());
  EXPECT_LE(bases.size(), 3U);
  ElementSet all;
  for (const auto& b : bases) {
    EXPECT_TRUE(m->is_basis(b));
    EXPECT_TRUE(is_rainbow(b, k4_matchings()));
    all = set_union(all, b);
  }
  EXPECT_EQ(all, m->ground());
}

TEST(LogCover, BoundValues) {
  EXPECT_EQ(log_cover_bound(0), 0);
  EXPECT_EQ(log_cover_bound(1), 1);
  EXPECT_EQ(log_cover_bound(6), 3);
  EXPECT_EQ(log_cover_bound(8), 4);
}

TEST(LogCover, RandomInstancesRespectBound) {
  Rng rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    KMultipleTree t = random_k_multiple_tree(rng.uniform_int(2, 9), 2, rng.next());
    auto m = make_graphic(t.graph);
    const Partition p = oracle::random_subpartition(m->ground(), rng);
    const ElementSet z = random_subset(m->ground(), rng);
    const auto bases = log_cover(m, z, p);
    EXPECT_LE(static_cast<int>(bases.size()), log_cover_bound(z.size()));
    ElementSet all;
    for (const auto& b : bases) {
      EXPECT_TRUE(m->is_basis(b));
      EXPECT_TRUE(is_rainbow(b, p));
      all = set_union(all, b);
    }
    EXPECT_TRUE(is_subset(z, all));
  }
}

TEST(LogCover, RejectsNonTwoBase) {
  EXPECT_THROW(log_cover(make_graphic(complete_graph(3)), {0}, Partition{}), std::invalid_argument);
}
