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

// Named instances shared by the unit tests and the acceptance binary.

#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/instances.hpp"
#include "rainbow/partition.hpp"
#include "rainbow/random.hpp"

namespace fixture {

using namespace rainbow;

// K4 (edges 01 02 03 12 13 23) with every perfect matching as a class.
inline RstkfInstance k4_matching() {
  return {complete_graph(4), Partition(std::vector<ElementSet>{{0, 5}, {1, 4}, {2, 3}}), 2};
}

// K4 with three classes, each a pair of edges sharing a distinct vertex.
inline RstkfInstance k4_stars() {
  return {complete_graph(4), Partition(std::vector<ElementSet>{{0, 1}, {3, 4}, {2, 5}}), 2};
}

// Odd wheel on 8 vertices; spoke i is classed with the rim edge opposite
// its rim endpoint.
inline RstkfInstance wheel_antipodal() {
  std::vector<ElementSet> classes;
  for (int i = 0; i < 7; ++i) classes.push_back({i, 7 + (i + 3) % 7});
  return {wheel_graph(7), Partition(classes), 2};
}

inline Multigraph triangle() { return complete_graph(3); }

inline Multigraph petersen() {
  Multigraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

// Lines of the Fano plane as clauses; no 2-coloring avoids a monochromatic line.
inline Nae3SatInstance fano() {
  return {7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}}};
}

// Every triple of five variables; some color class has three members.
inline Nae3SatInstance all_triples_of_five() {
  Nae3SatInstance out{5, {}};
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) {
      for (int c = b + 1; c < 5; ++c) out.clauses.push_back({a, b, c});
    }
  }
  return out;
}

// Random k-multiple tree on n vertices with a k-uniform partition built by
// taking one edge from each of the generating trees, so a rainbow
// factorization is known to exist.
inline RstkfInstance planted_rstkf(int n, int k, std::uint64_t seed) {
  KMultipleTree t = random_k_multiple_tree(n, k, seed);
  Rng rng(seed, 1);
  for (auto& tree : t.trees.parts) rng.shuffle(std::span<ElementId>(tree));
  std::vector<ElementSet> classes;
  for (int i = 0; i < n - 1; ++i) {
    ElementSet c;
    for (const auto& tree : t.trees.parts) c.push_back(tree[static_cast<std::size_t>(i)]);
    classes.push_back(make_set(c));
  }
  return {t.graph, Partition(classes), k};
}

}  // namespace fixture
