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

#include <array>
#include <map>
#include <string>
#include <vector>

#include "rainbow/common.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/partition.hpp"

namespace rainbow {

// Monotone not-all-equal 3-SAT: variables are 0..variables-1 and each
// clause lists three distinct variables.
struct Nae3SatInstance {
  int variables = 0;
  std::vector<std::array<int, 3>> clauses;
};

// true = the variable is set to true.
using Assignment = std::vector<bool>;

struct KColInstance {
  Multigraph graph;
  int k = 3;
};

// Colors are 1..k, indexed by vertex.
using Coloring = std::vector<int>;

// Factorization of `graph` into k spanning trees, each rainbow for
// `partition`. With k = 2 and a 2-bounded partition this is the
// generalized two-tree variant.
struct RstkfInstance {
  Multigraph graph;
  Partition partition;
  int k = 2;
};

// Factorization of the arcs of `digraph` into k subgraphs whose underlying
// graphs are spanning trees, with indegree at most g[v] in every subgraph.
struct BstkfInstance {
  Digraph digraph;
  std::vector<int> g;
  int k = 2;
};

// Names used in the constructions mapped to concrete ids of the reduced
// instance. `edges` holds edge ids, or arc ids for digraph targets.
struct GadgetLabels {
  std::map<std::string, VertexId> vertices;
  std::map<std::string, ElementId> edges;
};

}  // namespace rainbow
