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
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rainbow/common.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/instances.hpp"
#include "rainbow/partition.hpp"

namespace rainbow {

// K4 with the three edges at `center` replaced by bundles of m parallel
// copies. Vertex 0 is the center and 1, 2, 3 are x, y, z. Bundle A joins
// the center to x and `a` = yz is the single edge missing A; likewise
// B (to y) with b = xz and C (to z) with c = xy.
struct MarihuanaLeaf {
  Multigraph graph;
  ElementSet A, B, C;
  EdgeId a = -1, b = -1, c = -1;
  VertexId center = 0;
};

MarihuanaLeaf marihuana_leaf(int m);

// Splits the simple K4 `k4` into two spanning trees with F1 in the first
// and F2 in the second, where F1 and F2 partition the edges at `v`.
// Throws std::invalid_argument when either side is empty (no such
// factorization exists) or the input is not a K4 star split.
std::pair<ElementSet, ElementSet> k4_factorization_with_split(const Multigraph& k4, VertexId v,
                                                              const ElementSet& F1, const ElementSet& F2);

// Edge colors of the complete bipartite graph between A (|A| = k) and B
// (|B| = k-1). sigma[a] is a bijection onto 1..k; result[a][j] is the
// color of the edge from a to the (j+1)-th vertex of B. Every B vertex
// sees all k colors and vertex a sees all colors except sigma[a].
std::vector<std::vector<int>> bipartite_coloring(int k, const std::vector<int>& sigma);

// ---- MNAE3SAT to GRST2F -------------------------------------------------

// One K4 per (variable, clause) occurrence. Edge order in `edges` is
// e1, e2, f1, f2, g1, g2 where {e1,e2}, {f1,f2}, {g1,g2} are the three
// perfect matchings of the K4.
struct IncidenceGadget {
  int variable = 0;
  int clause = 0;
  int slot = 0;
  std::array<EdgeId, 6> edges{};
  std::array<VertexId, 4> vertices{};
};

// One K4 per clause; its local edges follow complete_graph(4) order and
// the three star edges at local vertex 0 are e^C, f^C, g^C. h[slot] is the
// star edge classed together with f2 of the clause's slot-th occurrence.
struct ClauseGadget {
  std::array<EdgeId, 6> edges{};
  std::array<VertexId, 4> vertices{};
  std::array<int, 3> h_local{};
};

struct NaeReduction {
  Nae3SatInstance source;
  RstkfInstance target;
  GadgetLabels labels;
  std::vector<IncidenceGadget> incidences;  // clause-major, 3 per clause
  std::vector<ClauseGadget> clauses;
  // Per variable, indices into `incidences` in chain order.
  std::vector<std::vector<int>> occurrence_order;
};

// Without a seed every arbitrary choice follows input order. A seed
// shuffles hub vertices, occurrence orders and the star bijection.
NaeReduction reduce_nae_to_grst2f(const Nae3SatInstance& instance, std::optional<std::uint64_t> seed = std::nullopt);
Factorization nae_cert_to_trees(const NaeReduction& r, const Assignment& assignment);
Assignment trees_to_nae_cert(const NaeReduction& r, const Factorization& trees);

// ---- GRST2F to RST2F ----------------------------------------------------

struct DoublingReduction {
  RstkfInstance source;
  RstkfInstance target;
  GadgetLabels labels;
  VertexId identified = 0;            // vertex of the source merged across copies
  std::vector<EdgeId> copy1, copy2;   // by source edge id
};

DoublingReduction reduce_grst2f_to_rst2f(const RstkfInstance& instance,
                                         std::optional<std::uint64_t> seed = std::nullopt);
Factorization doubling_forward(const DoublingReduction& r, const Factorization& trees);
Factorization doubling_backward(const DoublingReduction& r, const Factorization& trees);

// ---- kCOL to RSTkF ------------------------------------------------------

// Labels of the (k-1)-marihuana leaf built for one edge uv of H; `Fu` and
// `fu` belong to the edge's first endpoint.
struct LeafGadget {
  ElementSet F, Fu, Fv;
  EdgeId f = -1, fu = -1, fv = -1;
  std::array<VertexId, 4> vertices{};
};

struct KColReduction {
  KColInstance source;
  RstkfInstance target;
  GadgetLabels labels;
  std::vector<LeafGadget> leaves;  // by edge of H
  // Per vertex of H, its incident edges in chain order.
  std::vector<std::vector<EdgeId>> incidence_order;
};

KColReduction reduce_kcol_to_rstkf(const KColInstance& instance, std::optional<std::uint64_t> seed = std::nullopt);
Factorization coloring_to_trees(const KColReduction& r, const Coloring& coloring);
Coloring trees_to_coloring(const KColReduction& r, const Factorization& trees);

// ---- RSTkF to BSTkF -----------------------------------------------------

struct BstReduction {
  RstkfInstance source;
  BstkfInstance target;
  GadgetLabels labels;
  std::vector<bool> flipped;                       // orientation v->u instead of u->v
  std::vector<VertexId> w;                         // by source edge
  std::vector<std::vector<ArcId>> parallel;        // k arcs tail->w_e per edge
  std::vector<ArcId> single;                       // the arc head->w_e per edge
  std::vector<std::vector<VertexId>> z;            // k-1 vertices per class
  // z_arcs[X][j][i]: arc from z[X][j] to w of the i-th edge of class X.
  std::vector<std::vector<std::vector<ArcId>>> z_arcs;
};

BstReduction reduce_rstkf_to_bstkf(const RstkfInstance& instance, std::optional<std::uint64_t> seed = std::nullopt);
Factorization bst_forward(const BstReduction& r, const Factorization& trees);
Factorization bst_backward(const BstReduction& r, const Factorization& subgraphs);

}  // namespace rainbow
