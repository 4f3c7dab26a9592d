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

#include "rainbow/reductions.hpp"

#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "rainbow/matroid.hpp"
#include "rainbow/random.hpp"
#include "rainbow/union_pack.hpp"
#include "rainbow/validate.hpp"

namespace rainbow {
namespace {

struct Attached {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

// Copies `local` into `g`, mapping `local_hub` onto the existing `hub`.
Attached attach(Multigraph& g, const Multigraph& local, VertexId local_hub, VertexId hub, const std::string& prefix,
                const std::vector<std::string>& edge_names) {
  Attached out;
  for (VertexId v = 0; v < local.vertex_count(); ++v) {
    out.vertices.push_back(v == local_hub ? hub : g.add_vertex(prefix + "." + std::to_string(v)));
  }
  for (EdgeId e = 0; e < local.edge_count(); ++e) {
    const Edge& ed = local.edge(e);
    out.edges.push_back(g.add_edge(out.vertices[static_cast<std::size_t>(ed.u)],
                                   out.vertices[static_cast<std::size_t>(ed.v)], edge_names[static_cast<std::size_t>(e)]));
  }
  return out;
}

void label_graph(GadgetLabels& labels, const Multigraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) labels.vertices[g.vertex_name(v)] = v;
  for (EdgeId e = 0; e < g.edge_count(); ++e) labels.edges[g.edge_name(e)] = e;
}

bool is_k_multiple_tree(const Multigraph& g, int k) {
  UnionFind uf(g.vertex_count());
  for (const Edge& e : g.edges()) uf.unite(e.u, e.v);
  if (g.vertex_count() > 0 && uf.components() != 1) return false;
  try {
    k_base_factorize(*make_graphic(g), k);
    return true;
  } catch (const NotKBase&) {
    return false;
  }
}

std::vector<int> owners(int total, const Factorization& f) {
  std::vector<int> owner(static_cast<std::size_t>(total), -1);
  for (std::size_t t = 0; t < f.parts.size(); ++t) {
    for (ElementId e : f.parts[t]) owner[static_cast<std::size_t>(e)] = static_cast<int>(t);
  }
  return owner;
}

void sort_parts(Factorization& f) {
  for (auto& p : f.parts) std::sort(p.begin(), p.end());
}

// K4 edge ids of complete_graph(4) by local vertex pair.
constexpr EdgeId kK4Edge[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};

// Positions of e1, e2, f1, f2, g1, g2 among complete_graph(4) edges.
constexpr std::array<int, 6> kIncidenceLocal = {0, 5, 1, 4, 2, 3};
constexpr std::array<const char*, 6> kIncidenceNames = {"e1", "e2", "f1", "f2", "g1", "g2"};
constexpr std::array<const char*, 6> kClauseNames = {"eC", "fC", "gC", "d12", "d13", "d23"};

}  // namespace

MarihuanaLeaf marihuana_leaf(int m) {
  if (m < 1) throw std::invalid_argument("marihuana leaf needs bundle size >= 1");
  MarihuanaLeaf leaf;
  Multigraph& g = leaf.graph;
  g = Multigraph();
  for (const char* name : {"v", "x", "y", "z"}) g.add_vertex(name);
  auto bundle = [&](VertexId to, const std::string& name) {
    ElementSet out;
    for (int i = 0; i < m; ++i) out.push_back(g.add_edge(0, to, name + "#" + std::to_string(i)));
    return out;
  };
  leaf.A = bundle(1, "A");
  leaf.B = bundle(2, "B");
  leaf.C = bundle(3, "C");
  leaf.a = g.add_edge(2, 3, "a");
  leaf.b = g.add_edge(1, 3, "b");
  leaf.c = g.add_edge(1, 2, "c");
  return leaf;
}

std::pair<ElementSet, ElementSet> k4_factorization_with_split(const Multigraph& k4, VertexId v, const ElementSet& F1,
                                                              const ElementSet& F2) {
  if (k4.vertex_count() != 4 || k4.edge_count() != 6) throw std::invalid_argument("graph is not K4");
  std::array<std::array<EdgeId, 4>, 4> id{};
  for (auto& row : id) row.fill(-1);
  for (EdgeId e = 0; e < 6; ++e) {
    const Edge& ed = k4.edge(e);
    if (id[static_cast<std::size_t>(ed.u)][static_cast<std::size_t>(ed.v)] >= 0) {
      throw std::invalid_argument("graph is not K4");
    }
    id[static_cast<std::size_t>(ed.u)][static_cast<std::size_t>(ed.v)] = e;
    id[static_cast<std::size_t>(ed.v)][static_cast<std::size_t>(ed.u)] = e;
  }
  if (v < 0 || v >= 4) throw std::invalid_argument("vertex out of range");
  auto edge = [&](VertexId a, VertexId b) { return id[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  ElementSet star;
  for (VertexId u = 0; u < 4; ++u) {
    if (u != v) star.push_back(edge(v, u));
  }
  star = make_set(star);
  const ElementSet f1 = make_set(F1);
  const ElementSet f2 = make_set(F2);
  if (f1.size() + f2.size() != 3 || !is_disjoint(f1, f2) || set_union(f1, f2) != star) {
    throw std::invalid_argument("F1 and F2 must partition the edges at the chosen vertex");
  }
  if (f1.empty() || f2.empty()) {
    throw std::invalid_argument("no spanning tree factorization exists when one side of the star is empty");
  }
  const bool first_single = f1.size() == 1;
  const EdgeId single = first_single ? f1[0] : f2[0];
  const Edge& se = k4.edge(single);
  const VertexId s = se.u == v ? se.v : se.u;
  std::vector<VertexId> rest;
  for (VertexId u = 0; u < 4; ++u) {
    if (u != v && u != s) rest.push_back(u);
  }
  const VertexId p = rest[0];
  const VertexId q = rest[1];
  ElementSet t_single = make_set({edge(v, s), edge(s, p), edge(p, q)});
  ElementSet t_double = make_set({edge(v, p), edge(v, q), edge(s, q)});
  if (first_single) return {t_single, t_double};
  return {t_double, t_single};
}

std::vector<std::vector<int>> bipartite_coloring(int k, const std::vector<int>& sigma) {
  if (k < 1 || static_cast<int>(sigma.size()) != k) throw std::invalid_argument("sigma must have k entries");
  std::vector<char> seen(static_cast<std::size_t>(k) + 1, 0);
  for (int s : sigma) {
    if (s < 1 || s > k || seen[static_cast<std::size_t>(s)]) throw std::invalid_argument("sigma is not a bijection onto 1..k");
    seen[static_cast<std::size_t>(s)] = 1;
  }
  std::vector<std::vector<int>> phi(static_cast<std::size_t>(k));
  for (int a = 0; a < k; ++a) {
    for (int j = 1; j <= k - 1; ++j) phi[static_cast<std::size_t>(a)].push_back((sigma[static_cast<std::size_t>(a)] + j - 1) % k + 1);
  }
  return phi;
}

// ---- MNAE3SAT to GRST2F -------------------------------------------------

NaeReduction reduce_nae_to_grst2f(const Nae3SatInstance& instance, std::optional<std::uint64_t> seed) {
  if (instance.variables < 0) throw std::invalid_argument("negative variable count");
  for (std::size_t c = 0; c < instance.clauses.size(); ++c) {
    const auto& cl = instance.clauses[c];
    for (int x : cl) {
      if (x < 0 || x >= instance.variables) {
        throw std::invalid_argument("malformed clause " + std::to_string(c) + ": unknown variable");
      }
    }
    if (cl[0] == cl[1] || cl[0] == cl[2] || cl[1] == cl[2]) {
      throw std::invalid_argument("malformed clause " + std::to_string(c) + ": variables must be distinct");
    }
  }
  std::optional<Rng> rng;
  if (seed) rng.emplace(*seed, 0x6e6165);
  auto pick_hub = [&]() { return rng ? static_cast<VertexId>(rng->uniform(4)) : VertexId{0}; };

  NaeReduction r;
  r.source = instance;
  r.target.k = 2;
  Multigraph& g = r.target.graph;
  const VertexId hub = g.add_vertex("hub");
  const Multigraph k4 = complete_graph(4);

  for (std::size_t c = 0; c < instance.clauses.size(); ++c) {
    for (int slot = 0; slot < 3; ++slot) {
      const int x = instance.clauses[c][static_cast<std::size_t>(slot)];
      const std::string tag = "(x" + std::to_string(x) + ",C" + std::to_string(c) + ")";
      std::vector<std::string> names(6);
      for (int i = 0; i < 6; ++i) names[static_cast<std::size_t>(kIncidenceLocal[static_cast<std::size_t>(i)])] = kIncidenceNames[static_cast<std::size_t>(i)] + tag;
      const Attached at = attach(g, k4, pick_hub(), hub, tag, names);
      IncidenceGadget gadget;
      gadget.variable = x;
      gadget.clause = static_cast<int>(c);
      gadget.slot = slot;
      for (int i = 0; i < 6; ++i) gadget.edges[static_cast<std::size_t>(i)] = at.edges[static_cast<std::size_t>(kIncidenceLocal[static_cast<std::size_t>(i)])];
      std::copy(at.vertices.begin(), at.vertices.end(), gadget.vertices.begin());
      r.incidences.push_back(gadget);
    }
  }
  for (std::size_t c = 0; c < instance.clauses.size(); ++c) {
    const std::string tag = "(C" + std::to_string(c) + ")";
    std::vector<std::string> names;
    for (const char* n : kClauseNames) names.push_back(n + tag);
    const Attached at = attach(g, k4, pick_hub(), hub, tag, names);
    ClauseGadget gadget;
    std::copy(at.edges.begin(), at.edges.end(), gadget.edges.begin());
    std::copy(at.vertices.begin(), at.vertices.end(), gadget.vertices.begin());
    gadget.h_local = {0, 1, 2};
    if (rng) rng->shuffle(std::span<int>(gadget.h_local));
    r.clauses.push_back(gadget);
  }

  r.occurrence_order.assign(static_cast<std::size_t>(instance.variables), {});
  for (std::size_t i = 0; i < r.incidences.size(); ++i) {
    r.occurrence_order[static_cast<std::size_t>(r.incidences[i].variable)].push_back(static_cast<int>(i));
  }
  if (rng) {
    for (auto& order : r.occurrence_order) rng->shuffle(std::span<int>(order));
  }

  std::vector<ElementSet> classes;
  for (const auto& inc : r.incidences) classes.push_back(make_set({inc.edges[0], inc.edges[1]}));
  for (const auto& order : r.occurrence_order) {
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
      const EdgeId f1 = r.incidences[static_cast<std::size_t>(order[i])].edges[2];
      const EdgeId g1 = r.incidences[static_cast<std::size_t>(order[i + 1])].edges[4];
      classes.push_back(make_set({f1, g1}));
    }
  }
  for (std::size_t c = 0; c < r.clauses.size(); ++c) {
    for (int slot = 0; slot < 3; ++slot) {
      const EdgeId h = r.clauses[c].edges[static_cast<std::size_t>(r.clauses[c].h_local[static_cast<std::size_t>(slot)])];
      const EdgeId f2 = r.incidences[3 * c + static_cast<std::size_t>(slot)].edges[3];
      classes.push_back(make_set({h, f2}));
    }
  }
  std::vector<char> covered(static_cast<std::size_t>(g.edge_count()), 0);
  for (const auto& cl : classes) {
    for (ElementId e : cl) covered[static_cast<std::size_t>(e)] = 1;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!covered[static_cast<std::size_t>(e)]) classes.push_back({e});
  }
  r.target.partition = Partition(std::move(classes));
  label_graph(r.labels, g);
  return r;
}

Factorization nae_cert_to_trees(const NaeReduction& r, const Assignment& assignment) {
  validate_nae_assignment(r.source, assignment).require();
  Factorization out;
  out.parts.resize(2);
  auto& t1 = out.parts[0];
  auto& t2 = out.parts[1];
  for (const auto& inc : r.incidences) {
    const auto& e = inc.edges;
    if (assignment[static_cast<std::size_t>(inc.variable)]) {
      t1.insert(t1.end(), {e[0], e[2], e[3]});
      t2.insert(t2.end(), {e[1], e[4], e[5]});
    } else {
      t1.insert(t1.end(), {e[0], e[4], e[5]});
      t2.insert(t2.end(), {e[1], e[2], e[3]});
    }
  }
  const Multigraph k4 = complete_graph(4);
  for (std::size_t c = 0; c < r.clauses.size(); ++c) {
    const ClauseGadget& gadget = r.clauses[c];
    ElementSet e1;
    ElementSet e2;
    for (int slot = 0; slot < 3; ++slot) {
      const IncidenceGadget& inc = r.incidences[3 * c + static_cast<std::size_t>(slot)];
      const EdgeId h = gadget.h_local[static_cast<std::size_t>(slot)];
      // f2 lies in the first tree exactly for true variables.
      (assignment[static_cast<std::size_t>(inc.variable)] ? e2 : e1).push_back(h);
    }
    const auto [l1, l2] = k4_factorization_with_split(k4, 0, make_set(e1), make_set(e2));
    for (EdgeId e : l1) t1.push_back(gadget.edges[static_cast<std::size_t>(e)]);
    for (EdgeId e : l2) t2.push_back(gadget.edges[static_cast<std::size_t>(e)]);
  }
  sort_parts(out);
  return out;
}

Assignment trees_to_nae_cert(const NaeReduction& r, const Factorization& trees) {
  validate_tree_factorization(r.target, trees).require();
  const std::vector<int> owner = owners(r.target.graph.edge_count(), trees);
  Assignment out(static_cast<std::size_t>(r.source.variables), false);
  for (int x = 0; x < r.source.variables; ++x) {
    const auto& order = r.occurrence_order[static_cast<std::size_t>(x)];
    if (order.empty()) continue;
    const EdgeId f2 = r.incidences[static_cast<std::size_t>(order.front())].edges[3];
    out[static_cast<std::size_t>(x)] = owner[static_cast<std::size_t>(f2)] == 0;
  }
  validate_nae_assignment(r.source, out).require();
  return out;
}

// ---- GRST2F to RST2F ----------------------------------------------------

DoublingReduction reduce_grst2f_to_rst2f(const RstkfInstance& instance, std::optional<std::uint64_t> seed) {
  const Multigraph& g = instance.graph;
  if (instance.k != 2) throw std::invalid_argument("doubling reduction needs k = 2");
  if (!instance.partition.is_bounded(2)) throw std::invalid_argument("partition is not 2-bounded");
  for (const auto& cl : instance.partition.classes()) {
    if (cl.back() >= g.edge_count()) throw std::invalid_argument("partition names an unknown edge");
  }
  if (g.vertex_count() == 0 || !is_k_multiple_tree(g, 2)) throw std::invalid_argument("input is not a double tree");

  DoublingReduction r;
  r.source = instance;
  r.identified = seed ? static_cast<VertexId>(Rng(*seed, 0x646f75).uniform(static_cast<std::uint64_t>(g.vertex_count()))) : 0;
  r.target.k = 2;
  Multigraph& out = r.target.graph;
  std::vector<VertexId> map1(static_cast<std::size_t>(g.vertex_count()));
  std::vector<VertexId> map2(static_cast<std::size_t>(g.vertex_count()));
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    map1[static_cast<std::size_t>(v)] = out.add_vertex(v == r.identified ? g.vertex_name(v) : g.vertex_name(v) + "_1");
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    map2[static_cast<std::size_t>(v)] = v == r.identified ? map1[static_cast<std::size_t>(v)] : out.add_vertex(g.vertex_name(v) + "_2");
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    r.copy1.push_back(out.add_edge(map1[static_cast<std::size_t>(ed.u)], map1[static_cast<std::size_t>(ed.v)], g.edge_name(e) + "_1"));
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    r.copy2.push_back(out.add_edge(map2[static_cast<std::size_t>(ed.u)], map2[static_cast<std::size_t>(ed.v)], g.edge_name(e) + "_2"));
  }
  std::vector<ElementSet> classes;
  std::vector<char> paired(static_cast<std::size_t>(g.edge_count()), 0);
  for (const auto& cl : instance.partition.classes()) {
    if (cl.size() != 2) continue;
    classes.push_back(make_set({r.copy1[static_cast<std::size_t>(cl[0])], r.copy1[static_cast<std::size_t>(cl[1])]}));
    classes.push_back(make_set({r.copy2[static_cast<std::size_t>(cl[0])], r.copy2[static_cast<std::size_t>(cl[1])]}));
    paired[static_cast<std::size_t>(cl[0])] = paired[static_cast<std::size_t>(cl[1])] = 1;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!paired[static_cast<std::size_t>(e)]) classes.push_back({r.copy1[static_cast<std::size_t>(e)], r.copy2[static_cast<std::size_t>(e)]});
  }
  r.target.partition = Partition(std::move(classes));
  label_graph(r.labels, out);
  return r;
}

Factorization doubling_forward(const DoublingReduction& r, const Factorization& trees) {
  validate_tree_factorization(r.source, trees).require();
  Factorization out;
  out.parts.resize(2);
  for (int j = 0; j < 2; ++j) {
    for (EdgeId e : trees.parts[static_cast<std::size_t>(j)]) out.parts[static_cast<std::size_t>(j)].push_back(r.copy1[static_cast<std::size_t>(e)]);
    for (EdgeId e : trees.parts[static_cast<std::size_t>(1 - j)]) out.parts[static_cast<std::size_t>(j)].push_back(r.copy2[static_cast<std::size_t>(e)]);
  }
  sort_parts(out);
  return out;
}

Factorization doubling_backward(const DoublingReduction& r, const Factorization& trees) {
  validate_tree_factorization(r.target, trees).require();
  const std::vector<int> owner = owners(r.target.graph.edge_count(), trees);
  Factorization out;
  out.parts.resize(2);
  for (EdgeId e = 0; e < r.source.graph.edge_count(); ++e) {
    out.parts[static_cast<std::size_t>(owner[static_cast<std::size_t>(r.copy1[static_cast<std::size_t>(e)])])].push_back(e);
  }
  validate_tree_factorization(r.source, out).require();
  return out;
}

// ---- kCOL to RSTkF ------------------------------------------------------

namespace {

const ElementSet& bundle_at(const KColReduction& r, VertexId v, EdgeId e) {
  const LeafGadget& leaf = r.leaves[static_cast<std::size_t>(e)];
  return r.source.graph.edge(e).u == v ? leaf.Fu : leaf.Fv;
}

EdgeId single_at(const KColReduction& r, VertexId v, EdgeId e) {
  const LeafGadget& leaf = r.leaves[static_cast<std::size_t>(e)];
  return r.source.graph.edge(e).u == v ? leaf.fu : leaf.fv;
}

}  // namespace

KColReduction reduce_kcol_to_rstkf(const KColInstance& instance, std::optional<std::uint64_t> seed) {
  const int k = instance.k;
  if (k < 3) throw std::invalid_argument("kCOL reduction needs k >= 3");
  const Multigraph& h = instance.graph;
  std::optional<Rng> rng;
  if (seed) rng.emplace(*seed, 0x6b636f);

  KColReduction r;
  r.source = instance;
  r.target.k = k;
  Multigraph& g = r.target.graph;
  const VertexId hub = g.add_vertex("hub");
  const MarihuanaLeaf leaf = marihuana_leaf(k - 1);

  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const std::string tag = "(" + h.edge_name(e) + ")";
    std::vector<std::string> names(static_cast<std::size_t>(leaf.graph.edge_count()));
    for (int i = 0; i < k - 1; ++i) {
      const std::string idx = "#" + std::to_string(i);
      names[static_cast<std::size_t>(leaf.A[static_cast<std::size_t>(i)])] = "F" + tag + idx;
      names[static_cast<std::size_t>(leaf.B[static_cast<std::size_t>(i)])] = "Fu" + tag + idx;
      names[static_cast<std::size_t>(leaf.C[static_cast<std::size_t>(i)])] = "Fv" + tag + idx;
    }
    names[static_cast<std::size_t>(leaf.a)] = "f" + tag;
    names[static_cast<std::size_t>(leaf.c)] = "fu" + tag;
    names[static_cast<std::size_t>(leaf.b)] = "fv" + tag;
    const VertexId local_hub = rng ? static_cast<VertexId>(rng->uniform(4)) : VertexId{0};
    const Attached at = attach(g, leaf.graph, local_hub, hub, "G" + tag, names);
    auto map_set = [&](const ElementSet& s) {
      ElementSet out;
      for (EdgeId x : s) out.push_back(at.edges[static_cast<std::size_t>(x)]);
      return make_set(out);
    };
    LeafGadget lg;
    lg.F = map_set(leaf.A);
    lg.Fu = map_set(leaf.B);
    lg.Fv = map_set(leaf.C);
    lg.f = at.edges[static_cast<std::size_t>(leaf.a)];
    lg.fu = at.edges[static_cast<std::size_t>(leaf.c)];
    lg.fv = at.edges[static_cast<std::size_t>(leaf.b)];
    std::copy(at.vertices.begin(), at.vertices.end(), lg.vertices.begin());
    r.leaves.push_back(lg);
  }

  r.incidence_order.assign(static_cast<std::size_t>(h.vertex_count()), {});
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    r.incidence_order[static_cast<std::size_t>(h.edge(e).u)].push_back(e);
    r.incidence_order[static_cast<std::size_t>(h.edge(e).v)].push_back(e);
  }
  if (rng) {
    for (auto& order : r.incidence_order) rng->shuffle(std::span<EdgeId>(order));
  }

  std::vector<ElementSet> classes;
  for (const LeafGadget& lg : r.leaves) classes.push_back(set_union(lg.F, ElementSet{lg.f}));
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    const auto& order = r.incidence_order[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < order.size(); ++i) {
      const EdgeId next = order[(i + 1) % order.size()];
      classes.push_back(set_union(bundle_at(r, v, order[i]), ElementSet{single_at(r, v, next)}));
    }
  }
  r.target.partition = Partition(std::move(classes));
  label_graph(r.labels, g);
  return r;
}

Factorization coloring_to_trees(const KColReduction& r, const Coloring& coloring) {
  validate_coloring(r.source, coloring).require();
  const int k = r.source.k;
  Factorization out;
  out.parts.resize(static_cast<std::size_t>(k));
  auto spread = [&](const ElementSet& bundle, EdgeId single, int skip) {
    std::size_t next = 0;
    for (int t = 0; t < k; ++t) {
      if (t == skip) continue;
      out.parts[static_cast<std::size_t>(t)].push_back(bundle[next++]);
    }
    out.parts[static_cast<std::size_t>(skip)].push_back(single);
  };
  for (EdgeId e = 0; e < r.source.graph.edge_count(); ++e) {
    const Edge& ed = r.source.graph.edge(e);
    const LeafGadget& lg = r.leaves[static_cast<std::size_t>(e)];
    const int cu = coloring[static_cast<std::size_t>(ed.u)] - 1;
    const int cv = coloring[static_cast<std::size_t>(ed.v)] - 1;
    spread(lg.F, lg.f, cu);
    spread(lg.Fu, lg.fu, cu);
    spread(lg.Fv, lg.fv, cv);
  }
  sort_parts(out);
  return out;
}

Coloring trees_to_coloring(const KColReduction& r, const Factorization& trees) {
  validate_tree_factorization(r.target, trees).require();
  const std::vector<int> owner = owners(r.target.graph.edge_count(), trees);
  Coloring out(static_cast<std::size_t>(r.source.graph.vertex_count()), 1);
  for (VertexId v = 0; v < r.source.graph.vertex_count(); ++v) {
    const auto& order = r.incidence_order[static_cast<std::size_t>(v)];
    if (order.empty()) continue;
    out[static_cast<std::size_t>(v)] = owner[static_cast<std::size_t>(single_at(r, v, order.front()))] + 1;
  }
  validate_coloring(r.source, out).require();
  return out;
}

// ---- RSTkF to BSTkF -----------------------------------------------------

BstReduction reduce_rstkf_to_bstkf(const RstkfInstance& instance, std::optional<std::uint64_t> seed) {
  const int k = instance.k;
  const Multigraph& g = instance.graph;
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (!instance.partition.is_uniform(static_cast<std::size_t>(k)) || !instance.partition.partitions(g.all_edges())) {
    throw std::invalid_argument("partition is not a k-uniform partition of the edges");
  }
  std::optional<Rng> rng;
  if (seed) rng.emplace(*seed, 0x627374);

  BstReduction r;
  r.source = instance;
  r.target.k = k;
  Digraph& d = r.target.digraph;
  for (VertexId v = 0; v < g.vertex_count(); ++v) d.add_vertex(g.vertex_name(v));
  for (EdgeId e = 0; e < g.edge_count(); ++e) r.w.push_back(d.add_vertex("w(" + g.edge_name(e) + ")"));
  const auto& classes = instance.partition.classes();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::vector<VertexId> zs;
    for (int j = 0; j < k - 1; ++j) zs.push_back(d.add_vertex("Z(X" + std::to_string(c) + ")#" + std::to_string(j)));
    r.z.push_back(std::move(zs));
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const bool flip = rng ? rng->coin() : false;
    r.flipped.push_back(flip);
    const Edge& ed = g.edge(e);
    const VertexId tail = flip ? ed.v : ed.u;
    const VertexId head = flip ? ed.u : ed.v;
    const VertexId w = r.w[static_cast<std::size_t>(e)];
    std::vector<ArcId> par;
    for (int j = 0; j < k; ++j) par.push_back(d.add_arc(tail, w, "par(" + g.edge_name(e) + ")#" + std::to_string(j)));
    r.parallel.push_back(std::move(par));
    r.single.push_back(d.add_arc(head, w, "single(" + g.edge_name(e) + ")"));
  }
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::vector<std::vector<ArcId>> rows;
    for (int j = 0; j < k - 1; ++j) {
      std::vector<ArcId> row;
      const VertexId zv = r.z[c][static_cast<std::size_t>(j)];
      for (EdgeId e : classes[c]) {
        row.push_back(d.add_arc(zv, r.w[static_cast<std::size_t>(e)], d.vertex_name(zv) + ">w(" + g.edge_name(e) + ")"));
      }
      rows.push_back(std::move(row));
    }
    r.z_arcs.push_back(std::move(rows));
  }
  r.target.g.assign(static_cast<std::size_t>(d.vertex_count()), 0);
  for (VertexId w : r.w) r.target.g[static_cast<std::size_t>(w)] = 2;
  for (VertexId v = 0; v < d.vertex_count(); ++v) r.labels.vertices[d.vertex_name(v)] = v;
  for (ArcId a = 0; a < d.arc_count(); ++a) r.labels.edges[d.arc_name(a)] = a;
  return r;
}

Factorization bst_forward(const BstReduction& r, const Factorization& trees) {
  validate_tree_factorization(r.source, trees).require();
  const int k = r.source.k;
  const std::vector<int> owner = owners(r.source.graph.edge_count(), trees);
  Factorization out;
  out.parts.resize(static_cast<std::size_t>(k));
  for (EdgeId e = 0; e < r.source.graph.edge_count(); ++e) {
    out.parts[static_cast<std::size_t>(owner[static_cast<std::size_t>(e)])].push_back(r.single[static_cast<std::size_t>(e)]);
    for (int j = 0; j < k; ++j) out.parts[static_cast<std::size_t>(j)].push_back(r.parallel[static_cast<std::size_t>(e)][static_cast<std::size_t>(j)]);
  }
  const auto& classes = r.source.partition.classes();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::vector<int> sigma;
    for (EdgeId e : classes[c]) sigma.push_back(owner[static_cast<std::size_t>(e)] + 1);
    const auto phi = bipartite_coloring(k, sigma);
    for (std::size_t i = 0; i < classes[c].size(); ++i) {
      for (int j = 0; j < k - 1; ++j) {
        out.parts[static_cast<std::size_t>(phi[i][static_cast<std::size_t>(j)] - 1)].push_back(r.z_arcs[c][static_cast<std::size_t>(j)][i]);
      }
    }
  }
  sort_parts(out);
  return out;
}

Factorization bst_backward(const BstReduction& r, const Factorization& subgraphs) {
  validate_bst_factorization(r.target, subgraphs).require();
  const std::vector<int> owner = owners(r.target.digraph.arc_count(), subgraphs);
  Factorization out;
  out.parts.resize(static_cast<std::size_t>(r.source.k));
  for (EdgeId e = 0; e < r.source.graph.edge_count(); ++e) {
    out.parts[static_cast<std::size_t>(owner[static_cast<std::size_t>(r.single[static_cast<std::size_t>(e)])])].push_back(e);
  }
  validate_tree_factorization(r.source, out).require();
  return out;
}

}  // namespace rainbow
