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

#include "rainbow/graph.hpp"

#include <numeric>
#include <stdexcept>

#include "rainbow/random.hpp"

namespace rainbow {

Multigraph::Multigraph(int vertex_count) {
  for (int i = 0; i < vertex_count; ++i) add_vertex();
}

VertexId Multigraph::add_vertex(std::string name) {
  const auto id = static_cast<VertexId>(vertex_names_.size());
  if (name.empty()) name = "v" + std::to_string(id);
  if (!vertex_index_.emplace(name, id).second) {
    throw std::invalid_argument("duplicate vertex name '" + name + "'");
  }
  vertex_names_.push_back(std::move(name));
  return id;
}

EdgeId Multigraph::add_edge(VertexId u, VertexId v, std::string name) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  if (u == v) {
    throw std::invalid_argument("loop at vertex '" + vertex_name(u) + "' is not allowed");
  }
  const auto id = static_cast<EdgeId>(edges_.size());
  if (name.empty()) name = "e" + std::to_string(id);
  if (!edge_index_.emplace(name, id).second) {
    throw std::invalid_argument("duplicate edge name '" + name + "'");
  }
  edges_.push_back({u, v});
  edge_names_.push_back(std::move(name));
  return id;
}

std::optional<VertexId> Multigraph::find_vertex(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Multigraph::find_edge(const std::string& name) const {
  auto it = edge_index_.find(name);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

ElementSet Multigraph::all_edges() const {
  ElementSet out(edges_.size());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

Digraph::Digraph(int vertex_count) {
  for (int i = 0; i < vertex_count; ++i) add_vertex();
}

VertexId Digraph::add_vertex(std::string name) {
  const auto id = static_cast<VertexId>(vertex_names_.size());
  if (name.empty()) name = "v" + std::to_string(id);
  if (!vertex_index_.emplace(name, id).second) {
    throw std::invalid_argument("duplicate vertex name '" + name + "'");
  }
  vertex_names_.push_back(std::move(name));
  return id;
}

ArcId Digraph::add_arc(VertexId tail, VertexId head, std::string name) {
  if (tail < 0 || head < 0 || tail >= vertex_count() || head >= vertex_count()) {
    throw std::invalid_argument("arc endpoint out of range");
  }
  if (tail == head) {
    throw std::invalid_argument("self-arc at vertex '" + vertex_name(tail) + "' is not allowed");
  }
  const auto id = static_cast<ArcId>(arcs_.size());
  if (name.empty()) name = "a" + std::to_string(id);
  if (!arc_index_.emplace(name, id).second) {
    throw std::invalid_argument("duplicate arc name '" + name + "'");
  }
  arcs_.push_back({tail, head});
  arc_names_.push_back(std::move(name));
  return id;
}

std::optional<VertexId> Digraph::find_vertex(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArcId> Digraph::find_arc(const std::string& name) const {
  auto it = arc_index_.find(name);
  if (it == arc_index_.end()) return std::nullopt;
  return it->second;
}

UnionFind::UnionFind(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1), components_(n) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int UnionFind::find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  --components_;
  return true;
}

bool is_spanning_tree(const Multigraph& g, std::span<const EdgeId> tree) {
  std::vector<char> seen(static_cast<std::size_t>(g.edge_count()), 0);
  for (EdgeId e : tree) {
    if (e < 0 || e >= g.edge_count()) {
      throw std::invalid_argument("unknown edge id " + std::to_string(e));
    }
    if (seen[e]) throw std::invalid_argument("repeated edge id " + std::to_string(e));
    seen[e] = 1;
  }
  if (static_cast<int>(tree.size()) != g.vertex_count() - 1) return false;
  UnionFind uf(g.vertex_count());
  for (EdgeId e : tree) {
    if (!uf.unite(g.edge(e).u, g.edge(e).v)) return false;
  }
  return uf.components() <= 1;
}

Multigraph underlying_graph(const Digraph& d) {
  Multigraph g;
  for (VertexId v = 0; v < d.vertex_count(); ++v) g.add_vertex(d.vertex_name(v));
  for (ArcId a = 0; a < d.arc_count(); ++a) {
    g.add_edge(d.arc(a).tail, d.arc(a).head, d.arc_name(a));
  }
  return g;
}

Identification identify_vertices(std::span<const IdentifyPart> parts) {
  if (parts.empty()) throw std::invalid_argument("identify_vertices: empty part list");
  Identification out;
  out.hub = out.graph.add_vertex("hub");
  out.vertex_map.resize(parts.size());
  out.edge_map.resize(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Multigraph& part = *parts[i].graph;
    if (parts[i].chosen < 0 || parts[i].chosen >= part.vertex_count()) {
      throw std::invalid_argument("identify_vertices: chosen vertex out of range");
    }
    const std::string prefix = "p" + std::to_string(i) + ".";
    auto& vmap = out.vertex_map[i];
    vmap.resize(static_cast<std::size_t>(part.vertex_count()));
    for (VertexId v = 0; v < part.vertex_count(); ++v) {
      vmap[v] = v == parts[i].chosen ? out.hub : out.graph.add_vertex(prefix + part.vertex_name(v));
    }
    auto& emap = out.edge_map[i];
    emap.resize(static_cast<std::size_t>(part.edge_count()));
    for (EdgeId e = 0; e < part.edge_count(); ++e) {
      emap[e] = out.graph.add_edge(vmap[part.edge(e).u], vmap[part.edge(e).v],
                                   prefix + part.edge_name(e));
    }
  }
  return out;
}

namespace {

// Decodes a Pruefer sequence into the edge list of a labeled tree.
std::vector<std::pair<int, int>> decode_pruefer(const std::vector<int>& code, int n) {
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : code) ++degree[x];
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int x : code) {
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return edges;
}

}  // namespace

KMultipleTree random_k_multiple_tree(int n, int k, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_k_multiple_tree: need n >= 2");
  if (k < 1) throw std::invalid_argument("random_k_multiple_tree: need k >= 1");
  KMultipleTree out{Multigraph(n), {}};
  for (int t = 0; t < k; ++t) {
    Rng rng(seed, static_cast<std::uint64_t>(t));
    std::vector<int> code(static_cast<std::size_t>(n - 2));
    for (int& x : code) x = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(n)));
    ElementSet tree;
    for (auto [u, v] : decode_pruefer(code, n)) {
      tree.push_back(out.graph.add_edge(std::min(u, v), std::max(u, v)));
    }
    out.trees.parts.push_back(std::move(tree));
  }
  return out;
}

Multigraph complete_graph(int n) {
  Multigraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Multigraph wheel_graph(int rim) {
  if (rim < 3) throw std::invalid_argument("wheel_graph: need at least 3 rim vertices");
  Multigraph g(rim + 1);
  for (int i = 0; i < rim; ++i) g.add_edge(0, i + 1);
  for (int i = 0; i < rim; ++i) g.add_edge(i + 1, (i + 1) % rim + 1);
  return g;
}

}  // namespace rainbow
