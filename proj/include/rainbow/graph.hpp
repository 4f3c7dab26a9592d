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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rainbow/common.hpp"

namespace rainbow {

using VertexId = std::int32_t;
using EdgeId = ElementId;
using ArcId = ElementId;

struct Edge {
  VertexId u;
  VertexId v;
};

struct Arc {
  VertexId tail;
  VertexId head;
};

// Undirected multigraph. Vertices and edges are dense indices; each also
// carries a unique string name used for serialization and label maps.
// Parallel edges are allowed, loops are not.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int vertex_count);

  VertexId add_vertex(std::string name = {});
  EdgeId add_edge(VertexId u, VertexId v, std::string name = {});

  int vertex_count() const noexcept { return static_cast<int>(vertex_names_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(static_cast<std::size_t>(v)); }
  const std::string& edge_name(EdgeId e) const { return edge_names_.at(static_cast<std::size_t>(e)); }
  std::optional<VertexId> find_vertex(const std::string& name) const;
  std::optional<EdgeId> find_edge(const std::string& name) const;

  ElementSet all_edges() const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Edge> edges_;
  std::vector<std::string> edge_names_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
};

// Directed multigraph; parallel and antiparallel arcs allowed, self-arcs not.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int vertex_count);

  VertexId add_vertex(std::string name = {});
  ArcId add_arc(VertexId tail, VertexId head, std::string name = {});

  int vertex_count() const noexcept { return static_cast<int>(vertex_names_.size()); }
  int arc_count() const noexcept { return static_cast<int>(arcs_.size()); }
  const Arc& arc(ArcId a) const { return arcs_.at(static_cast<std::size_t>(a)); }
  std::span<const Arc> arcs() const noexcept { return arcs_; }

  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(static_cast<std::size_t>(v)); }
  const std::string& arc_name(ArcId a) const { return arc_names_.at(static_cast<std::size_t>(a)); }
  std::optional<VertexId> find_vertex(const std::string& name) const;
  std::optional<ArcId> find_arc(const std::string& name) const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Arc> arcs_;
  std::vector<std::string> arc_names_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, ArcId> arc_index_;
};

// Plain union-find with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(int n = 0);
  int find(int x);
  bool unite(int a, int b);  // false if already joined
  int components() const noexcept { return components_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int components_ = 0;
};

// True iff `tree` has |V|-1 edges, is acyclic and connects every vertex.
// Throws std::invalid_argument on unknown or repeated edge ids.
bool is_spanning_tree(const Multigraph& g, std::span<const EdgeId> tree);

Multigraph underlying_graph(const Digraph& d);

struct IdentifyPart {
  const Multigraph* graph;
  VertexId chosen;
};

struct Identification {
  Multigraph graph;
  VertexId hub = 0;
  // vertex_map[i][v] / edge_map[i][e]: id in the merged graph of vertex v /
  // edge e of part i.
  std::vector<std::vector<VertexId>> vertex_map;
  std::vector<std::vector<EdgeId>> edge_map;
};

// Disjoint union of the parts with every chosen vertex merged into one hub.
// Merged names are "p<i>.<name>"; the hub is vertex 0 named "hub".
Identification identify_vertices(std::span<const IdentifyPart> parts);

struct KMultipleTree {
  Multigraph graph;
  Factorization trees;  // the k spanning trees the graph was built from
};

// Edge-disjoint union of k independently drawn uniform random labeled
// spanning trees on n vertices (Pruefer codes). Deterministic in seed.
KMultipleTree random_k_multiple_tree(int n, int k, std::uint64_t seed);

// Standard named graphs used across tests and the CLI.
Multigraph complete_graph(int n);
// Wheel with `rim` rim vertices (rim+1 vertices in total); hub is vertex 0,
// spokes are edges 0..rim-1 (spoke i to rim vertex i+1) and rim edge i joins
// rim vertices i+1 and ((i+1) mod rim)+1.
Multigraph wheel_graph(int rim);

}  // namespace rainbow
