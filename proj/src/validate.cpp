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

#include "rainbow/validate.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace rainbow {
namespace {

// Deliberately separate from the union-find used by the algorithms.
class Forest {
 public:
  explicit Forest(int n) : up_(static_cast<std::size_t>(n)) { std::iota(up_.begin(), up_.end(), 0); }
  int root(int x) {
    while (up_[static_cast<std::size_t>(x)] != x) x = up_[static_cast<std::size_t>(x)];
    return x;
  }
  bool link(int a, int b) {
    a = root(a);
    b = root(b);
    if (a == b) return false;
    up_[static_cast<std::size_t>(a)] = b;
    return true;
  }

 private:
  std::vector<int> up_;
};

class Builder {
 public:
  void add(std::string name, bool pass, std::string detail = {}) {
    report_.checks.push_back({std::move(name), pass, pass ? std::string() : std::move(detail)});
  }
  Report take() { return std::move(report_); }

 private:
  Report report_;
};

// Spanning-tree test on an explicit edge list; returns an empty string on
// success and a description of the defect otherwise.
std::string tree_defect(int vertices, const std::vector<std::pair<int, int>>& ends) {
  if (static_cast<int>(ends.size()) != std::max(vertices - 1, 0)) {
    std::ostringstream os;
    os << ends.size() << " edges, expected " << std::max(vertices - 1, 0);
    return os.str();
  }
  Forest f(vertices);
  for (const auto& [u, v] : ends) {
    if (!f.link(u, v)) return "contains a cycle";
  }
  return {};
}

// Disjoint cover of 0..total-1 by the parts. Ids are checked for range.
void check_partition_of_ids(Builder& b, int total, const Factorization& parts, const char* what) {
  std::vector<int> owner(static_cast<std::size_t>(total), -1);
  bool range_ok = true;
  bool disjoint = true;
  std::ostringstream detail;
  for (std::size_t t = 0; t < parts.parts.size(); ++t) {
    for (ElementId e : parts.parts[t]) {
      if (e < 0 || e >= total) {
        if (range_ok) detail << what << " " << e << " out of range";
        range_ok = false;
        continue;
      }
      int& o = owner[static_cast<std::size_t>(e)];
      if (o >= 0) {
        if (disjoint && range_ok) detail << what << " " << e << " in parts " << o << " and " << t;
        disjoint = false;
      }
      o = static_cast<int>(t);
    }
  }
  b.add("ids in range", range_ok, detail.str());
  b.add("parts disjoint", range_ok && disjoint, detail.str());
  int missing = -1;
  for (int e = 0; e < total; ++e) {
    if (owner[static_cast<std::size_t>(e)] < 0) {
      missing = e;
      break;
    }
  }
  b.add("parts cover all", missing < 0, std::string(what) + " " + std::to_string(missing) + " unassigned");
}

std::string class_label(const Multigraph& g, const Partition& p, int c) {
  std::string out = "{";
  for (ElementId e : p.classes()[static_cast<std::size_t>(c)]) {
    if (out.size() > 1) out += ",";
    out += e >= 0 && e < g.edge_count() ? g.edge_name(e) : std::to_string(e);
  }
  return out + "}";
}

}  // namespace

bool Report::ok() const { return first_failure() == nullptr; }

const CheckResult* Report::first_failure() const {
  for (const auto& c : checks) {
    if (!c.pass) return &c;
  }
  return nullptr;
}

void Report::require() const {
  if (const CheckResult* f = first_failure()) throw CertificateInvalid(f->name, f->detail);
}

Report validate_tree_factorization(const RstkfInstance& inst, const Factorization& trees) {
  Builder b;
  const Multigraph& g = inst.graph;
  b.add("tree count", static_cast<int>(trees.parts.size()) == inst.k,
        std::to_string(trees.parts.size()) + " trees, expected " + std::to_string(inst.k));
  check_partition_of_ids(b, g.edge_count(), trees, "edge");
  std::vector<int> class_of(static_cast<std::size_t>(g.edge_count()), -1);
  for (std::size_t c = 0; c < inst.partition.classes().size(); ++c) {
    for (ElementId e : inst.partition.classes()[c]) {
      if (e >= 0 && e < g.edge_count()) class_of[static_cast<std::size_t>(e)] = static_cast<int>(c);
    }
  }
  bool trees_ok = true;
  bool rainbow_ok = true;
  std::string tree_detail;
  std::string rainbow_detail;
  for (std::size_t t = 0; t < trees.parts.size(); ++t) {
    std::vector<std::pair<int, int>> ends;
    std::set<int> seen_classes;
    for (ElementId e : trees.parts[t]) {
      if (e < 0 || e >= g.edge_count()) continue;
      ends.emplace_back(g.edge(e).u, g.edge(e).v);
      const int c = class_of[static_cast<std::size_t>(e)];
      if (c >= 0 && !seen_classes.insert(c).second && rainbow_ok) {
        rainbow_ok = false;
        rainbow_detail = "tree " + std::to_string(t) + " uses class " + class_label(g, inst.partition, c) + " twice";
      }
    }
    const std::string defect = tree_defect(g.vertex_count(), ends);
    if (!defect.empty() && trees_ok) {
      trees_ok = false;
      tree_detail = "tree " + std::to_string(t) + ": " + defect;
    }
  }
  b.add("spanning trees", trees_ok, tree_detail);
  b.add("rainbow", rainbow_ok, rainbow_detail);
  return b.take();
}

Report validate_bst_factorization(const BstkfInstance& inst, const Factorization& subgraphs) {
  Builder b;
  const Digraph& d = inst.digraph;
  b.add("subgraph count", static_cast<int>(subgraphs.parts.size()) == inst.k,
        std::to_string(subgraphs.parts.size()) + " subgraphs, expected " + std::to_string(inst.k));
  b.add("bound vector size", static_cast<int>(inst.g.size()) == d.vertex_count(), "one bound per vertex required");
  check_partition_of_ids(b, d.arc_count(), subgraphs, "arc");
  bool trees_ok = true;
  bool bounded = true;
  std::string tree_detail;
  std::string bound_detail;
  for (std::size_t t = 0; t < subgraphs.parts.size(); ++t) {
    std::vector<std::pair<int, int>> ends;
    std::vector<int> indeg(static_cast<std::size_t>(d.vertex_count()), 0);
    for (ArcId a : subgraphs.parts[t]) {
      if (a < 0 || a >= d.arc_count()) continue;
      ends.emplace_back(d.arc(a).tail, d.arc(a).head);
      ++indeg[static_cast<std::size_t>(d.arc(a).head)];
    }
    const std::string defect = tree_defect(d.vertex_count(), ends);
    if (!defect.empty() && trees_ok) {
      trees_ok = false;
      tree_detail = "subgraph " + std::to_string(t) + ": " + defect;
    }
    for (int v = 0; v < d.vertex_count() && v < static_cast<int>(inst.g.size()); ++v) {
      if (indeg[static_cast<std::size_t>(v)] > inst.g[static_cast<std::size_t>(v)] && bounded) {
        bounded = false;
        bound_detail = "subgraph " + std::to_string(t) + " has indegree " +
                       std::to_string(indeg[static_cast<std::size_t>(v)]) + " at " + d.vertex_name(v);
      }
    }
  }
  b.add("spanning trees", trees_ok, tree_detail);
  b.add("indegree bounds", bounded, bound_detail);
  return b.take();
}

Report validate_nae_assignment(const Nae3SatInstance& inst, const Assignment& x) {
  Builder b;
  b.add("assignment size", static_cast<int>(x.size()) == inst.variables,
        std::to_string(x.size()) + " values for " + std::to_string(inst.variables) + " variables");
  bool ok = true;
  std::string detail;
  for (std::size_t c = 0; c < inst.clauses.size() && x.size() == static_cast<std::size_t>(inst.variables); ++c) {
    int trues = 0;
    for (int v : inst.clauses[c]) {
      if (v < 0 || v >= inst.variables) {
        ok = false;
        detail = "clause " + std::to_string(c) + " names unknown variable";
        break;
      }
      trues += x[static_cast<std::size_t>(v)] ? 1 : 0;
    }
    if (ok && (trues == 0 || trues == 3)) {
      ok = false;
      detail = "clause " + std::to_string(c) + " is all " + (trues == 3 ? "true" : "false");
    }
    if (!ok) break;
  }
  b.add("clauses not all equal", ok, detail);
  return b.take();
}

Report validate_coloring(const KColInstance& inst, const Coloring& c) {
  Builder b;
  const Multigraph& g = inst.graph;
  b.add("coloring size", static_cast<int>(c.size()) == g.vertex_count(),
        std::to_string(c.size()) + " colors for " + std::to_string(g.vertex_count()) + " vertices");
  if (static_cast<int>(c.size()) != g.vertex_count()) return b.take();
  bool range = true;
  std::string range_detail;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int col = c[static_cast<std::size_t>(v)];
    if ((col < 1 || col > inst.k) && range) {
      range = false;
      range_detail = "vertex " + g.vertex_name(v) + " has color " + std::to_string(col);
    }
  }
  b.add("colors in range", range, range_detail);
  bool proper = true;
  std::string detail;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (c[static_cast<std::size_t>(ed.u)] == c[static_cast<std::size_t>(ed.v)]) {
      proper = false;
      detail = "edge " + g.edge_name(e) + " is monochromatic";
      break;
    }
  }
  b.add("proper", proper, detail);
  return b.take();
}

Report validate_cover(const Multigraph& g, const Partition& p, const std::vector<ElementSet>& sets,
                      const std::vector<bool>& basis, const ElementSet& target, std::optional<int> bound) {
  Builder b;
  b.add("basis flags", basis.size() == sets.size(), "one flag per set required");
  std::vector<int> class_of(static_cast<std::size_t>(g.edge_count()), -1);
  for (std::size_t c = 0; c < p.classes().size(); ++c) {
    for (ElementId e : p.classes()[c]) {
      if (e >= 0 && e < g.edge_count()) class_of[static_cast<std::size_t>(e)] = static_cast<int>(c);
    }
  }
  std::vector<char> hit(static_cast<std::size_t>(g.edge_count()), 0);
  bool range_ok = true;
  bool forests = true;
  bool trees_ok = true;
  bool rainbow_ok = true;
  std::string forest_detail;
  std::string tree_detail;
  std::string rainbow_detail;
  for (std::size_t s = 0; s < sets.size(); ++s) {
    std::vector<std::pair<int, int>> ends;
    std::set<int> used;
    std::set<ElementId> distinct;
    for (ElementId e : sets[s]) {
      if (e < 0 || e >= g.edge_count() || !distinct.insert(e).second) {
        range_ok = false;
        continue;
      }
      hit[static_cast<std::size_t>(e)] = 1;
      ends.emplace_back(g.edge(e).u, g.edge(e).v);
      const int c = class_of[static_cast<std::size_t>(e)];
      if (c >= 0 && !used.insert(c).second && rainbow_ok) {
        rainbow_ok = false;
        rainbow_detail = "set " + std::to_string(s) + " uses class " + class_label(g, p, c) + " twice";
      }
    }
    Forest f(g.vertex_count());
    bool acyclic = true;
    for (const auto& [u, v] : ends) acyclic = f.link(u, v) && acyclic;
    if (!acyclic && forests) {
      forests = false;
      forest_detail = "set " + std::to_string(s) + " contains a cycle";
    }
    if (s < basis.size() && basis[s]) {
      const std::string defect = tree_defect(g.vertex_count(), ends);
      if (!defect.empty() && trees_ok) {
        trees_ok = false;
        tree_detail = "set " + std::to_string(s) + ": " + defect;
      }
    }
  }
  b.add("ids in range", range_ok, "unknown or repeated edge id");
  b.add("independent", forests, forest_detail);
  b.add("flagged bases are spanning trees", trees_ok, tree_detail);
  b.add("rainbow", rainbow_ok, rainbow_detail);
  ElementId missing = -1;
  for (ElementId e : target) {
    if (e < 0 || e >= g.edge_count() || !hit[static_cast<std::size_t>(e)]) {
      missing = e;
      break;
    }
  }
  b.add("covers target", missing < 0,
        "edge " + (missing >= 0 && missing < g.edge_count() ? g.edge_name(missing) : std::to_string(missing)) +
            " not covered");
  if (bound) {
    b.add("within bound", static_cast<int>(sets.size()) <= *bound,
          std::to_string(sets.size()) + " sets, bound " + std::to_string(*bound));
  }
  return b.take();
}

}  // namespace rainbow
