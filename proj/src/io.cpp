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

#include "rainbow/io.hpp"

#include <array>
#include <functional>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

namespace rainbow {
namespace {

using json = nlohmann::json;

constexpr const char* kInstanceFormat = "rainbow-matroid-instance";
constexpr const char* kCertificateFormat = "rainbow-matroid-certificate";
constexpr const char* kLabelsFormat = "rainbow-matroid-labels";
constexpr int kVersion = 1;

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw ParseError("field '" + path + "': " + what); }

const json& field(const json& obj, const std::string& key, const std::string& path = {}) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError("missing field '" + path + key + "'");
  return *it;
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

int as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  const auto v = j.get<long long>();
  if (v < -(1LL << 31) || v >= (1LL << 31)) fail(path, "integer out of range");
  return static_cast<int>(v);
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

const json& as_object(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  return j;
}

void only_fields(const json& obj, const std::set<std::string>& allowed, const std::string& path = {}) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key())) throw ParseError("unknown field '" + path + it.key() + "'");
  }
}

json parse_document(const std::string& text, const char* format) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("syntax error: ") + e.what());
  }
  as_object(doc, "(document)");
  if (as_string(field(doc, "format"), "format") != format) fail("format", std::string("expected \"") + format + "\"");
  if (as_int(field(doc, "version"), "version") != kVersion) fail("version", "unsupported version");
  return doc;
}

template <typename Find>
ElementId resolve(const json& j, const std::string& path, Find&& find) {
  const std::string name = as_string(j, path);
  const auto id = find(name);
  if (!id) fail(path, "unknown id '" + name + "'");
  return *id;
}

ElementSet read_id_list(const json& j, const std::string& path, const std::function<std::optional<ElementId>(const std::string&)>& find) {
  ElementSet out;
  as_array(j, path);
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(resolve(j[i], path + "[" + std::to_string(i) + "]", find));
  const ElementSet sorted = make_set(out);
  if (sorted.size() != out.size()) fail(path, "repeated id");
  return sorted;
}

std::vector<std::string> read_names(const json& j, const std::string& path) {
  std::vector<std::string> out;
  as_array(j, path);
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_string(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

Multigraph read_graph(const json& doc) {
  Multigraph g;
  const auto names = read_names(field(doc, "vertices"), "vertices");
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) fail("vertices[" + std::to_string(i) + "]", "empty name");
    try {
      g.add_vertex(names[i]);
    } catch (const std::invalid_argument& e) {
      fail("vertices[" + std::to_string(i) + "]", e.what());
    }
  }
  const json& edges = as_array(field(doc, "edges"), "edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string p = "edges[" + std::to_string(i) + "]";
    as_object(edges[i], p);
    only_fields(edges[i], {"id", "u", "v"}, p + ".");
    auto fv = [&](const std::string& n) { return g.find_vertex(n); };
    const VertexId u = resolve(field(edges[i], "u", p + "."), p + ".u", fv);
    const VertexId v = resolve(field(edges[i], "v", p + "."), p + ".v", fv);
    const std::string id = as_string(field(edges[i], "id", p + "."), p + ".id");
    if (id.empty()) fail(p + ".id", "empty name");
    try {
      g.add_edge(u, v, id);
    } catch (const std::invalid_argument& e) {
      fail(p, e.what());
    }
  }
  return g;
}

Digraph read_digraph(const json& doc) {
  Digraph d;
  const auto names = read_names(field(doc, "vertices"), "vertices");
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) fail("vertices[" + std::to_string(i) + "]", "empty name");
    try {
      d.add_vertex(names[i]);
    } catch (const std::invalid_argument& e) {
      fail("vertices[" + std::to_string(i) + "]", e.what());
    }
  }
  const json& arcs = as_array(field(doc, "arcs"), "arcs");
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const std::string p = "arcs[" + std::to_string(i) + "]";
    as_object(arcs[i], p);
    only_fields(arcs[i], {"id", "tail", "head"}, p + ".");
    auto fv = [&](const std::string& n) { return d.find_vertex(n); };
    const VertexId t = resolve(field(arcs[i], "tail", p + "."), p + ".tail", fv);
    const VertexId h = resolve(field(arcs[i], "head", p + "."), p + ".head", fv);
    const std::string id = as_string(field(arcs[i], "id", p + "."), p + ".id");
    if (id.empty()) fail(p + ".id", "empty name");
    try {
      d.add_arc(t, h, id);
    } catch (const std::invalid_argument& e) {
      fail(p, e.what());
    }
  }
  return d;
}

json graph_json(const Multigraph& g) {
  json vertices = json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.vertex_name(v));
  json edges = json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    edges.push_back({{"id", g.edge_name(e)}, {"u", g.vertex_name(g.edge(e).u)}, {"v", g.vertex_name(g.edge(e).v)}});
  }
  return {{"vertices", vertices}, {"edges", edges}};
}

json digraph_json(const Digraph& d) {
  json vertices = json::array();
  for (VertexId v = 0; v < d.vertex_count(); ++v) vertices.push_back(d.vertex_name(v));
  json arcs = json::array();
  for (ArcId a = 0; a < d.arc_count(); ++a) {
    arcs.push_back({{"id", d.arc_name(a)}, {"tail", d.vertex_name(d.arc(a).tail)}, {"head", d.vertex_name(d.arc(a).head)}});
  }
  return {{"vertices", vertices}, {"arcs", arcs}};
}

template <typename NameOf>
json id_list(const ElementSet& s, NameOf&& name_of) {
  json out = json::array();
  for (ElementId e : s) out.push_back(name_of(e));
  return out;
}

const std::map<std::string, InstanceKind>& instance_kinds() {
  static const std::map<std::string, InstanceKind> m = {
      {"graph", InstanceKind::Graph}, {"digraph", InstanceKind::Digraph}, {"nae3sat", InstanceKind::Nae3Sat},
      {"kcol", InstanceKind::KCol},   {"rstkf", InstanceKind::Rstkf},     {"bstkf", InstanceKind::Bstkf}};
  return m;
}

const std::map<std::string, CertificateKind>& certificate_kinds() {
  static const std::map<std::string, CertificateKind> m = {{"trees", CertificateKind::Trees},
                                                           {"subgraphs", CertificateKind::Subgraphs},
                                                           {"assignment", CertificateKind::Assignment},
                                                           {"coloring", CertificateKind::Coloring},
                                                           {"cover", CertificateKind::Cover}};
  return m;
}

bool has_graph(InstanceKind k) { return k == InstanceKind::Graph || k == InstanceKind::KCol || k == InstanceKind::Rstkf; }
bool has_digraph(InstanceKind k) { return k == InstanceKind::Digraph || k == InstanceKind::Bstkf; }

}  // namespace

const char* to_string(InstanceKind kind) {
  for (const auto& [name, k] : instance_kinds()) {
    if (k == kind) return name.c_str();
  }
  return "unknown";
}

const char* to_string(CertificateKind kind) {
  for (const auto& [name, k] : certificate_kinds()) {
    if (k == kind) return name.c_str();
  }
  return "unknown";
}

InstanceFile InstanceFile::from(const RstkfInstance& inst) {
  InstanceFile f;
  f.kind = InstanceKind::Rstkf;
  f.graph = inst.graph;
  f.partition = inst.partition;
  f.k = inst.k;
  return f;
}

InstanceFile InstanceFile::from(const BstkfInstance& inst) {
  InstanceFile f;
  f.kind = InstanceKind::Bstkf;
  f.digraph = inst.digraph;
  f.g = inst.g;
  f.k = inst.k;
  return f;
}

InstanceFile InstanceFile::from(const Nae3SatInstance& inst) {
  InstanceFile f;
  f.kind = InstanceKind::Nae3Sat;
  for (int x = 0; x < inst.variables; ++x) f.variables.push_back("x" + std::to_string(x));
  f.clauses = inst.clauses;
  return f;
}

InstanceFile InstanceFile::from(const KColInstance& inst) {
  InstanceFile f;
  f.kind = InstanceKind::KCol;
  f.graph = inst.graph;
  f.k = inst.k;
  return f;
}

RstkfInstance InstanceFile::rstkf() const {
  if (!has_graph(kind)) throw std::invalid_argument(std::string("a ") + to_string(kind) + " instance has no graph");
  return {graph, partition.value_or(Partition()), k.value_or(2)};
}

BstkfInstance InstanceFile::bstkf() const {
  if (!has_digraph(kind)) throw std::invalid_argument(std::string("a ") + to_string(kind) + " instance has no digraph");
  if (static_cast<int>(g.size()) != digraph.vertex_count()) throw std::invalid_argument("instance has no indegree bounds");
  return {digraph, g, k.value_or(2)};
}

Nae3SatInstance InstanceFile::nae3sat() const {
  if (kind != InstanceKind::Nae3Sat) throw std::invalid_argument(std::string("a ") + to_string(kind) + " instance has no clauses");
  return {static_cast<int>(variables.size()), clauses};
}

KColInstance InstanceFile::kcol() const {
  if (!has_graph(kind)) throw std::invalid_argument(std::string("a ") + to_string(kind) + " instance has no graph");
  return {graph, k.value_or(3)};
}

std::string write_instance(const InstanceFile& f) {
  json doc = {{"format", kInstanceFormat}, {"version", kVersion}, {"kind", to_string(f.kind)}};
  if (has_graph(f.kind)) {
    doc.update(graph_json(f.graph));
    auto name = [&](ElementId e) { return f.graph.edge_name(e); };
    if (f.partition && f.kind != InstanceKind::KCol) {
      json classes = json::array();
      for (const auto& c : f.partition->classes()) classes.push_back(id_list(c, name));
      doc["partition"] = classes;
    }
    if (f.target && f.kind != InstanceKind::KCol) doc["target"] = id_list(*f.target, name);
  }
  if (has_digraph(f.kind)) {
    doc.update(digraph_json(f.digraph));
    if (!f.g.empty()) {
      json g = json::object();
      for (VertexId v = 0; v < f.digraph.vertex_count(); ++v) g[f.digraph.vertex_name(v)] = f.g[static_cast<std::size_t>(v)];
      doc["g"] = g;
    }
  }
  if (f.kind == InstanceKind::Nae3Sat) {
    doc["variables"] = f.variables;
    json clauses = json::array();
    for (const auto& c : f.clauses) {
      clauses.push_back({f.variables[static_cast<std::size_t>(c[0])], f.variables[static_cast<std::size_t>(c[1])],
                         f.variables[static_cast<std::size_t>(c[2])]});
    }
    doc["clauses"] = clauses;
  }
  if (f.k && f.kind != InstanceKind::Nae3Sat) doc["k"] = *f.k;
  return doc.dump(2) + "\n";
}

InstanceFile read_instance(const std::string& text) {
  const json doc = parse_document(text, kInstanceFormat);
  const std::string kind_name = as_string(field(doc, "kind"), "kind");
  const auto kit = instance_kinds().find(kind_name);
  if (kit == instance_kinds().end()) fail("kind", "unknown kind '" + kind_name + "'");
  InstanceFile f;
  f.kind = kit->second;
  std::set<std::string> allowed = {"format", "version", "kind"};
  switch (f.kind) {
    case InstanceKind::Graph:
      allowed.insert({"vertices", "edges", "partition", "k", "target"});
      break;
    case InstanceKind::Rstkf:
      allowed.insert({"vertices", "edges", "partition", "k", "target"});
      field(doc, "partition");
      field(doc, "k");
      break;
    case InstanceKind::KCol:
      allowed.insert({"vertices", "edges", "k"});
      field(doc, "k");
      break;
    case InstanceKind::Digraph:
      allowed.insert({"vertices", "arcs", "g", "k"});
      break;
    case InstanceKind::Bstkf:
      allowed.insert({"vertices", "arcs", "g", "k"});
      field(doc, "g");
      field(doc, "k");
      break;
    case InstanceKind::Nae3Sat:
      allowed.insert({"variables", "clauses"});
      break;
  }
  only_fields(doc, allowed);
  if (doc.contains("k")) {
    f.k = as_int(doc["k"], "k");
    if (*f.k < 1) fail("k", "must be positive");
  }
  if (has_graph(f.kind)) {
    f.graph = read_graph(doc);
    auto find = [&](const std::string& n) { return f.graph.find_edge(n); };
    if (doc.contains("partition")) {
      const json& classes = as_array(doc["partition"], "partition");
      std::vector<ElementSet> parsed;
      for (std::size_t i = 0; i < classes.size(); ++i) {
        const std::string p = "partition[" + std::to_string(i) + "]";
        parsed.push_back(read_id_list(classes[i], p, find));
        if (parsed.back().empty()) fail(p, "empty class");
      }
      try {
        f.partition = Partition(std::move(parsed));
      } catch (const std::invalid_argument& e) {
        fail("partition", e.what());
      }
    }
    if (doc.contains("target")) f.target = read_id_list(doc["target"], "target", find);
  }
  if (has_digraph(f.kind)) {
    f.digraph = read_digraph(doc);
    if (doc.contains("g")) {
      const json& g = as_object(doc["g"], "g");
      f.g.assign(static_cast<std::size_t>(f.digraph.vertex_count()), -1);
      for (auto it = g.begin(); it != g.end(); ++it) {
        const auto v = f.digraph.find_vertex(it.key());
        if (!v) fail("g", "unknown vertex '" + it.key() + "'");
        const int bound = as_int(it.value(), "g." + it.key());
        if (bound < 0) fail("g." + it.key(), "must be nonnegative");
        f.g[static_cast<std::size_t>(*v)] = bound;
      }
      for (VertexId v = 0; v < f.digraph.vertex_count(); ++v) {
        if (f.g[static_cast<std::size_t>(v)] < 0) fail("g", "no bound for vertex '" + f.digraph.vertex_name(v) + "'");
      }
    }
  }
  if (f.kind == InstanceKind::Nae3Sat) {
    f.variables = read_names(field(doc, "variables"), "variables");
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < f.variables.size(); ++i) {
      if (!index.emplace(f.variables[i], static_cast<int>(i)).second) {
        fail("variables[" + std::to_string(i) + "]", "duplicate variable '" + f.variables[i] + "'");
      }
    }
    const json& clauses = as_array(field(doc, "clauses"), "clauses");
    for (std::size_t i = 0; i < clauses.size(); ++i) {
      const std::string p = "clauses[" + std::to_string(i) + "]";
      const auto names = read_names(clauses[i], p);
      if (names.size() != 3) fail(p, "a clause has exactly three variables");
      std::array<int, 3> c{};
      for (int s = 0; s < 3; ++s) {
        auto it = index.find(names[static_cast<std::size_t>(s)]);
        if (it == index.end()) fail(p + "[" + std::to_string(s) + "]", "unknown variable '" + names[static_cast<std::size_t>(s)] + "'");
        c[static_cast<std::size_t>(s)] = it->second;
      }
      if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]) fail(p, "variables of a clause must be distinct");
      f.clauses.push_back(c);
    }
  }
  return f;
}

std::string write_certificate(const CertificateFile& c, const InstanceFile& inst) {
  json doc = {{"format", kCertificateFormat}, {"version", kVersion}, {"kind", to_string(c.kind)}};
  auto edge_name = [&](ElementId e) { return inst.graph.edge_name(e); };
  auto arc_name = [&](ElementId a) { return inst.digraph.arc_name(a); };
  switch (c.kind) {
    case CertificateKind::Trees: {
      json trees = json::array();
      for (const auto& t : c.parts.parts) trees.push_back(id_list(make_set(t), edge_name));
      doc["trees"] = trees;
      break;
    }
    case CertificateKind::Subgraphs: {
      json subs = json::array();
      for (const auto& t : c.parts.parts) subs.push_back(id_list(make_set(t), arc_name));
      doc["subgraphs"] = subs;
      break;
    }
    case CertificateKind::Assignment: {
      json values = json::object();
      for (std::size_t x = 0; x < c.assignment.size(); ++x) values[inst.variables.at(x)] = static_cast<bool>(c.assignment[x]);
      doc["assignment"] = values;
      break;
    }
    case CertificateKind::Coloring: {
      json colors = json::object();
      for (std::size_t v = 0; v < c.coloring.size(); ++v) colors[inst.graph.vertex_name(static_cast<VertexId>(v))] = c.coloring[v];
      doc["coloring"] = colors;
      break;
    }
    case CertificateKind::Cover: {
      json sets = json::array();
      for (const auto& s : c.cover) {
        sets.push_back({{"basis", s.basis}, {"edges", id_list(make_set(s.set), edge_name)}, {"provenance", s.provenance}});
      }
      doc["sets"] = sets;
      doc["algorithm"] = c.algorithm;
      if (c.bound) doc["bound"] = *c.bound;
      break;
    }
  }
  return doc.dump(2) + "\n";
}

CertificateFile read_certificate(const std::string& text, const InstanceFile& inst) {
  const json doc = parse_document(text, kCertificateFormat);
  const std::string kind_name = as_string(field(doc, "kind"), "kind");
  const auto kit = certificate_kinds().find(kind_name);
  if (kit == certificate_kinds().end()) fail("kind", "unknown kind '" + kind_name + "'");
  CertificateFile c;
  c.kind = kit->second;
  auto edge = [&](const std::string& n) { return inst.graph.find_edge(n); };
  auto arc = [&](const std::string& n) { return inst.digraph.find_arc(n); };
  auto need = [&](bool ok, const char* what) {
    if (!ok) {
      throw ParseError(std::string("a ") + kind_name + " certificate needs " + what + ", but the instance is " +
                       to_string(inst.kind));
    }
  };
  switch (c.kind) {
    case CertificateKind::Trees: {
      need(has_graph(inst.kind), "a graph instance");
      only_fields(doc, {"format", "version", "kind", "trees"});
      const json& trees = as_array(field(doc, "trees"), "trees");
      for (std::size_t i = 0; i < trees.size(); ++i) c.parts.parts.push_back(read_id_list(trees[i], "trees[" + std::to_string(i) + "]", edge));
      break;
    }
    case CertificateKind::Subgraphs: {
      need(has_digraph(inst.kind), "a digraph instance");
      only_fields(doc, {"format", "version", "kind", "subgraphs"});
      const json& subs = as_array(field(doc, "subgraphs"), "subgraphs");
      for (std::size_t i = 0; i < subs.size(); ++i) c.parts.parts.push_back(read_id_list(subs[i], "subgraphs[" + std::to_string(i) + "]", arc));
      break;
    }
    case CertificateKind::Assignment: {
      need(inst.kind == InstanceKind::Nae3Sat, "a nae3sat instance");
      only_fields(doc, {"format", "version", "kind", "assignment"});
      const json& values = as_object(field(doc, "assignment"), "assignment");
      std::map<std::string, std::size_t> index;
      for (std::size_t i = 0; i < inst.variables.size(); ++i) index[inst.variables[i]] = i;
      std::vector<int> seen(inst.variables.size(), -1);
      for (auto it = values.begin(); it != values.end(); ++it) {
        auto vi = index.find(it.key());
        if (vi == index.end()) fail("assignment", "unknown variable '" + it.key() + "'");
        if (!it.value().is_boolean()) fail("assignment." + it.key(), "expected true or false");
        seen[vi->second] = it.value().get<bool>() ? 1 : 0;
      }
      for (std::size_t i = 0; i < seen.size(); ++i) {
        if (seen[i] < 0) fail("assignment", "no value for variable '" + inst.variables[i] + "'");
        c.assignment.push_back(seen[i] == 1);
      }
      break;
    }
    case CertificateKind::Coloring: {
      need(has_graph(inst.kind), "a graph instance");
      only_fields(doc, {"format", "version", "kind", "coloring"});
      const json& colors = as_object(field(doc, "coloring"), "coloring");
      c.coloring.assign(static_cast<std::size_t>(inst.graph.vertex_count()), 0);
      std::vector<char> seen(c.coloring.size(), 0);
      for (auto it = colors.begin(); it != colors.end(); ++it) {
        const auto v = inst.graph.find_vertex(it.key());
        if (!v) fail("coloring", "unknown vertex '" + it.key() + "'");
        c.coloring[static_cast<std::size_t>(*v)] = as_int(it.value(), "coloring." + it.key());
        seen[static_cast<std::size_t>(*v)] = 1;
      }
      for (VertexId v = 0; v < inst.graph.vertex_count(); ++v) {
        if (!seen[static_cast<std::size_t>(v)]) fail("coloring", "no color for vertex '" + inst.graph.vertex_name(v) + "'");
      }
      break;
    }
    case CertificateKind::Cover: {
      need(has_graph(inst.kind), "a graph instance");
      only_fields(doc, {"format", "version", "kind", "sets", "algorithm", "bound"});
      c.algorithm = as_string(field(doc, "algorithm"), "algorithm");
      if (doc.contains("bound")) c.bound = as_int(doc["bound"], "bound");
      const json& sets = as_array(field(doc, "sets"), "sets");
      for (std::size_t i = 0; i < sets.size(); ++i) {
        const std::string p = "sets[" + std::to_string(i) + "]";
        as_object(sets[i], p);
        only_fields(sets[i], {"basis", "edges", "provenance"}, p + ".");
        CoverSet s;
        const json& basis = field(sets[i], "basis", p + ".");
        if (!basis.is_boolean()) fail(p + ".basis", "expected true or false");
        s.basis = basis.get<bool>();
        s.set = read_id_list(field(sets[i], "edges", p + "."), p + ".edges", edge);
        if (sets[i].contains("provenance")) s.provenance = as_string(sets[i]["provenance"], p + ".provenance");
        c.cover.push_back(std::move(s));
      }
      break;
    }
  }
  return c;
}

std::string write_labels(const GadgetLabels& labels, const InstanceFile& inst, const std::string& reduction) {
  json vertices = json::object();
  json edges = json::object();
  const bool digraph = has_digraph(inst.kind);
  for (const auto& [label, id] : labels.vertices) {
    vertices[label] = digraph ? inst.digraph.vertex_name(id) : inst.graph.vertex_name(id);
  }
  for (const auto& [label, id] : labels.edges) edges[label] = digraph ? inst.digraph.arc_name(id) : inst.graph.edge_name(id);
  json doc = {{"format", kLabelsFormat}, {"version", kVersion}, {"reduction", reduction},
              {"vertices", vertices}, {digraph ? "arcs" : "edges", edges}};
  return doc.dump(2) + "\n";
}

}  // namespace rainbow
