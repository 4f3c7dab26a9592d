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

#include "rainbow/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "rainbow/cover.hpp"
#include "rainbow/io.hpp"
#include "rainbow/matroid.hpp"
#include "rainbow/rainbow.hpp"
#include "rainbow/random.hpp"
#include "rainbow/reductions.hpp"
#include "rainbow/solver.hpp"
#include "rainbow/union_pack.hpp"
#include "rainbow/validate.hpp"

namespace rainbow {
namespace {

// Bad input file, unusable flag combination or failed precondition.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string generator;
  std::string input;
  std::string output;
  std::string labels;
  std::string algorithm;
  std::string partition = "none";
  std::string format = "human";
  std::vector<std::string> pairs;
  std::optional<int> k;
  std::optional<int> n;
  std::optional<std::uint64_t> seed;
  std::uint64_t node_budget = SearchConfig{}.node_budget;
  double time_budget = SearchConfig{}.time_budget_seconds;
  int jobs = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text)) throw InputError(path + ": cannot write file");
}

void emit(const Options& opt, const std::string& text, std::ostream& out) {
  if (opt.output.empty()) {
    out << text;
  } else {
    write_file(opt.output, text);
  }
}

InstanceFile load_instance(const std::string& path) {
  try {
    return read_instance(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::optional<std::uint64_t> resolve_seed(const Options& opt) {
  if (opt.seed) return opt.seed;
  const char* env = std::getenv("RAINBOW_MATROID_SEED");
  if (env == nullptr || *env == '\0') return std::nullopt;
  std::uint64_t value = 0;
  const std::string text(env);
  std::size_t used = 0;
  try {
    value = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.front() == '-') throw InputError("RAINBOW_MATROID_SEED: not an unsigned integer: '" + text + "'");
  return value;
}

Partition partition_or_singletons(const InstanceFile& f) {
  if (f.partition) return *f.partition;
  std::vector<ElementSet> classes;
  for (EdgeId e = 0; e < f.graph.edge_count(); ++e) classes.push_back({e});
  return Partition(std::move(classes));
}

bool is_graph_kind(InstanceKind k) { return k == InstanceKind::Graph || k == InstanceKind::Rstkf || k == InstanceKind::KCol; }
bool is_digraph_kind(InstanceKind k) { return k == InstanceKind::Digraph || k == InstanceKind::Bstkf; }

void expect_kind(const InstanceFile& f, bool ok, const std::string& wanted) {
  if (!ok) throw InputError(std::string("expected ") + wanted + " instance, got " + to_string(f.kind));
}

std::string single_line(std::string s) {
  std::replace(s.begin(), s.end(), '\t', ' ');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

void print_report(const std::string& subject, const Report& report, const Options& opt, std::ostream& out) {
  if (opt.format == "machine") {
    for (const auto& c : report.checks) {
      out << subject << '\t' << c.name << '\t' << (c.pass ? "pass" : "fail") << '\t' << single_line(c.detail) << '\n';
    }
    return;
  }
  out << subject << ": " << (report.ok() ? "PASS" : "FAIL") << '\n';
  for (const auto& c : report.checks) {
    out << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
}

// ---- gen ----------------------------------------------------------------

InstanceFile named_example(const std::string& name) {
  if (name == "k4-matching" || name == "k4-stars") {
    const bool matching = name == "k4-matching";
    const std::vector<ElementSet> classes =
        matching ? std::vector<ElementSet>{{0, 5}, {1, 4}, {2, 3}} : std::vector<ElementSet>{{0, 1}, {3, 4}, {2, 5}};
    return InstanceFile::from(RstkfInstance{complete_graph(4), Partition(classes), 2});
  }
  if (name == "wheel-antipodal") {
    std::vector<ElementSet> classes;
    for (int i = 0; i < 7; ++i) classes.push_back({i, 7 + (i + 3) % 7});
    return InstanceFile::from(RstkfInstance{wheel_graph(7), Partition(classes), 2});
  }
  if (name == "triangle") return InstanceFile::from(KColInstance{complete_graph(3), 3});
  if (name == "k4") return InstanceFile::from(KColInstance{complete_graph(4), 3});
  if (name == "fano") {
    return InstanceFile::from(
        Nae3SatInstance{7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}}});
  }
  throw InputError("unknown example '" + name + "'");
}

struct Generated {
  InstanceFile instance;
  std::optional<GadgetLabels> labels;
};

Generated gen_random_kmt(const Options& opt, std::optional<std::uint64_t> seed) {
  if (!opt.n || *opt.n < 1) throw InputError("random-kmt needs --n >= 1");
  if (!opt.k || *opt.k < 1) throw InputError("random-kmt needs --k >= 1");
  const std::uint64_t s = seed.value_or(0);
  KMultipleTree t = random_k_multiple_tree(*opt.n, *opt.k, s);
  InstanceFile f;
  f.kind = InstanceKind::Graph;
  f.graph = t.graph;
  f.k = *opt.k;
  Rng rng(s, 0x6b6d74);
  if (opt.partition == "pairs") {
    ElementSet edges = t.graph.all_edges();
    rng.shuffle(std::span<ElementId>(edges));
    std::vector<ElementSet> classes;
    for (std::size_t i = 0; i < edges.size(); i += 2) {
      classes.push_back(make_set(ElementSet(edges.begin() + static_cast<std::ptrdiff_t>(i),
                                            edges.begin() + static_cast<std::ptrdiff_t>(std::min(i + 2, edges.size())))));
    }
    f.partition = Partition(std::move(classes));
  } else if (opt.partition == "planted") {
    for (auto& tree : t.trees.parts) rng.shuffle(std::span<ElementId>(tree));
    std::vector<ElementSet> classes;
    for (int i = 0; i + 1 < *opt.n; ++i) {
      ElementSet c;
      for (const auto& tree : t.trees.parts) c.push_back(tree[static_cast<std::size_t>(i)]);
      classes.push_back(make_set(c));
    }
    f.partition = Partition(std::move(classes));
    f.kind = InstanceKind::Rstkf;
  } else if (opt.partition != "none") {
    throw InputError("--partition must be none, pairs or planted");
  }
  GadgetLabels labels;
  for (std::size_t i = 0; i < t.trees.parts.size(); ++i) {
    auto tree = make_set(t.trees.parts[i]);
    for (std::size_t j = 0; j < tree.size(); ++j) labels.edges["T" + std::to_string(i + 1) + "#" + std::to_string(j)] = tree[j];
  }
  return {f, labels};
}

Generated gen_reduction(const Options& opt, std::optional<std::uint64_t> seed) {
  if (opt.input.empty()) throw InputError(opt.generator + " needs an input instance file");
  const InstanceFile in = load_instance(opt.input);
  if (opt.generator == "nae-to-grst2f") {
    expect_kind(in, in.kind == InstanceKind::Nae3Sat, "a nae3sat");
    auto r = reduce_nae_to_grst2f(in.nae3sat(), seed);
    return {InstanceFile::from(r.target), r.labels};
  }
  if (opt.generator == "grst2f-to-rst2f") {
    expect_kind(in, in.kind == InstanceKind::Graph || in.kind == InstanceKind::Rstkf, "a graph or rstkf");
    RstkfInstance src{in.graph, partition_or_singletons(in), 2};
    auto r = reduce_grst2f_to_rst2f(src, seed);
    return {InstanceFile::from(r.target), r.labels};
  }
  if (opt.generator == "kcol-to-rstkf") {
    expect_kind(in, is_graph_kind(in.kind), "a kcol or graph");
    KColInstance src{in.graph, opt.k.value_or(in.k.value_or(3))};
    auto r = reduce_kcol_to_rstkf(src, seed);
    return {InstanceFile::from(r.target), r.labels};
  }
  if (opt.generator == "rstkf-to-bstkf") {
    expect_kind(in, in.kind == InstanceKind::Graph || in.kind == InstanceKind::Rstkf, "a graph or rstkf");
    RstkfInstance src{in.graph, partition_or_singletons(in), opt.k.value_or(in.k.value_or(2))};
    auto r = reduce_rstkf_to_bstkf(src, seed);
    return {InstanceFile::from(r.target), r.labels};
  }
  throw InputError("unknown generator '" + opt.generator + "'");
}

int cmd_gen(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto seed = resolve_seed(opt);
  Generated g;
  try {
    if (opt.generator == "random-kmt") {
      g = gen_random_kmt(opt, seed);
    } else if (opt.generator == "example") {
      if (opt.input.empty()) throw InputError("example needs a name");
      g.instance = named_example(opt.input);
    } else {
      g = gen_reduction(opt, seed);
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("precondition failed: ") + e.what());
  } catch (const CertificateInvalid& e) {
    throw InputError(std::string("precondition failed: ") + e.what());
  }
  emit(opt, write_instance(g.instance), out);
  std::string labels_path = opt.labels;
  if (labels_path.empty() && !opt.output.empty()) labels_path = opt.output + ".labels.json";
  if (g.labels && !labels_path.empty()) write_file(labels_path, write_labels(*g.labels, g.instance, opt.generator));
  err << to_string(g.instance.kind) << " instance: ";
  if (is_digraph_kind(g.instance.kind)) {
    err << g.instance.digraph.vertex_count() << " vertices, " << g.instance.digraph.arc_count() << " arcs\n";
  } else if (g.instance.kind == InstanceKind::Nae3Sat) {
    err << g.instance.variables.size() << " variables, " << g.instance.clauses.size() << " clauses\n";
  } else {
    err << g.instance.graph.vertex_count() << " vertices, " << g.instance.graph.edge_count() << " edges\n";
  }
  return exit_code::ok;
}

// ---- solve --------------------------------------------------------------

int cmd_solve(const Options& opt, std::ostream& out, std::ostream& err) {
  const InstanceFile in = load_instance(opt.input);
  const auto seed = resolve_seed(opt);
  SearchConfig cfg;
  cfg.node_budget = opt.node_budget;
  cfg.time_budget_seconds = opt.time_budget;
  cfg.deterministic = !seed.has_value();
  cfg.seed = seed.value_or(0);
  CertificateFile cert;
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<std::uint64_t> nodes;
  try {
    switch (in.kind) {
      case InstanceKind::Graph:
      case InstanceKind::Rstkf: {
        RstkfInstance inst{in.graph, partition_or_singletons(in), opt.k.value_or(in.k.value_or(2))};
        auto r = solve_rstkf(inst, cfg);
        status = r.status;
        nodes = r.nodes;
        cert.kind = CertificateKind::Trees;
        cert.parts = r.solution;
        break;
      }
      case InstanceKind::Digraph:
      case InstanceKind::Bstkf: {
        BstkfInstance inst = in.bstkf();
        if (opt.k) inst.k = *opt.k;
        auto r = solve_bstkf(inst, cfg);
        status = r.status;
        nodes = r.nodes;
        cert.kind = CertificateKind::Subgraphs;
        cert.parts = r.solution;
        break;
      }
      case InstanceKind::Nae3Sat: {
        auto a = solve_nae3sat(in.nae3sat());
        status = a ? SearchStatus::Found : SearchStatus::Infeasible;
        cert.kind = CertificateKind::Assignment;
        if (a) cert.assignment = *a;
        break;
      }
      case InstanceKind::KCol: {
        KColInstance inst{in.graph, opt.k.value_or(in.k.value_or(3))};
        auto c = solve_kcol(inst);
        status = c ? SearchStatus::Found : SearchStatus::Infeasible;
        cert.kind = CertificateKind::Coloring;
        if (c) cert.coloring = *c;
        break;
      }
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("precondition failed: ") + e.what());
  }
  err << "status: " << to_string(status);
  if (nodes) err << " (" << *nodes << " nodes)";
  err << '\n';
  if (status == SearchStatus::Found) {
    emit(opt, write_certificate(cert, in), out);
    return exit_code::ok;
  }
  return status == SearchStatus::Infeasible ? exit_code::negative : exit_code::exhausted;
}

// ---- cover --------------------------------------------------------------

int cmd_cover(const Options& opt, std::ostream& out, std::ostream& err) {
  const InstanceFile in = load_instance(opt.input);
  expect_kind(in, in.kind == InstanceKind::Graph || in.kind == InstanceKind::Rstkf, "a graph or rstkf");
  const Partition p = partition_or_singletons(in);
  const MatroidPtr m = make_graphic(in.graph);
  auto precondition = [](const std::string& check, const std::string& detail) -> InputError {
    return InputError("precondition failed: " + check + ": " + detail);
  };
  if (!p.is_bounded(2)) throw precondition("2-bounded partition", "some class has more than two edges");
  auto require_k_base = [&](int k) {
    try {
      k_base_factorize(*m, k);
    } catch (const NotKBase& e) {
      throw precondition(std::to_string(k) + "-base", e.what());
    }
  };
  CertificateFile cert;
  cert.kind = CertificateKind::Cover;
  cert.algorithm = opt.algorithm;
  try {
    if (opt.algorithm == "three") {
      require_k_base(2);
      const ThreeCover c = cover_three(m, p);
      cert.cover = {{c.basis, true, "rainbow basis"}, {c.first, false, "complement part 1"}, {c.second, false, "complement part 2"}};
      cert.bound = 3;
    } else if (opt.algorithm == "log") {
      require_k_base(2);
      const ElementSet z = in.target.value_or(in.graph.all_edges());
      const auto bases = log_cover(m, z, p);
      for (std::size_t i = 0; i < bases.size(); ++i) cert.cover.push_back({bases[i], true, "round " + std::to_string(i + 1)});
      cert.bound = log_cover_bound(z.size());
    } else if (opt.algorithm == "k41" || opt.algorithm == "k3") {
      const int k = opt.algorithm == "k3" ? 3 : opt.k.value_or(in.k.value_or(0));
      if (opt.algorithm == "k3" && opt.k.value_or(3) != 3) throw precondition("k", "k3 covers 3-base matroids only");
      if (opt.algorithm == "k41" && k < 4) throw precondition("k", "k41 needs k >= 4 (from --k or the instance)");
      require_k_base(k);
      const RainbowCover c = opt.algorithm == "k3" ? cover_k3(m, p) : cover_k41(m, k, p);
      for (const auto& e : c.entries) cert.cover.push_back({e.set, e.is_basis, e.provenance});
      cert.bound = c.bound;
    } else {
      throw InputError("--algorithm must be three, k41, k3 or log");
    }
  } catch (const std::invalid_argument& e) {
    throw precondition("input", e.what());
  }
  emit(opt, write_certificate(cert, in), out);
  err << "sets: " << cert.cover.size() << "  bound: " << *cert.bound << '\n';
  return exit_code::ok;
}

// ---- check --------------------------------------------------------------

Report structure_report(const InstanceFile& in, const Options& opt) {
  Report r;
  auto add = [&](std::string name, bool pass, std::string detail = {}) {
    r.checks.push_back({std::move(name), pass, std::move(detail)});
  };
  auto connectivity = [&](const Multigraph& g) {
    UnionFind uf(g.vertex_count());
    for (const auto& e : g.edges()) uf.unite(e.u, e.v);
    add("connected", g.vertex_count() == 0 || uf.components() == 1, std::to_string(uf.components()) + " components");
  };
  auto multiple_tree = [&](const Multigraph& g, int k) {
    const long expected = static_cast<long>(k) * (g.vertex_count() - 1);
    add("edge count", g.edge_count() == expected,
        std::to_string(g.edge_count()) + " edges, k(n-1) = " + std::to_string(expected));
    bool ok = true;
    std::string detail = "splits into " + std::to_string(k) + " spanning trees";
    try {
      k_base_factorize(*make_graphic(g), k);
    } catch (const NotKBase& e) {
      ok = false;
      detail = e.what();
    }
    add("k-multiple tree", ok, detail);
  };
  const int k = opt.k.value_or(in.k.value_or(in.kind == InstanceKind::KCol ? 3 : 2));
  switch (in.kind) {
    case InstanceKind::Graph:
    case InstanceKind::Rstkf: {
      connectivity(in.graph);
      if (in.k || opt.k) multiple_tree(in.graph, k);
      if (in.partition) {
        add("partition covers edges", in.partition->partitions(in.graph.all_edges()));
        add("partition class sizes", true,
            "max " + std::to_string(in.partition->max_class_size()) + ", " +
                (in.partition->is_uniform(static_cast<std::size_t>(k)) ? "k-uniform" : "not k-uniform") +
                (in.partition->is_bounded(2) ? ", 2-bounded" : ""));
      }
      break;
    }
    case InstanceKind::Digraph:
    case InstanceKind::Bstkf: {
      add("indegree bounds", static_cast<int>(in.g.size()) == in.digraph.vertex_count(),
          in.g.empty() ? "missing" : "one per vertex");
      const Multigraph u = underlying_graph(in.digraph);
      connectivity(u);
      multiple_tree(u, k);
      break;
    }
    case InstanceKind::Nae3Sat:
      add("clauses", true, std::to_string(in.clauses.size()) + " clauses over " + std::to_string(in.variables.size()) + " variables");
      break;
    case InstanceKind::KCol:
      add("colors", k >= 1, "k = " + std::to_string(k));
      break;
  }
  return r;
}

int cmd_check(const Options& opt, std::ostream& out) {
  const InstanceFile in = load_instance(opt.input);
  const Report r = structure_report(in, opt);
  print_report(opt.input, r, opt, out);
  return r.ok() ? exit_code::ok : exit_code::check_failed;
}

// ---- verify -------------------------------------------------------------

Report verify_pair(const std::string& instance_path, const std::string& certificate_path) {
  Report r;
  InstanceFile in;
  CertificateFile cert;
  try {
    in = read_instance(read_file(instance_path));
    cert = read_certificate(read_file(certificate_path), in);
  } catch (const std::exception& e) {
    r.checks.push_back({"parse", false, e.what()});
    return r;
  }
  switch (cert.kind) {
    case CertificateKind::Trees:
      return validate_tree_factorization({in.graph, partition_or_singletons(in), in.k.value_or(2)}, cert.parts);
    case CertificateKind::Subgraphs:
      if (static_cast<int>(in.g.size()) != in.digraph.vertex_count()) {
        r.checks.push_back({"indegree bounds", false, "instance has no bound map"});
        return r;
      }
      return validate_bst_factorization(in.bstkf(), cert.parts);
    case CertificateKind::Assignment:
      return validate_nae_assignment(in.nae3sat(), cert.assignment);
    case CertificateKind::Coloring:
      return validate_coloring({in.graph, in.k.value_or(3)}, cert.coloring);
    case CertificateKind::Cover: {
      std::vector<ElementSet> sets;
      std::vector<bool> basis;
      for (const auto& s : cert.cover) {
        sets.push_back(s.set);
        basis.push_back(s.basis);
      }
      return validate_cover(in.graph, partition_or_singletons(in), sets, basis, in.target.value_or(in.graph.all_edges()),
                            cert.bound);
    }
  }
  return r;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  if (opt.pairs.size() % 2 != 0) throw InputError("verify takes INSTANCE CERTIFICATE pairs");
  const std::size_t count = opt.pairs.size() / 2;
  std::vector<Report> reports(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) reports[i] = verify_pair(opt.pairs[2 * i], opt.pairs[2 * i + 1]);
  };
  const auto threads = static_cast<std::size_t>(std::clamp(opt.jobs, 1, 64));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::min(threads, count); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  bool ok = true;
  for (std::size_t i = 0; i < count; ++i) {
    print_report(opt.pairs[2 * i + 1], reports[i], opt, out);
    ok = ok && reports[i].ok();
  }
  return ok ? exit_code::ok : exit_code::check_failed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rainbow bases and rainbow spanning tree factorizations", "rainbow-matroid"};
  app.require_subcommand(1);
  Options opt;
  const std::vector<std::string> formats = {"human", "machine"};

  auto* gen = app.add_subcommand("gen", "Generate an instance (random or by reduction)");
  gen->add_option("generator", opt.generator,
                  "random-kmt, example, nae-to-grst2f, grst2f-to-rst2f, kcol-to-rstkf or rstkf-to-bstkf")
      ->required()
      ->check(CLI::IsMember({"random-kmt", "example", "nae-to-grst2f", "grst2f-to-rst2f", "kcol-to-rstkf", "rstkf-to-bstkf"}));
  gen->add_option("input", opt.input, "Source instance file (example: the example name)");
  gen->add_option("-o,--output", opt.output, "Output file (default: stdout)");
  gen->add_option("--labels", opt.labels, "Label sidecar file (default: OUTPUT.labels.json)");
  gen->add_option("--k", opt.k, "Number of trees / colors");
  gen->add_option("--n", opt.n, "Number of vertices (random-kmt)");
  gen->add_option("--seed", opt.seed, "Seed");
  gen->add_option("--partition", opt.partition, "random-kmt partition: none, pairs or planted")
      ->check(CLI::IsMember({"none", "pairs", "planted"}));

  auto* solve = app.add_subcommand("solve", "Decide an instance exactly and write a certificate");
  solve->add_option("input", opt.input, "Instance file")->required();
  solve->add_option("-o,--output", opt.output, "Certificate file (default: stdout)");
  solve->add_option("--k", opt.k, "Override k");
  solve->add_option("--seed", opt.seed, "Shuffle the search order reproducibly");
  solve->add_option("--node-budget", opt.node_budget, "Search node budget")->check(CLI::PositiveNumber);
  solve->add_option("--time-budget", opt.time_budget, "Search time budget in seconds")->check(CLI::PositiveNumber);

  auto* cover = app.add_subcommand("cover", "Cover by rainbow bases");
  cover->add_option("input", opt.input, "Instance file")->required();
  cover->add_option("--algorithm", opt.algorithm, "three, k41, k3 or log")
      ->required()
      ->check(CLI::IsMember({"three", "k41", "k3", "log"}));
  cover->add_option("-o,--output", opt.output, "Certificate file (default: stdout)");
  cover->add_option("--k", opt.k, "k of the k-base matroid");
  cover->add_option("--seed", opt.seed, "Accepted for uniformity; the covers are deterministic");

  auto* check = app.add_subcommand("check", "Report structural properties of an instance");
  check->add_option("input", opt.input, "Instance file")->required();
  check->add_option("--k", opt.k, "Override k");
  check->add_option("--format", opt.format, "human or machine")->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "Re-check certificates against their instances");
  verify->add_option("pairs", opt.pairs, "INSTANCE CERTIFICATE [INSTANCE CERTIFICATE ...]")->required();
  verify->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--format", opt.format, "human or machine")->check(CLI::IsMember(formats));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_code::usage;
  }

  try {
    if (gen->parsed()) return cmd_gen(opt, out, err);
    if (solve->parsed()) return cmd_solve(opt, out, err);
    if (cover->parsed()) return cmd_cover(opt, out, err);
    if (check->parsed()) return cmd_check(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::input;
  }
  return exit_code::usage;
}

}  // namespace rainbow
