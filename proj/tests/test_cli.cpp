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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "rainbow/cli.hpp"
#include "rainbow/io.hpp"
#include "rainbow/reductions.hpp"
#include "rainbow/solver.hpp"

using namespace rainbow;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("rainbow_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    unsetenv("RAINBOW_MATROID_SEED");
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string put(const std::string& name, const InstanceFile& f) const {
    spit(dir_ / name, write_instance(f));
    return path(name);
  }
  fs::path dir_;
};

}  // namespace

TEST(Io, InstanceRoundTripEveryKind) {
  std::vector<InstanceFile> files;
  files.push_back(InstanceFile::from(fixture::k4_matching()));
  files.push_back(InstanceFile::from(KColInstance{fixture::petersen(), 3}));
  files.push_back(InstanceFile::from(fixture::fano()));
  files.push_back(InstanceFile::from(reduce_rstkf_to_bstkf(fixture::k4_matching()).target));
  InstanceFile graph;
  graph.kind = InstanceKind::Graph;
  graph.graph = fixture::wheel_antipodal().graph;
  graph.target = ElementSet{1, 4, 9};
  files.push_back(graph);
  InstanceFile digraph;
  digraph.kind = InstanceKind::Digraph;
  digraph.digraph = files[3].digraph;
  files.push_back(digraph);
  for (const auto& f : files) {
    const std::string text = write_instance(f);
    const InstanceFile back = read_instance(text);
    EXPECT_EQ(back.kind, f.kind);
    EXPECT_EQ(write_instance(back), text) << to_string(f.kind);
  }
}

TEST(Io, KeysAreSorted) {
  const std::string text = write_instance(InstanceFile::from(fixture::k4_matching()));
  const auto at = [&](const char* key) { return text.find(std::string("\"") + key + "\":"); };
  EXPECT_LT(at("edges"), at("format"));
  EXPECT_LT(at("format"), at("k"));
  EXPECT_LT(at("k"), at("kind"));
  EXPECT_LT(at("kind"), at("partition"));
  EXPECT_LT(at("version"), at("vertices"));
}

TEST(Io, CertificateRoundTripEveryKind) {
  const InstanceFile rst = InstanceFile::from(fixture::k4_stars());
  const auto trees = solve_rstkf(fixture::k4_stars());
  ASSERT_EQ(trees.status, SearchStatus::Found);
  auto bst_red = reduce_rstkf_to_bstkf(fixture::k4_stars());
  const InstanceFile bst = InstanceFile::from(bst_red.target);
  const InstanceFile nae = InstanceFile::from(Nae3SatInstance{3, {{0, 1, 2}}});
  const InstanceFile col = InstanceFile::from(KColInstance{fixture::triangle(), 3});

  std::vector<std::pair<CertificateFile, const InstanceFile*>> cases;
  CertificateFile c;
  c.kind = CertificateKind::Trees;
  c.parts = trees.solution;
  cases.push_back({c, &rst});
  c = {};
  c.kind = CertificateKind::Subgraphs;
  c.parts = bst_forward(bst_red, trees.solution);
  cases.push_back({c, &bst});
  c = {};
  c.kind = CertificateKind::Assignment;
  c.assignment = {true, false, true};
  cases.push_back({c, &nae});
  c = {};
  c.kind = CertificateKind::Coloring;
  c.coloring = {1, 2, 3};
  cases.push_back({c, &col});
  c = {};
  c.kind = CertificateKind::Cover;
  c.algorithm = "log";
  c.bound = 3;
  c.cover = {{{0, 1, 2}, true, "round 1"}, {{3}, false, ""}};
  cases.push_back({c, &rst});
  for (const auto& [cert, inst] : cases) {
    const std::string text = write_certificate(cert, *inst);
    const CertificateFile back = read_certificate(text, *inst);
    EXPECT_EQ(back.kind, cert.kind);
    EXPECT_EQ(write_certificate(back, *inst), text) << to_string(cert.kind);
  }
}

TEST(Io, ParseErrorsNameTheField) {
  try {
    read_instance("{\n  \"format\": \"rainbow-matroid-instance\",\n  \"version\": 1,\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line"), std::string::npos) << e.what();
  }
  std::string text = write_instance(InstanceFile::from(fixture::k4_matching()));
  const auto pos = text.find("\"u\": \"v0\"");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 9, "\"u\": \"nowhere\"");
  try {
    read_instance(text);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("edges[0].u"), std::string::npos) << e.what();
  }
  EXPECT_THROW(read_instance(R"({"format":"rainbow-matroid-instance","version":1,"kind":"rstkf","vertices":[],"edges":[],"k":2})"),
               ParseError);
  EXPECT_THROW(read_instance(R"({"format":"rainbow-matroid-instance","version":2,"kind":"graph","vertices":[],"edges":[]})"),
               ParseError);
  EXPECT_THROW(read_instance(R"({"format":"rainbow-matroid-instance","version":1,"kind":"graph","vertices":[],"edges":[],"extra":1})"),
               ParseError);
}

TEST(Io, CertificatesOnlyReferenceInstanceIds) {
  const InstanceFile rst = InstanceFile::from(fixture::k4_stars());
  EXPECT_THROW(read_certificate(R"({"format":"rainbow-matroid-certificate","version":1,"kind":"trees","trees":[["e0","e9"]]})", rst),
               ParseError);
  EXPECT_THROW(read_certificate(R"({"format":"rainbow-matroid-certificate","version":1,"kind":"assignment","assignment":{}})", rst),
               ParseError);
}

TEST_F(CliTest, SolveExitCodes) {
  const auto neg = put("km.rmi", InstanceFile::from(fixture::k4_matching()));
  Outcome r = run({"solve", neg});
  EXPECT_EQ(r.code, exit_code::negative);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("infeasible"), std::string::npos);

  const auto pos = put("ks.rmi", InstanceFile::from(fixture::k4_stars()));
  r = run({"solve", pos, "-o", path("ks.rmc")});
  EXPECT_EQ(r.code, exit_code::ok);
  EXPECT_EQ(run({"verify", pos, path("ks.rmc")}).code, exit_code::ok);

  const auto big = put("big.rmi", InstanceFile::from(fixture::planted_rstkf(12, 3, 5)));
  EXPECT_EQ(run({"solve", big, "--node-budget", "3"}).code, exit_code::exhausted);

  EXPECT_EQ(run({}).code, exit_code::usage);
  EXPECT_EQ(run({"solve"}).code, exit_code::usage);
  EXPECT_EQ(run({"solve", neg, "--node-budget", "zero"}).code, exit_code::usage);
  EXPECT_EQ(run({"cover", pos, "--algorithm", "nine"}).code, exit_code::usage);
  EXPECT_EQ(run({"solve", path("missing.rmi")}).code, exit_code::input);
  EXPECT_EQ(run({"--help"}).code, exit_code::ok);
}

TEST_F(CliTest, SolveOtherKinds) {
  const auto nae = put("nae.rmi", InstanceFile::from(Nae3SatInstance{4, {{0, 1, 2}, {1, 2, 3}}}));
  ASSERT_EQ(run({"solve", nae, "-o", path("nae.rmc")}).code, exit_code::ok);
  EXPECT_EQ(run({"verify", nae, path("nae.rmc")}).code, exit_code::ok);
  EXPECT_EQ(run({"solve", put("fano.rmi", InstanceFile::from(fixture::fano()))}).code, exit_code::negative);

  const auto pet = put("pet.rmi", InstanceFile::from(KColInstance{fixture::petersen(), 3}));
  ASSERT_EQ(run({"solve", pet, "-o", path("pet.rmc")}).code, exit_code::ok);
  EXPECT_EQ(run({"verify", pet, path("pet.rmc")}).code, exit_code::ok);
  EXPECT_EQ(run({"solve", pet, "--k", "2"}).code, exit_code::negative);

  const auto bst = put("bst.rmi", InstanceFile::from(reduce_rstkf_to_bstkf(fixture::k4_stars()).target));
  ASSERT_EQ(run({"solve", bst, "-o", path("bst.rmc")}).code, exit_code::ok);
  EXPECT_EQ(run({"verify", bst, path("bst.rmc")}).code, exit_code::ok);
  EXPECT_EQ(run({"solve", put("bneg.rmi", InstanceFile::from(reduce_rstkf_to_bstkf(fixture::k4_matching()).target))}).code,
            exit_code::negative);
}

TEST_F(CliTest, GenExamples) {
  Outcome r = run({"gen", "random-kmt", "--n", "2", "--k", "3", "--seed", "1"});
  ASSERT_EQ(r.code, exit_code::ok);
  InstanceFile f = read_instance(r.out);
  ASSERT_EQ(f.graph.vertex_count(), 2);
  ASSERT_EQ(f.graph.edge_count(), 3);

  const auto tri = put("tri.rmi", InstanceFile::from(KColInstance{fixture::triangle(), 3}));
  r = run({"gen", "kcol-to-rstkf", tri, "--k", "3", "-o", path("tk.rmi")});
  ASSERT_EQ(r.code, exit_code::ok) << r.err;
  f = read_instance(slurp(path("tk.rmi")));
  EXPECT_EQ(f.kind, InstanceKind::Rstkf);
  EXPECT_EQ(f.graph.edge_count(), 27);
  EXPECT_TRUE(fs::exists(path("tk.rmi.labels.json")));

  const auto four = put("four.rmi", InstanceFile::from(fixture::planted_rstkf(3, 2, 9)));
  r = run({"gen", "rstkf-to-bstkf", four, "-o", path("four_b.rmi"), "--labels", path("four.labels")});
  ASSERT_EQ(r.code, exit_code::ok) << r.err;
  f = read_instance(slurp(path("four_b.rmi")));
  EXPECT_EQ(f.kind, InstanceKind::Bstkf);
  EXPECT_EQ(f.digraph.arc_count(), 16);
  EXPECT_NE(slurp(path("four.labels")).find("rainbow-matroid-labels"), std::string::npos);

  const auto nae = put("nae.rmi", InstanceFile::from(Nae3SatInstance{3, {{0, 1, 2}}}));
  r = run({"gen", "nae-to-grst2f", nae, "-o", path("g.rmi")});
  ASSERT_EQ(r.code, exit_code::ok) << r.err;
  EXPECT_EQ(read_instance(slurp(path("g.rmi"))).graph.edge_count(), 24);
  r = run({"gen", "grst2f-to-rst2f", path("g.rmi"), "-o", path("d.rmi")});
  ASSERT_EQ(r.code, exit_code::ok) << r.err;
  EXPECT_EQ(read_instance(slurp(path("d.rmi"))).graph.edge_count(), 48);
  ASSERT_EQ(run({"solve", path("d.rmi"), "-o", path("d.rmc")}).code, exit_code::ok);
  EXPECT_EQ(run({"verify", path("d.rmi"), path("d.rmc")}).code, exit_code::ok);

  EXPECT_EQ(run({"gen", "nae-to-grst2f", tri}).code, exit_code::input);
  EXPECT_EQ(run({"gen", "rstkf-to-bstkf"}).code, exit_code::input);
}

TEST_F(CliTest, MalformedInputReportsField) {
  spit(dir_ / "bad.rmi", R"({"format":"rainbow-matroid-instance","version":1,"kind":"kcol","vertices":["a"],"edges":[{"id":"x","u":"a","v":"b"}],"k":3})");
  Outcome r = run({"gen", "kcol-to-rstkf", path("bad.rmi")});
  EXPECT_EQ(r.code, exit_code::input);
  EXPECT_NE(r.err.find("edges[0].v"), std::string::npos) << r.err;
  spit(dir_ / "syntax.rmi", "{\"format\": }");
  r = run({"check", path("syntax.rmi")});
  EXPECT_EQ(r.code, exit_code::input);
  EXPECT_NE(r.err.find("line 1"), std::string::npos) << r.err;
}

TEST_F(CliTest, CoverCommands) {
  const auto km = put("km.rmi", InstanceFile::from(fixture::k4_matching()));
  Outcome r = run({"cover", km, "--algorithm", "log", "-o", path("log.rmc")});
  ASSERT_EQ(r.code, exit_code::ok) << r.err;
  EXPECT_NE(r.err.find("bound: 3"), std::string::npos);
  EXPECT_LE(read_certificate(slurp(path("log.rmc")), read_instance(slurp(km))).cover.size(), 3u);
  EXPECT_EQ(run({"verify", km, path("log.rmc")}).code, exit_code::ok);

  ASSERT_EQ(run({"cover", km, "--algorithm", "three", "-o", path("three.rmc")}).code, exit_code::ok);
  EXPECT_EQ(run({"verify", km, path("three.rmc")}).code, exit_code::ok);

  ASSERT_EQ(run({"gen", "random-kmt", "--n", "6", "--k", "4", "--seed", "3", "--partition", "pairs", "-o", path("k4.rmi")}).code,
            exit_code::ok);
  r = run({"cover", path("k4.rmi"), "--algorithm", "k41", "-o", path("k41.rmc")});
  ASSERT_EQ(r.code, exit_code::ok) << r.err;
  EXPECT_NE(r.err.find("bound: 10"), std::string::npos) << r.err;
  EXPECT_EQ(run({"verify", path("k4.rmi"), path("k41.rmc")}).code, exit_code::ok);

  ASSERT_EQ(run({"gen", "random-kmt", "--n", "5", "--k", "3", "--seed", "3", "--partition", "pairs", "-o", path("k3.rmi")}).code,
            exit_code::ok);
  ASSERT_EQ(run({"cover", path("k3.rmi"), "--algorithm", "k3", "-o", path("k3.rmc")}).code, exit_code::ok);
  EXPECT_EQ(run({"verify", path("k3.rmi"), path("k3.rmc")}).code, exit_code::ok);

  r = run({"cover", path("k3.rmi"), "--algorithm", "three"});
  EXPECT_EQ(r.code, exit_code::input);
  EXPECT_NE(r.err.find("2-base"), std::string::npos) << r.err;
}

TEST_F(CliTest, VerifyNamesTheFailure) {
  const RstkfInstance inst = fixture::k4_stars();
  const auto ip = put("ks.rmi", InstanceFile::from(inst));
  CertificateFile bad;
  bad.kind = CertificateKind::Trees;
  bad.parts.parts = {{0, 1, 2}, {3, 4, 5}};  // first tree holds the whole class {e0,e1}
  spit(dir_ / "bad.rmc", write_certificate(bad, InstanceFile::from(inst)));
  Outcome r = run({"verify", ip, path("bad.rmc"), "--format", "machine"});
  EXPECT_EQ(r.code, exit_code::check_failed);
  EXPECT_NE(r.out.find("\trainbow\tfail\t"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("{e0,e1}"), std::string::npos) << r.out;

  CertificateFile cover;
  cover.kind = CertificateKind::Cover;
  cover.algorithm = "three";
  cover.cover = {{{0, 2, 3}, true, ""}, {{1, 4}, false, ""}};
  spit(dir_ / "cover.rmc", write_certificate(cover, InstanceFile::from(inst)));
  r = run({"verify", ip, path("cover.rmc")});
  EXPECT_EQ(r.code, exit_code::check_failed);
  EXPECT_NE(r.out.find("FAIL  covers target"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("e5"), std::string::npos) << r.out;

  spit(dir_ / "junk.rmc", "not json");
  r = run({"verify", ip, path("junk.rmc")});
  EXPECT_EQ(r.code, exit_code::check_failed);
  EXPECT_NE(r.out.find("parse"), std::string::npos);
}

TEST_F(CliTest, VerifyJobsKeepsOrder) {
  std::vector<std::string> args = {"verify"};
  for (int i = 0; i < 12; ++i) {
    const auto ip = put("p" + std::to_string(i) + ".rmi", InstanceFile::from(fixture::planted_rstkf(5, 2, static_cast<std::uint64_t>(i))));
    const std::string cp = path("p" + std::to_string(i) + ".rmc");
    ASSERT_EQ(run({"solve", ip, "-o", cp}).code, exit_code::ok);
    args.push_back(ip);
    args.push_back(cp);
  }
  const Outcome serial = run(args);
  args.insert(args.end(), {"--jobs", "4", "--format", "human"});
  const Outcome parallel = run(args);
  EXPECT_EQ(serial.code, exit_code::ok);
  EXPECT_EQ(serial.out, parallel.out);
}

TEST_F(CliTest, CheckReport) {
  Outcome r = run({"check", put("km.rmi", InstanceFile::from(fixture::k4_matching())), "--format", "machine"});
  EXPECT_EQ(r.code, exit_code::ok);
  EXPECT_NE(r.out.find("\tk-multiple tree\tpass\t"), std::string::npos) << r.out;
  InstanceFile broken = InstanceFile::from(fixture::k4_matching());
  broken.k = 3;
  r = run({"check", put("broken.rmi", broken)});
  EXPECT_EQ(r.code, exit_code::check_failed);
  EXPECT_NE(r.out.find("FAIL  edge count"), std::string::npos) << r.out;
}

TEST_F(CliTest, SeedsAreReproducible) {
  const auto in = put("p.rmi", InstanceFile::from(fixture::planted_rstkf(6, 2, 77)));
  const std::vector<std::string> solve = {"solve", in, "--seed", "11"};
  EXPECT_EQ(run(solve).out, run(solve).out);
  setenv("RAINBOW_MATROID_SEED", "11", 1);
  EXPECT_EQ(run({"solve", in}).out, run(solve).out);
  const Outcome a = run({"gen", "random-kmt", "--n", "7", "--k", "2"});
  unsetenv("RAINBOW_MATROID_SEED");
  EXPECT_EQ(a.out, run({"gen", "random-kmt", "--n", "7", "--k", "2", "--seed", "11"}).out);
  setenv("RAINBOW_MATROID_SEED", "eleven", 1);
  EXPECT_EQ(run({"solve", in}).code, exit_code::input);
  unsetenv("RAINBOW_MATROID_SEED");
}
