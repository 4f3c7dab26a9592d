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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbow/common.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/instances.hpp"
#include "rainbow/partition.hpp"

namespace rainbow {

// Malformed instance or certificate document. The message names the
// offending field path or the line and column of a syntax error.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class InstanceKind { Graph, Digraph, Nae3Sat, KCol, Rstkf, Bstkf };

const char* to_string(InstanceKind kind);

// In-memory form of an .rmi document. Which fields are meaningful depends
// on `kind`; see docs/FORMAT.md.
struct InstanceFile {
  InstanceKind kind = InstanceKind::Graph;
  Multigraph graph;                   // graph, kcol, rstkf
  Digraph digraph;                    // digraph, bstkf
  std::optional<Partition> partition; // graph, rstkf
  std::optional<int> k;
  std::vector<int> g;                 // bstkf (and optionally digraph), by vertex
  std::optional<ElementSet> target;   // graph, rstkf: the set Z to cover
  std::vector<std::string> variables; // nae3sat
  std::vector<std::array<int, 3>> clauses;

  static InstanceFile from(const RstkfInstance& inst);
  static InstanceFile from(const BstkfInstance& inst);
  static InstanceFile from(const Nae3SatInstance& inst);
  static InstanceFile from(const KColInstance& inst);

  // Throw std::invalid_argument when the kind does not carry the data.
  RstkfInstance rstkf() const;
  BstkfInstance bstkf() const;
  Nae3SatInstance nae3sat() const;
  KColInstance kcol() const;
};

std::string write_instance(const InstanceFile& file);
InstanceFile read_instance(const std::string& text);

enum class CertificateKind { Trees, Subgraphs, Assignment, Coloring, Cover };

const char* to_string(CertificateKind kind);

struct CoverSet {
  ElementSet set;
  bool basis = false;
  std::string provenance;
};

// In-memory form of an .rmc document; element references are resolved
// against the paired instance.
struct CertificateFile {
  CertificateKind kind = CertificateKind::Trees;
  Factorization parts;        // trees or subgraphs
  Assignment assignment;
  Coloring coloring;
  std::vector<CoverSet> cover;
  std::string algorithm;      // cover only
  std::optional<int> bound;   // cover only
};

std::string write_certificate(const CertificateFile& cert, const InstanceFile& instance);
CertificateFile read_certificate(const std::string& text, const InstanceFile& instance);

// Sidecar mapping construction labels to element names of `instance`.
std::string write_labels(const GadgetLabels& labels, const InstanceFile& instance, const std::string& reduction);

}  // namespace rainbow
