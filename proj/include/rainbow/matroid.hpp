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

#include <memory>
#include <span>
#include <vector>

#include "rainbow/common.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/partition.hpp"

namespace rainbow {

// Rank-oracle matroid over a fixed ground set of element ids. Values are
// immutable after construction and every query is const, so a matroid can
// be shared freely between threads.
class Matroid {
 public:
  virtual ~Matroid() = default;

  const ElementSet& ground() const noexcept { return ground_; }
  std::size_t size() const noexcept { return ground_.size(); }
  bool contains(ElementId e) const noexcept {
    return e >= 0 && static_cast<std::size_t>(e) < member_.size() && member_[e];
  }

  // Rank of a set of distinct ground elements. Throws std::invalid_argument
  // naming the first id that is not in the ground set.
  int rank(std::span<const ElementId> s) const;
  int full_rank() const { return rank(ground_); }
  bool is_independent(std::span<const ElementId> s) const {
    return rank(s) == static_cast<int>(s.size());
  }
  bool is_basis(std::span<const ElementId> s) const {
    return is_independent(s) && static_cast<int>(s.size()) == full_rank();
  }

 protected:
  explicit Matroid(ElementSet ground);
  // s is a subset of ground() without repetitions.
  virtual int rank_of(std::span<const ElementId> s) const = 0;

 private:
  ElementSet ground_;
  std::vector<char> member_;
};

using MatroidPtr = std::shared_ptr<const Matroid>;

// Cycle matroid of a loopless multigraph; element ids are edge ids.
class GraphicMatroid final : public Matroid {
 public:
  explicit GraphicMatroid(Multigraph graph);
  const Multigraph& graph() const noexcept { return graph_; }

  // Union-find parent array after joining the endpoints of `edges`.
  std::vector<int> contracted_state(std::span<const ElementId> edges) const;
  // Number of successful joins when adding `s` on top of `state`.
  int rank_over(const std::vector<int>& state, std::span<const ElementId> s) const;

 protected:
  int rank_of(std::span<const ElementId> s) const override;

 private:
  Multigraph graph_;
};

// U_{r,n} on elements 0..n-1.
class UniformMatroid final : public Matroid {
 public:
  UniformMatroid(int n, int r);
  int cap() const noexcept { return cap_; }

 protected:
  int rank_of(std::span<const ElementId> s) const override;

 private:
  int cap_;
};

// Unitary partition matroid: independent sets are exactly the rainbow sets.
// Ground elements outside every class are free.
class PartitionMatroid final : public Matroid {
 public:
  PartitionMatroid(Partition partition, ElementSet ground);
  const Partition& partition() const noexcept { return partition_; }

 protected:
  int rank_of(std::span<const ElementId> s) const override;

 private:
  Partition partition_;
};

// root / contracted - deleted. Nested minors are flattened at construction,
// so root() is never itself a MinorView.
class MinorView final : public Matroid {
 public:
  MinorView(MatroidPtr root, ElementSet contracted, ElementSet deleted);

  const MatroidPtr& root() const noexcept { return root_; }
  const ElementSet& contracted() const noexcept { return contracted_; }
  const ElementSet& deleted() const noexcept { return deleted_; }

 protected:
  int rank_of(std::span<const ElementId> s) const override;

 private:
  struct Flat {
    MatroidPtr root;
    ElementSet contracted;
    ElementSet deleted;
  };
  static Flat flatten(MatroidPtr root, ElementSet contracted, ElementSet deleted);
  explicit MinorView(Flat f);

  MatroidPtr root_;
  ElementSet contracted_;
  ElementSet deleted_;
  int contracted_rank_ = 0;
  const GraphicMatroid* graphic_root_ = nullptr;
  std::vector<int> graphic_state_;
};

// Direct sum of matroids with pairwise disjoint ground sets.
class DirectSumView final : public Matroid {
 public:
  explicit DirectSumView(std::vector<MatroidPtr> components);
  const std::vector<MatroidPtr>& components() const noexcept { return components_; }

 protected:
  int rank_of(std::span<const ElementId> s) const override;

 private:
  std::vector<MatroidPtr> components_;
  std::vector<std::int32_t> owner_;  // by element id
};

MatroidPtr make_graphic(Multigraph graph);

// Minor constructors. Arguments must be subsets of m->ground(); contracted
// and deleted sets must be disjoint. Results are MinorViews over the
// outermost non-minor matroid.
MatroidPtr restriction(const MatroidPtr& m, std::span<const ElementId> keep);
MatroidPtr deletion(const MatroidPtr& m, std::span<const ElementId> drop);
MatroidPtr contraction(const MatroidPtr& m, std::span<const ElementId> contract);
MatroidPtr minor(const MatroidPtr& m, std::span<const ElementId> contract,
                 std::span<const ElementId> drop);

MatroidPtr direct_sum(std::vector<MatroidPtr> components);

// Connectivity classes: two elements share a class iff some circuit
// contains both. Classes are listed by smallest element.
std::vector<ElementSet> components(const Matroid& m);
// Same answer through fundamental circuits only (no graph fast path).
std::vector<ElementSet> components_by_circuits(const Matroid& m);

// Scans `candidates` in order and keeps each element that stays
// independent: a maximal independent subset of the candidates.
ElementSet greedy_basis(const Matroid& m, std::span<const ElementId> candidates);

}  // namespace rainbow
