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
#include <string>
#include <utility>
#include <vector>

#include "rainbow/common.hpp"
#include "rainbow/matroid.hpp"
#include "rainbow/partition.hpp"

namespace rainbow {

// Closed walk e[0], f[0], ..., e[mu-1], f[mu-1] through the components of
// a direct sum: {e[j], f[j]} is a class, f[j-1] and e[j] share a component
// (cyclically), and no component holds two e's or two f's.
struct CyclicSequence {
  std::vector<ElementId> e;
  std::vector<ElementId> f;
  std::size_t length() const noexcept { return e.size(); }
  bool operator==(const CyclicSequence&) const = default;
};

// Walks from `start` (default: the smallest element of any component),
// setting f = partner(e) and continuing inside the component of f with
// its smallest other element, until the walk closes.
// `components` must be disjoint sets of size >= 2 and `p` 2-uniform over
// their union; std::invalid_argument otherwise.
CyclicSequence find_cyclic_sequence(const std::vector<ElementSet>& components, const Partition& p,
                                    std::optional<ElementId> start = std::nullopt);

// Empty string when `seq` is a valid cyclic sequence, else the first
// violated condition.
std::string check_cyclic_sequence(const CyclicSequence& seq, const std::vector<ElementSet>& components,
                                  const Partition& p);

// e'[j] = f[mu-1-j] and f'[j] = e[mu-1-j].
CyclicSequence reversed(const CyclicSequence& seq);

// Record of one half_covering_rainbow_basis run.
struct HalfCoverTrace {
  std::vector<CyclicSequence> sequences;
  std::vector<std::vector<ElementSet>> sequence_components;  // components seen by each sequence
  // (ground size, sum of squared component sizes) per recursive call.
  std::vector<std::pair<std::int64_t, std::int64_t>> measures;
  int tight_splits = 0;
  int reversals = 0;
};

// A rainbow basis B of the direct sum of `components` with
// |B ∩ z| >= |z| / 2. Every component must be 2-base, the ground sets
// disjoint, `p` 2-uniform over their union and z inside it.
ElementSet half_covering_rainbow_basis(const std::vector<MatroidPtr>& components, const ElementSet& z,
                                       const Partition& p, HalfCoverTrace* trace = nullptr);

// A basis of the 2-base matroid m that is rainbow for the 2-bounded p.
// Classes reaching outside the ground set are cut down to it.
ElementSet rainbow_basis(const MatroidPtr& m, const Partition& p);

// At most floor(log2 |z|) + 1 rainbow bases whose union contains z.
std::vector<ElementSet> log_cover(const MatroidPtr& m, const ElementSet& z, const Partition& p);

// floor(log2 n) + 1 for n >= 1, and 0 for n = 0.
int log_cover_bound(std::size_t n);

}  // namespace rainbow
