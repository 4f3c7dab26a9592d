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

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/common.hpp"
#include "rainbow/matroid.hpp"
#include "rainbow/partition.hpp"

namespace rainbow {

struct CoverEntry {
  ElementSet set;
  bool is_basis = false;
  std::string provenance;  // which step produced the entry
};

struct RainbowCover {
  std::vector<CoverEntry> entries;
  int bound = 0;  // the guaranteed maximum number of entries
};

struct ThreeCover {
  ElementSet basis;
  ElementSet first;
  ElementSet second;
};

// Three rainbow independent sets covering the 2-base matroid m, the first
// a basis and the other two its complement split along a factorization.
ThreeCover cover_three(const MatroidPtr& m, const Partition& p);

// First fit: each element of b joins the first side holding no classmate.
std::pair<ElementSet, ElementSet> split_basis_rainbow(const ElementSet& b, const Partition& p);

// Two rainbow bases of m whose union contains the rainbow independent set
// x, built from four disjoint bases c of m. p must be 2-bounded.
std::pair<ElementSet, ElementSet> lift_to_two_bases(const MatroidPtr& m, const Partition& p, const ElementSet& x,
                                                    const std::array<ElementSet, 4>& c);

// Three rainbow bases containing x, from three disjoint bases c of m.
std::array<ElementSet, 3> lift_to_three_bases(const MatroidPtr& m, const Partition& p, const ElementSet& x,
                                              const std::array<ElementSet, 3>& c);

// Rainbow bases covering a k-base matroid, k >= 4, with at most
// 5 * alpha + 4 * beta entries where k = 2 * alpha + beta. Defaults to
// alpha = k / 2.
RainbowCover cover_k41(const MatroidPtr& m, int k, const Partition& p,
                       std::optional<std::pair<int, int>> alpha_beta = std::nullopt);

// At most 13 rainbow bases covering a 3-base matroid.
RainbowCover cover_k3(const MatroidPtr& m, const Partition& p);

}  // namespace rainbow
