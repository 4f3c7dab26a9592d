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
#include <vector>

#include "rainbow/common.hpp"
#include "rainbow/matroid.hpp"

namespace rainbow {

// Witness Y for the union-rank minimum: value = |Y| + k * rank(E - Y).
struct UnionCertificate {
  ElementSet witness;
  int value = 0;
};

struct UnionPartition {
  std::vector<ElementSet> parts;  // k disjoint independent sets
  UnionCertificate certificate;   // value == total size of parts
  int covered() const;
};

// Packs k disjoint independent sets of maximum total size by shortest
// augmenting paths in the exchange graph of k labeled copies of m. Ties
// are broken by ascending element id, so the result is deterministic.
UnionPartition max_union_partition(const Matroid& m, int k);

class NotKBase : public std::runtime_error {
 public:
  NotKBase(const std::string& what, std::optional<UnionCertificate> certificate)
      : std::runtime_error(what), certificate_(std::move(certificate)) {}
  const std::optional<UnionCertificate>& certificate() const noexcept { return certificate_; }

 private:
  std::optional<UnionCertificate> certificate_;
};

// Partition of the ground set into k bases; throws NotKBase otherwise.
Factorization k_base_factorize(const Matroid& m, int k);

bool is_two_base(const Matroid& m);

// Whether m has two disjoint bases (m may have further elements).
bool two_disjoint_bases_exist(const Matroid& m);

// Some X with 0 < |X| < |E| and rank(X) = |X|/2, if one exists.
// Requires a 2-base matroid (std::invalid_argument otherwise).
std::optional<ElementSet> find_nontrivial_tight_set(const Matroid& m);

// As above without re-checking the 2-base precondition.
std::optional<ElementSet> find_nontrivial_tight_set_unchecked(const MatroidPtr& m);

}  // namespace rainbow
