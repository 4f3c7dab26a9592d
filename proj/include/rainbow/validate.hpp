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
#include <string>
#include <vector>

#include "rainbow/common.hpp"
#include "rainbow/instances.hpp"

namespace rainbow {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

// Outcome of re-checking a certificate condition by condition. These
// validators share no code with the algorithms that produce certificates.
struct Report {
  std::vector<CheckResult> checks;

  bool ok() const;
  const CheckResult* first_failure() const;
  // Throws CertificateInvalid for the first failed check.
  void require() const;
};

Report validate_tree_factorization(const RstkfInstance& instance, const Factorization& trees);
Report validate_bst_factorization(const BstkfInstance& instance, const Factorization& subgraphs);
Report validate_nae_assignment(const Nae3SatInstance& instance, const Assignment& assignment);
Report validate_coloring(const KColInstance& instance, const Coloring& coloring);

// Every set must be a rainbow forest of `graph`, and a spanning tree when
// its basis flag is set. The sets together must cover `target`, and their
// number may not exceed `bound` when one is given.
Report validate_cover(const Multigraph& graph, const Partition& partition, const std::vector<ElementSet>& sets,
                      const std::vector<bool>& basis, const ElementSet& target, std::optional<int> bound = std::nullopt);

}  // namespace rainbow
