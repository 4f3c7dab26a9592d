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
#include <stdexcept>

#include "rainbow/common.hpp"
#include "rainbow/instances.hpp"

namespace rainbow {

struct SearchConfig {
  std::uint64_t node_budget = 10'000'000;
  double time_budget_seconds = 60.0;
  // When false the static item order is shuffled with `seed` before search.
  bool deterministic = true;
  std::uint64_t seed = 0;
};

enum class SearchStatus { Found, Infeasible, Exhausted };

const char* to_string(SearchStatus s);

struct SearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  Factorization solution;  // meaningful only when status == Found
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

class InstanceTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exact search for k rainbow spanning trees; classes of any size are
// allowed, so 2-bounded GRST2F inputs work too.
SearchResult solve_rstkf(const RstkfInstance& instance, const SearchConfig& cfg = {});

// Exact search for k arc-disjoint subgraphs covering every arc whose
// underlying graphs are spanning trees and whose indegrees respect g.
SearchResult solve_bstkf(const BstkfInstance& instance, const SearchConfig& cfg = {});

// Enumeration over all assignments; at most 25 variables.
std::optional<Assignment> solve_nae3sat(const Nae3SatInstance& instance);

// Backtracking over vertices; at most 20 vertices.
std::optional<Coloring> solve_kcol(const KColInstance& instance);

}  // namespace rainbow
