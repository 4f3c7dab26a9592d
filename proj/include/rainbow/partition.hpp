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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rainbow/common.hpp"

namespace rainbow {

// A family of disjoint nonempty classes of element ids. Elements outside
// every class are unconstrained, so this doubles as a subpartition.
class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument on empty or overlapping classes.
  explicit Partition(std::vector<ElementSet> classes);

  const std::vector<ElementSet>& classes() const noexcept { return classes_; }
  std::size_t class_count() const noexcept { return classes_.size(); }

  std::optional<std::size_t> class_of(ElementId e) const;
  // Classmate of e when e lies in a class of size exactly 2.
  std::optional<ElementId> partner(ElementId e) const;

  std::size_t max_class_size() const noexcept;
  bool is_bounded(std::size_t p) const noexcept { return max_class_size() <= p; }
  bool is_uniform(std::size_t p) const noexcept;
  ElementSet covered() const;
  // True iff the classes are exactly a partition of `ground`.
  bool partitions(std::span<const ElementId> ground) const;

  // Classes intersected with `ground`, empty intersections dropped.
  Partition restricted_to(std::span<const ElementId> ground) const;

 private:
  std::vector<ElementSet> classes_;
  std::vector<std::int32_t> class_index_;  // by element id, -1 if none
};

// |S ∩ X| <= 1 for every class X.
bool is_rainbow(std::span<const ElementId> s, const Partition& p);

// Uncovered ground elements become singletons, then singletons are paired
// in ascending id order. Every set rainbow w.r.t. the result is rainbow
// w.r.t. `p`. Classes must be contained in `ground` and have size <= 2;
// throws std::invalid_argument if the singleton count is odd.
Partition complete_to_two_uniform(const Partition& p, std::span<const ElementId> ground);

// As above but tolerates an odd singleton count by leaving the largest
// leftover singleton unpaired (result is 2-bounded).
Partition pair_up_singletons(const Partition& p, std::span<const ElementId> ground);

}  // namespace rainbow
