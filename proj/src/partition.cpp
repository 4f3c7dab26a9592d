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

#include "rainbow/partition.hpp"

#include <stdexcept>
#include <string>

namespace rainbow {

Partition::Partition(std::vector<ElementSet> classes) : classes_(std::move(classes)) {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    ElementSet& cls = classes_[i];
    cls = make_set(std::move(cls));
    if (cls.empty()) throw std::invalid_argument("partition class " + std::to_string(i) + " is empty");
    for (ElementId e : cls) {
      if (e < 0) throw std::invalid_argument("negative element id in partition");
      if (static_cast<std::size_t>(e) >= class_index_.size()) {
        class_index_.resize(static_cast<std::size_t>(e) + 1, -1);
      }
      if (class_index_[e] != -1) {
        throw std::invalid_argument("element " + std::to_string(e) + " lies in two partition classes");
      }
      class_index_[e] = static_cast<std::int32_t>(i);
    }
  }
}

std::optional<std::size_t> Partition::class_of(ElementId e) const {
  if (e < 0 || static_cast<std::size_t>(e) >= class_index_.size() || class_index_[e] < 0) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(class_index_[e]);
}

std::optional<ElementId> Partition::partner(ElementId e) const {
  auto c = class_of(e);
  if (!c || classes_[*c].size() != 2) return std::nullopt;
  const ElementSet& cls = classes_[*c];
  return cls[0] == e ? cls[1] : cls[0];
}

std::size_t Partition::max_class_size() const noexcept {
  std::size_t m = 0;
  for (const auto& c : classes_) m = std::max(m, c.size());
  return m;
}

bool Partition::is_uniform(std::size_t p) const noexcept {
  return std::all_of(classes_.begin(), classes_.end(),
                     [p](const ElementSet& c) { return c.size() == p; });
}

ElementSet Partition::covered() const {
  ElementSet out;
  for (const auto& c : classes_) out.insert(out.end(), c.begin(), c.end());
  return make_set(std::move(out));
}

bool Partition::partitions(std::span<const ElementId> ground) const {
  const ElementSet cov = covered();
  return std::equal(cov.begin(), cov.end(), ground.begin(), ground.end());
}

Partition Partition::restricted_to(std::span<const ElementId> ground) const {
  std::vector<ElementSet> out;
  for (const auto& c : classes_) {
    ElementSet part = set_intersection(c, ground);
    if (!part.empty()) out.push_back(std::move(part));
  }
  return Partition(std::move(out));
}

bool is_rainbow(std::span<const ElementId> s, const Partition& p) {
  std::vector<char> hit(p.class_count(), 0);
  for (ElementId e : s) {
    if (auto c = p.class_of(e)) {
      if (hit[*c]) return false;
      hit[*c] = 1;
    }
  }
  return true;
}

namespace {

Partition pair_singletons(const Partition& p, std::span<const ElementId> ground, bool allow_odd) {
  if (!p.is_bounded(2)) throw std::invalid_argument("partition is not 2-bounded");
  const ElementSet cov = p.covered();
  if (!is_subset(cov, ground)) throw std::invalid_argument("partition class leaves the ground set");
  std::vector<ElementSet> pairs;
  ElementSet singles = set_difference(ground, cov);
  for (const auto& c : p.classes()) {
    if (c.size() == 2) {
      pairs.push_back(c);
    } else {
      singles.push_back(c[0]);
    }
  }
  singles = make_set(std::move(singles));
  if (singles.size() % 2 == 1 && !allow_odd) {
    throw std::invalid_argument("odd number of singletons; cannot complete to a 2-uniform partition");
  }
  for (std::size_t i = 0; i + 1 < singles.size(); i += 2) {
    pairs.push_back({singles[i], singles[i + 1]});
  }
  if (singles.size() % 2 == 1) pairs.push_back({singles.back()});
  return Partition(std::move(pairs));
}

}  // namespace

Partition complete_to_two_uniform(const Partition& p, std::span<const ElementId> ground) {
  return pair_singletons(p, ground, false);
}

Partition pair_up_singletons(const Partition& p, std::span<const ElementId> ground) {
  return pair_singletons(p, ground, true);
}

}  // namespace rainbow
