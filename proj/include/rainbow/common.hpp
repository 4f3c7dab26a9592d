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

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rainbow {

// Element of a matroid ground set. For graphic matroids this is the edge id
// of the carrier graph; ids survive minor operations unchanged.
using ElementId = std::int32_t;

// Sorted, duplicate-free list of element ids.
using ElementSet = std::vector<ElementId>;

inline ElementSet make_set(std::vector<ElementId> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return items;
}

inline bool set_contains(std::span<const ElementId> s, ElementId e) {
  return std::binary_search(s.begin(), s.end(), e);
}

inline ElementSet set_union(std::span<const ElementId> a,
                            std::span<const ElementId> b) {
  ElementSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

inline ElementSet set_difference(std::span<const ElementId> a,
                                 std::span<const ElementId> b) {
  ElementSet out;
  out.reserve(a.size());
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

inline ElementSet set_intersection(std::span<const ElementId> a,
                                   std::span<const ElementId> b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline bool is_subset(std::span<const ElementId> a,
                      std::span<const ElementId> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool is_disjoint(std::span<const ElementId> a,
                        std::span<const ElementId> b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return false;
    }
  }
  return true;
}

// An ordered list of disjoint element sets, e.g. k bases of a k-base
// matroid or k spanning trees of a k-multiple tree.
struct Factorization {
  std::vector<ElementSet> parts;
};

// A certificate (tree list, assignment, coloring, ...) failed a validity
// check. `check` names the violated condition.
class CertificateInvalid : public std::runtime_error {
 public:
  CertificateInvalid(std::string check, const std::string& detail)
      : std::runtime_error(check + ": " + detail), check_(std::move(check)) {}
  const std::string& check() const noexcept { return check_; }

 private:
  std::string check_;
};

}  // namespace rainbow
