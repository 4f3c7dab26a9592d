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

#include "rainbow/rainbow.hpp"

#include <stdexcept>
#include <unordered_map>

#include "rainbow/union_pack.hpp"

namespace rainbow {

namespace {

using ComponentOf = std::unordered_map<ElementId, std::size_t>;

ComponentOf index_components(const std::vector<ElementSet>& components) {
  ComponentOf of;
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (ElementId e : components[c]) {
      if (!of.emplace(e, c).second) {
        throw std::invalid_argument("components overlap at element " + std::to_string(e));
      }
    }
  }
  return of;
}

std::string describe(ElementId e) { return "element " + std::to_string(e); }

}  // namespace

CyclicSequence find_cyclic_sequence(const std::vector<ElementSet>& components, const Partition& p,
                                    std::optional<ElementId> start) {
  const ComponentOf of = index_components(components);
  ElementSet ground;
  for (const auto& c : components) {
    if (c.size() < 2) throw std::invalid_argument("cyclic sequence: component with fewer than 2 elements");
    ground.insert(ground.end(), c.begin(), c.end());
  }
  ground = make_set(std::move(ground));
  if (ground.empty()) throw std::invalid_argument("cyclic sequence: no components");
  if (!p.is_uniform(2) || !p.partitions(ground)) {
    throw std::invalid_argument("cyclic sequence: partition is not 2-uniform over the components");
  }
  ElementId e = start.value_or(ground.front());
  if (!of.count(e)) throw std::invalid_argument("cyclic sequence: start " + describe(e) + " is not in a component");

  CyclicSequence walk;
  // Component index -> position of the e (resp. f) lying in it.
  std::unordered_map<std::size_t, std::size_t> e_at;
  std::unordered_map<std::size_t, std::size_t> f_at;
  while (true) {
    const ElementId f = *p.partner(e);
    const std::size_t j = walk.e.size();
    e_at.emplace(of.at(e), j);
    walk.e.push_back(e);
    walk.f.push_back(f);
    const std::size_t c = of.at(f);
    if (auto it = f_at.find(c); it != f_at.end()) {
      const std::size_t i = it->second + 1;
      return CyclicSequence{{walk.e.begin() + static_cast<std::ptrdiff_t>(i), walk.e.end()},
                            {walk.f.begin() + static_cast<std::ptrdiff_t>(i), walk.f.end()}};
    }
    f_at.emplace(c, j);
    if (auto it = e_at.find(c); it != e_at.end()) {
      const std::size_t i = it->second;
      return CyclicSequence{{walk.e.begin() + static_cast<std::ptrdiff_t>(i), walk.e.end()},
                            {walk.f.begin() + static_cast<std::ptrdiff_t>(i), walk.f.end()}};
    }
    const ElementSet& comp = components[c];
    e = comp[0] == f ? comp[1] : comp[0];
  }
}

std::string check_cyclic_sequence(const CyclicSequence& seq, const std::vector<ElementSet>& components,
                                  const Partition& p) {
  const std::size_t mu = seq.e.size();
  if (mu == 0) return "empty sequence";
  if (seq.f.size() != mu) return "e and f lists differ in length";
  ComponentOf of;
  try {
    of = index_components(components);
  } catch (const std::invalid_argument& err) {
    return err.what();
  }
  ElementSet all(seq.e);
  all.insert(all.end(), seq.f.begin(), seq.f.end());
  if (make_set(all).size() != 2 * mu) return "elements are not distinct";
  for (ElementId x : all) {
    if (!of.count(x)) return describe(x) + " lies in no component";
  }
  std::unordered_map<std::size_t, int> e_count;
  std::unordered_map<std::size_t, int> f_count;
  for (std::size_t j = 0; j < mu; ++j) {
    if (p.partner(seq.e[j]) != seq.f[j]) return "(i) e and f at position " + std::to_string(j) + " are not classmates";
    const std::size_t prev = (j + mu - 1) % mu;
    if (of.at(seq.f[prev]) != of.at(seq.e[j])) {
      return (j == 0 ? "(iv)" : "(ii)") + std::string(" f at position ") + std::to_string(prev) +
             " and e at position " + std::to_string(j) + " lie in different components";
    }
    if (++e_count[of.at(seq.e[j])] > 1) return "(iii) a component holds two e elements";
    if (++f_count[of.at(seq.f[j])] > 1) return "(iii) a component holds two f elements";
  }
  return {};
}

CyclicSequence reversed(const CyclicSequence& seq) {
  return CyclicSequence{{seq.f.rbegin(), seq.f.rend()}, {seq.e.rbegin(), seq.e.rend()}};
}

namespace {

struct Part {
  MatroidPtr m;
  bool tight_free = false;
};

using Measure = std::pair<std::int64_t, std::int64_t>;

Measure measure_of(const std::vector<Part>& parts) {
  Measure out{0, 0};
  for (const auto& part : parts) {
    const auto s = static_cast<std::int64_t>(part.m->size());
    out.first += s;
    out.second += s * s;
  }
  return out;
}

class HalfCover {
 public:
  explicit HalfCover(HalfCoverTrace* trace) : trace_(trace) {}

  ElementSet run(std::vector<Part> parts, ElementSet z, const Partition& p, std::optional<Measure> parent) {
    std::erase_if(parts, [](const Part& part) { return part.m->size() == 0; });
    if (parts.empty()) return {};
    const Measure here = measure_of(parts);
    if (parent && !(here < *parent)) {
      throw std::logic_error("half-covering recursion did not decrease its measure");
    }
    if (trace_ != nullptr) trace_->measures.push_back(here);

    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i].tight_free) continue;
      const MatroidPtr whole = parts[i].m;
      std::optional<ElementSet> tight = find_nontrivial_tight_set_unchecked(whole);
      if (!tight) {
        parts[i].tight_free = true;
        continue;
      }
      if (trace_ != nullptr) ++trace_->tight_splits;
      parts[i] = Part{restriction(whole, *tight)};
      parts.insert(parts.begin() + static_cast<std::ptrdiff_t>(i) + 1, Part{contraction(whole, *tight)});
      ElementSet b = run(std::move(parts), std::move(z), p, here);
      if (!whole->is_basis(set_intersection(b, whole->ground()))) {
        throw std::logic_error("half-covering: result is not a basis of a split component");
      }
      return b;
    }

    std::vector<ElementSet> grounds;
    grounds.reserve(parts.size());
    ElementId smallest = parts.front().m->ground().front();
    for (const auto& part : parts) {
      grounds.push_back(part.m->ground());
      smallest = std::min(smallest, part.m->ground().front());
    }
    CyclicSequence seq = find_cyclic_sequence(grounds, p, smallest);
    std::size_t e_hits = 0;
    std::size_t f_hits = 0;
    for (std::size_t j = 0; j < seq.length(); ++j) {
      e_hits += set_contains(z, seq.e[j]) ? 1 : 0;
      f_hits += set_contains(z, seq.f[j]) ? 1 : 0;
    }
    if (f_hits > e_hits) {
      seq = reversed(seq);
      if (trace_ != nullptr) ++trace_->reversals;
    }
    if (trace_ != nullptr) {
      trace_->sequences.push_back(seq);
      trace_->sequence_components.push_back(grounds);
    }

    const std::size_t mu = seq.length();
    for (std::size_t j = 0; j < mu; ++j) {
      const ElementId e = seq.e[j];
      const ElementId f = seq.f[(j + mu - 1) % mu];
      for (auto& part : parts) {
        if (!part.m->contains(e)) continue;
        const ElementId ce[] = {e};
        const ElementId df[] = {f};
        part = Part{minor(part.m, ce, df)};
        break;
      }
    }
    ElementSet used = make_set([&] {
      std::vector<ElementId> v(seq.e);
      v.insert(v.end(), seq.f.begin(), seq.f.end());
      return v;
    }());
    ElementSet rest;
    for (const auto& part : parts) rest.insert(rest.end(), part.m->ground().begin(), part.m->ground().end());
    const Partition sub = p.restricted_to(make_set(std::move(rest)));
    if (!sub.is_uniform(2)) throw std::logic_error("half-covering: sequence split a partition class");
    ElementSet b = run(std::move(parts), set_difference(z, used), sub, here);
    return set_union(b, make_set(seq.e));
  }

 private:
  HalfCoverTrace* trace_;
};

ElementSet half_cover_unchecked(std::vector<MatroidPtr> components, const ElementSet& z, const Partition& p,
                                HalfCoverTrace* trace) {
  std::vector<Part> parts;
  parts.reserve(components.size());
  for (auto& c : components) parts.push_back(Part{std::move(c)});
  return HalfCover(trace).run(std::move(parts), z, p, std::nullopt);
}

std::vector<MatroidPtr> component_minors(const MatroidPtr& m) {
  std::vector<MatroidPtr> out;
  for (const ElementSet& c : components(*m)) out.push_back(restriction(m, c));
  return out;
}

void require_two_base(const Matroid& m, const char* who) {
  if (!is_two_base(m)) throw std::invalid_argument(std::string(who) + ": matroid is not 2-base");
}

}  // namespace

ElementSet half_covering_rainbow_basis(const std::vector<MatroidPtr>& components, const ElementSet& z,
                                       const Partition& p, HalfCoverTrace* trace) {
  ElementSet ground;
  std::size_t total = 0;
  for (const auto& c : components) {
    require_two_base(*c, "half_covering_rainbow_basis");
    ground.insert(ground.end(), c->ground().begin(), c->ground().end());
    total += c->size();
  }
  ground = make_set(std::move(ground));
  if (ground.size() != total) throw std::invalid_argument("half_covering_rainbow_basis: components overlap");
  if (!p.is_uniform(2) || !p.partitions(ground)) {
    throw std::invalid_argument("half_covering_rainbow_basis: partition is not 2-uniform over the ground set");
  }
  if (!is_subset(z, ground)) throw std::invalid_argument("half_covering_rainbow_basis: Z leaves the ground set");
  return half_cover_unchecked(components, z, p, trace);
}

ElementSet rainbow_basis(const MatroidPtr& m, const Partition& p) {
  require_two_base(*m, "rainbow_basis");
  if (!p.is_bounded(2)) throw std::invalid_argument("rainbow_basis: partition is not 2-bounded");
  const Partition full = complete_to_two_uniform(p.restricted_to(m->ground()), m->ground());
  return half_cover_unchecked(component_minors(m), {}, full, nullptr);
}

std::vector<ElementSet> log_cover(const MatroidPtr& m, const ElementSet& z, const Partition& p) {
  require_two_base(*m, "log_cover");
  if (!p.is_bounded(2)) throw std::invalid_argument("log_cover: partition is not 2-bounded");
  if (!is_subset(z, m->ground())) throw std::invalid_argument("log_cover: Z leaves the ground set");
  const Partition full = complete_to_two_uniform(p.restricted_to(m->ground()), m->ground());
  const std::vector<MatroidPtr> parts = component_minors(m);
  std::vector<ElementSet> out;
  ElementSet left = z;
  while (!left.empty()) {
    ElementSet b = half_cover_unchecked(parts, left, full, nullptr);
    left = set_difference(left, b);
    out.push_back(std::move(b));
  }
  return out;
}

int log_cover_bound(std::size_t n) {
  int bound = 0;
  while (n > 0) {
    ++bound;
    n >>= 1;
  }
  return bound;
}

}  // namespace rainbow
