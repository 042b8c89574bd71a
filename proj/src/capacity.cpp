// Copyright 2026 The ambrel Authors
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

#include "ambrel/capacity.hpp"

namespace ambrel {

namespace {

nlohmann::json set_label(const FiniteSpace& y, Mask f) { return y.subset_labels(f); }

}  // namespace

Checked<LCapacity> validate_capacity(const FiniteSpace& y, LatticePtr lattice, std::vector<Elem> values) {
  const FiniteLattice& l = *lattice;
  if (values.size() != (std::size_t{1} << y.size())) {
    throw Error("MalformedInput", "capacity needs one value per subset, the empty set included");
  }
  for (Elem v : values) {
    if (v >= l.size()) throw Error("MalformedInput", "capacity value outside the lattice");
  }
  if (values[0] != l.bottom()) {
    return Violation{"BadBounds", "c(∅) must be bottom", {{"set", nlohmann::json::array()}, {"value", l.label(values[0])}}};
  }
  if (values[y.full()] != l.top()) {
    return Violation{"BadBounds", "c(Y) must be top", {{"set", set_label(y, y.full())}, {"value", l.label(values[y.full()])}}};
  }
  for (Mask f = 0; f <= y.full(); ++f) {
    for (Mask g : fam::members(fam::supersets_of(f, y.size()))) {
      if (!l.leq(values[f], values[g])) {
        return Violation{"NotMonotone", "F ⊆ G but c(F) is not below c(G)",
                         {{"F", set_label(y, f)}, {"G", set_label(y, g)}, {"cF", l.label(values[f])},
                          {"cG", l.label(values[g])}}};
      }
    }
  }
  return LCapacity(y, std::move(lattice), std::move(values));
}

LCapacity capacity_of(const LFuzzyAmbRep& r, Mask a) {
  if (a == 0 || a > r.source().full()) throw Error("MalformedInput", "A must be a nonempty source subset");
  std::vector<Elem> values(std::size_t{1} << r.target().size(), r.lattice().bottom());
  for (Mask b = 1; b <= r.target().full(); ++b) values[b] = r.grade(a, b);
  return validate_capacity(r.target(), r.lattice_ptr(), std::move(values)).value();
}

std::vector<GradedSet> capacity_subgraph(const LCapacity& c) {
  const FiniteLattice& l = c.lattice();
  std::vector<GradedSet> out;
  for (Mask f = 1; f <= c.space().full(); ++f) {
    for (std::size_t e = 0; e < l.size(); ++e) {
      if (l.leq(static_cast<Elem>(e), c(f))) out.emplace_back(f, static_cast<Elem>(e));
    }
  }
  return out;
}

Checked<LCapacity> validate_subgraph(const FiniteSpace& y, LatticePtr lattice, const std::vector<GradedSet>& set) {
  const FiniteLattice& l = *lattice;
  const std::size_t n = l.size();
  std::vector<std::uint8_t> in((std::size_t{1} << y.size()) * n, 0);
  auto has = [&](Mask f, Elem e) -> std::uint8_t& { return in[f * n + e]; };
  for (const auto& [f, e] : set) {
    if (f == 0 || f > y.full() || e >= n) throw Error("MalformedInput", "graded set outside exp Y × L");
    has(f, e) = 1;
  }
  for (Mask f = 1; f <= y.full(); ++f) {
    if (!has(f, l.bottom())) {
      return Violation{"MissingFloor", "(F, 0) is missing", {{"F", set_label(y, f)}, {"alpha", l.label(l.bottom())}}};
    }
  }
  for (std::size_t e = 0; e < n; ++e) {
    if (!has(y.full(), static_cast<Elem>(e))) {
      return Violation{"MissingFloor", "(Y, α) is missing",
                       {{"F", set_label(y, y.full())}, {"alpha", l.label(static_cast<Elem>(e))}}};
    }
  }
  for (Mask f = 1; f <= y.full(); ++f) {
    for (Elem e = 0; e < n; ++e) {
      if (!has(f, e)) continue;
      for (Mask g = 1; g <= y.full(); ++g) {
        for (Elem d = 0; d < n; ++d) {
          if (has(g, d) && !has(f | g, l.join(e, d))) {
            return Violation{"UnionJoinViolated", "(F, α), (G, β) present but (F ∪ G, α ∨ β) missing",
                             {{"F", set_label(y, f)}, {"alpha", l.label(e)}, {"G", set_label(y, g)},
                              {"beta", l.label(d)}}};
          }
        }
      }
    }
  }
  for (Mask f = 1; f <= y.full(); ++f) {
    for (Elem e = 0; e < n; ++e) {
      if (!has(f, e)) continue;
      for (Mask g : fam::members(fam::supersets_of(f, y.size()))) {
        for (Elem d = 0; d < n; ++d) {
          if (l.leq(d, e) && !has(g, d)) {
            return Violation{"NotDownSetInAlpha", "(F, α) present, F ⊆ G, β ≤ α, but (G, β) missing",
                             {{"F", set_label(y, f)}, {"alpha", l.label(e)}, {"G", set_label(y, g)},
                              {"beta", l.label(d)}}};
          }
        }
      }
    }
  }
  std::vector<Elem> values(std::size_t{1} << y.size(), l.bottom());
  for (Mask f = 1; f <= y.full(); ++f) {
    for (Elem e = 0; e < n; ++e) {
      if (has(f, e)) values[f] = l.join(values[f], e);
    }
  }
  return validate_capacity(y, std::move(lattice), std::move(values));
}

LCapacity minimal_capacity(const FiniteSpace& y, LatticePtr lattice) {
  std::vector<Elem> values(std::size_t{1} << y.size(), lattice->bottom());
  values[y.full()] = lattice->top();
  return validate_capacity(y, std::move(lattice), std::move(values)).value();
}

}  // namespace ambrel
