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

#ifndef AMBREL_CAPACITY_HPP_
#define AMBREL_CAPACITY_HPP_

#include <utility>
#include <vector>

#include "ambrel/fuzzy.hpp"

namespace ambrel {

/**
 * An L-valued capacity on a finite space: c(∅) = 0, c(Y) = 1, monotone.
 * Upper semicontinuity holds trivially on a discrete space.
 *
 * `values()` is indexed by subset mask, the empty set included.
 */
class LCapacity {
 public:
  const FiniteSpace& space() const noexcept { return space_; }
  const FiniteLattice& lattice() const noexcept { return *lattice_; }
  const LatticePtr& lattice_ptr() const noexcept { return lattice_; }
  Elem operator()(Mask f) const { return values_.at(f); }
  const std::vector<Elem>& values() const noexcept { return values_; }

  friend bool operator==(const LCapacity& p, const LCapacity& q) {
    return p.space_ == q.space_ && *p.lattice_ == *q.lattice_ && p.values_ == q.values_;
  }

 private:
  friend Checked<LCapacity> validate_capacity(const FiniteSpace&, LatticePtr, std::vector<Elem>);
  LCapacity(FiniteSpace y, LatticePtr l, std::vector<Elem> v)
      : space_(std::move(y)), lattice_(std::move(l)), values_(std::move(v)) {}

  FiniteSpace space_;
  LatticePtr lattice_;
  std::vector<Elem> values_;
};

/// Violation codes: BadBounds, NotMonotone.
Checked<LCapacity> validate_capacity(const FiniteSpace& y, LatticePtr lattice, std::vector<Elem> values);

/// c_{AR}(B) = v(A, B), c(∅) = 0.
LCapacity capacity_of(const LFuzzyAmbRep& r, Mask a);

/// (F, α) with F a nonempty subset.
using GradedSet = std::pair<Mask, Elem>;

/// {(F, α) : F nonempty, α ≤ c(F)}, sorted.
std::vector<GradedSet> capacity_subgraph(const LCapacity& c);

/// Checks, in this order: the floor exp Y × {0} ∪ {Y} × L (MissingFloor);
/// (F, α), (G, β) present implies (F ∪ G, α ∨ β) present
/// (UnionJoinViolated); (F, α) present, F ⊆ G, β ≤ α implies (G, β)
/// present (NotDownSetInAlpha). With the floor in place the union rule
/// already forces F ⊆ G, so the last check only sees gaps below α.
/// Closedness is vacuous. On success returns the unique capacity with this
/// subgraph.
Checked<LCapacity> validate_subgraph(const FiniteSpace& y, LatticePtr lattice, const std::vector<GradedSet>& set);

/// c(B) = 1 iff B = Y, else 0.
LCapacity minimal_capacity(const FiniteSpace& y, LatticePtr lattice);

}  // namespace ambrel

#endif  // AMBREL_CAPACITY_HPP_
