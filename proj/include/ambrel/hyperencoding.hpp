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

#ifndef AMBREL_HYPERENCODING_HPP_
#define AMBREL_HYPERENCODING_HPP_

#include <bitset>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <tuple>
#include <vector>

#include "ambrel/fuzzy.hpp"

namespace ambrel {

/// A nonempty family 𝒜 ⊆ exp X for |X| <= 3: bit (A - 1) is set iff A ∈ 𝒜.
using HyperFamily = std::uint32_t;

inline constexpr std::size_t kMaxEncodedPoints = 3;
inline constexpr std::size_t kMaxEncodedLattice = 4;

/// (𝒜, B, α).
using HyperTriple = std::tuple<HyperFamily, Mask, Elem>;

/// Encodes the family of subset masks in `members` (all nonempty).
HyperFamily hyper_family(std::initializer_list<Mask> members);
/// The subset masks of a HyperFamily in increasing order.
std::vector<Mask> hyper_members(HyperFamily f);
/// Union of the members.
Mask hyper_union(HyperFamily f);

/**
 * T ⊆ exp²X × exp Y × L over small spaces, as a dense bitset over the
 * (𝒜, B, α) universe. Requires |X|, |Y| <= 3 and |L| <= 4; larger inputs
 * throw Error("SpaceTooLarge").
 */
class TernaryHyperRelation {
 public:
  static constexpr std::size_t kSlots = 128 * 8 * 4;

  TernaryHyperRelation(FiniteSpace x, FiniteSpace y, LatticePtr lattice);

  const FiniteSpace& source() const noexcept { return source_; }
  const FiniteSpace& target() const noexcept { return target_; }
  const FiniteLattice& lattice() const noexcept { return *lattice_; }
  const LatticePtr& lattice_ptr() const noexcept { return lattice_; }

  bool contains(HyperFamily f, Mask b, Elem a) const { return bits_.test(slot(f, b, a)); }
  void insert(HyperFamily f, Mask b, Elem a);
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  /// Triples in increasing (𝒜, B, α) order.
  std::vector<HyperTriple> triples() const;

  /// Largest family index + 1, i.e. 2^(2^|X| - 1).
  HyperFamily family_limit() const noexcept { return HyperFamily{1} << source_.full(); }

  TernaryHyperRelation& operator|=(const TernaryHyperRelation& other);
  bool subset_of(const TernaryHyperRelation& other) const;
  friend bool operator==(const TernaryHyperRelation& p, const TernaryHyperRelation& q) {
    return p.source_ == q.source_ && p.target_ == q.target_ && *p.lattice_ == *q.lattice_ && p.bits_ == q.bits_;
  }

 private:
  static std::size_t slot(HyperFamily f, Mask b, Elem a) { return (std::size_t{f} * 8 + b) * 4 + a; }

  FiniteSpace source_;
  FiniteSpace target_;
  LatticePtr lattice_;
  std::bitset<kSlots> bits_;
};

/// 𝒜^⊂: every nonempty family ℬ over exp X such that each A ∈ 𝒜 has a
/// member B ∈ ℬ with B ⊆ A. Returned in increasing order.
std::vector<HyperFamily> refinement_hyperspace(std::size_t n, HyperFamily family);

/// T^⊂: union of 𝒜^⊂ × {B} × ↓α over (𝒜, B, α) ∈ T.
TernaryHyperRelation subset_saturate(const TernaryHyperRelation& t);

/// T^sup: least superset of T closed under the merge
/// (𝒜₁ ∪ 𝒜₂, B₁ ∪ B₂, α₁ ∨ α₂). The three combiners are associative,
/// commutative and idempotent, so this equals folding every nonempty
/// subfamily of T.
TernaryHyperRelation sup_saturate(const TernaryHyperRelation& t);

/// exp²X × {Y} × L ∪ exp²X × exp Y × {0}.
TernaryHyperRelation encoding_floor(const FiniteSpace& x, const FiniteSpace& y, LatticePtr lattice);

/// T^+ = ((T ∪ floor)^⊂)^sup.
TernaryHyperRelation plus(const TernaryHyperRelation& t);

/// R^∪ from its definition: (𝒜, B, γ) with γ ≤ sup{v(A, B) : A ∈ 𝒜}.
TernaryHyperRelation encode(const LFuzzyAmbRep& r);
/// (R_•)^sup where R_• = {({A}, B, α) : α ≤ v(A, B)}. Equal to encode().
TernaryHyperRelation encode_via_singletons(const LFuzzyAmbRep& r);

/// Triples whose first coordinate is a singleton family.
TernaryHyperRelation singleton_part(const TernaryHyperRelation& t);

/// v(A, B) = sup{α : ({A}, B, α) ∈ T}, validated as a representation.
Checked<LFuzzyAmbRep> decode(const TernaryHyperRelation& t);

/// T = T^+ = (singleton part of T)^+.
bool is_encoded(const TernaryHyperRelation& t);

/// sup of a family through the encoding: decode((∪ R^∪)^+). Throws
/// Error("SpaceMismatch") / Error("LatticeMismatch") on mixed inputs and
/// Error("MalformedInput") on an empty family.
LFuzzyAmbRep family_sup(std::span<const LFuzzyAmbRep> family);

}  // namespace ambrel

#endif  // AMBREL_HYPERENCODING_HPP_
