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

#ifndef AMBREL_FUZZY_HPP_
#define AMBREL_FUZZY_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "ambrel/crisp.hpp"
#include "ambrel/lattice.hpp"

namespace ambrel {

/// (A, B, α) with α ∈ L.
using Triple = std::tuple<Mask, Mask, Elem>;

/**
 * An L-ambiguous representation between finite spaces, as its grade
 * function v(A, B) ∈ L: antitone in A, isotone in B, v(A, Y) = 1. The
 * subgraph {(A, B, α) : α ≤ v(A, B)} and the cut family are derived views.
 *
 * Grades are dense, indexed a * 2^|Y| + b; entries with an empty side are
 * kept at bottom.
 */
class LFuzzyAmbRep {
 public:
  const FiniteSpace& source() const noexcept { return source_; }
  const FiniteSpace& target() const noexcept { return target_; }
  const FiniteLattice& lattice() const noexcept { return *lattice_; }
  const LatticePtr& lattice_ptr() const noexcept { return lattice_; }

  Elem grade(Mask a, Mask b) const { return grades_.at(index(a, b)); }
  const std::vector<Elem>& grades() const noexcept { return grades_; }

  /// Subgraph, sorted.
  std::vector<Triple> subgraph() const;

  friend bool operator==(const LFuzzyAmbRep& p, const LFuzzyAmbRep& q) {
    return p.source_ == q.source_ && p.target_ == q.target_ && *p.lattice_ == *q.lattice_ &&
           p.grades_ == q.grades_;
  }

 private:
  friend struct FuzzyAccess;
  LFuzzyAmbRep(FiniteSpace x, FiniteSpace y, LatticePtr l, std::vector<Elem> g)
      : source_(std::move(x)), target_(std::move(y)), lattice_(std::move(l)), grades_(std::move(g)) {}

  std::size_t index(Mask a, Mask b) const { return (std::size_t{a} << target_.size()) + b; }

  FiniteSpace source_;
  FiniteSpace target_;
  LatticePtr lattice_;
  std::vector<Elem> grades_;
};

struct FuzzyLimits {
  std::size_t max_points = 4;
};

/// Dense grade-table validation. Violation codes: NotAntitoneInA,
/// NotIsotoneInB, FullTargetNotTop. Throws Error("SpaceTooLarge") past the
/// limits and Error("MalformedInput") on a wrongly sized table.
Checked<LFuzzyAmbRep> validate_fuzzy(const FiniteSpace& x, const FiniteSpace& y, LatticePtr lattice,
                                     std::vector<Elem> grades, const FuzzyLimits& limits = {});

/// Subgraph validation: floor exp X × exp Y × {0} present (MissingFloor),
/// down-closed in the grade (NotDownSetInAlpha), closed under joins of
/// grades (NotJoinClosed), then the recovered grade function is validated.
Checked<LFuzzyAmbRep> fuzzy_from_subgraph(const FiniteSpace& x, const FiniteSpace& y, LatticePtr lattice,
                                          const std::vector<Triple>& triples);

/// {(A, B) : v(A, B) ≥ α}.
CrispAmbRep alpha_cut(const LFuzzyAmbRep& r, Elem alpha);
/// alpha_cut for every element, indexed by element.
std::vector<CrispAmbRep> cuts(const LFuzzyAmbRep& r);

/// Rebuilds v(A, B) = sup{α : (A, B) ∈ cut_α} and checks that it
/// reproduces every cut. Violation code: CutFamilyInconsistent.
Checked<LFuzzyAmbRep> from_cuts(const FiniteSpace& x, const FiniteSpace& y, LatticePtr lattice,
                                const std::vector<CrispAmbRep>& family);

/// v(A, C) = sup_B v_R(A, B) * v_S(B, C). Throws Error("SpaceMismatch")
/// or Error("LatticeMismatch").
LFuzzyAmbRep compose(const LFuzzyAmbRep& r, const LFuzzyAmbRep& s, const TNorm& tnorm);
/// Composition with the lattice meet.
LFuzzyAmbRep compose(const LFuzzyAmbRep& r, const LFuzzyAmbRep& s);

/// Cutwise pseudo-inverse: cut α of R^⊥ is ⋂ over β ≪ α of sms(R_β); the
/// grade-0 cut is the full relation. Reassembled with from_cuts().
LFuzzyAmbRep sms(const LFuzzyAmbRep& r);

/// Pointwise join and meet. Throw on mismatched spaces or lattices.
LFuzzyAmbRep join(const LFuzzyAmbRep& r, const LFuzzyAmbRep& s);
LFuzzyAmbRep meet(const LFuzzyAmbRep& r, const LFuzzyAmbRep& s);
/// Pointwise sup / inf of a family; the empty family gives bottom / top.
LFuzzyAmbRep sup_family(const FiniteSpace& x, const FiniteSpace& y, LatticePtr lattice,
                        std::span<const LFuzzyAmbRep> family);
LFuzzyAmbRep inf_family(const FiniteSpace& x, const FiniteSpace& y, LatticePtr lattice,
                        std::span<const LFuzzyAmbRep> family);

/// v(A, B) = 1 iff A ⊆ B, else 0.
LFuzzyAmbRep identity_fuzzy(const FiniteSpace& x, LatticePtr lattice);
/// v ≡ 1.
LFuzzyAmbRep top_fuzzy(const FiniteSpace& x, const FiniteSpace& y, LatticePtr lattice);
/// v(A, B) = 1 iff B = Y, else 0.
LFuzzyAmbRep bottom_fuzzy(const FiniteSpace& x, const FiniteSpace& y, LatticePtr lattice);

/// R_L: v(A, B) = 1 if (A, B) ∈ R else 0.
LFuzzyAmbRep embed_crisp(const CrispAmbRep& r, LatticePtr lattice);

/// v(X, B) = 0 for every B ≠ Y. On finite spaces this is exactly when
/// sms(sms(R)) == R.
bool has_trivial_full_row(const LFuzzyAmbRep& r);
/// sms(sms(R)) == R.
bool is_pseudo_invertible(const LFuzzyAmbRep& r);

/// First (A, B, α, β) such that the subgraph union of r and s holds
/// (A, B, α) and (A, B, β) but not (A, B, α ∨ β), if any.
struct JoinGap {
  Mask a;
  Mask b;
  Elem alpha;
  Elem beta;
};
std::optional<JoinGap> subgraph_union_gap(const LFuzzyAmbRep& r, const LFuzzyAmbRep& s);

struct UnionCounterexample {
  LFuzzyAmbRep r;
  LFuzzyAmbRep s;
  JoinGap gap;
};

/// Two representations built from bottom plus graded pairs through a common
/// source point x, with incomparable grades α, β, whose subgraph union is
/// not join-closed. Throws Error("LatticeIsChain") when L has no
/// incomparable pair and Error("TargetTooSmall") when |Y| < 2.
UnionCounterexample union_counterexample(const FiniteSpace& x, const FiniteSpace& y, LatticePtr lattice);

struct FuzzyAccess {
  static LFuzzyAmbRep make(FiniteSpace x, FiniteSpace y, LatticePtr l, std::vector<Elem> g) {
    return LFuzzyAmbRep(std::move(x), std::move(y), std::move(l), std::move(g));
  }
};

}  // namespace ambrel

#endif  // AMBREL_FUZZY_HPP_
