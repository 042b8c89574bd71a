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

#ifndef AMBREL_CRISP_HPP_
#define AMBREL_CRISP_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "ambrel/error.hpp"
#include "ambrel/hyperspace.hpp"

namespace ambrel {

using Pair = std::pair<Mask, Mask>;

/**
 * An ambiguous representation between finite spaces X and Y: for each
 * nonempty A ⊆ X the inclusion hyperspace AR of sets B that A may stand
 * for. Rows are antitone in A and every row contains Y.
 *
 * Stored as one Family per source mask (row 0 unused and kept empty), so
 * equality of representations is plain row equality.
 */
class CrispAmbRep {
 public:
  const FiniteSpace& source() const noexcept { return source_; }
  const FiniteSpace& target() const noexcept { return target_; }

  /// AR. `a` must be a nonempty subset of the source.
  Family row(Mask a) const { return rows_.at(a); }
  const std::vector<Family>& rows() const noexcept { return rows_; }
  bool contains(Mask a, Mask b) const { return fam::has(row(a), b); }

  /// Pair view, sorted by (A, B).
  std::vector<Pair> pairs() const;

  /// R ⊆ S as relations. Throws Error("SpaceMismatch").
  bool subset_of(const CrispAmbRep& other) const;

  friend bool operator==(const CrispAmbRep&, const CrispAmbRep&) = default;

 private:
  friend struct CrispAccess;
  CrispAmbRep(FiniteSpace x, FiniteSpace y, std::vector<Family> rows)
      : source_(std::move(x)), target_(std::move(y)), rows_(std::move(rows)) {}

  FiniteSpace source_;
  FiniteSpace target_;
  std::vector<Family> rows_;
};

/// Row-table validation. `rows` has 2^|X| entries; entry 0 is ignored.
/// Violation codes, checked in this order: MissingFullTarget,
/// NotUpwardClosedInB, NotAntitoneInA. Closedness is vacuous here.
Checked<CrispAmbRep> validate_rep(const FiniteSpace& x, const FiniteSpace& y, std::vector<Family> rows);

/// Pair-set validation. Throws Error("MalformedInput") on empty or
/// out-of-range subsets.
Checked<CrispAmbRep> validate_pairs(const FiniteSpace& x, const FiniteSpace& y, const std::vector<Pair>& pairs);

/// Least representation containing `seed`: adds (A', B') for A' ⊆ A,
/// B' ⊇ B and every (A, Y).
CrispAmbRep from_seed(const FiniteSpace& x, const FiniteSpace& y, const std::vector<Pair>& seed);

/// AR.
Family admissible(const CrispAmbRep& r, Mask a);
/// (AR)^⊥.
Family unavoidable(const CrispAmbRep& r, Mask a);

/// Pseudo-inverse R^⊥ : Y -> X, row B̃ = {A : B̃ ∈ (AR)^⊥}^⊥.
CrispAmbRep sms(const CrispAmbRep& r);

/// Relational composition R ⊚ S. Throws Error("SpaceMismatch").
CrispAmbRep compose(const CrispAmbRep& r, const CrispAmbRep& s);
/// Closed composition. Closure in exp Z is the identity on finite discrete
/// spaces, so this is compose() followed by a no-op hook.
CrispAmbRep compose_closed(const CrispAmbRep& r, const CrispAmbRep& s);

/// {(A, B) : A ⊆ B}.
CrispAmbRep identity_rep(const FiniteSpace& x);
/// exp X × exp Y.
CrispAmbRep top_rep(const FiniteSpace& x, const FiniteSpace& y);
/// exp X × {Y}.
CrispAmbRep bottom_rep(const FiniteSpace& x, const FiniteSpace& y);

/// R ∩ S and R ∪ S. Throw Error("SpaceMismatch").
CrispAmbRep meet(const CrispAmbRep& r, const CrispAmbRep& s);
CrispAmbRep join(const CrispAmbRep& r, const CrispAmbRep& s);

/// R_f with (A, B) related iff f(A) ⊆ B. `f[i]` is the target index of
/// source point i. Throws Error("MalformedInput") on a partial map.
CrispAmbRep mapping_rep(const FiniteSpace& x, const FiniteSpace& y, const std::vector<std::size_t>& f);

/// Partition of a space into disjoint nonempty classes covering it.
using Partition = std::vector<Mask>;

/// Throws Error("MalformedInput") unless `p` partitions an n-point space.
void check_partition(std::size_t n, const Partition& p);
/// Union of the classes meeting A.
Mask upper_approx(const Partition& p, Mask a);
/// Union of the classes contained in A.
Mask lower_approx(const Partition& p, Mask a);
/// Indiscernibility representation: (A, B) related iff upper(A) ⊆ upper(B).
CrispAmbRep rough_rep(const FiniteSpace& x, const Partition& p);

/// Condition e): every fiber RB closed in exp X. Discrete spaces make every
/// family closed, so this always holds.
bool is_strict(const CrispAmbRep& r);
/// Condition f'), searched over closed neighbourhoods G with A ⊆ G ⊆ U and
/// open V_i meeting B. Always satisfiable on discrete spaces (G = A,
/// V_i = singletons of B).
bool satisfies_openness(const CrispAmbRep& r);
/// Strict, pseudo-invertible and with a strict pseudo-inverse.
bool is_open(const CrispAmbRep& r);

/// sms(sms(R)) == R.
bool is_pseudo_invertible(const CrispAmbRep& r);
/// The finite characterisation: X·R == {Y}.
bool has_trivial_full_row(const CrispAmbRep& r);

/// Every valid representation X -> Y, by backtracking over antitone row
/// assignments. Requires |X| <= 3 and |Y| <= 3 (Error("SpaceTooLarge")).
std::vector<CrispAmbRep> enumerate_reps(const FiniteSpace& x, const FiniteSpace& y);

/// Builders used by other modules; callers guarantee validity.
struct CrispAccess {
  static CrispAmbRep make(FiniteSpace x, FiniteSpace y, std::vector<Family> rows) {
    return CrispAmbRep(std::move(x), std::move(y), std::move(rows));
  }
};

}  // namespace ambrel

#endif  // AMBREL_CRISP_HPP_
