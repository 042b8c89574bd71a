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

#ifndef AMBREL_ORACLE_HPP_
#define AMBREL_ORACLE_HPP_

#include "ambrel/crisp.hpp"
#include "ambrel/fuzzy.hpp"
#include "ambrel/hyperencoding.hpp"
#include "ambrel/lattice.hpp"

// Slow, literal transcriptions of the definitions. They avoid the
// production formulas (traversal, row unions, the ≤ shortcut) so that
// agreement with the fast paths means something.
namespace ambrel::oracle {

/// (B̃, Ã) ∈ R^⊥ iff for every A disjoint from Ã some B ∈ AR misses B̃.
CrispAmbRep sms_definitional(const CrispAmbRep& r);

/// Subgraph form: (A, C, α) ∈ R ⊚ S iff α ≤ sup{β * γ : (A, B, β) ∈ R,
/// (B, C, γ) ∈ S}, built as a triple set and read back.
LFuzzyAmbRep compose_subgraph(const LFuzzyAmbRep& r, const LFuzzyAmbRep& s, const TNorm& tnorm);

/// a ≪ b iff every directed D ⊆ L with b ≤ sup D has some d ≥ a. Directed
/// subsets are enumerated, so |L| <= 6 (Error("LatticeTooLarge")).
bool way_below_definitional(const FiniteLattice& l, Elem a, Elem b);

/// (F^⊥)^⊥ by nested quantifiers over all subsets of an n-point space.
Family double_traversal_oracle(std::size_t n, Family f);

/// T^sup by folding every nonempty subfamily of T; |T| <= 12
/// (Error("TooManyTriples")).
TernaryHyperRelation sup_saturate_by_subsets(const TernaryHyperRelation& t);

}  // namespace ambrel::oracle

#endif  // AMBREL_ORACLE_HPP_
