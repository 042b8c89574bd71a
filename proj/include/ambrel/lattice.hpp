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

#ifndef AMBREL_LATTICE_HPP_
#define AMBREL_LATTICE_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ambrel/error.hpp"

namespace ambrel {

/// Index of an element of a FiniteLattice.
using Elem = std::uint8_t;

struct LatticeLimits {
  std::size_t max_size = 16;
  bool require_distributive = true;
};

/**
 * A finite bounded lattice given by its full order matrix, with join and
 * meet tables derived at validation time. Instances only come out of
 * validate_lattice() or the builders below, so the lattice axioms (and
 * distributivity, unless explicitly waived) always hold.
 *
 * Immutable; share it through LatticePtr.
 */
class FiniteLattice {
 public:
  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(Elem e) const { return labels_.at(e); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Elem> find(std::string_view label) const;

  bool leq(Elem a, Elem b) const { return leq_[index(a, b)] != 0; }
  Elem join(Elem a, Elem b) const { return join_[index(a, b)]; }
  Elem meet(Elem a, Elem b) const { return meet_[index(a, b)]; }
  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }

  bool is_chain() const noexcept { return chain_; }
  bool is_distributive() const noexcept { return distributive_; }

  /// Full order matrix, row-major, as booleans.
  std::vector<std::vector<bool>> order_matrix() const;

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.labels_ == b.labels_ && a.leq_ == b.leq_;
  }

 private:
  friend Checked<FiniteLattice> validate_lattice(std::vector<std::string>,
                                                 const std::vector<std::vector<bool>>&,
                                                 const LatticeLimits&);

  std::size_t index(Elem a, Elem b) const { return std::size_t{a} * labels_.size() + b; }

  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
  std::vector<Elem> join_;
  std::vector<Elem> meet_;
  Elem bottom_ = 0;
  Elem top_ = 0;
  bool chain_ = false;
  bool distributive_ = false;
};

using LatticePtr = std::shared_ptr<const FiniteLattice>;

inline LatticePtr share(FiniteLattice lattice) {
  return std::make_shared<const FiniteLattice>(std::move(lattice));
}

/// Checks order axioms, bounds, pairwise joins/meets and (by default)
/// distributivity. Violation codes: NotAPartialOrder, NoBottom, NoTop,
/// MissingBound, NotDistributive. Shape problems (empty, ragged matrix,
/// duplicate labels) throw Error("MalformedInput"); oversize inputs throw
/// Error("LatticeTooLarge").
Checked<FiniteLattice> validate_lattice(std::vector<std::string> labels,
                                        const std::vector<std::vector<bool>>& leq,
                                        const LatticeLimits& limits = {});

/// Chain 0 < c1 < ... < 1 with n elements (n >= 1). chain_lattice(3) has
/// labels "0", "m", "1".
FiniteLattice chain_lattice(std::size_t n);

/// {0, a, b, 1} with a, b incomparable.
FiniteLattice boolean_square();

/// Production way-below: on a finite lattice every directed set contains its
/// supremum, so a << b collapses to a <= b. The directed-set definition lives
/// in oracle::way_below_definitional.
bool way_below(const FiniteLattice& lattice, Elem a, Elem b);

/// Least upper bound of a set of elements; the empty join is bottom.
Elem family_join(const FiniteLattice& lattice, std::span<const Elem> elems);
/// Greatest lower bound; the empty meet is top.
Elem family_meet(const FiniteLattice& lattice, std::span<const Elem> elems);

/// A validated t-norm (commutative lattice-ordered semigroup operation) on
/// a lattice: associative, commutative, top-neutral, monotone and
/// distributive over binary joins.
class TNorm {
 public:
  /// The lattice meet, always a valid t-norm.
  static TNorm meet_of(LatticePtr lattice);

  Elem operator()(Elem a, Elem b) const { return table_[std::size_t{a} * lattice_->size() + b]; }
  const FiniteLattice& lattice() const noexcept { return *lattice_; }
  const LatticePtr& lattice_ptr() const noexcept { return lattice_; }
  const std::vector<Elem>& table() const noexcept { return table_; }
  bool is_meet() const;

 private:
  friend Checked<TNorm> validate_tnorm(LatticePtr, std::vector<Elem>);
  TNorm(LatticePtr lattice, std::vector<Elem> table)
      : lattice_(std::move(lattice)), table_(std::move(table)) {}

  LatticePtr lattice_;
  std::vector<Elem> table_;
};

/// `table` is row-major over lattice elements. Violation codes:
/// NotCommutative, NotAssociative, TopNotNeutral, NotMonotone,
/// NotJoinDistributive.
Checked<TNorm> validate_tnorm(LatticePtr lattice, std::vector<Elem> table);

/// Lukasiewicz operation on a chain with levels 0..n-1:
/// i * j = max(0, i + j - (n - 1)). Throws Error("NotAChain").
TNorm lukasiewicz_tnorm(LatticePtr chain);

/// Position of a chain element counted from bottom (number of strictly
/// smaller elements). Throws Error("NotAChain") on non-chains.
std::size_t chain_level(const FiniteLattice& chain, Elem e);
/// Inverse of chain_level.
Elem chain_element(const FiniteLattice& chain, std::size_t level);

}  // namespace ambrel

#endif  // AMBREL_LATTICE_HPP_
