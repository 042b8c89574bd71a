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

#ifndef AMBREL_HYPERSPACE_HPP_
#define AMBREL_HYPERSPACE_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ambrel {

/// A subset of a FiniteSpace as a bitmask over point indices.
using Mask = std::uint32_t;

/// A family of subsets: bit M is set iff the subset with mask M belongs to
/// the family. Six points give 64 subsets, so one word is enough.
using Family = std::uint64_t;

inline constexpr std::size_t kMaxPoints = 6;

/**
 * A finite discrete universe with distinct labels. Point i is bit i of a
 * Mask. At most kMaxPoints points.
 */
class FiniteSpace {
 public:
  /// Throws Error("MalformedInput") on empty or duplicate labels and
  /// Error("SpaceTooLarge") above kMaxPoints.
  explicit FiniteSpace(std::vector<std::string> labels);

  /// Points prefix1 ... prefixN.
  static FiniteSpace numbered(std::size_t n, std::string_view prefix = "x");

  std::size_t size() const noexcept { return labels_.size(); }
  Mask full() const noexcept { return (Mask{1} << labels_.size()) - 1; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  /// Labels of the points in `m`, in point order.
  std::vector<std::string> subset_labels(Mask m) const;
  /// Throws Error("MalformedInput") on unknown or repeated labels.
  Mask subset_of_labels(const std::vector<std::string>& labels) const;

  friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;

 private:
  std::vector<std::string> labels_;
};

namespace fam {

constexpr Family bit(Mask m) { return Family{1} << m; }
constexpr bool has(Family f, Mask m) { return (f >> m) & 1U; }
constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

/// Every subset of an n-point space, the empty one included.
constexpr Family all_subsets(std::size_t n) {
  return n >= 6 ? ~Family{0} : (Family{1} << (std::size_t{1} << n)) - 1;
}
/// exp X: every nonempty subset.
constexpr Family hyperspace(std::size_t n) { return all_subsets(n) & ~Family{1}; }

/// All submasks of m (including 0 and m) as a family.
Family subsets_of(Mask m);
/// All supermasks of m inside an n-point space.
Family supersets_of(Mask m, std::size_t n);

inline std::size_t count(Family f) { return static_cast<std::size_t>(std::popcount(f)); }

/// Members in increasing mask order.
std::vector<Mask> members(Family f);

}  // namespace fam

/// 𝒜^⊥: every nonempty B meeting all members of `f`. Vacuously all of exp X
/// when `f` is empty.
Family traversal(std::size_t n, Family f);

/// {A' : A ⊆ A' for some A in f}.
Family upward_closure(std::size_t n, Family f);

/// Nonempty, free of the empty set, and closed under supersets.
bool is_inclusion_hyperspace(std::size_t n, Family f);

/// Inclusion-minimal members, in increasing mask order.
std::vector<Mask> minimal_elements(Family f);

/**
 * An element of G X. Stored as the full upward-closed family; the minimal
 * antichain is derived on request.
 */
class InclusionHyperspace {
 public:
  static std::optional<InclusionHyperspace> from_family(std::size_t n, Family f);
  /// Upward closure of a nonempty list of nonempty masks.
  static std::optional<InclusionHyperspace> generated_by(std::size_t n, const std::vector<Mask>& generators);

  std::size_t points() const noexcept { return n_; }
  Family family() const noexcept { return family_; }
  std::vector<Mask> minimal() const { return minimal_elements(family_); }
  bool contains(Mask m) const { return fam::has(family_, m); }

  friend bool operator==(const InclusionHyperspace&, const InclusionHyperspace&) = default;

 private:
  InclusionHyperspace(std::size_t n, Family f) : n_(n), family_(f) {}

  std::size_t n_;
  Family family_;
};

/// All inclusion hyperspaces over an n-point space (n <= 4), in increasing
/// family order. Throws Error("SpaceTooLarge") for larger n.
std::vector<Family> all_inclusion_hyperspaces(std::size_t n);

}  // namespace ambrel

#endif  // AMBREL_HYPERSPACE_HPP_
