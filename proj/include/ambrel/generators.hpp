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

#ifndef AMBREL_GENERATORS_HPP_
#define AMBREL_GENERATORS_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "ambrel/capacity.hpp"
#include "ambrel/crisp.hpp"
#include "ambrel/fuzzy.hpp"

namespace ambrel {

/**
 * Seeded source of randomness. The engine is mt19937_64, whose output
 * sequence is fixed by the standard; the conversions below are done by hand
 * so results do not depend on the standard library's distributions.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// Uniform in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  bool chance(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

/// A finite metric space given by its distance matrix.
class MetricTable {
 public:
  const FiniteSpace& points() const noexcept { return points_; }
  double distance(std::size_t i, std::size_t j) const { return d_.at(i).at(j); }
  double diameter() const noexcept { return diameter_; }

 private:
  friend Checked<MetricTable> validate_metric(FiniteSpace, std::vector<std::vector<double>>);
  MetricTable(FiniteSpace p, std::vector<std::vector<double>> d, double diam)
      : points_(std::move(p)), d_(std::move(d)), diameter_(diam) {}

  FiniteSpace points_;
  std::vector<std::vector<double>> d_;
  double diameter_;
};

/// Violation codes: NotZeroOnDiagonal, NotSymmetric, NotPositive,
/// TriangleViolated. Throws Error("MalformedInput") on a ragged matrix.
Checked<MetricTable> validate_metric(FiniteSpace points, std::vector<std::vector<double>> d);

/// v(A, B) = 1 - max_{a ∈ A} d(a, B) / diam, rounded down to the chain
/// levels 0, 1/(n-1), ..., 1. X = Y = the metric's points. Throws
/// Error("NotAChain").
LFuzzyAmbRep metric_rep(const MetricTable& m, LatticePtr chain);

/**
 * A width × height grid of cells (the target Y) with a sub-window
 * (the source X) at a column/row offset. Cells are labelled "col:row" in
 * grid coordinates.
 */
struct GridWindow {
  std::size_t width = 1;
  std::size_t height = 1;
  std::size_t x_col = 0;
  std::size_t x_row = 0;
  std::size_t x_width = 1;
  std::size_t x_height = 1;
};

/// Throws Error("BadWindow") on empty dimensions, a window sticking out of
/// the grid, or more than six cells.
void check_window(const GridWindow& g);
FiniteSpace grid_target(const GridWindow& g);
FiniteSpace grid_source(const GridWindow& g);

/// v(A, B) = r - min{‖m‖∞ : A + m ⊆ B} on a chain with levels 0..r,
/// and 0 when no shift fits within r. Throws Error("BadWindow"),
/// Error("NotAChain").
LFuzzyAmbRep translation_rep(const GridWindow& g, LatticePtr chain);

/// (A, B) related iff the columns of A are among the columns of B.
CrispAmbRep projection_rep(const GridWindow& g);
/// Column set of a cell subset of `space` (labels "col:row").
Mask grid_columns(const FiniteSpace& space, Mask cells);

struct RandomOptions {
  double density = 0.3;
  /// Force X·R = {Y} (grade 0 off Y for fuzzy), which makes the result
  /// pseudo-invertible.
  bool pseudo_invertible = false;
};

/// from_seed over a random seed, each pair kept with probability
/// `density`. Density 0 gives bottom, 1 gives top.
CrispAmbRep random_rep(const FiniteSpace& x, const FiniteSpace& y, Rng& rng, const RandomOptions& opt = {});

/// Random grades repaired to the least valid majorant: a pair is graded
/// with probability `density`, getting top with probability `density` and a
/// uniform nonzero element otherwise; then v(A, Y) = 1, then isotone in B,
/// then antitone in A, both by max-propagation.
LFuzzyAmbRep random_fuzzy_rep(const FiniteSpace& x, const FiniteSpace& y, LatticePtr lattice, Rng& rng,
                              const RandomOptions& opt = {});

/// Random values repaired to a capacity by upward max-propagation.
LCapacity random_capacity(const FiniteSpace& y, LatticePtr lattice, Rng& rng, double density = 0.5);

}  // namespace ambrel

#endif  // AMBREL_GENERATORS_HPP_
