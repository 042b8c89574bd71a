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

#include "ambrel/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

namespace ambrel {

namespace {

// Relative slack for comparisons of sums of user-supplied doubles.
constexpr double kSlack = 1e-9;

void require_chain(const FiniteLattice& l) {
  if (!l.is_chain()) throw Error("NotAChain", "graded examples need a linearly ordered lattice");
}

struct Cell {
  long col;
  long row;
};

std::vector<Cell> cells_of(const FiniteSpace& s) {
  std::vector<Cell> out;
  for (const auto& label : s.labels()) {
    const auto colon = label.find(':');
    out.push_back({std::stol(label.substr(0, colon)), std::stol(label.substr(colon + 1))});
  }
  return out;
}

}  // namespace

Checked<MetricTable> validate_metric(FiniteSpace points, std::vector<std::vector<double>> d) {
  const std::size_t n = points.size();
  if (d.size() != n || std::any_of(d.begin(), d.end(), [n](const auto& row) { return row.size() != n; })) {
    throw Error("MalformedInput", "distance matrix must be square over the points");
  }
  double diam = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) diam = std::max(diam, d[i][j]);
  }
  const double tol = kSlack * std::max(diam, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i][i] != 0) {
      return Violation{"NotZeroOnDiagonal", "d(x, x) must be 0", {{"x", points.label(i)}}};
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (d[i][j] != d[j][i]) {
        return Violation{"NotSymmetric", "d(x, y) != d(y, x)", {{"x", points.label(i)}, {"y", points.label(j)}}};
      }
      if (i != j && !(d[i][j] > 0)) {
        return Violation{"NotPositive", "distinct points need a positive distance",
                         {{"x", points.label(i)}, {"y", points.label(j)}}};
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (d[i][k] > d[i][j] + d[j][k] + tol) {
          return Violation{"TriangleViolated", "d(x, z) > d(x, y) + d(y, z)",
                           {{"x", points.label(i)}, {"y", points.label(j)}, {"z", points.label(k)}}};
        }
      }
    }
  }
  if (n == 1) diam = 1;  // a single point: every grade is 1 anyway
  return MetricTable(std::move(points), std::move(d), diam);
}

LFuzzyAmbRep metric_rep(const MetricTable& m, LatticePtr chain) {
  const FiniteLattice& l = *chain;
  require_chain(l);
  const FiniteSpace& x = m.points();
  const std::size_t top_level = l.size() - 1;
  const double diam = m.diameter();
  std::vector<Elem> grades(std::size_t{1} << (2 * x.size()), 0);
  for (Mask a = 1; a <= x.full(); ++a) {
    for (Mask b = 1; b <= x.full(); ++b) {
      double worst = 0;  // max over a of d(a, B)
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (!((a >> i) & 1U)) continue;
        double nearest = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < x.size(); ++j) {
          if ((b >> j) & 1U) nearest = std::min(nearest, m.distance(i, j));
        }
        worst = std::max(worst, nearest);
      }
      // largest k with k / top_level <= 1 - worst / diam
      std::size_t k = 0;
      const double room = static_cast<double>(top_level) * (diam - worst);
      while (k < top_level && static_cast<double>(k + 1) * diam <= room + kSlack * diam) ++k;
      grades[(std::size_t{a} << x.size()) + b] = chain_element(l, k);
    }
  }
  return validate_fuzzy(x, x, std::move(chain), std::move(grades), {.max_points = kMaxPoints}).value();
}

void check_window(const GridWindow& g) {
  if (g.width == 0 || g.height == 0 || g.x_width == 0 || g.x_height == 0) {
    throw Error("BadWindow", "grid and window need positive dimensions");
  }
  if (g.x_col + g.x_width > g.width || g.x_row + g.x_height > g.height) {
    throw Error("BadWindow", "the source window must lie inside the grid");
  }
  if (g.width * g.height > kMaxPoints) throw Error("BadWindow", "grid has more than six cells");
}

namespace {

FiniteSpace window_space(std::size_t col0, std::size_t row0, std::size_t w, std::size_t h) {
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) labels.push_back(std::to_string(col0 + c) + ":" + std::to_string(row0 + r));
  }
  return FiniteSpace(std::move(labels));
}

}  // namespace

FiniteSpace grid_target(const GridWindow& g) {
  check_window(g);
  return window_space(0, 0, g.width, g.height);
}

FiniteSpace grid_source(const GridWindow& g) {
  check_window(g);
  return window_space(g.x_col, g.x_row, g.x_width, g.x_height);
}

LFuzzyAmbRep translation_rep(const GridWindow& g, LatticePtr chain) {
  const FiniteLattice& l = *chain;
  require_chain(l);
  const FiniteSpace x = grid_source(g);
  const FiniteSpace y = grid_target(g);
  const auto xc = cells_of(x);
  const long r = static_cast<long>(l.size()) - 1;
  const long span = static_cast<long>(std::max(g.width, g.height));

  auto index_in_y = [&](long col, long row) -> std::optional<std::size_t> {
    if (col < 0 || row < 0 || col >= static_cast<long>(g.width) || row >= static_cast<long>(g.height)) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(row) * g.width + static_cast<std::size_t>(col);
  };

  std::vector<Elem> grades(std::size_t{1} << (x.size() + y.size()), 0);
  for (Mask a = 1; a <= x.full(); ++a) {
    for (Mask b = 1; b <= y.full(); ++b) {
      long best = -1;  // smallest Chebyshev norm of a fitting shift
      for (long dc = -span; dc <= span; ++dc) {
        for (long dr = -span; dr <= span; ++dr) {
          bool fits = true;
          for (std::size_t i = 0; i < x.size() && fits; ++i) {
            if (!((a >> i) & 1U)) continue;
            const auto j = index_in_y(xc[i].col + dc, xc[i].row + dr);
            fits = j && ((b >> *j) & 1U);
          }
          const long norm = std::max(std::labs(dc), std::labs(dr));
          if (fits && (best < 0 || norm < best)) best = norm;
        }
      }
      // no fitting shift: inf ∅ = r
      const long level = best < 0 ? 0 : std::max(0L, r - best);
      grades[(std::size_t{a} << y.size()) + b] = chain_element(l, static_cast<std::size_t>(level));
    }
  }
  return validate_fuzzy(x, y, std::move(chain), std::move(grades), {.max_points = kMaxPoints}).value();
}

Mask grid_columns(const FiniteSpace& space, Mask cells) {
  const auto cs = cells_of(space);
  Mask out = 0;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if ((cells >> i) & 1U) out |= Mask{1} << cs[i].col;
  }
  return out;
}

CrispAmbRep projection_rep(const GridWindow& g) {
  const FiniteSpace x = grid_source(g);
  const FiniteSpace y = grid_target(g);
  std::vector<Family> rows(std::size_t{1} << x.size(), 0);
  for (Mask a = 1; a <= x.full(); ++a) {
    const Mask ca = grid_columns(x, a);
    for (Mask b = 1; b <= y.full(); ++b) {
      if (fam::is_subset(ca, grid_columns(y, b))) rows[a] |= fam::bit(b);
    }
  }
  return validate_rep(x, y, std::move(rows)).value();
}

CrispAmbRep random_rep(const FiniteSpace& x, const FiniteSpace& y, Rng& rng, const RandomOptions& opt) {
  std::vector<Pair> seed;
  for (Mask a = 1; a <= x.full(); ++a) {
    for (Mask b = 1; b <= y.full(); ++b) {
      if (rng.chance(opt.density)) seed.emplace_back(a, b);
    }
  }
  CrispAmbRep r = from_seed(x, y, seed);
  if (!opt.pseudo_invertible) return r;
  std::vector<Family> rows = r.rows();
  rows[x.full()] = fam::bit(y.full());
  return validate_rep(x, y, std::move(rows)).value();
}

LFuzzyAmbRep random_fuzzy_rep(const FiniteSpace& x, const FiniteSpace& y, LatticePtr lattice, Rng& rng,
                              const RandomOptions& opt) {
  const FiniteLattice& l = *lattice;
  const std::size_t ny = y.size();
  std::vector<Elem> v(std::size_t{1} << (x.size() + ny), l.bottom());
  auto at = [&](Mask a, Mask b) -> Elem& { return v[(std::size_t{a} << ny) + b]; };

  std::vector<Elem> nonzero;
  for (std::size_t e = 0; e < l.size(); ++e) {
    if (e != l.bottom()) nonzero.push_back(static_cast<Elem>(e));
  }
  for (Mask a = 1; a <= x.full(); ++a) {
    for (Mask b = 1; b <= y.full(); ++b) {
      if (!rng.chance(opt.density) || nonzero.empty()) continue;
      at(a, b) = rng.chance(opt.density) ? l.top() : nonzero[rng.below(nonzero.size())];
    }
  }
  if (opt.pseudo_invertible) {
    for (Mask b = 1; b < y.full(); ++b) at(x.full(), b) = l.bottom();
  }
  for (Mask a = 1; a <= x.full(); ++a) at(a, y.full()) = l.top();
  // isotone in B: increasing masks see their subsets first
  for (Mask a = 1; a <= x.full(); ++a) {
    for (Mask b = 1; b <= y.full(); ++b) {
      for (std::size_t i = 0; i < ny; ++i) {
        const Mask smaller = b & ~(Mask{1} << i);
        if (smaller != b && smaller != 0) at(a, b) = l.join(at(a, b), at(a, smaller));
      }
    }
  }
  // antitone in A: decreasing masks see their supersets first
  for (Mask a = x.full(); a >= 1; --a) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      const Mask bigger = a | (Mask{1} << i);
      if (bigger == a) continue;
      for (Mask b = 1; b <= y.full(); ++b) at(a, b) = l.join(at(a, b), at(bigger, b));
    }
  }
  return validate_fuzzy(x, y, std::move(lattice), std::move(v), {.max_points = kMaxPoints}).value();
}

LCapacity random_capacity(const FiniteSpace& y, LatticePtr lattice, Rng& rng, double density) {
  const FiniteLattice& l = *lattice;
  std::vector<Elem> c(std::size_t{1} << y.size(), l.bottom());
  for (Mask f = 1; f < y.full(); ++f) {
    if (rng.chance(density)) c[f] = static_cast<Elem>(rng.below(l.size()));
  }
  c[y.full()] = l.top();
  for (Mask f = 1; f <= y.full(); ++f) {
    for (std::size_t i = 0; i < y.size(); ++i) {
      const Mask smaller = f & ~(Mask{1} << i);
      if (smaller != f) c[f] = l.join(c[f], c[smaller]);
    }
  }
  return validate_capacity(y, std::move(lattice), std::move(c)).value();
}

}  // namespace ambrel
