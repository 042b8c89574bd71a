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


#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "ambrel/generators.hpp"
#include "ambrel/io.hpp"
#include "support.hpp"

namespace ambrel {
namespace {

using testing::chain3;
using testing::square;

// column of a "col:row" label, parsed here rather than through the library
Mask columns(const FiniteSpace& s, Mask cells) {
  Mask out = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if ((cells >> i) & 1U) out |= Mask{1} << std::stoi(s.label(i).substr(0, s.label(i).find(':')));
  }
  return out;
}

std::vector<GridWindow> small_windows() {
  std::vector<GridWindow> out;
  for (std::size_t w = 1; w <= 2; ++w) {
    for (std::size_t h = 1; h <= 2; ++h) {
      for (std::size_t xw = 1; xw <= w; ++xw) {
        for (std::size_t xh = 1; xh <= h; ++xh) {
          for (std::size_t c = 0; c + xw <= w; ++c) {
            for (std::size_t r = 0; r + xh <= h; ++r) out.push_back({w, h, c, r, xw, xh});
          }
        }
      }
    }
  }
  return out;
}

MetricTable line3() {
  // points on a line at 0, 1, 3
  return validate_metric(FiniteSpace::numbered(3, "p"), {{0, 1, 3}, {1, 0, 2}, {3, 2, 0}}).value();
}

TEST(Metric, Validation) {
  const auto p = FiniteSpace::numbered(2, "p");
  EXPECT_EQ(validate_metric(p, {{1, 1}, {1, 0}}).violation().code, "NotZeroOnDiagonal");
  EXPECT_EQ(validate_metric(p, {{0, 1}, {2, 0}}).violation().code, "NotSymmetric");
  EXPECT_EQ(validate_metric(p, {{0, 0}, {0, 0}}).violation().code, "NotPositive");
  EXPECT_EQ(validate_metric(FiniteSpace::numbered(3, "p"), {{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}).violation().code,
            "TriangleViolated");
  EXPECT_THROW(validate_metric(p, {{0, 1}}), Error);
  const auto m = line3();
  EXPECT_EQ(m.diameter(), 3);
}

TEST(Metric, Examples) {
  const auto l = share(chain_lattice(4));  // levels 0, 1/3, 2/3, 1
  const auto r = metric_rep(line3(), l);
  for (Mask a = 1; a <= 7; ++a) {
    for (Mask b = 1; b <= 7; ++b) {
      if ((a & ~b) == 0) EXPECT_EQ(r.grade(a, b), l->top());
    }
  }
  EXPECT_EQ(r.grade(0b001, 0b100), l->bottom());  // distance = diam
  // d(p1, {p2}) = 1, so 1 - 1/3 = 2/3 lands on c2
  EXPECT_EQ(r.lattice().label(r.grade(0b001, 0b010)), "c2");
  // d(p3, {p2}) = 2: 1/3 is c1
  EXPECT_EQ(r.lattice().label(r.grade(0b100, 0b010)), "c1");
  // max over A: {p1, p3} to {p2} is 2
  EXPECT_EQ(r.lattice().label(r.grade(0b101, 0b010)), "c1");
  EXPECT_THROW(metric_rep(line3(), square()), Error);
}

TEST(Metric, FloorQuantisation) {
  const auto l = chain3();
  const auto r = metric_rep(line3(), l);
  for (Mask a = 1; a <= 7; ++a) {
    for (Mask b = 1; b <= 7; ++b) {
      double worst = 0;
      const double pos[3] = {0, 1, 3};
      for (int i = 0; i < 3; ++i) {
        if (!((a >> i) & 1U)) continue;
        double best = 1e9;
        for (int j = 0; j < 3; ++j) {
          if ((b >> j) & 1U) best = std::min(best, std::fabs(pos[i] - pos[j]));
        }
        worst = std::max(worst, best);
      }
      const auto level = static_cast<std::size_t>(std::floor(2 * (1 - worst / 3) + 1e-9));
      EXPECT_EQ(chain_level(*l, r.grade(a, b)), level);
    }
  }
}

TEST(Metric, RelabelInvariance) {
  // same line with the points listed in reverse
  const auto rev = validate_metric(FiniteSpace::numbered(3, "p"), {{0, 2, 3}, {2, 0, 1}, {3, 1, 0}}).value();
  const auto l = share(chain_lattice(4));
  const auto r = metric_rep(line3(), l);
  const auto s = metric_rep(rev, l);
  auto flip = [](Mask m) { return static_cast<Mask>(((m & 1U) << 2) | (m & 2U) | ((m >> 2) & 1U)); };
  for (Mask a = 1; a <= 7; ++a) {
    for (Mask b = 1; b <= 7; ++b) EXPECT_EQ(r.grade(a, b), s.grade(flip(a), flip(b)));
  }
}

TEST(Translation, Examples) {
  const auto l = chain3();  // r = 2
  // 3x1 strip, X = the middle cell
  const GridWindow g{3, 1, 1, 0, 1, 1};
  const auto t = translation_rep(g, l);
  const auto y = grid_target(g);
  EXPECT_EQ(y.labels(), (std::vector<std::string>{"0:0", "1:0", "2:0"}));
  EXPECT_EQ(grid_source(g).labels(), (std::vector<std::string>{"1:0"}));
  EXPECT_EQ(t.grade(1, 0b010), l->top());
  EXPECT_EQ(t.grade(1, 0b011), l->top());
  EXPECT_EQ(chain_level(*l, t.grade(1, 0b001)), 1U);
  EXPECT_EQ(chain_level(*l, t.grade(1, 0b100)), 1U);
  EXPECT_EQ(chain_level(*l, t.grade(1, 0b101)), 1U);

  // 2-cell source fits nowhere in a single cell
  const GridWindow wide{3, 1, 0, 0, 2, 1};
  const auto w = translation_rep(wide, l);
  EXPECT_EQ(w.grade(0b11, 0b001), l->bottom());
  EXPECT_EQ(w.grade(0b11, 0b110), chain_element(*l, 1));
  EXPECT_EQ(w.grade(0b11, 0b111), l->top());
}

TEST(Translation, RelabelInvariance) {
  // the mirrored window carries the same grades under the mirror map
  const auto l = share(chain_lattice(4));
  const auto left = translation_rep({3, 1, 0, 0, 1, 1}, l);
  const auto right = translation_rep({3, 1, 2, 0, 1, 1}, l);
  auto mirror = [](Mask m) { return static_cast<Mask>(((m & 1U) << 2) | (m & 2U) | ((m >> 2) & 1U)); };
  for (Mask b = 1; b <= 7; ++b) EXPECT_EQ(left.grade(1, b), right.grade(1, mirror(b)));
}

TEST(Grid, BadWindows) {
  EXPECT_THROW(check_window({0, 1, 0, 0, 1, 1}), Error);
  EXPECT_THROW(check_window({2, 2, 1, 1, 2, 1}), Error);
  EXPECT_THROW(check_window({4, 2, 0, 0, 1, 1}), Error);
  try {
    translation_rep({2, 1, 0, 0, 3, 1}, chain3());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "BadWindow");
  }
  EXPECT_THROW(translation_rep({2, 1, 0, 0, 1, 1}, square()), Error);
}

TEST(Projection, ColumnsAndShade) {
  for (const auto& g : small_windows()) {
    const auto r = projection_rep(g);
    const auto& x = r.source();
    const auto& y = r.target();
    EXPECT_TRUE(validate_rep(x, y, r.rows()).ok());
    for (Mask a = 1; a <= x.full(); ++a) {
      EXPECT_EQ(grid_columns(x, a), columns(x, a));
      for (Mask b = 1; b <= y.full(); ++b) EXPECT_EQ(r.contains(a, b), (columns(x, a) & ~columns(y, b)) == 0);
    }
    const auto s = sms(r);
    for (Mask bb = 1; bb <= y.full(); ++bb) {
      for (Mask aa = 1; aa <= x.full(); ++aa) {
        const bool shade = (columns(x, x.full() & ~aa) & ~columns(y, y.full() & ~bb)) == 0;
        EXPECT_EQ(s.contains(bb, aa), shade) << "grid " << g.width << "x" << g.height;
      }
    }
  }
  // one column: everything related
  const auto one = projection_rep({1, 2, 0, 0, 1, 2});
  EXPECT_EQ(one, top_rep(one.source(), one.target()));
}

TEST(Random, DensityExtremes) {
  const auto x = FiniteSpace::numbered(3);
  const auto y = FiniteSpace::numbered(2, "y");
  Rng rng(7);
  EXPECT_EQ(random_rep(x, y, rng, {.density = 0}), bottom_rep(x, y));
  EXPECT_EQ(random_rep(x, y, rng, {.density = 1}), top_rep(x, y));
  for (const auto& l : {chain3(), square()}) {
    EXPECT_EQ(random_fuzzy_rep(x, y, l, rng, {.density = 0}), bottom_fuzzy(x, y, l));
    EXPECT_EQ(random_fuzzy_rep(x, y, l, rng, {.density = 1}), top_fuzzy(x, y, l));
    EXPECT_EQ(random_capacity(y, l, rng, 0), minimal_capacity(y, l));
  }
}

TEST(Random, ValidAndDeterministic) {
  const auto x = FiniteSpace::numbered(3);
  const auto y = FiniteSpace::numbered(3, "y");
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 50; ++i) {
    const RandomOptions opt{.density = 0.1 * (i % 10), .pseudo_invertible = i % 2 == 0};
    const auto p = random_rep(x, y, a, opt);
    const auto q = random_rep(x, y, b, opt);
    EXPECT_EQ(io::to_json(p).dump(), io::to_json(q).dump());
    EXPECT_TRUE(validate_rep(x, y, p.rows()).ok());
    if (opt.pseudo_invertible) EXPECT_EQ(sms(sms(p)), p);
    const auto f = random_fuzzy_rep(x, y, square(), a, opt);
    const auto g = random_fuzzy_rep(x, y, square(), b, opt);
    EXPECT_EQ(io::to_json(f).dump(), io::to_json(g).dump());
    EXPECT_TRUE(validate_fuzzy(x, y, square(), f.grades()).ok());
    if (opt.pseudo_invertible) EXPECT_EQ(sms(sms(f)), f);
    const auto c = random_capacity(y, chain3(), a, opt.density);
    EXPECT_EQ(c, random_capacity(y, chain3(), b, opt.density));
  }
}

}  // namespace
}  // namespace ambrel
