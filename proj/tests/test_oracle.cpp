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

#include "ambrel/generators.hpp"
#include "ambrel/oracle.hpp"
#include "support.hpp"

namespace ambrel {
namespace {

using testing::chain3;
using testing::square;

TEST(SmsOracle, AgreesOnEveryEnumeratedRep) {
  for (std::size_t nx = 1; nx <= 3; ++nx) {
    for (std::size_t ny = 1; ny <= 3; ++ny) {
      if (nx * ny > 6) continue;
      const auto x = FiniteSpace::numbered(nx);
      const auto y = FiniteSpace::numbered(ny, "y");
      for (const auto& r : enumerate_reps(x, y)) ASSERT_EQ(sms(r), oracle::sms_definitional(r));
    }
  }
}

TEST(SmsOracle, AgreesOnRandomThreeByThree) {
  const auto x = FiniteSpace::numbered(3);
  const auto y = FiniteSpace::numbered(3, "y");
  Rng rng(61);
  for (int i = 0; i < 1000; ++i) {
    const auto r = random_rep(x, y, rng, {.density = rng.uniform()});
    ASSERT_EQ(sms(r), oracle::sms_definitional(r));
  }
}

TEST(ComposeOracle, AgreesForBothTNorms) {
  const auto x = FiniteSpace::numbered(2);
  const auto y = FiniteSpace::numbered(3, "y");
  const auto z = FiniteSpace::numbered(2, "z");
  Rng rng(67);
  for (const auto& l : {chain3(), square()}) {
    std::vector<TNorm> ts{TNorm::meet_of(l)};
    if (l->is_chain()) ts.push_back(lukasiewicz_tnorm(l));
    for (const auto& t : ts) {
      for (int i = 0; i < 100; ++i) {
        const auto r = random_fuzzy_rep(x, y, l, rng, {.density = rng.uniform()});
        const auto s = random_fuzzy_rep(y, z, l, rng, {.density = rng.uniform()});
        ASSERT_EQ(compose(r, s, t), oracle::compose_subgraph(r, s, t));
      }
    }
  }
}

TEST(WayBelowOracle, FiniteLatticesAreAlgebraic) {
  std::vector<LatticePtr> ls{square()};
  for (std::size_t n = 1; n <= 6; ++n) ls.push_back(share(chain_lattice(n)));
  for (const auto& l : ls) {
    for (Elem a = 0; a < l->size(); ++a) {
      for (Elem b = 0; b < l->size(); ++b) EXPECT_EQ(oracle::way_below_definitional(*l, a, b), l->leq(a, b));
    }
  }
  EXPECT_THROW(oracle::way_below_definitional(chain_lattice(7), 0, 1), Error);
}

TEST(DoubleTraversalOracle, UpClosureForNonemptyFamilies) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (Family f : testing::all_families(n)) {
      const Family dd = oracle::double_traversal_oracle(n, f);
      EXPECT_EQ(dd, traversal(n, traversal(n, f)));
      if (f != 0) EXPECT_EQ(dd, upward_closure(n, f));
    }
  }
}

TEST(SupOracle, SizeGate) {
  TernaryHyperRelation t(FiniteSpace::numbered(2), FiniteSpace::numbered(2, "y"), chain3());
  for (HyperFamily f = 1; f <= 7; ++f) {
    for (Mask b = 1; b <= 2; ++b) t.insert(f, b, 0);
  }
  ASSERT_GT(t.size(), 12U);
  EXPECT_THROW(oracle::sup_saturate_by_subsets(t), Error);
}

}  // namespace
}  // namespace ambrel
