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

#include <algorithm>
#include <numeric>
#include <set>

#include "ambrel/fuzzy.hpp"
#include "ambrel/generators.hpp"
#include "support.hpp"

namespace ambrel {
namespace {

using testing::chain3;
using testing::el;
using testing::fuzzy_where;
using testing::square;

const FiniteSpace X2 = FiniteSpace::numbered(2, "x");
const FiniteSpace Y2 = FiniteSpace::numbered(2, "y");
const FiniteSpace Z2 = FiniteSpace::numbered(2, "z");

std::vector<LFuzzyAmbRep> draw(const FiniteSpace& x, const FiniteSpace& y, const LatticePtr& l, std::size_t n,
                                 std::uint64_t seed, bool pi = false) {
  Rng rng(seed);
  std::vector<LFuzzyAmbRep> out;
  for (std::size_t i = 0; i < n; ++i) {
    RandomOptions opt;
    opt.density = rng.uniform();
    opt.pseudo_invertible = pi;
    out.push_back(random_fuzzy_rep(x, y, l, rng, opt));
  }
  return out;
}

bool revalidates(const LFuzzyAmbRep& r) {
  return validate_fuzzy(r.source(), r.target(), r.lattice_ptr(), r.grades(), {.max_points = kMaxPoints}).ok();
}

TEST(FuzzyValidate, Bounds) {
  for (const auto& l : {chain3(), square()}) {
    auto top = fuzzy_where(X2, Y2, l, [&](Mask, Mask) { return l->top(); });
    ASSERT_TRUE(top.ok());
    EXPECT_EQ(top.value(), top_fuzzy(X2, Y2, l));
    auto bot = fuzzy_where(X2, Y2, l, [&](Mask, Mask b) { return b == Y2.full() ? l->top() : l->bottom(); });
    ASSERT_TRUE(bot.ok());
    EXPECT_EQ(bot.value(), bottom_fuzzy(X2, Y2, l));
    EXPECT_TRUE(revalidates(identity_fuzzy(X2, l)));
  }
}

TEST(FuzzyValidate, Violations) {
  const auto l = chain3();
  const Elem m = el(l, "m");
  auto not_top = fuzzy_where(X2, Y2, l, [&](Mask, Mask b) { return b == Y2.full() ? m : l->bottom(); });
  EXPECT_EQ(not_top.violation().code, "FullTargetNotTop");
  auto not_iso = fuzzy_where(X2, Y2, l, [&](Mask, Mask b) { return b == 0b01 ? m : b == 0b11 ? l->top() : l->bottom(); });
  EXPECT_TRUE(not_iso.ok());
  auto bad_iso = fuzzy_where(X2, FiniteSpace::numbered(3, "y"), l,
                             [&](Mask, Mask b) { return b == 0b001 ? m : b == 0b111 ? l->top() : l->bottom(); });
  EXPECT_EQ(bad_iso.violation().code, "NotIsotoneInB");
  auto bad_anti = fuzzy_where(X2, Y2, l, [&](Mask a, Mask b) {
    return b == Y2.full() ? l->top() : a == X2.full() ? m : l->bottom();
  });
  EXPECT_EQ(bad_anti.violation().code, "NotAntitoneInA");
  EXPECT_THROW(validate_fuzzy(X2, Y2, l, {0, 1}), Error);
  EXPECT_THROW(validate_fuzzy(FiniteSpace::numbered(5), Y2, l, std::vector<Elem>(std::size_t{1} << 7, 0)), Error);
}

TEST(Cuts, Examples) {
  for (const auto& r : draw(X2, Y2, chain3(), 50, 3)) EXPECT_EQ(alpha_cut(r, 0), top_rep(X2, Y2));
  EXPECT_EQ(alpha_cut(identity_fuzzy(X2, chain3()), el(chain3(), "m")), identity_rep(X2));
  EXPECT_EQ(alpha_cut(bottom_fuzzy(X2, Y2, chain3()), el(chain3(), "1")), bottom_rep(X2, Y2));
}

TEST(Cuts, AntitoneInLevelAndValid) {
  for (const auto& l : {chain3(), square()}) {
    for (const auto& r : draw(FiniteSpace::numbered(3), Y2, l, 100, 5)) {
      for (Elem a = 0; a < l->size(); ++a) {
        const auto ca = alpha_cut(r, a);
        EXPECT_TRUE(validate_rep(ca.source(), ca.target(), ca.rows()).ok());
        for (Elem b = 0; b < l->size(); ++b) {
          if (l->leq(b, a)) EXPECT_TRUE(ca.subset_of(alpha_cut(r, b)));
        }
      }
    }
  }
}

TEST(Cuts, RoundTrip) {
  for (const auto& l : {chain3(), square()}) {
    const auto id = identity_fuzzy(X2, l);
    EXPECT_EQ(from_cuts(X2, X2, l, cuts(id)).value(), id);
    for (const auto& r : draw(X2, FiniteSpace::numbered(3, "y"), l, 100, 9)) {
      EXPECT_EQ(from_cuts(r.source(), r.target(), l, cuts(r)).value(), r);
    }
  }
}

TEST(Cuts, InconsistentFamilyOnSquare) {
  const auto l = square();
  std::vector<CrispAmbRep> family(4, top_rep(X2, Y2));
  family[el(l, "1")] = bottom_rep(X2, Y2);
  auto r = from_cuts(X2, Y2, l, family);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violation().code, "CutFamilyInconsistent");
}

TEST(Subgraph, RoundTrip) {
  for (const auto& l : {chain3(), square()}) {
    for (const auto& r : draw(X2, Y2, l, 50, 11)) {
      EXPECT_EQ(fuzzy_from_subgraph(X2, Y2, l, r.subgraph()).value(), r);
    }
  }
  auto missing = fuzzy_from_subgraph(X2, Y2, chain3(), {});
  EXPECT_EQ(missing.violation().code, "MissingFloor");
}

TEST(FuzzyCompose, IdentityAndBottom) {
  for (const auto& l : {chain3(), square()}) {
    for (const auto& t : {TNorm::meet_of(l)}) {
      for (const auto& r : draw(X2, Y2, l, 50, 13)) {
        EXPECT_EQ(compose(identity_fuzzy(X2, l), r, t), r);
        EXPECT_EQ(compose(r, identity_fuzzy(Y2, l), t), r);
        EXPECT_EQ(compose(r, bottom_fuzzy(Y2, Z2, l), t), bottom_fuzzy(X2, Z2, l));
      }
    }
  }
  const auto luk = lukasiewicz_tnorm(chain3());
  for (const auto& r : draw(X2, Y2, chain3(), 50, 14)) EXPECT_EQ(compose(identity_fuzzy(X2, chain3()), r, luk), r);
}

TEST(FuzzyCompose, ConstantMiddleGrade) {
  const auto l = chain3();
  const Elem m = el(l, "m");
  auto flat = [&](const FiniteSpace& x, const FiniteSpace& y) {
    return fuzzy_where(x, y, l, [&](Mask, Mask b) { return b == y.full() ? l->top() : m; }).value();
  };
  const auto rs = compose(flat(X2, Y2), flat(Y2, Z2));
  EXPECT_EQ(rs, flat(X2, Z2));
}

TEST(FuzzyCompose, SupOfTNormByHand) {
  const auto l = chain3();
  const auto luk = lukasiewicz_tnorm(l);
  const auto rs = draw(X2, Y2, l, 40, 15);
  const auto ss = draw(Y2, Z2, l, 40, 16);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    for (const auto* t : {&luk}) {
      const auto c = compose(rs[i], ss[i], *t);
      EXPECT_TRUE(revalidates(c));
      for (Mask a = 1; a <= 3; ++a) {
        for (Mask z = 1; z <= 3; ++z) {
          Elem best = 0;
          for (Mask b = 1; b <= 3; ++b) best = std::max(best, (*t)(rs[i].grade(a, b), ss[i].grade(b, z)));
          EXPECT_EQ(c.grade(a, z), best);
        }
      }
    }
  }
}

TEST(FuzzyCompose, Mismatches) {
  const auto r = identity_fuzzy(X2, chain3());
  EXPECT_THROW(compose(r, identity_fuzzy(X2, square())), Error);
  EXPECT_THROW(compose(r, identity_fuzzy(FiniteSpace::numbered(3), chain3())), Error);
}

TEST(FuzzySms, Identity) {
  for (const auto& l : {chain3(), square()}) EXPECT_EQ(sms(identity_fuzzy(X2, l)), identity_fuzzy(X2, l));
}

TEST(FuzzySms, TopCutsAreCrispDual) {
  for (const auto& l : {chain3(), square()}) {
    const auto s = sms(top_fuzzy(X2, Y2, l));
    for (Elem a = 1; a < l->size(); ++a) {
      if (a == l->bottom()) continue;
      EXPECT_EQ(alpha_cut(s, a), sms(top_rep(X2, Y2)));
    }
  }
}

TEST(FuzzySms, CutwiseDefinition) {
  for (const auto& l : {chain3(), square()}) {
    for (const auto& r : draw(X2, Y2, l, 60, 17)) {
      const auto s = sms(r);
      EXPECT_TRUE(revalidates(s));
      for (Elem a = 0; a < l->size(); ++a) {
        if (a == l->bottom()) continue;
        // intersection over β ≤ α of the crisp duals of the cuts
        std::vector<Family> rows(4, 0);
        for (Mask b = 1; b <= 3; ++b) rows[b] = fam::hyperspace(2);
        for (Elem be = 0; be < l->size(); ++be) {
          if (!l->leq(be, a)) continue;
          const auto d = sms(alpha_cut(r, be));
          for (Mask b = 1; b <= 3; ++b) rows[b] &= d.row(b);
        }
        EXPECT_EQ(alpha_cut(s, a).rows(), rows);
      }
    }
  }
}

TEST(FuzzySms, InvolutiveExactlyWithTrivialFullRow) {
  for (const auto& l : {chain3(), square()}) {
    for (const auto& r : draw(X2, FiniteSpace::numbered(3, "y"), l, 200, 19)) {
      EXPECT_EQ(sms(sms(r)) == r, has_trivial_full_row(r));
      const auto s = sms(r);
      EXPECT_EQ(sms(sms(s)), s);
    }
    for (const auto& r : draw(X2, Y2, l, 100, 20, true)) EXPECT_EQ(sms(sms(r)), r);
  }
}

TEST(FuzzyLattice, BoundsAndDuality) {
  for (const auto& l : {chain3(), square()}) {
    const auto rs = draw(X2, Y2, l, 40, 21);
    const auto ss = draw(X2, Y2, l, 40, 22);
    for (std::size_t i = 0; i < rs.size(); ++i) {
      EXPECT_EQ(join(rs[i], bottom_fuzzy(X2, Y2, l)), rs[i]);
      EXPECT_EQ(meet(rs[i], top_fuzzy(X2, Y2, l)), rs[i]);
      EXPECT_EQ(sms(join(rs[i], ss[i])), join(sms(rs[i]), sms(ss[i])));
      EXPECT_EQ(sms(meet(rs[i], ss[i])), meet(sms(rs[i]), sms(ss[i])));
      for (Mask a = 1; a <= 3; ++a) {
        for (Mask b = 1; b <= 3; ++b) {
          EXPECT_EQ(join(rs[i], ss[i]).grade(a, b), l->join(rs[i].grade(a, b), ss[i].grade(a, b)));
          EXPECT_EQ(meet(rs[i], ss[i]).grade(a, b), l->meet(rs[i].grade(a, b), ss[i].grade(a, b)));
        }
      }
    }
    EXPECT_EQ(sup_family(X2, Y2, l, rs), std::accumulate(rs.begin(), rs.end(), bottom_fuzzy(X2, Y2, l),
                                                         [](const auto& p, const auto& q) { return join(p, q); }));
    EXPECT_EQ(inf_family(X2, Y2, l, rs), std::accumulate(rs.begin(), rs.end(), top_fuzzy(X2, Y2, l),
                                                         [](const auto& p, const auto& q) { return meet(p, q); }));
    EXPECT_EQ(sup_family(X2, Y2, l, {}), bottom_fuzzy(X2, Y2, l));
  }
}

TEST(Embed, Examples) {
  for (const auto& l : {chain3(), square()}) {
    EXPECT_EQ(embed_crisp(top_rep(X2, Y2), l), top_fuzzy(X2, Y2, l));
    for (const auto& r : enumerate_reps(X2, Y2)) {
      EXPECT_EQ(alpha_cut(embed_crisp(r, l), l->top()), r);
      for (const auto& s : enumerate_reps(Y2, Z2)) {
        const auto lhs = embed_crisp(compose(r, s), l);
        EXPECT_EQ(lhs, compose(embed_crisp(r, l), embed_crisp(s, l)));
        if (l->is_chain()) EXPECT_EQ(lhs, compose(embed_crisp(r, l), embed_crisp(s, l), lukasiewicz_tnorm(l)));
      }
    }
  }
}

TEST(UnionCounterexample, BooleanSquare) {
  const auto l = square();
  const auto ce = union_counterexample(X2, Y2, l);
  EXPECT_TRUE(revalidates(ce.r));
  EXPECT_TRUE(revalidates(ce.s));
  const std::set<Elem> grades{ce.gap.alpha, ce.gap.beta};
  EXPECT_EQ(grades, (std::set<Elem>{el(l, "a"), el(l, "b")}));
  // the union of subgraphs holds both grades but not their join
  auto ur = ce.r.subgraph();
  auto us = ce.s.subgraph();
  std::set<Triple> u(ur.begin(), ur.end());
  u.insert(us.begin(), us.end());
  EXPECT_TRUE(u.count({ce.gap.a, ce.gap.b, el(l, "a")}));
  EXPECT_TRUE(u.count({ce.gap.a, ce.gap.b, el(l, "b")}));
  EXPECT_FALSE(u.count({ce.gap.a, ce.gap.b, el(l, "1")}));
  auto as_rep = fuzzy_from_subgraph(X2, Y2, l, std::vector<Triple>(u.begin(), u.end()));
  ASSERT_FALSE(as_rep.ok());
  EXPECT_EQ(as_rep.violation().code, "NotJoinClosed");
  // the lattice join is still fine
  EXPECT_TRUE(revalidates(join(ce.r, ce.s)));
  EXPECT_FALSE(subgraph_union_gap(join(ce.r, ce.s), ce.r).has_value());
}

TEST(UnionCounterexample, ChainsHaveNone) {
  try {
    union_counterexample(X2, Y2, chain3());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "LatticeIsChain");
  }
  for (const auto& r : draw(X2, Y2, chain3(), 30, 23)) {
    for (const auto& s : draw(X2, Y2, chain3(), 30, 24)) EXPECT_FALSE(subgraph_union_gap(r, s).has_value());
  }
}

}  // namespace
}  // namespace ambrel
