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

#include <map>

#include "ambrel/io.hpp"
#include "ambrel/laws.hpp"
#include "ambrel/oracle.hpp"
#include "support.hpp"

namespace ambrel {
namespace {

using io::json;

laws::LawConfig exhaustive222() {
  laws::LawConfig c;
  c.exhaustive = true;
  return c;
}

// A(R ⊚ S) = {C : some B ∈ AR has C ∈ BS}, straight from the definition
bool composed(const CrispAmbRep& r, const CrispAmbRep& s, Mask a, Mask c) {
  for (Mask b = 1; b <= r.target().full(); ++b) {
    if (r.contains(a, b) && s.contains(b, c)) return true;
  }
  return false;
}

CrispAmbRep input(const json& witness, const char* role) {
  return io::crisp_from_json(witness["inputs"][role]).value();
}

TEST(CrispLaws, ExactViolationsAtTwoTwoTwo) {
  const auto report = laws::check_crisp_laws(exhaustive222());
  EXPECT_FALSE(report.invariants_hold());
  std::map<std::string, std::size_t> failing;
  for (const auto& o : report.laws) {
    EXPECT_TRUE(o.exhaustive) << o.law;
    if (o.invariant && !o.holds()) failing[o.law] = o.violations;
  }
  const std::map<std::string, std::size_t> expect{{"anti-involution", 9}, {"contravariance", 63}};
  EXPECT_EQ(failing, expect);
  EXPECT_EQ(report.find("associativity")->checked, 15625U);
  EXPECT_EQ(report.find("anti-involution")->checked, 25U);
  EXPECT_FALSE(report.find("modular")->invariant);
  EXPECT_EQ(report.find("no-such-law"), nullptr);
  EXPECT_EQ(report.to_json()["verdict"], "violation");
}

TEST(CrispLaws, ContravarianceWitnessIsReal) {
  const auto report = laws::check_crisp_laws(exhaustive222());
  const json w = report.find("contravariance")->witness;
  const auto r = input(w, "R");
  const auto s = input(w, "S");
  const auto lhs = oracle::sms_definitional(compose(r, s));
  const auto rhs = compose(oracle::sms_definitional(s), oracle::sms_definitional(r));
  EXPECT_NE(lhs, rhs);
  // pseudo-invertible inputs never break it
  EXPECT_FALSE(has_trivial_full_row(r) && has_trivial_full_row(s));
}

TEST(CrispLaws, PseudoInvertiblePass) {
  auto c = exhaustive222();
  c.pseudo_invertible_only = true;
  const auto report = laws::check_crisp_laws(c);
  EXPECT_TRUE(report.invariants_hold());
  EXPECT_EQ(report.to_json()["verdict"], "pass");
  EXPECT_EQ(report.find("anti-involution")->checked, 16U);
}

TEST(CrispLaws, SampledModeIsDeterministic) {
  laws::LawConfig c;
  c.x = 3;
  c.y = 3;
  c.z = 2;
  c.trials = 60;
  c.seed = 5;
  const auto a = laws::check_crisp_laws(c).to_json();
  const auto b = laws::check_crisp_laws(c).to_json();
  EXPECT_EQ(a.dump(), b.dump());
  for (const auto& l : a["laws"]) EXPECT_EQ(l["mode"], "sampled");
  c.seed = 6;
  EXPECT_EQ(laws::check_crisp_laws(c).to_json()["config"]["seed"], 6);
}

TEST(FuzzyLaws, OnlyTheKnownInvariantsFail) {
  laws::LawConfig c;
  c.x = 2;
  c.y = 3;
  c.z = 2;
  c.trials = 150;
  for (const auto& l : {testing::chain3(), testing::square()}) {
    std::vector<TNorm> ts{TNorm::meet_of(l)};
    if (l->is_chain()) ts.push_back(lukasiewicz_tnorm(l));
    for (const auto& t : ts) {
      const auto report = laws::check_fuzzy_laws(c, t);
      for (const auto& o : report.laws) {
        if (!o.invariant) continue;
        if (o.law == "anti-involution" || o.law == "contravariance") continue;
        EXPECT_TRUE(o.holds()) << o.law;
      }
      EXPECT_GT(report.find("anti-involution")->violations, 0U);
      c.pseudo_invertible_only = true;
      EXPECT_TRUE(laws::check_fuzzy_laws(c, t).invariants_hold());
      c.pseudo_invertible_only = false;
    }
  }
}

TEST(Search, ModularWitnessCheckedByHand) {
  const auto rep = laws::search("modular", exhaustive222());
  ASSERT_TRUE(rep.found());
  const json j = rep.to_json();
  EXPECT_EQ(j["verdict"], "counterexample");
  const json w = j["witness"]["instance"];
  const auto f = input(w, "f");
  const auto g = input(w, "g");
  const auto h = input(w, "h");
  const auto fd = oracle::sms_definitional(f);
  // (f ⊚ g) ∧ h ⊆ f ⊚ (g ∧ (f^⊥ ⊚ h)) fails somewhere
  bool broken = false;
  for (Mask a = 1; a <= 3; ++a) {
    for (Mask c = 1; c <= 3; ++c) {
      const bool lhs = composed(f, g, a, c) && h.contains(a, c);
      bool rhs = false;
      for (Mask b = 1; b <= 3; ++b) {
        bool inner = false;
        for (Mask x = 1; x <= 3; ++x) inner = inner || (fd.contains(b, x) && h.contains(x, c));
        rhs = rhs || (f.contains(a, b) && g.contains(b, c) && inner);
      }
      broken = broken || (lhs && !rhs);
    }
  }
  EXPECT_TRUE(broken);
}

TEST(Search, CertificateWhenNothingFails) {
  laws::LawConfig c;
  c.x = c.y = c.z = 1;
  c.exhaustive = true;
  const auto rep = laws::search("meet-distributivity", c);
  EXPECT_FALSE(rep.found());
  const json j = rep.to_json();
  EXPECT_EQ(j["verdict"], "no-counterexample");
  EXPECT_EQ(j["certificate"]["exhaustive"], true);
  EXPECT_EQ(j["outcomes"].size(), 2U);
  try {
    laws::search("frobenius", c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "UnknownLaw");
  }
}

TEST(Search, LargeSizesFallBackToSamples) {
  laws::LawConfig c;
  c.x = c.y = c.z = 3;
  c.exhaustive = true;
  c.trials = 50;
  const auto rep = laws::search("modular", c);
  EXPECT_FALSE(rep.outcomes.at(0).exhaustive);
  EXPECT_EQ(rep.outcomes.at(0).checked, 50U);
}

}  // namespace
}  // namespace ambrel
