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
#include "ambrel/io.hpp"
#include "support.hpp"

namespace ambrel {
namespace {

using io::json;
using testing::chain3;
using testing::square;

const FiniteSpace X2 = FiniteSpace::numbered(2);
const FiniteSpace Y2 = FiniteSpace::numbered(2, "y");

TEST(Io, CrispRoundTrip) {
  Rng rng(71);
  for (int i = 0; i < 100; ++i) {
    const auto r = random_rep(FiniteSpace::numbered(3), Y2, rng, {.density = rng.uniform()});
    const json j = io::to_json(r);
    const auto back = io::crisp_from_json(io::parse(j.dump()));
    ASSERT_TRUE(back.ok());
    EXPECT_EQ(back.value(), r);
    EXPECT_EQ(io::to_json(back.value()).dump(), j.dump());
  }
}

TEST(Io, CrispShape) {
  const json j = io::to_json(identity_rep(X2));
  EXPECT_EQ(j["source"], json::array({"x1", "x2"}));
  // pairs sorted by (A, B) mask
  EXPECT_EQ(j["pairs"][0], json::parse(R"([["x1"], ["x1"]])"));
  EXPECT_EQ(io::kind_of(j), io::DocKind::Crisp);
}

TEST(Io, CrispSeedAndViolations) {
  const json seed = json::parse(R"({"source": ["x1", "x2"], "target": ["y1", "y2"],
                                    "pairs": [[["x1", "x2"], ["y1"]]], "seed": true})");
  const auto r = io::crisp_from_json(seed);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.value(), from_seed(X2, Y2, {{0b11, 0b01}}));

  json raw = seed;
  raw.erase("seed");
  const auto bad = io::crisp_from_json(raw);
  ASSERT_FALSE(bad.ok());
  const json v = io::to_json(bad.violation());
  EXPECT_EQ(v["verdict"], "invalid");
  EXPECT_FALSE(v["code"].get<std::string>().empty());
}

TEST(Io, Malformed) {
  EXPECT_THROW(io::parse("{not json"), Error);
  EXPECT_THROW(io::crisp_from_json(json::parse(R"({"source": ["x"], "target": ["y"]})")), Error);
  EXPECT_THROW(io::crisp_from_json(json::parse(R"({"source": ["x"], "target": ["y"], "pairs": [[["z"], ["y"]]]})")),
               Error);
  EXPECT_THROW(io::crisp_from_json(json::parse(R"({"source": ["x"], "target": ["y"], "pairs": [[[], ["y"]]]})")),
               Error);
  EXPECT_THROW(io::read_file("/nonexistent/file.json"), Error);
  try {
    io::parse("[1,");
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "MalformedInput");
  }
  EXPECT_EQ(io::kind_of(json::array()), io::DocKind::Unknown);
}

TEST(Io, FuzzyRoundTripAndDefaults) {
  Rng rng(73);
  for (const auto& l : {chain3(), square()}) {
    for (int i = 0; i < 50; ++i) {
      const auto r = random_fuzzy_rep(X2, Y2, l, rng, {.density = rng.uniform()});
      const json j = io::to_json(r);
      EXPECT_EQ(io::fuzzy_from_json(j).value(), r);
      EXPECT_EQ(io::kind_of(j), io::DocKind::Fuzzy);
    }
    // bottom is all defaults
    EXPECT_TRUE(io::to_json(bottom_fuzzy(X2, Y2, l))["grades"].empty());
  }
  json j = io::to_json(identity_fuzzy(X2, chain3()));
  EXPECT_EQ(j["grades"].size(), 2U);  // ({x1}, {x1}) and ({x2}, {x2}); the rest are defaults
  j["grades"].push_back(json::array({json::array({"x1", "x2"}), json::array({"x1", "x2"}), "m"}));
  EXPECT_EQ(io::fuzzy_from_json(j).violation().code, "FullTargetNotTop");
}

TEST(Io, LatticeAndTNorm) {
  const auto l = chain3();
  const auto luk = lukasiewicz_tnorm(l);
  const json j = io::to_json(*l, &luk);
  const auto spec = io::lattice_from_json(j);
  ASSERT_TRUE(spec.ok());
  EXPECT_EQ(*spec.value().lattice, *l);
  ASSERT_TRUE(spec.value().tnorm.has_value());
  EXPECT_EQ(spec.value().tnorm->table(), luk.table());
  EXPECT_TRUE(io::to_json(*l)["tnorm"].is_null());
  EXPECT_TRUE(io::lattice_from_json(io::to_json(*l)).value().tnorm_or_meet().is_meet());

  json bad = j;
  bad["tnorm"][1][2] = "0";
  bad["tnorm"][2][1] = "0";
  EXPECT_FALSE(io::lattice_from_json(bad).ok());
  json cyc = io::to_json(*l);
  cyc["leq"][2][0] = true;
  EXPECT_EQ(io::lattice_from_json(cyc).violation().code, "NotAPartialOrder");
  json ragged = io::to_json(*l);
  ragged["leq"][0] = json::array({true});
  EXPECT_THROW(io::lattice_from_json(ragged), Error);
}

TEST(Io, CapacityRoundTrip) {
  Rng rng(79);
  for (const auto& l : {chain3(), square()}) {
    for (int i = 0; i < 30; ++i) {
      const auto c = random_capacity(FiniteSpace::numbered(3, "y"), l, rng, rng.uniform());
      const json j = io::to_json(c);
      EXPECT_EQ(io::kind_of(j), io::DocKind::Capacity);
      EXPECT_EQ(io::capacity_from_json(j).value(), c);
    }
  }
  json bad = io::to_json(minimal_capacity(Y2, chain3()));
  bad["values"].push_back(json::array({json::array(), "m"}));
  EXPECT_EQ(io::capacity_from_json(bad).violation().code, "BadBounds");
}

TEST(Io, TriplesRoundTrip) {
  Rng rng(83);
  const auto r = random_fuzzy_rep(X2, Y2, square(), rng, {.density = 0.6});
  const auto t = encode(r);
  const json j = io::to_json(t);
  EXPECT_EQ(io::kind_of(j), io::DocKind::Triples);
  EXPECT_EQ(io::triples_from_json(j), t);
  json empty_family = j;
  empty_family["triples"].push_back(json::array({json::array(), json::array({"y1"}), "0"}));
  EXPECT_THROW(io::triples_from_json(empty_family), Error);
}

}  // namespace
}  // namespace ambrel
