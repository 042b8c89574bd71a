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

#ifndef AMBREL_LAWS_HPP_
#define AMBREL_LAWS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ambrel/fuzzy.hpp"
#include "ambrel/lattice.hpp"

// Law checkers over sampled or enumerated representations. Failures are
// report content, never exceptions.
namespace ambrel::laws {

using nlohmann::json;

/// Exhaustive mode enumerates every tuple when the tuple count stays under
/// this bound; larger laws fall back to `trials` samples.
inline constexpr std::size_t kExhaustiveCap = 2'000'000;

struct LawConfig {
  std::size_t x = 2;
  std::size_t y = 2;
  std::size_t z = 2;
  bool exhaustive = false;
  std::size_t trials = 500;
  std::uint64_t seed = 1;
  /// Restrict every input to pseudo-invertible representations.
  bool pseudo_invertible_only = false;
  /// Seed density for sampled reps; unset draws a fresh density per rep.
  std::optional<double> density;

  json to_json() const;
};

struct LawOutcome {
  std::string law;
  /// Invariants count against the verdict; exploratory laws only record
  /// what was found.
  bool invariant = true;
  bool exhaustive = false;
  std::size_t checked = 0;
  std::size_t violations = 0;
  json witness;  // first violation, null if none

  bool holds() const noexcept { return violations == 0; }
  json to_json() const;
};

struct LawReport {
  std::string suite;
  LawConfig config;
  std::vector<LawOutcome> laws;

  bool invariants_hold() const;
  const LawOutcome* find(const std::string& law) const;
  /// {"verdict": "pass" | "violation", "suite", "config", "laws": [...]}
  json to_json() const;
};

/// Crisp suite. Invariants: anti-involution, involution-iff-trivial-full-row,
/// sms-cube, sms-oracle, contravariance, associativity, identity-left,
/// identity-right, monotone-left, monotone-right, join-distributivity-left,
/// join-distributivity-right, sms-isotone, sms-join, sms-meet. Exploratory:
/// meet-distributivity-left, meet-distributivity-right, modular.
LawReport check_crisp_laws(const LawConfig& config);

/// Fuzzy suite over the lattice of `tnorm`, always sampled. Same invariants
/// with composition ⊚∗, plus compose-oracle and embedding-functoriality;
/// exploratory: meet-distributivity-left/right and cut-composition.
LawReport check_fuzzy_laws(const LawConfig& config, const TNorm& tnorm);

struct SearchReport {
  std::string law;
  LawConfig config;
  std::vector<LawOutcome> outcomes;

  bool found() const;
  /// {"verdict": "counterexample" | "no-counterexample", ...} with either
  /// the witness or a certificate naming what was covered.
  json to_json() const;
};

/// Counterexample search for an exploratory crisp law: "modular" or
/// "meet-distributivity" (both sides). Throws Error("UnknownLaw").
SearchReport search(const std::string& law, const LawConfig& config);

}  // namespace ambrel::laws

#endif  // AMBREL_LAWS_HPP_
