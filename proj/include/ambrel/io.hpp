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

#ifndef AMBREL_IO_HPP_
#define AMBREL_IO_HPP_

#include <optional>
#include <string>

#include <json.hpp>

#include "ambrel/capacity.hpp"
#include "ambrel/crisp.hpp"
#include "ambrel/fuzzy.hpp"
#include "ambrel/hyperencoding.hpp"
#include "ambrel/lattice.hpp"

// Canonical JSON for every value type. Subsets are arrays of point labels
// in point order, families and pair lists are sorted by mask. Shape errors
// throw Error("MalformedInput"); axiom failures come back as a Violation.
namespace ambrel::io {

using nlohmann::json;

json to_json(const FiniteSpace& s);
FiniteSpace space_from_json(const json& j);

json subset_json(const FiniteSpace& s, Mask m);
/// `allow_empty` only for capacities.
Mask subset_from_json(const FiniteSpace& s, const json& j, bool allow_empty = false);
json family_json(const FiniteSpace& s, Family f);

/// {"elements": [...], "leq": [[bool]], "tnorm": [[label]] | null}
json to_json(const FiniteLattice& l, const TNorm* tnorm = nullptr);

struct LatticeSpec {
  LatticePtr lattice;
  std::optional<TNorm> tnorm;  // absent means the meet
  TNorm tnorm_or_meet() const { return tnorm ? *tnorm : TNorm::meet_of(lattice); }
};
Checked<LatticeSpec> lattice_from_json(const json& j);

/// {"source", "target", "pairs": [[A, B], ...]}
json to_json(const CrispAmbRep& r);
/// Accepts "seed": true, in which case the pairs are closed with from_seed.
Checked<CrispAmbRep> crisp_from_json(const json& j);

/// {"source", "target", "lattice", "grades": [[A, B, label], ...]}; grades
/// equal to their default (1 for B = Y, else 0) are omitted.
json to_json(const LFuzzyAmbRep& r);
Checked<LFuzzyAmbRep> fuzzy_from_json(const json& j);

/// {"space", "lattice", "values": [[subset-or-empty, label], ...]}; values
/// equal to their default (1 for Y, else 0) are omitted.
json to_json(const LCapacity& c);
Checked<LCapacity> capacity_from_json(const json& j);

/// {"source", "target", "lattice", "triples": [[family, B, label], ...]}
json to_json(const TernaryHyperRelation& t);
TernaryHyperRelation triples_from_json(const json& j);

/// {"verdict": "invalid", "code", "message", "witness"}
json to_json(const Violation& v);

enum class DocKind { Crisp, Fuzzy, Capacity, Triples, Lattice, Unknown };
DocKind kind_of(const json& j);

/// Parses text, throwing Error("MalformedInput") on bad JSON.
json parse(const std::string& text);
json read_file(const std::string& path);

}  // namespace ambrel::io

#endif  // AMBREL_IO_HPP_
