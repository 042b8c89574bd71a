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

#include "ambrel/io.hpp"

#include <fstream>
#include <sstream>

namespace ambrel::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error("MalformedInput", what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) malformed(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Elem element_of(const FiniteLattice& l, const json& j) {
  const auto e = l.find(as_string(j, "lattice element"));
  if (!e) malformed("unknown lattice element " + j.dump());
  return *e;
}

LatticePtr lattice_or_violation(const json& j, std::optional<Violation>& bad) {
  auto spec = lattice_from_json(j);
  if (!spec) {
    bad = spec.violation();
    return nullptr;
  }
  return spec.value().lattice;
}

}  // namespace

json to_json(const FiniteSpace& s) { return s.labels(); }

FiniteSpace space_from_json(const json& j) {
  if (!j.is_array()) malformed("a space is an array of point labels");
  std::vector<std::string> labels;
  for (const auto& p : j) labels.push_back(as_string(p, "point label"));
  return FiniteSpace(std::move(labels));
}

json subset_json(const FiniteSpace& s, Mask m) { return s.subset_labels(m); }

Mask subset_from_json(const FiniteSpace& s, const json& j, bool allow_empty) {
  if (!j.is_array()) malformed("a subset is an array of point labels");
  std::vector<std::string> labels;
  for (const auto& p : j) labels.push_back(as_string(p, "point label"));
  const Mask m = s.subset_of_labels(labels);
  if (m == 0 && !allow_empty) malformed("subsets must be nonempty here");
  return m;
}

json family_json(const FiniteSpace& s, Family f) {
  json out = json::array();
  for (Mask m : fam::members(f)) out.push_back(subset_json(s, m));
  return out;
}

json to_json(const FiniteLattice& l, const TNorm* tnorm) {
  json leq = json::array();
  for (const auto& row : l.order_matrix()) {
    json r = json::array();
    for (bool b : row) r.push_back(b);
    leq.push_back(r);
  }
  json out = {{"elements", l.labels()}, {"leq", leq}, {"tnorm", nullptr}};
  if (tnorm != nullptr && !tnorm->is_meet()) {
    json t = json::array();
    for (std::size_t a = 0; a < l.size(); ++a) {
      json r = json::array();
      for (std::size_t b = 0; b < l.size(); ++b) r.push_back(l.label((*tnorm)(static_cast<Elem>(a), static_cast<Elem>(b))));
      t.push_back(r);
    }
    out["tnorm"] = t;
  }
  return out;
}

Checked<LatticeSpec> lattice_from_json(const json& j) {
  const json& el = field(j, "elements");
  const json& leq = field(j, "leq");
  if (!el.is_array() || !leq.is_array()) malformed("elements and leq must be arrays");
  std::vector<std::string> labels;
  for (const auto& e : el) labels.push_back(as_string(e, "lattice element"));
  std::vector<std::vector<bool>> m;
  for (const auto& row : leq) {
    if (!row.is_array()) malformed("leq rows must be arrays");
    std::vector<bool> r;
    for (const auto& b : row) {
      if (!b.is_boolean()) malformed("leq entries must be booleans");
      r.push_back(b.get<bool>());
    }
    m.push_back(std::move(r));
  }
  auto lat = validate_lattice(std::move(labels), m);
  if (!lat) return lat.violation();
  LatticeSpec spec{share(std::move(lat).value()), std::nullopt};
  if (j.contains("tnorm") && !j.at("tnorm").is_null()) {
    const json& t = j.at("tnorm");
    const std::size_t n = spec.lattice->size();
    if (!t.is_array() || t.size() != n) malformed("tnorm must be a square table of labels");
    std::vector<Elem> table;
    for (const auto& row : t) {
      if (!row.is_array() || row.size() != n) malformed("tnorm must be a square table of labels");
      for (const auto& v : row) table.push_back(element_of(*spec.lattice, v));
    }
    auto tn = validate_tnorm(spec.lattice, std::move(table));
    if (!tn) return tn.violation();
    spec.tnorm = std::move(tn).value();
  }
  return spec;
}

json to_json(const CrispAmbRep& r) {
  json pairs = json::array();
  for (const auto& [a, b] : r.pairs()) pairs.push_back(json::array({subset_json(r.source(), a), subset_json(r.target(), b)}));
  return {{"source", to_json(r.source())}, {"target", to_json(r.target())}, {"pairs", pairs}};
}

Checked<CrispAmbRep> crisp_from_json(const json& j) {
  const FiniteSpace x = space_from_json(field(j, "source"));
  const FiniteSpace y = space_from_json(field(j, "target"));
  const json& ps = field(j, "pairs");
  if (!ps.is_array()) malformed("pairs must be an array");
  std::vector<Pair> pairs;
  for (const auto& p : ps) {
    if (!p.is_array() || p.size() != 2) malformed("each pair is [A, B]");
    pairs.emplace_back(subset_from_json(x, p[0]), subset_from_json(y, p[1]));
  }
  const bool seed = j.contains("seed") && j.at("seed").is_boolean() && j.at("seed").get<bool>();
  if (seed) return from_seed(x, y, pairs);
  return validate_pairs(x, y, pairs);
}

json to_json(const LFuzzyAmbRep& r) {
  const FiniteLattice& l = r.lattice();
  json grades = json::array();
  for (Mask a = 1; a <= r.source().full(); ++a) {
    for (Mask b = 1; b <= r.target().full(); ++b) {
      const Elem dflt = b == r.target().full() ? l.top() : l.bottom();
      const Elem g = r.grade(a, b);
      if (g != dflt) grades.push_back(json::array({subset_json(r.source(), a), subset_json(r.target(), b), l.label(g)}));
    }
  }
  return {{"source", to_json(r.source())},
          {"target", to_json(r.target())},
          {"lattice", to_json(l)},
          {"grades", grades}};
}

Checked<LFuzzyAmbRep> fuzzy_from_json(const json& j) {
  const FiniteSpace x = space_from_json(field(j, "source"));
  const FiniteSpace y = space_from_json(field(j, "target"));
  std::optional<Violation> bad;
  LatticePtr l = lattice_or_violation(field(j, "lattice"), bad);
  if (bad) return *bad;
  const json& gs = field(j, "grades");
  if (!gs.is_array()) malformed("grades must be an array");
  std::vector<Elem> grades(std::size_t{1} << (x.size() + y.size()), l->bottom());
  for (Mask a = 1; a <= x.full(); ++a) grades[(std::size_t{a} << y.size()) + y.full()] = l->top();
  for (const auto& g : gs) {
    if (!g.is_array() || g.size() != 3) malformed("each grade is [A, B, label]");
    const Mask a = subset_from_json(x, g[0]);
    const Mask b = subset_from_json(y, g[1]);
    grades[(std::size_t{a} << y.size()) + b] = element_of(*l, g[2]);
  }
  return validate_fuzzy(x, y, l, std::move(grades), {.max_points = kMaxPoints});
}

json to_json(const LCapacity& c) {
  const FiniteLattice& l = c.lattice();
  json values = json::array();
  for (Mask f = 0; f <= c.space().full(); ++f) {
    const Elem dflt = f == c.space().full() ? l.top() : l.bottom();
    if (c(f) != dflt) values.push_back(json::array({subset_json(c.space(), f), l.label(c(f))}));
  }
  return {{"space", to_json(c.space())}, {"lattice", to_json(l)}, {"values", values}};
}

Checked<LCapacity> capacity_from_json(const json& j) {
  const FiniteSpace y = space_from_json(field(j, "space"));
  std::optional<Violation> bad;
  LatticePtr l = lattice_or_violation(field(j, "lattice"), bad);
  if (bad) return *bad;
  const json& vs = field(j, "values");
  if (!vs.is_array()) malformed("values must be an array");
  std::vector<Elem> values(std::size_t{1} << y.size(), l->bottom());
  values[y.full()] = l->top();
  for (const auto& v : vs) {
    if (!v.is_array() || v.size() != 2) malformed("each value is [subset, label]");
    values[subset_from_json(y, v[0], true)] = element_of(*l, v[1]);
  }
  return validate_capacity(y, l, std::move(values));
}

json to_json(const TernaryHyperRelation& t) {
  const FiniteLattice& l = t.lattice();
  json triples = json::array();
  for (const auto& [f, b, a] : t.triples()) {
    json family = json::array();
    for (Mask m : hyper_members(f)) family.push_back(subset_json(t.source(), m));
    triples.push_back(json::array({family, subset_json(t.target(), b), l.label(a)}));
  }
  return {{"source", to_json(t.source())},
          {"target", to_json(t.target())},
          {"lattice", to_json(l)},
          {"triples", triples}};
}

TernaryHyperRelation triples_from_json(const json& j) {
  const FiniteSpace x = space_from_json(field(j, "source"));
  const FiniteSpace y = space_from_json(field(j, "target"));
  auto spec = lattice_from_json(field(j, "lattice"));
  if (!spec) malformed("triple set lattice is invalid: " + spec.violation().message);
  LatticePtr l = spec.value().lattice;
  TernaryHyperRelation out(x, y, l);
  const json& ts = field(j, "triples");
  if (!ts.is_array()) malformed("triples must be an array");
  for (const auto& t : ts) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_array() || t[0].empty()) {
      malformed("each triple is [nonempty family, B, label]");
    }
    HyperFamily f = 0;
    for (const auto& m : t[0]) f |= HyperFamily{1} << (subset_from_json(x, m) - 1);
    out.insert(f, subset_from_json(y, t[1]), element_of(*l, t[2]));
  }
  return out;
}

json to_json(const Violation& v) {
  return {{"verdict", "invalid"}, {"code", v.code}, {"message", v.message}, {"witness", v.witness}};
}

DocKind kind_of(const json& j) {
  if (!j.is_object()) return DocKind::Unknown;
  if (j.contains("pairs")) return DocKind::Crisp;
  if (j.contains("grades")) return DocKind::Fuzzy;
  if (j.contains("values")) return DocKind::Capacity;
  if (j.contains("triples")) return DocKind::Triples;
  if (j.contains("elements")) return DocKind::Lattice;
  return DocKind::Unknown;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

}  // namespace ambrel::io
