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

#include "ambrel/laws.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <utility>

#include "ambrel/generators.hpp"
#include "ambrel/io.hpp"
#include "ambrel/oracle.hpp"

namespace ambrel::laws {

namespace {

// Space slots: 0 = X, 1 = Y, 2 = Z.
using Shape = std::pair<int, int>;
constexpr Shape kXY{0, 1};
constexpr Shape kYZ{1, 2};
constexpr Shape kXZ{0, 2};
constexpr Shape kZX{2, 0};

template <class Rep>
using Check = std::function<std::optional<json>(const std::vector<const Rep*>&)>;

template <class Rep>
struct LawDef {
  std::string name;
  bool invariant;
  std::vector<Shape> shape;
  std::vector<std::string> roles;
  Check<Rep> check;
};

// FNV-1a, so each law gets its own stream regardless of suite order.
std::uint64_t law_seed(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 14695981039346656037ULL ^ seed;
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

template <class Rep>
class Domain {
 public:
  using Draw = std::function<Rep(const FiniteSpace&, const FiniteSpace&, Rng&)>;
  using Keep = std::function<bool(const Rep&)>;

  Domain(const LawConfig& c, std::array<FiniteSpace, 3> spaces, Draw draw)
      : config_(c), spaces_(std::move(spaces)), draw_(std::move(draw)) {}

  void enable_pools(std::function<std::vector<Rep>(const FiniteSpace&, const FiniteSpace&)> enumerate, Keep keep) {
    enumerate_ = std::move(enumerate);
    keep_ = std::move(keep);
  }

  const FiniteSpace& space(int i) const { return spaces_[i]; }

  LawOutcome run(const LawDef<Rep>& law) {
    LawOutcome out;
    out.law = law.name;
    out.invariant = law.invariant;
    std::vector<const Rep*> args(law.shape.size());

    auto record = [&](const std::optional<json>& bad) {
      ++out.checked;
      if (!bad) return;
      if (out.violations++ == 0) {
        json inputs = json::object();
        for (std::size_t i = 0; i < args.size(); ++i) inputs[law.roles[i]] = io::to_json(*args[i]);
        out.witness = {{"inputs", inputs}, {"at", *bad}};
      }
    };

    if (const auto pools = exhaustive_pools(law.shape)) {
      out.exhaustive = true;
      std::vector<std::size_t> digit(pools->size(), 0);
      for (const auto* p : *pools) {
        if (p->empty()) return out;
      }
      while (true) {
        for (std::size_t i = 0; i < digit.size(); ++i) args[i] = &(*pools)[i]->at(digit[i]);
        record(law.check(args));
        std::size_t i = 0;
        while (i < digit.size() && ++digit[i] == (*pools)[i]->size()) digit[i++] = 0;
        if (i == digit.size()) break;
      }
      return out;
    }

    Rng rng(law_seed(config_.seed, law.name));
    std::vector<Rep> held;
    held.reserve(law.shape.size());
    for (std::size_t t = 0; t < config_.trials; ++t) {
      held.clear();
      for (const auto& [from, to] : law.shape) held.push_back(draw_(spaces_[from], spaces_[to], rng));
      for (std::size_t i = 0; i < held.size(); ++i) args[i] = &held[i];
      record(law.check(args));
    }
    return out;
  }

 private:
  std::optional<std::vector<const std::vector<Rep>*>> exhaustive_pools(const std::vector<Shape>& shape) {
    if (!config_.exhaustive || !enumerate_) return std::nullopt;
    std::vector<const std::vector<Rep>*> out;
    std::size_t total = 1;
    for (const auto& s : shape) {
      const auto* p = pool(s);
      if (p == nullptr) return std::nullopt;
      total *= std::max<std::size_t>(p->size(), 1);
      if (total > kExhaustiveCap) return std::nullopt;
      out.push_back(p);
    }
    return out;
  }

  const std::vector<Rep>* pool(Shape s) {
    const std::size_t nx = spaces_[s.first].size();
    const std::size_t ny = spaces_[s.second].size();
    // 3×3 has too many representations to hold
    if (nx > 3 || ny > 3 || nx * ny > 6) return nullptr;
    auto it = pools_.find(s);
    if (it == pools_.end()) {
      std::vector<Rep> kept;
      for (auto& r : enumerate_(spaces_[s.first], spaces_[s.second])) {
        if (keep_(r)) kept.push_back(std::move(r));
      }
      it = pools_.emplace(s, std::move(kept)).first;
    }
    return &it->second;
  }

  LawConfig config_;
  std::array<FiniteSpace, 3> spaces_;
  Draw draw_;
  std::function<std::vector<Rep>(const FiniteSpace&, const FiniteSpace&)> enumerate_;
  Keep keep_;
  std::map<Shape, std::vector<Rep>> pools_;
};

std::array<FiniteSpace, 3> spaces_of(const LawConfig& c) {
  if (c.x == 0 || c.y == 0 || c.z == 0) throw Error("MalformedInput", "law sizes must be positive");
  return {FiniteSpace::numbered(c.x, "x"), FiniteSpace::numbered(c.y, "y"), FiniteSpace::numbered(c.z, "z")};
}

double density_for(const LawConfig& c, Rng& rng) { return c.density ? *c.density : rng.uniform(); }

// Crisp comparisons: first (A, B) where the two sides disagree.

std::optional<json> crisp_diff(const CrispAmbRep& lhs, const CrispAmbRep& rhs, bool subset_only) {
  for (Mask a = 1; a <= lhs.source().full(); ++a) {
    const Family l = lhs.row(a);
    const Family r = rhs.row(a);
    const Family bad = subset_only ? (l & ~r) : (l ^ r);
    if (bad == 0) continue;
    const Mask b = fam::members(bad).front();
    return json{{"A", lhs.source().subset_labels(a)},
                {"B", lhs.target().subset_labels(b)},
                {"lhs", fam::has(l, b)},
                {"rhs", fam::has(r, b)}};
  }
  return std::nullopt;
}

std::optional<json> crisp_equal(const CrispAmbRep& lhs, const CrispAmbRep& rhs) { return crisp_diff(lhs, rhs, false); }
std::optional<json> crisp_within(const CrispAmbRep& lhs, const CrispAmbRep& rhs) { return crisp_diff(lhs, rhs, true); }

std::optional<json> fuzzy_diff(const LFuzzyAmbRep& lhs, const LFuzzyAmbRep& rhs, bool leq_only) {
  const FiniteLattice& l = lhs.lattice();
  for (Mask a = 1; a <= lhs.source().full(); ++a) {
    for (Mask b = 1; b <= lhs.target().full(); ++b) {
      const Elem p = lhs.grade(a, b);
      const Elem q = rhs.grade(a, b);
      if (leq_only ? l.leq(p, q) : p == q) continue;
      return json{{"A", lhs.source().subset_labels(a)},
                  {"B", lhs.target().subset_labels(b)},
                  {"lhs", l.label(p)},
                  {"rhs", l.label(q)}};
    }
  }
  return std::nullopt;
}

std::optional<json> fuzzy_equal(const LFuzzyAmbRep& lhs, const LFuzzyAmbRep& rhs) { return fuzzy_diff(lhs, rhs, false); }
std::optional<json> fuzzy_within(const LFuzzyAmbRep& lhs, const LFuzzyAmbRep& rhs) { return fuzzy_diff(lhs, rhs, true); }

std::optional<json> iff_witness(bool lhs, bool rhs, const char* what_lhs, const char* what_rhs) {
  if (lhs == rhs) return std::nullopt;
  return json{{what_lhs, lhs}, {what_rhs, rhs}};
}

// The shared law list, parameterized by composition and comparisons. Rep
// is CrispAmbRep or LFuzzyAmbRep.
template <class Rep>
struct Algebra {
  std::function<Rep(const Rep&, const Rep&)> compose;
  std::function<Rep(const Rep&)> sms;
  std::function<Rep(const FiniteSpace&)> identity;
  std::function<Rep(const Rep&, const Rep&)> join;
  std::function<Rep(const Rep&, const Rep&)> meet;
  std::function<std::optional<json>(const Rep&, const Rep&)> equal;
  std::function<std::optional<json>(const Rep&, const Rep&)> within;
  std::function<bool(const Rep&)> trivial_full_row;
};

template <class Rep>
std::vector<LawDef<Rep>> shared_laws(const Algebra<Rep>& alg) {
  using Args = std::vector<const Rep*>;
  std::vector<LawDef<Rep>> out;
  auto add = [&](std::string name, bool inv, std::vector<Shape> shape, std::vector<std::string> roles, Check<Rep> c) {
    out.push_back({std::move(name), inv, std::move(shape), std::move(roles), std::move(c)});
  };
  const auto& cmp = alg.compose;

  add("anti-involution", true, {kXY}, {"R"}, [&alg](const Args& a) { return alg.equal(alg.sms(alg.sms(*a[0])), *a[0]); });
  add("involution-iff-trivial-full-row", true, {kXY}, {"R"}, [&alg](const Args& a) {
    return iff_witness(alg.sms(alg.sms(*a[0])) == *a[0], alg.trivial_full_row(*a[0]), "involutive",
                       "trivial_full_row");
  });
  add("sms-cube", true, {kXY}, {"R"}, [&alg](const Args& a) {
    const Rep s = alg.sms(*a[0]);
    return alg.equal(alg.sms(alg.sms(s)), s);
  });
  add("contravariance", true, {kXY, kYZ}, {"R", "S"}, [&alg, cmp](const Args& a) {
    return alg.equal(alg.sms(cmp(*a[0], *a[1])), cmp(alg.sms(*a[1]), alg.sms(*a[0])));
  });
  add("associativity", true, {kXY, kYZ, kZX}, {"R", "S", "T"}, [&alg, cmp](const Args& a) {
    return alg.equal(cmp(cmp(*a[0], *a[1]), *a[2]), cmp(*a[0], cmp(*a[1], *a[2])));
  });
  add("identity-left", true, {kXY}, {"R"}, [&alg, cmp](const Args& a) {
    return alg.equal(cmp(alg.identity(a[0]->source()), *a[0]), *a[0]);
  });
  add("identity-right", true, {kXY}, {"R"}, [&alg, cmp](const Args& a) {
    return alg.equal(cmp(*a[0], alg.identity(a[0]->target())), *a[0]);
  });
  // R ⊆ R ∨ R' covers every comparable pair.
  add("monotone-left", true, {kXY, kXY, kYZ}, {"R", "R2", "S"}, [&alg, cmp](const Args& a) {
    return alg.within(cmp(*a[0], *a[2]), cmp(alg.join(*a[0], *a[1]), *a[2]));
  });
  add("monotone-right", true, {kXY, kYZ, kYZ}, {"R", "S", "S2"}, [&alg, cmp](const Args& a) {
    return alg.within(cmp(*a[0], *a[1]), cmp(*a[0], alg.join(*a[1], *a[2])));
  });
  add("join-distributivity-left", true, {kXY, kYZ, kYZ}, {"R", "S", "S2"}, [&alg, cmp](const Args& a) {
    return alg.equal(cmp(*a[0], alg.join(*a[1], *a[2])), alg.join(cmp(*a[0], *a[1]), cmp(*a[0], *a[2])));
  });
  add("join-distributivity-right", true, {kXY, kXY, kYZ}, {"R", "R2", "S"}, [&alg, cmp](const Args& a) {
    return alg.equal(cmp(alg.join(*a[0], *a[1]), *a[2]), alg.join(cmp(*a[0], *a[2]), cmp(*a[1], *a[2])));
  });
  add("sms-isotone", true, {kXY, kXY}, {"R", "R2"}, [&alg](const Args& a) {
    return alg.within(alg.sms(*a[0]), alg.sms(alg.join(*a[0], *a[1])));
  });
  add("sms-join", true, {kXY, kXY}, {"R", "S"}, [&alg](const Args& a) {
    return alg.equal(alg.sms(alg.join(*a[0], *a[1])), alg.join(alg.sms(*a[0]), alg.sms(*a[1])));
  });
  add("sms-meet", true, {kXY, kXY}, {"R", "S"}, [&alg](const Args& a) {
    return alg.equal(alg.sms(alg.meet(*a[0], *a[1])), alg.meet(alg.sms(*a[0]), alg.sms(*a[1])));
  });
  add("meet-distributivity-left", false, {kXY, kYZ, kYZ}, {"R", "S", "S2"}, [&alg, cmp](const Args& a) {
    return alg.equal(cmp(*a[0], alg.meet(*a[1], *a[2])), alg.meet(cmp(*a[0], *a[1]), cmp(*a[0], *a[2])));
  });
  add("meet-distributivity-right", false, {kXY, kXY, kYZ}, {"R", "R2", "S"}, [&alg, cmp](const Args& a) {
    return alg.equal(cmp(alg.meet(*a[0], *a[1]), *a[2]), alg.meet(cmp(*a[0], *a[2]), cmp(*a[1], *a[2])));
  });
  // (f ⊚ g) ∧ h ⊆ f ⊚ (g ∧ (f^⊥ ⊚ h))
  add("modular", false, {kXY, kYZ, kXZ}, {"f", "g", "h"}, [&alg, cmp](const Args& a) {
    const Rep& f = *a[0];
    const Rep& g = *a[1];
    const Rep& h = *a[2];
    return alg.within(alg.meet(cmp(f, g), h), cmp(f, alg.meet(g, cmp(alg.sms(f), h))));
  });
  return out;
}

Algebra<CrispAmbRep> crisp_algebra() {
  return {
      [](const CrispAmbRep& r, const CrispAmbRep& s) { return compose(r, s); },
      [](const CrispAmbRep& r) { return sms(r); },
      [](const FiniteSpace& x) { return identity_rep(x); },
      [](const CrispAmbRep& r, const CrispAmbRep& s) { return join(r, s); },
      [](const CrispAmbRep& r, const CrispAmbRep& s) { return meet(r, s); },
      crisp_equal,
      crisp_within,
      [](const CrispAmbRep& r) { return has_trivial_full_row(r); },
  };
}

Algebra<LFuzzyAmbRep> fuzzy_algebra(const TNorm& tnorm) {
  return {
      [tnorm](const LFuzzyAmbRep& r, const LFuzzyAmbRep& s) { return compose(r, s, tnorm); },
      [](const LFuzzyAmbRep& r) { return sms(r); },
      [l = tnorm.lattice_ptr()](const FiniteSpace& x) { return identity_fuzzy(x, l); },
      [](const LFuzzyAmbRep& r, const LFuzzyAmbRep& s) { return join(r, s); },
      [](const LFuzzyAmbRep& r, const LFuzzyAmbRep& s) { return meet(r, s); },
      fuzzy_equal,
      fuzzy_within,
      [](const LFuzzyAmbRep& r) { return has_trivial_full_row(r); },
  };
}

Domain<CrispAmbRep> crisp_domain(const LawConfig& config) {
  Domain<CrispAmbRep> d(config, spaces_of(config), [config](const FiniteSpace& x, const FiniteSpace& y, Rng& rng) {
    RandomOptions opt;
    opt.density = density_for(config, rng);
    opt.pseudo_invertible = config.pseudo_invertible_only;
    return random_rep(x, y, rng, opt);
  });
  d.enable_pools([](const FiniteSpace& x, const FiniteSpace& y) { return enumerate_reps(x, y); },
                 [pi = config.pseudo_invertible_only](const CrispAmbRep& r) { return !pi || is_pseudo_invertible(r); });
  return d;
}

std::vector<LawDef<CrispAmbRep>> crisp_laws(const Algebra<CrispAmbRep>& alg) {
  auto out = shared_laws(alg);
  out.insert(out.begin() + 3, LawDef<CrispAmbRep>{"sms-oracle", true, {kXY}, {"R"},
                                                  [](const std::vector<const CrispAmbRep*>& a) {
                                                    return crisp_equal(sms(*a[0]), oracle::sms_definitional(*a[0]));
                                                  }});
  return out;
}

}  // namespace

json LawConfig::to_json() const {
  json j = {{"sizes", {x, y, z}},
            {"exhaustive", exhaustive},
            {"trials", trials},
            {"seed", seed},
            {"pseudo_invertible_only", pseudo_invertible_only}};
  j["density"] = density ? json(*density) : json(nullptr);
  return j;
}

json LawOutcome::to_json() const {
  return {{"law", law},
          {"kind", invariant ? "invariant" : "exploratory"},
          {"mode", exhaustive ? "exhaustive" : "sampled"},
          {"checked", checked},
          {"violations", violations},
          {"verdict", holds() ? "holds" : "counterexample"},
          {"witness", witness}};
}

bool LawReport::invariants_hold() const {
  for (const auto& l : laws) {
    if (l.invariant && !l.holds()) return false;
  }
  return true;
}

const LawOutcome* LawReport::find(const std::string& law) const {
  for (const auto& l : laws) {
    if (l.law == law) return &l;
  }
  return nullptr;
}

json LawReport::to_json() const {
  json ls = json::array();
  for (const auto& l : laws) ls.push_back(l.to_json());
  return {{"verdict", invariants_hold() ? "pass" : "violation"},
          {"suite", suite},
          {"config", config.to_json()},
          {"laws", ls}};
}

LawReport check_crisp_laws(const LawConfig& config) {
  auto domain = crisp_domain(config);
  const auto alg = crisp_algebra();
  LawReport report{"crisp", config, {}};
  for (const auto& law : crisp_laws(alg)) report.laws.push_back(domain.run(law));
  return report;
}

LawReport check_fuzzy_laws(const LawConfig& config, const TNorm& tnorm) {
  LatticePtr lattice = tnorm.lattice_ptr();
  LawConfig sampled = config;
  sampled.exhaustive = false;
  Domain<LFuzzyAmbRep> domain(sampled, spaces_of(config),
                              [config, lattice](const FiniteSpace& x, const FiniteSpace& y, Rng& rng) {
                                RandomOptions opt;
                                opt.density = density_for(config, rng);
                                opt.pseudo_invertible = config.pseudo_invertible_only;
                                return random_fuzzy_rep(x, y, lattice, rng, opt);
                              });
  const auto alg = fuzzy_algebra(tnorm);
  auto laws = shared_laws(alg);
  using Args = std::vector<const LFuzzyAmbRep*>;
  laws.push_back({"compose-oracle", true, {kXY, kYZ}, {"R", "S"}, [tnorm](const Args& a) {
                    return fuzzy_equal(compose(*a[0], *a[1], tnorm), oracle::compose_subgraph(*a[0], *a[1], tnorm));
                  }});
  // crisp inputs are the 1-cuts of the sampled pair
  laws.push_back({"embedding-functoriality", true, {kXY, kYZ}, {"R", "S"}, [tnorm, lattice](const Args& a) {
                    const CrispAmbRep r = alpha_cut(*a[0], lattice->top());
                    const CrispAmbRep s = alpha_cut(*a[1], lattice->top());
                    return fuzzy_equal(embed_crisp(compose(r, s), lattice),
                                       compose(embed_crisp(r, lattice), embed_crisp(s, lattice), tnorm));
                  }});
  laws.push_back({"cut-composition", false, {kXY, kYZ}, {"R", "S"}, [tnorm, lattice](const Args& a) {
                    const LFuzzyAmbRep rs = compose(*a[0], *a[1], tnorm);
                    for (std::size_t e = 0; e < lattice->size(); ++e) {
                      const auto alpha = static_cast<Elem>(e);
                      auto bad = crisp_equal(alpha_cut(rs, alpha),
                                             compose(alpha_cut(*a[0], alpha), alpha_cut(*a[1], alpha)));
                      if (bad) {
                        (*bad)["alpha"] = lattice->label(alpha);
                        return bad;
                      }
                    }
                    return std::optional<json>{};
                  }});
  LawReport report{"fuzzy", sampled, {}};
  for (const auto& law : laws) report.laws.push_back(domain.run(law));
  return report;
}

bool SearchReport::found() const {
  for (const auto& o : outcomes) {
    if (!o.holds()) return true;
  }
  return false;
}

json SearchReport::to_json() const {
  json parts = json::array();
  for (const auto& o : outcomes) parts.push_back(o.to_json());
  json out = {{"verdict", found() ? "counterexample" : "no-counterexample"},
              {"law", law},
              {"config", config.to_json()},
              {"outcomes", parts}};
  if (found()) {
    for (const auto& o : outcomes) {
      if (!o.holds()) {
        out["witness"] = {{"law", o.law}, {"instance", o.witness}};
        break;
      }
    }
  } else {
    bool all_exhaustive = true;
    std::size_t checked = 0;
    for (const auto& o : outcomes) {
      all_exhaustive = all_exhaustive && o.exhaustive;
      checked += o.checked;
    }
    out["certificate"] = {
        {"exhaustive", all_exhaustive},
        {"instances", checked},
        {"statement", all_exhaustive ? "no counterexample at this size" : "no counterexample among the samples"}};
  }
  return out;
}

SearchReport search(const std::string& law, const LawConfig& config) {
  std::vector<std::string> targets;
  if (law == "modular") {
    targets = {"modular"};
  } else if (law == "meet-distributivity") {
    targets = {"meet-distributivity-left", "meet-distributivity-right"};
  } else {
    throw Error("UnknownLaw", "searchable laws are 'modular' and 'meet-distributivity', got '" + law + "'");
  }
  auto domain = crisp_domain(config);
  const auto alg = crisp_algebra();
  SearchReport report{law, config, {}};
  for (const auto& def : crisp_laws(alg)) {
    if (std::find(targets.begin(), targets.end(), def.name) != targets.end()) report.outcomes.push_back(domain.run(def));
  }
  return report;
}

}  // namespace ambrel::laws
