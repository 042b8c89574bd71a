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

#include "ambrel/fuzzy.hpp"

#include <algorithm>
#include <set>

namespace ambrel {

namespace {

std::size_t table_size(const FiniteSpace& x, const FiniteSpace& y) {
  return std::size_t{1} << (x.size() + y.size());
}

std::size_t at(const FiniteSpace& y, Mask a, Mask b) { return (std::size_t{a} << y.size()) + b; }

void require_same_shape(const LFuzzyAmbRep& r, const LFuzzyAmbRep& s) {
  if (!(r.source() == s.source()) || !(r.target() == s.target())) {
    throw Error("SpaceMismatch", "representations live on different spaces");
  }
  if (!(r.lattice() == s.lattice())) throw Error("LatticeMismatch", "representations use different lattices");
}

nlohmann::json grade_witness(const FiniteSpace& x, const FiniteSpace& y, const FiniteLattice& l, Mask a, Mask b,
                             Elem g) {
  return {{"A", x.subset_labels(a)}, {"B", y.subset_labels(b)}, {"grade", l.label(g)}};
}

template <class F>
LFuzzyAmbRep pointwise(const LFuzzyAmbRep& r, const LFuzzyAmbRep& s, F op) {
  require_same_shape(r, s);
  std::vector<Elem> g(r.grades().size(), 0);
  for (Mask a = 1; a <= r.source().full(); ++a) {
    for (Mask b = 1; b <= r.target().full(); ++b) {
      g[at(r.target(), a, b)] = op(r.grade(a, b), s.grade(a, b));
    }
  }
  return FuzzyAccess::make(r.source(), r.target(), r.lattice_ptr(), std::move(g));
}

template <class F>
LFuzzyAmbRep tabulate(const FiniteSpace& x, const FiniteSpace& y, LatticePtr l, F grade) {
  std::vector<Elem> g(table_size(x, y), 0);
  for (Mask a = 1; a <= x.full(); ++a) {
    for (Mask b = 1; b <= y.full(); ++b) g[at(y, a, b)] = grade(a, b);
  }
  return FuzzyAccess::make(x, y, std::move(l), std::move(g));
}

}  // namespace

std::vector<Triple> LFuzzyAmbRep::subgraph() const {
  std::vector<Triple> out;
  const FiniteLattice& l = *lattice_;
  for (Mask a = 1; a <= source_.full(); ++a) {
    for (Mask b = 1; b <= target_.full(); ++b) {
      const Elem v = grade(a, b);
      for (std::size_t e = 0; e < l.size(); ++e) {
        if (l.leq(static_cast<Elem>(e), v)) out.emplace_back(a, b, static_cast<Elem>(e));
      }
    }
  }
  return out;
}

Checked<LFuzzyAmbRep> validate_fuzzy(const FiniteSpace& x, const FiniteSpace& y, LatticePtr lattice,
                                     std::vector<Elem> grades, const FuzzyLimits& limits) {
  if (x.size() > limits.max_points || y.size() > limits.max_points) {
    throw Error("SpaceTooLarge", "fuzzy grade tables allow at most " + std::to_string(limits.max_points) +
                                     " points per side");
  }
  if (grades.size() != table_size(x, y)) throw Error("MalformedInput", "grade table has the wrong size");
  const FiniteLattice& l = *lattice;
  for (Mask a = 0; a <= x.full(); ++a) {
    for (Mask b = 0; b <= y.full(); ++b) {
      Elem& g = grades[at(y, a, b)];
      if (a == 0 || b == 0) {
        g = 0;
      } else if (g >= l.size()) {
        throw Error("MalformedInput", "grade outside the lattice");
      }
    }
  }
  auto v = [&](Mask a, Mask b) { return grades[at(y, a, b)]; };

  for (Mask a = 1; a <= x.full(); ++a) {
    for (Mask a2 = 1; a2 <= x.full(); ++a2) {
      if (a2 == a || !fam::is_subset(a2, a)) continue;
      for (Mask b = 1; b <= y.full(); ++b) {
        if (!l.leq(v(a, b), v(a2, b))) {
          auto w = grade_witness(x, y, l, a, b, v(a, b));
          w["A_sub"] = x.subset_labels(a2);
          w["grade_sub"] = l.label(v(a2, b));
          return Violation{"NotAntitoneInA", "v(A', B) is not above v(A, B) for A' ⊆ A", w};
        }
      }
    }
  }
  for (Mask a = 1; a <= x.full(); ++a) {
    for (Mask b = 1; b <= y.full(); ++b) {
      for (Mask b2 : fam::members(fam::supersets_of(b, y.size()))) {
        if (!l.leq(v(a, b), v(a, b2))) {
          auto w = grade_witness(x, y, l, a, b, v(a, b));
          w["B_super"] = y.subset_labels(b2);
          w["grade_super"] = l.label(v(a, b2));
          return Violation{"NotIsotoneInB", "v(A, B') is not above v(A, B) for B ⊆ B'", w};
        }
      }
    }
  }
  for (Mask a = 1; a <= x.full(); ++a) {
    if (v(a, y.full()) != l.top()) {
      return Violation{"FullTargetNotTop", "v(A, Y) must be top", grade_witness(x, y, l, a, y.full(), v(a, y.full()))};
    }
  }
  return FuzzyAccess::make(x, y, std::move(lattice), std::move(grades));
}

Checked<LFuzzyAmbRep> fuzzy_from_subgraph(const FiniteSpace& x, const FiniteSpace& y, LatticePtr lattice,
                                          const std::vector<Triple>& triples) {
  const FiniteLattice& l = *lattice;
  const std::size_t n = l.size();
  // present[(a, b) * n + e]
  std::vector<std::uint8_t> present(table_size(x, y) * n, 0);
  auto slot = [&](Mask a, Mask b, Elem e) -> std::uint8_t& { return present[at(y, a, b) * n + e]; };
  for (const auto& [a, b, e] : triples) {
    if (a == 0 || a > x.full() || b == 0 || b > y.full() || e >= n) {
      throw Error("MalformedInput", "triple outside exp X × exp Y × L");
    }
    slot(a, b, e) = 1;
  }
  for (Mask a = 1; a <= x.full(); ++a) {
    for (Mask b = 1; b <= y.full(); ++b) {
      if (!slot(a, b, l.bottom())) {
        return Violation{"MissingFloor", "(A, B, 0) is missing",
                         {{"A", x.subset_labels(a)}, {"B", y.subset_labels(b)}}};
      }
    }
  }
  for (Mask a = 1; a <= x.full(); ++a) {
    for (Mask b = 1; b <= y.full(); ++b) {
      for (Elem e = 0; e < n; ++e) {
        if (!slot(a, b, e)) continue;
        for (Elem f = 0; f < n; ++f) {
          if (l.leq(f, e) && !slot(a, b, f)) {
            return Violation{"NotDownSetInAlpha", "(A, B, α) present but (A, B, β) missing for β ≤ α",
                             {{"A", x.subset_labels(a)}, {"B", y.subset_labels(b)}, {"alpha", l.label(e)},
                              {"beta", l.label(f)}}};
          }
        }
        for (Elem f = 0; f < n; ++f) {
          if (slot(a, b, f) && !slot(a, b, l.join(e, f))) {
            return Violation{"NotJoinClosed", "(A, B, α) and (A, B, β) present but not (A, B, α ∨ β)",
                             {{"A", x.subset_labels(a)}, {"B", y.subset_labels(b)}, {"alpha", l.label(e)},
                              {"beta", l.label(f)}}};
          }
        }
      }
    }
  }
  std::vector<Elem> grades(table_size(x, y), 0);
  for (Mask a = 1; a <= x.full(); ++a) {
    for (Mask b = 1; b <= y.full(); ++b) {
      Elem g = l.bottom();
      for (Elem e = 0; e < n; ++e) {
        if (slot(a, b, e)) g = l.join(g, e);
      }
      grades[at(y, a, b)] = g;
    }
  }
  return validate_fuzzy(x, y, std::move(lattice), std::move(grades));
}

CrispAmbRep alpha_cut(const LFuzzyAmbRep& r, Elem alpha) {
  const FiniteLattice& l = r.lattice();
  if (alpha >= l.size()) throw Error("MalformedInput", "cut level outside the lattice");
  std::vector<Family> rows(std::size_t{1} << r.source().size(), 0);
  for (Mask a = 1; a <= r.source().full(); ++a) {
    for (Mask b = 1; b <= r.target().full(); ++b) {
      if (l.leq(alpha, r.grade(a, b))) rows[a] |= fam::bit(b);
    }
  }
  return CrispAccess::make(r.source(), r.target(), std::move(rows));
}

std::vector<CrispAmbRep> cuts(const LFuzzyAmbRep& r) {
  std::vector<CrispAmbRep> out;
  for (std::size_t e = 0; e < r.lattice().size(); ++e) out.push_back(alpha_cut(r, static_cast<Elem>(e)));
  return out;
}

Checked<LFuzzyAmbRep> from_cuts(const FiniteSpace& x, const FiniteSpace& y, LatticePtr lattice,
                                const std::vector<CrispAmbRep>& family) {
  const FiniteLattice& l = *lattice;
  if (family.size() != l.size()) throw Error("MalformedInput", "need one cut per lattice element");
  for (const auto& c : family) {
    if (!(c.source() == x) || !(c.target() == y)) throw Error("SpaceMismatch", "cut on different spaces");
  }
  std::vector<Elem> grades(table_size(x, y), 0);
  for (Mask a = 1; a <= x.full(); ++a) {
    for (Mask b = 1; b <= y.full(); ++b) {
      Elem g = l.bottom();
      for (std::size_t e = 0; e < l.size(); ++e) {
        if (family[e].contains(a, b)) g = l.join(g, static_cast<Elem>(e));
      }
      grades[at(y, a, b)] = g;
      for (std::size_t e = 0; e < l.size(); ++e) {
        if (family[e].contains(a, b) != l.leq(static_cast<Elem>(e), g)) {
          return Violation{"CutFamilyInconsistent", "cut membership disagrees with the recovered grade",
                           {{"alpha", l.label(static_cast<Elem>(e))},
                            {"A", x.subset_labels(a)},
                            {"B", y.subset_labels(b)},
                            {"recovered", l.label(g)},
                            {"in_cut", family[e].contains(a, b)}}};
        }
      }
    }
  }
  return validate_fuzzy(x, y, std::move(lattice), std::move(grades), {.max_points = kMaxPoints});
}

LFuzzyAmbRep compose(const LFuzzyAmbRep& r, const LFuzzyAmbRep& s, const TNorm& tnorm) {
  if (!(r.target() == s.source())) throw Error("SpaceMismatch", "middle spaces differ");
  if (!(r.lattice() == s.lattice()) || !(r.lattice() == tnorm.lattice())) {
    throw Error("LatticeMismatch", "operands and t-norm must share one lattice");
  }
  const FiniteLattice& l = r.lattice();
  return tabulate(r.source(), s.target(), r.lattice_ptr(), [&](Mask a, Mask c) {
    Elem g = l.bottom();
    for (Mask b = 1; b <= r.target().full(); ++b) g = l.join(g, tnorm(r.grade(a, b), s.grade(b, c)));
    return g;
  });
}

LFuzzyAmbRep compose(const LFuzzyAmbRep& r, const LFuzzyAmbRep& s) {
  return compose(r, s, TNorm::meet_of(r.lattice_ptr()));
}

LFuzzyAmbRep sms(const LFuzzyAmbRep& r) {
  const FiniteLattice& l = r.lattice();
  std::vector<CrispAmbRep> inverted;
  for (std::size_t b = 0; b < l.size(); ++b) inverted.push_back(sms(alpha_cut(r, static_cast<Elem>(b))));

  std::vector<CrispAmbRep> family;
  for (std::size_t a = 0; a < l.size(); ++a) {
    const Elem alpha = static_cast<Elem>(a);
    if (alpha == l.bottom()) {
      // the subgraph floor: every pair carries grade 0
      family.push_back(top_rep(r.target(), r.source()));
      continue;
    }
    CrispAmbRep cut = top_rep(r.target(), r.source());
    for (std::size_t b = 0; b < l.size(); ++b) {
      if (way_below(l, static_cast<Elem>(b), alpha)) cut = meet(cut, inverted[b]);
    }
    family.push_back(std::move(cut));
  }
  return from_cuts(r.target(), r.source(), r.lattice_ptr(), family).value();
}

LFuzzyAmbRep join(const LFuzzyAmbRep& r, const LFuzzyAmbRep& s) {
  const FiniteLattice& l = r.lattice();
  return pointwise(r, s, [&](Elem p, Elem q) { return l.join(p, q); });
}

LFuzzyAmbRep meet(const LFuzzyAmbRep& r, const LFuzzyAmbRep& s) {
  const FiniteLattice& l = r.lattice();
  return pointwise(r, s, [&](Elem p, Elem q) { return l.meet(p, q); });
}

LFuzzyAmbRep sup_family(const FiniteSpace& x, const FiniteSpace& y, LatticePtr lattice,
                        std::span<const LFuzzyAmbRep> family) {
  LFuzzyAmbRep acc = bottom_fuzzy(x, y, std::move(lattice));
  for (const auto& r : family) acc = join(acc, r);
  return acc;
}

LFuzzyAmbRep inf_family(const FiniteSpace& x, const FiniteSpace& y, LatticePtr lattice,
                        std::span<const LFuzzyAmbRep> family) {
  LFuzzyAmbRep acc = top_fuzzy(x, y, std::move(lattice));
  for (const auto& r : family) acc = meet(acc, r);
  return acc;
}

LFuzzyAmbRep identity_fuzzy(const FiniteSpace& x, LatticePtr lattice) {
  const Elem top = lattice->top();
  const Elem bot = lattice->bottom();
  return tabulate(x, x, std::move(lattice), [&](Mask a, Mask b) { return fam::is_subset(a, b) ? top : bot; });
}

LFuzzyAmbRep top_fuzzy(const FiniteSpace& x, const FiniteSpace& y, LatticePtr lattice) {
  const Elem top = lattice->top();
  return tabulate(x, y, std::move(lattice), [&](Mask, Mask) { return top; });
}

LFuzzyAmbRep bottom_fuzzy(const FiniteSpace& x, const FiniteSpace& y, LatticePtr lattice) {
  const Elem top = lattice->top();
  const Elem bot = lattice->bottom();
  const Mask full = y.full();
  return tabulate(x, y, std::move(lattice), [&](Mask, Mask b) { return b == full ? top : bot; });
}

LFuzzyAmbRep embed_crisp(const CrispAmbRep& r, LatticePtr lattice) {
  const Elem top = lattice->top();
  const Elem bot = lattice->bottom();
  return tabulate(r.source(), r.target(), std::move(lattice),
                  [&](Mask a, Mask b) { return r.contains(a, b) ? top : bot; });
}

bool has_trivial_full_row(const LFuzzyAmbRep& r) {
  const Mask xf = r.source().full();
  for (Mask b = 1; b < r.target().full(); ++b) {
    if (r.grade(xf, b) != r.lattice().bottom()) return false;
  }
  return true;
}

bool is_pseudo_invertible(const LFuzzyAmbRep& r) { return sms(sms(r)) == r; }

std::optional<JoinGap> subgraph_union_gap(const LFuzzyAmbRep& r, const LFuzzyAmbRep& s) {
  require_same_shape(r, s);
  const FiniteLattice& l = r.lattice();
  for (Mask a = 1; a <= r.source().full(); ++a) {
    for (Mask b = 1; b <= r.target().full(); ++b) {
      // the union holds (A, B, γ) iff γ ≤ v_R or γ ≤ v_S
      const Elem p = r.grade(a, b);
      const Elem q = s.grade(a, b);
      const Elem j = l.join(p, q);
      if (!l.leq(j, p) && !l.leq(j, q)) return JoinGap{a, b, p, q};
    }
  }
  return std::nullopt;
}

UnionCounterexample union_counterexample(const FiniteSpace& x, const FiniteSpace& y, LatticePtr lattice) {
  const FiniteLattice& l = *lattice;
  if (l.is_chain()) throw Error("LatticeIsChain", "every pair of grades is comparable; unions stay join-closed");
  if (y.size() < 2) throw Error("TargetTooSmall", "need a proper subset of Y through a point");
  std::optional<std::pair<Elem, Elem>> pair;
  for (std::size_t p = 0; p < l.size() && !pair; ++p) {
    for (std::size_t q = p + 1; q < l.size(); ++q) {
      const auto ep = static_cast<Elem>(p);
      const auto eq = static_cast<Elem>(q);
      if (!l.leq(ep, eq) && !l.leq(eq, ep)) {
        pair = {ep, eq};
        break;
      }
    }
  }
  const Mask x1 = 1;  // x1 = x2: the same source point for both
  const Mask y1 = 1;
  auto graded = [&](Elem g) {
    return tabulate(x, y, lattice, [&](Mask a, Mask b) {
      if (b == y.full()) return l.top();
      if (a == x1 && (b & y1) != 0) return g;
      return l.bottom();
    });
  };
  UnionCounterexample out{graded(pair->first), graded(pair->second), {}};
  const auto gap = subgraph_union_gap(out.r, out.s);
  if (!gap) throw Error("InternalError", "constructed pair has a join-closed union");
  out.gap = *gap;
  return out;
}

}  // namespace ambrel
