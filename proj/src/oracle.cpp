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

#include "ambrel/oracle.hpp"

#include <set>

namespace ambrel::oracle {

namespace {

bool disjoint(Mask p, Mask q) { return (p & q) == 0; }

}  // namespace

CrispAmbRep sms_definitional(const CrispAmbRep& r) {
  const Mask xf = r.source().full();
  const Mask yf = r.target().full();
  std::vector<Pair> pairs;
  for (Mask bt = 1; bt <= yf; ++bt) {
    for (Mask at = 1; at <= xf; ++at) {
      bool holds = true;
      for (Mask a = 1; a <= xf && holds; ++a) {
        if (!disjoint(a, at)) continue;
        bool escape = false;
        for (Mask b = 1; b <= yf && !escape; ++b) escape = r.contains(a, b) && disjoint(b, bt);
        holds = escape;
      }
      if (holds) pairs.emplace_back(bt, at);
    }
  }
  return validate_pairs(r.target(), r.source(), pairs).value();
}

LFuzzyAmbRep compose_subgraph(const LFuzzyAmbRep& r, const LFuzzyAmbRep& s, const TNorm& tnorm) {
  const FiniteLattice& l = r.lattice();
  const auto rs = r.subgraph();
  const auto ss = s.subgraph();
  const Mask xf = r.source().full();
  const Mask zf = s.target().full();
  std::set<Triple> out;
  for (Mask a = 1; a <= xf; ++a) {
    for (Mask c = 1; c <= zf; ++c) {
      // sup over every matching pair of subgraph triples
      Elem best = l.bottom();
      for (const auto& [ra, rb, beta] : rs) {
        if (ra != a) continue;
        for (const auto& [sb, sc, gamma] : ss) {
          if (sb == rb && sc == c) best = l.join(best, tnorm(beta, gamma));
        }
      }
      for (std::size_t e = 0; e < l.size(); ++e) {
        if (l.leq(static_cast<Elem>(e), best)) out.emplace(a, c, static_cast<Elem>(e));
      }
    }
  }
  return fuzzy_from_subgraph(r.source(), s.target(), r.lattice_ptr(), {out.begin(), out.end()}).value();
}

bool way_below_definitional(const FiniteLattice& l, Elem a, Elem b) {
  const std::size_t n = l.size();
  if (n > 6) throw Error("LatticeTooLarge", "directed subsets are enumerated only for |L| <= 6");
  for (std::uint32_t d = 1; d < (1U << n); ++d) {
    std::vector<Elem> members;
    for (std::size_t e = 0; e < n; ++e) {
      if ((d >> e) & 1U) members.push_back(static_cast<Elem>(e));
    }
    bool directed = true;
    for (Elem p : members) {
      for (Elem q : members) {
        bool bounded = false;
        for (Elem u : members) bounded = bounded || (l.leq(p, u) && l.leq(q, u));
        directed = directed && bounded;
      }
    }
    if (!directed) continue;
    // sup D: the member above all others exists for finite directed D
    Elem sup = members.front();
    for (Elem p : members) sup = l.join(sup, p);
    if (!l.leq(b, sup)) continue;
    bool hit = false;
    for (Elem p : members) hit = hit || l.leq(a, p);
    if (!hit) return false;
  }
  return true;
}

Family double_traversal_oracle(std::size_t n, Family f) {
  const Mask full = (Mask{1} << n) - 1;
  auto perp = [&](Family g) {
    Family out = 0;
    for (Mask b = 1; b <= full; ++b) {
      bool meets_all = true;
      for (Mask a = 1; a <= full; ++a) {
        if (((g >> a) & 1U) && disjoint(a, b)) meets_all = false;
      }
      if (meets_all) out |= Family{1} << b;
    }
    return out;
  };
  return perp(perp(f));
}

TernaryHyperRelation sup_saturate_by_subsets(const TernaryHyperRelation& t) {
  const auto ts = t.triples();
  if (ts.size() > 12) throw Error("TooManyTriples", "subfamily enumeration is limited to 12 triples");
  const FiniteLattice& l = t.lattice();
  TernaryHyperRelation out(t.source(), t.target(), t.lattice_ptr());
  for (std::uint32_t sub = 1; sub < (1U << ts.size()); ++sub) {
    HyperFamily f = 0;
    Mask b = 0;
    Elem a = l.bottom();
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (!((sub >> i) & 1U)) continue;
      f |= std::get<0>(ts[i]);
      b |= std::get<1>(ts[i]);
      a = l.join(a, std::get<2>(ts[i]));
    }
    out.insert(f, b, a);
  }
  return out;
}

}  // namespace ambrel::oracle
