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

#include "ambrel/hyperencoding.hpp"

#include <bit>

namespace ambrel {

namespace {

void require_small(std::size_t n) {
  if (n > kMaxEncodedPoints) {
    throw Error("SpaceTooLarge", "the encoding works on at most " + std::to_string(kMaxEncodedPoints) + " points");
  }
}

// Families of nonempty subsets of A, as a HyperFamily.
HyperFamily below(Mask a) {
  HyperFamily out = 0;
  for (Mask b = 1; b <= a; ++b) {
    if (fam::is_subset(b, a)) out |= HyperFamily{1} << (b - 1);
  }
  return out;
}

}  // namespace

HyperFamily hyper_family(std::initializer_list<Mask> members) {
  HyperFamily out = 0;
  for (Mask m : members) {
    if (m == 0 || m > 7) throw Error("MalformedInput", "family members must be nonempty subsets of 3 points");
    out |= HyperFamily{1} << (m - 1);
  }
  return out;
}

std::vector<Mask> hyper_members(HyperFamily f) {
  std::vector<Mask> out;
  for (Mask m = 1; f >> (m - 1); ++m) {
    if ((f >> (m - 1)) & 1U) out.push_back(m);
  }
  return out;
}

Mask hyper_union(HyperFamily f) {
  Mask out = 0;
  for (Mask m : hyper_members(f)) out |= m;
  return out;
}

TernaryHyperRelation::TernaryHyperRelation(FiniteSpace x, FiniteSpace y, LatticePtr lattice)
    : source_(std::move(x)), target_(std::move(y)), lattice_(std::move(lattice)) {
  require_small(source_.size());
  require_small(target_.size());
  if (lattice_->size() > kMaxEncodedLattice) {
    throw Error("SpaceTooLarge", "the encoding works on lattices of at most " +
                                     std::to_string(kMaxEncodedLattice) + " elements");
  }
}

void TernaryHyperRelation::insert(HyperFamily f, Mask b, Elem a) {
  if (f == 0 || f >= family_limit() || b == 0 || b > target_.full() || a >= lattice_->size()) {
    throw Error("MalformedInput", "triple outside exp²X × exp Y × L");
  }
  bits_.set(slot(f, b, a));
}

std::vector<HyperTriple> TernaryHyperRelation::triples() const {
  std::vector<HyperTriple> out;
  for (HyperFamily f = 1; f < family_limit(); ++f) {
    for (Mask b = 1; b <= target_.full(); ++b) {
      for (std::size_t a = 0; a < lattice_->size(); ++a) {
        if (bits_.test(slot(f, b, static_cast<Elem>(a)))) out.emplace_back(f, b, static_cast<Elem>(a));
      }
    }
  }
  return out;
}

TernaryHyperRelation& TernaryHyperRelation::operator|=(const TernaryHyperRelation& other) {
  if (!(source_ == other.source_) || !(target_ == other.target_)) {
    throw Error("SpaceMismatch", "relations live on different spaces");
  }
  if (!(*lattice_ == *other.lattice_)) throw Error("LatticeMismatch", "relations use different lattices");
  bits_ |= other.bits_;
  return *this;
}

bool TernaryHyperRelation::subset_of(const TernaryHyperRelation& other) const {
  return (bits_ & ~other.bits_).none();
}

std::vector<HyperFamily> refinement_hyperspace(std::size_t n, HyperFamily family) {
  require_small(n);
  const HyperFamily limit = HyperFamily{1} << ((Mask{1} << n) - 1);
  if (family == 0 || family >= limit) throw Error("MalformedInput", "family must be nonempty and inside exp X");
  std::vector<HyperFamily> need;
  for (Mask a : hyper_members(family)) need.push_back(below(a));
  std::vector<HyperFamily> out;
  for (HyperFamily g = 1; g < limit; ++g) {
    bool ok = true;
    for (HyperFamily d : need) {
      if ((g & d) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(g);
  }
  return out;
}

TernaryHyperRelation subset_saturate(const TernaryHyperRelation& t) {
  TernaryHyperRelation out(t.source(), t.target(), t.lattice_ptr());
  const FiniteLattice& l = t.lattice();
  for (const auto& [f, b, a] : t.triples()) {
    for (HyperFamily g : refinement_hyperspace(t.source().size(), f)) {
      for (std::size_t e = 0; e < l.size(); ++e) {
        if (l.leq(static_cast<Elem>(e), a)) out.insert(g, b, static_cast<Elem>(e));
      }
    }
  }
  return out;
}

TernaryHyperRelation sup_saturate(const TernaryHyperRelation& t) {
  // Every fold of a nonempty subfamily is reached by merging generators
  // into earlier results one at a time.
  const FiniteLattice& l = t.lattice();
  TernaryHyperRelation out = t;
  const std::vector<HyperTriple> gens = t.triples();
  std::vector<HyperTriple> work = gens;
  while (!work.empty()) {
    const auto [f, b, a] = work.back();
    work.pop_back();
    for (const auto& [g, c, d] : gens) {
      const HyperFamily mf = f | g;
      const Mask mb = b | c;
      const Elem ma = l.join(a, d);
      if (!out.contains(mf, mb, ma)) {
        out.insert(mf, mb, ma);
        work.emplace_back(mf, mb, ma);
      }
    }
  }
  return out;
}

TernaryHyperRelation encoding_floor(const FiniteSpace& x, const FiniteSpace& y, LatticePtr lattice) {
  TernaryHyperRelation out(x, y, lattice);
  for (HyperFamily f = 1; f < out.family_limit(); ++f) {
    for (std::size_t a = 0; a < lattice->size(); ++a) out.insert(f, y.full(), static_cast<Elem>(a));
    for (Mask b = 1; b <= y.full(); ++b) out.insert(f, b, lattice->bottom());
  }
  return out;
}

TernaryHyperRelation plus(const TernaryHyperRelation& t) {
  TernaryHyperRelation base = encoding_floor(t.source(), t.target(), t.lattice_ptr());
  base |= t;
  return sup_saturate(subset_saturate(base));
}

TernaryHyperRelation encode(const LFuzzyAmbRep& r) {
  TernaryHyperRelation out(r.source(), r.target(), r.lattice_ptr());
  const FiniteLattice& l = r.lattice();
  for (HyperFamily f = 1; f < out.family_limit(); ++f) {
    const std::vector<Mask> members = hyper_members(f);
    for (Mask b = 1; b <= r.target().full(); ++b) {
      Elem s = l.bottom();
      for (Mask a : members) s = l.join(s, r.grade(a, b));
      for (std::size_t g = 0; g < l.size(); ++g) {
        if (l.leq(static_cast<Elem>(g), s)) out.insert(f, b, static_cast<Elem>(g));
      }
    }
  }
  return out;
}

TernaryHyperRelation encode_via_singletons(const LFuzzyAmbRep& r) {
  TernaryHyperRelation dot(r.source(), r.target(), r.lattice_ptr());
  for (const auto& [a, b, g] : r.subgraph()) dot.insert(HyperFamily{1} << (a - 1), b, g);
  return sup_saturate(dot);
}

TernaryHyperRelation singleton_part(const TernaryHyperRelation& t) {
  TernaryHyperRelation out(t.source(), t.target(), t.lattice_ptr());
  for (const auto& [f, b, a] : t.triples()) {
    if (std::has_single_bit(f)) out.insert(f, b, a);
  }
  return out;
}

Checked<LFuzzyAmbRep> decode(const TernaryHyperRelation& t) {
  const FiniteLattice& l = t.lattice();
  const FiniteSpace& x = t.source();
  const FiniteSpace& y = t.target();
  std::vector<Elem> grades(std::size_t{1} << (x.size() + y.size()), 0);
  for (Mask a = 1; a <= x.full(); ++a) {
    for (Mask b = 1; b <= y.full(); ++b) {
      Elem g = l.bottom();
      for (std::size_t e = 0; e < l.size(); ++e) {
        if (t.contains(HyperFamily{1} << (a - 1), b, static_cast<Elem>(e))) g = l.join(g, static_cast<Elem>(e));
      }
      grades[(std::size_t{a} << y.size()) + b] = g;
    }
  }
  return validate_fuzzy(x, y, t.lattice_ptr(), std::move(grades));
}

bool is_encoded(const TernaryHyperRelation& t) {
  const TernaryHyperRelation p = plus(t);
  return t == p && t == plus(singleton_part(t));
}

LFuzzyAmbRep family_sup(std::span<const LFuzzyAmbRep> family) {
  if (family.empty()) throw Error("MalformedInput", "family_sup needs at least one representation");
  TernaryHyperRelation acc(family[0].source(), family[0].target(), family[0].lattice_ptr());
  for (const auto& r : family) acc |= encode(r);
  return decode(plus(acc)).value();
}

}  // namespace ambrel
