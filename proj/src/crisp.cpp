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

#include "ambrel/crisp.hpp"

#include <algorithm>
#include <bit>

namespace ambrel {

namespace {

void require_same(const FiniteSpace& a, const FiniteSpace& b, const char* what) {
  if (!(a == b)) throw Error("SpaceMismatch", std::string(what) + " spaces differ");
}

void require_subset(const FiniteSpace& s, Mask m, const char* side) {
  if (m == 0 || m > s.full()) {
    throw Error("MalformedInput", std::string(side) + " subset must be nonempty and inside its space");
  }
}

nlohmann::json pair_witness(const FiniteSpace& x, const FiniteSpace& y, Mask a, Mask b) {
  return {{"A", x.subset_labels(a)}, {"B", y.subset_labels(b)}};
}

std::size_t rows_for(const FiniteSpace& x) { return std::size_t{1} << x.size(); }

}  // namespace

std::vector<Pair> CrispAmbRep::pairs() const {
  std::vector<Pair> out;
  for (Mask a = 1; a < rows_.size(); ++a) {
    for (Mask b : fam::members(rows_[a])) out.emplace_back(a, b);
  }
  return out;
}

bool CrispAmbRep::subset_of(const CrispAmbRep& other) const {
  require_same(source_, other.source_, "source");
  require_same(target_, other.target_, "target");
  for (std::size_t a = 1; a < rows_.size(); ++a) {
    if ((rows_[a] & ~other.rows_[a]) != 0) return false;
  }
  return true;
}

Checked<CrispAmbRep> validate_rep(const FiniteSpace& x, const FiniteSpace& y, std::vector<Family> rows) {
  if (rows.size() != rows_for(x)) {
    throw Error("MalformedInput", "row table must have one entry per subset of the source");
  }
  rows[0] = 0;
  const std::size_t ny = y.size();
  for (Mask a = 1; a <= x.full(); ++a) {
    if ((rows[a] & ~fam::hyperspace(ny)) != 0) {
      throw Error("MalformedInput", "row contains a subset outside exp Y");
    }
  }
  for (Mask a = 1; a <= x.full(); ++a) {
    if (!fam::has(rows[a], y.full())) {
      return Violation{"MissingFullTarget", "(A, Y) is missing", {{"A", x.subset_labels(a)}}};
    }
  }
  for (Mask a = 1; a <= x.full(); ++a) {
    for (Mask b : fam::members(rows[a])) {
      const Family missing = fam::supersets_of(b, ny) & ~rows[a];
      if (missing != 0) {
        const Mask b2 = static_cast<Mask>(std::countr_zero(missing));
        nlohmann::json w = pair_witness(x, y, a, b);
        w["B_super"] = y.subset_labels(b2);
        return Violation{"NotUpwardClosedInB", "(A, B) present but (A, B') missing for B ⊆ B'", w};
      }
    }
  }
  for (Mask a = 1; a <= x.full(); ++a) {
    for (Mask a2 = 1; a2 <= x.full(); ++a2) {
      if (a2 == a || !fam::is_subset(a2, a)) continue;
      const Family missing = rows[a] & ~rows[a2];
      if (missing != 0) {
        const Mask b = static_cast<Mask>(std::countr_zero(missing));
        nlohmann::json w = pair_witness(x, y, a, b);
        w["A_sub"] = x.subset_labels(a2);
        return Violation{"NotAntitoneInA", "(A, B) present but (A', B) missing for A' ⊆ A", w};
      }
    }
  }
  return CrispAccess::make(x, y, std::move(rows));
}

Checked<CrispAmbRep> validate_pairs(const FiniteSpace& x, const FiniteSpace& y, const std::vector<Pair>& pairs) {
  std::vector<Family> rows(rows_for(x), 0);
  for (const auto& [a, b] : pairs) {
    require_subset(x, a, "source");
    require_subset(y, b, "target");
    rows[a] |= fam::bit(b);
  }
  return validate_rep(x, y, std::move(rows));
}

CrispAmbRep from_seed(const FiniteSpace& x, const FiniteSpace& y, const std::vector<Pair>& seed) {
  std::vector<Family> rows(rows_for(x), 0);
  for (Mask a = 1; a <= x.full(); ++a) rows[a] = fam::bit(y.full());
  for (const auto& [a, b] : seed) {
    require_subset(x, a, "source");
    require_subset(y, b, "target");
    const Family up = fam::supersets_of(b, y.size());
    for (Mask a2 : fam::members(fam::subsets_of(a) & ~Family{1})) rows[a2] |= up;
  }
  return CrispAccess::make(x, y, std::move(rows));
}

Family admissible(const CrispAmbRep& r, Mask a) {
  require_subset(r.source(), a, "source");
  return r.row(a);
}

Family unavoidable(const CrispAmbRep& r, Mask a) { return traversal(r.target().size(), admissible(r, a)); }

CrispAmbRep sms(const CrispAmbRep& r) {
  const FiniteSpace& x = r.source();
  const FiniteSpace& y = r.target();
  std::vector<Family> unav(rows_for(x), 0);
  for (Mask a = 1; a <= x.full(); ++a) unav[a] = traversal(y.size(), r.row(a));

  std::vector<Family> rows(rows_for(y), 0);
  for (Mask bt = 1; bt <= y.full(); ++bt) {
    Family g = 0;
    for (Mask a = 1; a <= x.full(); ++a) {
      if (fam::has(unav[a], bt)) g |= fam::bit(a);
    }
    rows[bt] = traversal(x.size(), g);
  }
  return CrispAccess::make(y, x, std::move(rows));
}

CrispAmbRep compose(const CrispAmbRep& r, const CrispAmbRep& s) {
  require_same(r.target(), s.source(), "middle");
  std::vector<Family> rows(rows_for(r.source()), 0);
  for (Mask a = 1; a <= r.source().full(); ++a) {
    for (Mask b : fam::members(r.row(a))) rows[a] |= s.row(b);
  }
  return CrispAccess::make(r.source(), s.target(), std::move(rows));
}

CrispAmbRep compose_closed(const CrispAmbRep& r, const CrispAmbRep& s) {
  CrispAmbRep out = compose(r, s);
  // Vietoris closure of each row would go here; it is the identity on
  // finite discrete spaces.
  return out;
}

CrispAmbRep identity_rep(const FiniteSpace& x) {
  std::vector<Family> rows(rows_for(x), 0);
  for (Mask a = 1; a <= x.full(); ++a) rows[a] = fam::supersets_of(a, x.size());
  return CrispAccess::make(x, x, std::move(rows));
}

CrispAmbRep top_rep(const FiniteSpace& x, const FiniteSpace& y) {
  std::vector<Family> rows(rows_for(x), fam::hyperspace(y.size()));
  rows[0] = 0;
  return CrispAccess::make(x, y, std::move(rows));
}

CrispAmbRep bottom_rep(const FiniteSpace& x, const FiniteSpace& y) {
  std::vector<Family> rows(rows_for(x), fam::bit(y.full()));
  rows[0] = 0;
  return CrispAccess::make(x, y, std::move(rows));
}

CrispAmbRep meet(const CrispAmbRep& r, const CrispAmbRep& s) {
  require_same(r.source(), s.source(), "source");
  require_same(r.target(), s.target(), "target");
  std::vector<Family> rows(r.rows());
  for (std::size_t a = 0; a < rows.size(); ++a) rows[a] &= s.rows()[a];
  return CrispAccess::make(r.source(), r.target(), std::move(rows));
}

CrispAmbRep join(const CrispAmbRep& r, const CrispAmbRep& s) {
  require_same(r.source(), s.source(), "source");
  require_same(r.target(), s.target(), "target");
  std::vector<Family> rows(r.rows());
  for (std::size_t a = 0; a < rows.size(); ++a) rows[a] |= s.rows()[a];
  return CrispAccess::make(r.source(), r.target(), std::move(rows));
}

CrispAmbRep mapping_rep(const FiniteSpace& x, const FiniteSpace& y, const std::vector<std::size_t>& f) {
  if (f.size() != x.size()) throw Error("MalformedInput", "map must send every source point somewhere");
  for (std::size_t t : f) {
    if (t >= y.size()) throw Error("MalformedInput", "map leaves the target space");
  }
  std::vector<Family> rows(rows_for(x), 0);
  for (Mask a = 1; a <= x.full(); ++a) {
    Mask image = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if ((a >> i) & 1U) image |= Mask{1} << f[i];
    }
    rows[a] = fam::supersets_of(image, y.size());
  }
  return CrispAccess::make(x, y, std::move(rows));
}

void check_partition(std::size_t n, const Partition& p) {
  const Mask full = (Mask{1} << n) - 1;
  Mask seen = 0;
  for (Mask c : p) {
    if (c == 0 || (c & ~full) != 0) throw Error("MalformedInput", "partition class empty or out of range");
    if ((seen & c) != 0) throw Error("MalformedInput", "partition classes overlap");
    seen |= c;
  }
  if (seen != full) throw Error("MalformedInput", "partition does not cover the space");
}

Mask upper_approx(const Partition& p, Mask a) {
  Mask out = 0;
  for (Mask c : p) {
    if ((c & a) != 0) out |= c;
  }
  return out;
}

Mask lower_approx(const Partition& p, Mask a) {
  Mask out = 0;
  for (Mask c : p) {
    if (fam::is_subset(c, a)) out |= c;
  }
  return out;
}

CrispAmbRep rough_rep(const FiniteSpace& x, const Partition& p) {
  check_partition(x.size(), p);
  std::vector<Family> rows(rows_for(x), 0);
  for (Mask a = 1; a <= x.full(); ++a) {
    const Mask ua = upper_approx(p, a);
    for (Mask b = 1; b <= x.full(); ++b) {
      if (fam::is_subset(ua, upper_approx(p, b))) rows[a] |= fam::bit(b);
    }
  }
  return CrispAccess::make(x, x, std::move(rows));
}

namespace {

// Vietoris closure of a family of subsets of a finite discrete space: every
// family is closed.
Family vietoris_closure(Family f) { return f; }

}  // namespace

bool is_strict(const CrispAmbRep& r) {
  for (Mask b = 1; b <= r.target().full(); ++b) {
    Family fiber = 0;  // RB
    for (Mask a = 1; a <= r.source().full(); ++a) {
      if (r.contains(a, b)) fiber |= fam::bit(a);
    }
    if (vietoris_closure(fiber) != fiber) return false;
  }
  return true;
}

bool satisfies_openness(const CrispAmbRep& r) {
  const FiniteSpace& x = r.source();
  // Open sets and closed neighbourhoods are arbitrary subsets here. For the
  // V_i it suffices to try singletons of B: any V meeting B contains one.
  for (Mask a = 1; a <= x.full(); ++a) {
    const Family unav = unavoidable(r, a);
    for (Mask u = a; u <= x.full(); ++u) {
      if (!fam::is_subset(a, u)) continue;
      for (Mask b : fam::members(unav)) {
        bool found = false;
        for (Mask g = a; g <= u && !found; ++g) {
          if (!fam::is_subset(a, g) || !fam::is_subset(g, u)) continue;
          found = true;
          for (Mask b2 : fam::members(r.row(g))) {
            if ((b2 & b) == 0) {
              found = false;
              break;
            }
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

bool is_pseudo_invertible(const CrispAmbRep& r) { return sms(sms(r)) == r; }

bool has_trivial_full_row(const CrispAmbRep& r) {
  return r.row(r.source().full()) == fam::bit(r.target().full());
}

bool is_open(const CrispAmbRep& r) {
  return is_strict(r) && is_pseudo_invertible(r) && is_strict(sms(r)) && satisfies_openness(r);
}

std::vector<CrispAmbRep> enumerate_reps(const FiniteSpace& x, const FiniteSpace& y) {
  if (x.size() > 3 || y.size() > 3) throw Error("SpaceTooLarge", "enumeration needs |X|, |Y| <= 3");
  const std::vector<Family> hyper = all_inclusion_hyperspaces(y.size());
  std::vector<Mask> order;
  for (Mask a = 1; a <= x.full(); ++a) order.push_back(a);
  std::stable_sort(order.begin(), order.end(),
                   [](Mask p, Mask q) { return std::popcount(p) > std::popcount(q); });

  std::vector<CrispAmbRep> out;
  std::vector<Family> rows(rows_for(x), 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == order.size()) {
      out.push_back(CrispAccess::make(x, y, rows));
      return;
    }
    const Mask a = order[i];
    Family lower = 0;  // rows of strict supersets already fixed
    for (std::size_t p = 0; p < x.size(); ++p) {
      const Mask bigger = a | (Mask{1} << p);
      if (bigger != a) lower |= rows[bigger];
    }
    for (Family h : hyper) {
      if ((lower & ~h) != 0) continue;
      rows[a] = h;
      self(self, i + 1);
    }
    rows[a] = 0;
  };
  rec(rec, 0);
  return out;
}

}  // namespace ambrel
