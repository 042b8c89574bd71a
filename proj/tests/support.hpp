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

#ifndef AMBREL_TESTS_SUPPORT_HPP_
#define AMBREL_TESTS_SUPPORT_HPP_

#include <functional>
#include <vector>

#include "ambrel/crisp.hpp"
#include "ambrel/fuzzy.hpp"
#include "ambrel/lattice.hpp"

namespace ambrel::testing {

inline LatticePtr chain3() {
  static const LatticePtr l = share(chain_lattice(3));
  return l;
}

inline LatticePtr square() {
  static const LatticePtr l = share(boolean_square());
  return l;
}

inline Elem el(const LatticePtr& l, const char* label) { return l->find(label).value(); }

/// Crisp rep from a membership predicate on (A, B), validated.
inline Checked<CrispAmbRep> crisp_where(const FiniteSpace& x, const FiniteSpace& y,
                                        const std::function<bool(Mask, Mask)>& in) {
  std::vector<Family> rows(std::size_t{1} << x.size(), 0);
  for (Mask a = 1; a <= x.full(); ++a) {
    for (Mask b = 1; b <= y.full(); ++b) {
      if (in(a, b)) rows[a] |= Family{1} << b;
    }
  }
  return validate_rep(x, y, std::move(rows));
}

/// Fuzzy rep from a grade function, validated.
inline Checked<LFuzzyAmbRep> fuzzy_where(const FiniteSpace& x, const FiniteSpace& y, const LatticePtr& l,
                                         const std::function<Elem(Mask, Mask)>& v) {
  std::vector<Elem> g(std::size_t{1} << (x.size() + y.size()), l->bottom());
  for (Mask a = 1; a <= x.full(); ++a) {
    for (Mask b = 1; b <= y.full(); ++b) g[(std::size_t{a} << y.size()) + b] = v(a, b);
  }
  return validate_fuzzy(x, y, l, std::move(g));
}

/// Every family over the nonempty subsets of an n-point space (bit 0 clear).
inline std::vector<Family> all_families(std::size_t n) {
  const std::size_t slots = (std::size_t{1} << n) - 1;
  std::vector<Family> out;
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << slots); ++k) out.push_back(static_cast<Family>(k) << 1);
  return out;
}

}  // namespace ambrel::testing

#endif  // AMBREL_TESTS_SUPPORT_HPP_
