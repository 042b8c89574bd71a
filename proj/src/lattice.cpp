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

#include "ambrel/lattice.hpp"

#include <algorithm>
#include <set>

namespace ambrel {

namespace {

Violation violation(std::string code, std::string message, nlohmann::json witness) {
  return Violation{std::move(code), std::move(message), std::move(witness)};
}

}  // namespace

std::optional<Elem> FiniteLattice::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<Elem>(i);
  }
  return std::nullopt;
}

std::vector<std::vector<bool>> FiniteLattice::order_matrix() const {
  const std::size_t n = size();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = leq_[i * n + j] != 0;
  }
  return m;
}

Checked<FiniteLattice> validate_lattice(std::vector<std::string> labels,
                                        const std::vector<std::vector<bool>>& leq,
                                        const LatticeLimits& limits) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error("MalformedInput", "lattice has no elements");
  if (n > limits.max_size || n > 255) {
    throw Error("LatticeTooLarge", std::to_string(n) + " elements exceed the limit of " +
                                       std::to_string(std::min<std::size_t>(limits.max_size, 255)));
  }
  if (std::set<std::string>(labels.begin(), labels.end()).size() != n) {
    throw Error("MalformedInput", "duplicate lattice labels");
  }
  if (leq.size() != n ||
      std::any_of(leq.begin(), leq.end(), [n](const auto& row) { return row.size() != n; })) {
    throw Error("MalformedInput", "order matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  }

  auto le = [&](std::size_t a, std::size_t b) { return static_cast<bool>(leq[a][b]); };
  const auto& lab = labels;

  for (std::size_t a = 0; a < n; ++a) {
    if (!le(a, a)) {
      return violation("NotAPartialOrder", "not reflexive at " + lab[a],
                       {{"axiom", "reflexive"}, {"a", lab[a]}});
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (le(a, b) && le(b, a)) {
        return violation("NotAPartialOrder", lab[a] + " <= " + lab[b] + " <= " + lab[a],
                         {{"axiom", "antisymmetric"}, {"a", lab[a]}, {"b", lab[b]}});
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!le(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (le(b, c) && !le(a, c)) {
          return violation("NotAPartialOrder", "not transitive through " + lab[b],
                           {{"axiom", "transitive"}, {"a", lab[a]}, {"b", lab[b]}, {"c", lab[c]}});
        }
      }
    }
  }

  auto find_bound = [&](bool below) -> std::optional<std::size_t> {
    for (std::size_t a = 0; a < n; ++a) {
      bool all = true;
      for (std::size_t b = 0; b < n && all; ++b) all = below ? le(a, b) : le(b, a);
      if (all) return a;
    }
    return std::nullopt;
  };
  const auto bottom = find_bound(true);
  if (!bottom) return violation("NoBottom", "no element is below every element", {});
  const auto top = find_bound(false);
  if (!top) return violation("NoTop", "no element is above every element", {});

  FiniteLattice out;
  out.labels_ = std::move(labels);
  out.leq_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) out.leq_[a * n + b] = le(a, b) ? 1 : 0;
  }
  out.join_.assign(n * n, 0);
  out.meet_.assign(n * n, 0);
  out.bottom_ = static_cast<Elem>(*bottom);
  out.top_ = static_cast<Elem>(*top);

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::optional<std::size_t> lub, glb;
      for (std::size_t u = 0; u < n && !lub; ++u) {
        if (!le(a, u) || !le(b, u)) continue;
        bool least = true;
        for (std::size_t v = 0; v < n && least; ++v) {
          if (le(a, v) && le(b, v)) least = le(u, v);
        }
        if (least) lub = u;
      }
      for (std::size_t l = 0; l < n && !glb; ++l) {
        if (!le(l, a) || !le(l, b)) continue;
        bool greatest = true;
        for (std::size_t v = 0; v < n && greatest; ++v) {
          if (le(v, a) && le(v, b)) greatest = le(v, l);
        }
        if (greatest) glb = l;
      }
      if (!lub || !glb) {
        const char* which = !lub ? "join" : "meet";
        return violation("MissingBound",
                         std::string("no ") + which + " for " + out.labels_[a] + ", " + out.labels_[b],
                         {{"bound", which}, {"a", out.labels_[a]}, {"b", out.labels_[b]}});
      }
      out.join_[a * n + b] = static_cast<Elem>(*lub);
      out.meet_[a * n + b] = static_cast<Elem>(*glb);
    }
  }

  out.distributive_ = true;
  for (std::size_t a = 0; a < n && out.distributive_; ++a) {
    for (std::size_t b = 0; b < n && out.distributive_; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const Elem lhs = out.meet_[a * n + out.join_[b * n + c]];
        const Elem rhs = out.join_[out.meet_[a * n + b] * n + out.meet_[a * n + c]];
        if (lhs != rhs) {
          out.distributive_ = false;
          if (limits.require_distributive) {
            return violation("NotDistributive",
                             "a^(bvc) != (a^b)v(a^c) for a=" + out.labels_[a] + ", b=" + out.labels_[b] +
                                 ", c=" + out.labels_[c],
                             {{"a", out.labels_[a]}, {"b", out.labels_[b]}, {"c", out.labels_[c]}});
          }
          break;
        }
      }
    }
  }

  out.chain_ = true;
  for (std::size_t a = 0; a < n && out.chain_; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!le(a, b) && !le(b, a)) {
        out.chain_ = false;
        break;
      }
    }
  }
  return out;
}

FiniteLattice chain_lattice(std::size_t n) {
  if (n == 0) throw Error("MalformedInput", "a chain needs at least one element");
  std::vector<std::string> labels;
  labels.reserve(n);
  if (n == 1) {
    labels = {"0"};
  } else if (n == 3) {
    labels = {"0", "m", "1"};
  } else {
    labels.push_back("0");
    for (std::size_t i = 1; i + 1 < n; ++i) labels.push_back("c" + std::to_string(i));
    labels.push_back("1");
  }
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) leq[i][j] = i <= j;
  }
  return validate_lattice(std::move(labels), leq, {.max_size = 255}).value();
}

FiniteLattice boolean_square() {
  std::vector<std::vector<bool>> leq = {
      {true, true, true, true},
      {false, true, false, true},
      {false, false, true, true},
      {false, false, false, true},
  };
  return validate_lattice({"0", "a", "b", "1"}, leq).value();
}

bool way_below(const FiniteLattice& lattice, Elem a, Elem b) { return lattice.leq(a, b); }

Elem family_join(const FiniteLattice& lattice, std::span<const Elem> elems) {
  Elem acc = lattice.bottom();
  for (Elem e : elems) acc = lattice.join(acc, e);
  return acc;
}

Elem family_meet(const FiniteLattice& lattice, std::span<const Elem> elems) {
  Elem acc = lattice.top();
  for (Elem e : elems) acc = lattice.meet(acc, e);
  return acc;
}

TNorm TNorm::meet_of(LatticePtr lattice) {
  const std::size_t n = lattice->size();
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = lattice->meet(static_cast<Elem>(a), static_cast<Elem>(b));
    }
  }
  return TNorm(std::move(lattice), std::move(table));
}

bool TNorm::is_meet() const { return table_ == meet_of(lattice_).table_; }

Checked<TNorm> validate_tnorm(LatticePtr lattice, std::vector<Elem> table) {
  const FiniteLattice& L = *lattice;
  const std::size_t n = L.size();
  if (table.size() != n * n) {
    throw Error("MalformedInput", "t-norm table must have " + std::to_string(n * n) + " entries");
  }
  for (Elem v : table) {
    if (v >= n) throw Error("MalformedInput", "t-norm table refers to a missing element");
  }
  auto op = [&](std::size_t a, std::size_t b) -> std::size_t { return table[a * n + b]; };
  auto lab = [&](std::size_t e) { return L.label(static_cast<Elem>(e)); };

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (op(a, b) != op(b, a)) {
        return Violation{"NotCommutative", lab(a) + "*" + lab(b) + " != " + lab(b) + "*" + lab(a),
                         {{"a", lab(a)}, {"b", lab(b)}}};
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (op(op(a, b), c) != op(a, op(b, c))) {
          return Violation{"NotAssociative", "(a*b)*c != a*(b*c)",
                           {{"a", lab(a)}, {"b", lab(b)}, {"c", lab(c)}}};
        }
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (op(a, L.top()) != a) {
      return Violation{"TopNotNeutral", lab(a) + "*1 != " + lab(a), {{"a", lab(a)}}};
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!L.leq(static_cast<Elem>(a), static_cast<Elem>(b))) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (!L.leq(static_cast<Elem>(op(a, c)), static_cast<Elem>(op(b, c)))) {
          return Violation{"NotMonotone", lab(a) + " <= " + lab(b) + " but a*c !<= b*c",
                           {{"a", lab(a)}, {"b", lab(b)}, {"c", lab(c)}}};
        }
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const auto lhs = op(a, L.join(static_cast<Elem>(b), static_cast<Elem>(c)));
        const auto rhs = L.join(static_cast<Elem>(op(a, b)), static_cast<Elem>(op(a, c)));
        if (lhs != rhs) {
          return Violation{"NotJoinDistributive", "a*(bvc) != (a*b)v(a*c)",
                           {{"a", lab(a)}, {"b", lab(b)}, {"c", lab(c)}}};
        }
      }
    }
  }
  return TNorm(std::move(lattice), std::move(table));
}

std::size_t chain_level(const FiniteLattice& chain, Elem e) {
  if (!chain.is_chain()) throw Error("NotAChain", "lattice is not linearly ordered");
  std::size_t below = 0;
  for (std::size_t x = 0; x < chain.size(); ++x) {
    if (x != e && chain.leq(static_cast<Elem>(x), e)) ++below;
  }
  return below;
}

Elem chain_element(const FiniteLattice& chain, std::size_t level) {
  for (std::size_t x = 0; x < chain.size(); ++x) {
    if (chain_level(chain, static_cast<Elem>(x)) == level) return static_cast<Elem>(x);
  }
  throw Error("MalformedInput", "chain has no level " + std::to_string(level));
}

TNorm lukasiewicz_tnorm(LatticePtr chain) {
  const FiniteLattice& L = *chain;
  if (!L.is_chain()) throw Error("NotAChain", "Lukasiewicz operation needs a chain");
  const std::size_t n = L.size();
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t i = chain_level(L, static_cast<Elem>(a));
      const std::size_t j = chain_level(L, static_cast<Elem>(b));
      const std::size_t level = i + j >= n - 1 ? i + j - (n - 1) : 0;
      table[a * n + b] = chain_element(L, level);
    }
  }
  return validate_tnorm(std::move(chain), std::move(table)).value();
}

}  // namespace ambrel
