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

#include "ambrel/hyperspace.hpp"

#include <array>
#include <set>

#include "ambrel/error.hpp"

namespace ambrel {

namespace {

struct Tables {
  std::array<Family, 64> down{};  // submasks of m
  std::array<Family, 64> up{};    // supermasks of m within six points
};

const Tables& tables() {
  static const Tables t = [] {
    Tables out;
    for (Mask m = 0; m < 64; ++m) {
      for (Mask s = 0; s < 64; ++s) {
        if (fam::is_subset(s, m)) out.down[m] |= fam::bit(s);
        if (fam::is_subset(m, s)) out.up[m] |= fam::bit(s);
      }
    }
    return out;
  }();
  return t;
}

}  // namespace

FiniteSpace::FiniteSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw Error("MalformedInput", "a space needs at least one point");
  if (labels_.size() > kMaxPoints) {
    throw Error("SpaceTooLarge", std::to_string(labels_.size()) + " points, at most " +
                                     std::to_string(kMaxPoints) + " supported");
  }
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != labels_.size()) {
    throw Error("MalformedInput", "duplicate point labels");
  }
}

FiniteSpace FiniteSpace::numbered(std::size_t n, std::string_view prefix) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::string(prefix) + std::to_string(i));
  return FiniteSpace(std::move(labels));
}

std::optional<std::size_t> FiniteSpace::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::vector<std::string> FiniteSpace::subset_labels(Mask m) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if ((m >> i) & 1U) out.push_back(labels_[i]);
  }
  return out;
}

Mask FiniteSpace::subset_of_labels(const std::vector<std::string>& labels) const {
  Mask m = 0;
  for (const auto& l : labels) {
    const auto i = index_of(l);
    if (!i) throw Error("MalformedInput", "unknown point '" + l + "'");
    if ((m >> *i) & 1U) throw Error("MalformedInput", "point '" + l + "' repeated in a subset");
    m |= Mask{1} << *i;
  }
  return m;
}

namespace fam {

Family subsets_of(Mask m) { return tables().down.at(m); }

Family supersets_of(Mask m, std::size_t n) { return tables().up.at(m) & all_subsets(n); }

std::vector<Mask> members(Family f) {
  std::vector<Mask> out;
  while (f != 0) {
    out.push_back(static_cast<Mask>(std::countr_zero(f)));
    f &= f - 1;
  }
  return out;
}

}  // namespace fam

Family traversal(std::size_t n, Family f) {
  const Mask full = (Mask{1} << n) - 1;
  Family out = fam::hyperspace(n);
  // B misses A exactly when B is a submask of the complement of A.
  for (Mask a : fam::members(f)) out &= ~fam::subsets_of(full & ~a);
  return out;
}

Family upward_closure(std::size_t n, Family f) {
  Family out = 0;
  for (Mask a : fam::members(f)) out |= fam::supersets_of(a, n);
  return out;
}

bool is_inclusion_hyperspace(std::size_t n, Family f) {
  if (f == 0 || fam::has(f, 0) || (f & ~fam::all_subsets(n)) != 0) return false;
  return upward_closure(n, f) == f;
}

std::vector<Mask> minimal_elements(Family f) {
  std::vector<Mask> out;
  for (Mask a : fam::members(f)) {
    // proper submasks of a that are also members
    if ((fam::subsets_of(a) & ~fam::bit(a) & f) == 0) out.push_back(a);
  }
  return out;
}

std::optional<InclusionHyperspace> InclusionHyperspace::from_family(std::size_t n, Family f) {
  if (!is_inclusion_hyperspace(n, f)) return std::nullopt;
  return InclusionHyperspace(n, f);
}

std::optional<InclusionHyperspace> InclusionHyperspace::generated_by(std::size_t n,
                                                                     const std::vector<Mask>& generators) {
  Family f = 0;
  for (Mask g : generators) {
    if (g == 0 || g >= (Mask{1} << n)) return std::nullopt;
    f |= fam::bit(g);
  }
  return from_family(n, upward_closure(n, f));
}

std::vector<Family> all_inclusion_hyperspaces(std::size_t n) {
  if (n > 4) throw Error("SpaceTooLarge", "inclusion hyperspaces are enumerated for at most 4 points");
  // Grow up-sets by adding one antichain element at a time from the top.
  std::set<Family> seen;
  std::vector<Family> stack;
  const Mask full = (Mask{1} << n) - 1;
  const Family start = fam::bit(full);
  stack.push_back(start);
  seen.insert(start);
  while (!stack.empty()) {
    const Family f = stack.back();
    stack.pop_back();
    for (Mask a = 1; a <= full; ++a) {
      if (fam::has(f, a)) continue;
      const Family g = f | fam::supersets_of(a, n);
      if (seen.insert(g).second) stack.push_back(g);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace ambrel
