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

// ambrel: batch front end. Exit codes: 0 ok, 1 validation failure,
// 2 law violation or counterexample, 3 malformed input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ambrel/capacity.hpp"
#include "ambrel/crisp.hpp"
#include "ambrel/fuzzy.hpp"
#include "ambrel/generators.hpp"
#include "ambrel/hyperencoding.hpp"
#include "ambrel/io.hpp"
#include "ambrel/laws.hpp"

namespace {

using ambrel::Error;
using nlohmann::json;
namespace io = ambrel::io;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kViolation = 2;
constexpr int kMalformed = 3;

struct Options {
  std::string rep;
  std::string rep2;
  std::string lattice;
  std::string tnorm = "meet";
  std::string alpha;
  std::string set;
  std::string sizes;
  std::size_t trials = 500;
  std::uint64_t seed = 1;
  bool exhaustive = false;
  std::string out;
  std::string kind;
  std::optional<double> density;
  std::string suite = "crisp";
  std::string law;
  bool pseudo_invertible = false;
};

struct Result {
  json body;
  int code = kOk;
  std::string summary;
};

void emit(const Options& opt, const Result& r) {
  const std::string text = r.body.dump(2);
  if (!opt.out.empty()) {
    std::ofstream f(opt.out);
    if (!f) throw Error("MalformedInput", "cannot write " + opt.out);
    f << text << '\n';
  }
  std::cout << text << '\n';
  if (!r.summary.empty()) std::cerr << r.summary << '\n';
}

json need_doc(const std::string& path, const char* flag) {
  if (path.empty()) throw Error("MalformedInput", std::string(flag) + " is required");
  return io::read_file(path);
}

std::vector<std::size_t> parse_sizes(const std::string& text, std::size_t want, std::vector<std::size_t> dflt) {
  if (text.empty()) return dflt;
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(part, &used);
      if (used != part.size() || v == 0) throw std::invalid_argument(part);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error("MalformedInput", "--sizes takes positive integers separated by commas");
    }
  }
  if (out.size() > want || out.empty()) {
    throw Error("MalformedInput", "--sizes takes at most " + std::to_string(want) + " values");
  }
  while (out.size() < want) out.push_back(out.back());
  return out;
}

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

/// "chain:N", "boolean-square" or a lattice JSON file.
io::LatticeSpec resolve_lattice(const std::string& spec) {
  if (spec.empty() || spec == "chain:3") return {ambrel::share(ambrel::chain_lattice(3)), std::nullopt};
  if (spec.rfind("chain:", 0) == 0) {
    const auto n = parse_sizes(spec.substr(6), 1, {});
    return {ambrel::share(ambrel::chain_lattice(n[0])), std::nullopt};
  }
  if (spec == "boolean-square") return {ambrel::share(ambrel::boolean_square()), std::nullopt};
  auto checked = io::lattice_from_json(io::read_file(spec));
  if (!checked) throw Error("MalformedInput", "lattice " + spec + " is invalid: " + checked.violation().message);
  return checked.value();
}

/// "meet", "lukasiewicz" or a lattice JSON file carrying a "tnorm" table.
ambrel::TNorm resolve_tnorm(const std::string& spec, const ambrel::LatticePtr& lattice) {
  if (spec.empty() || spec == "meet") return ambrel::TNorm::meet_of(lattice);
  if (spec == "lukasiewicz") return ambrel::lukasiewicz_tnorm(lattice);
  const auto given = resolve_lattice(spec);
  if (!(*given.lattice == *lattice)) throw Error("LatticeMismatch", "t-norm is over a different lattice");
  if (!given.tnorm) return ambrel::TNorm::meet_of(lattice);
  // rebuild over the rep's own lattice pointer
  return ambrel::validate_tnorm(lattice, given.tnorm->table()).value();
}

// Loads a crisp or fuzzy rep; validation failures are returned as results.
struct Loaded {
  std::optional<ambrel::CrispAmbRep> crisp;
  std::optional<ambrel::LFuzzyAmbRep> fuzzy;
  std::optional<ambrel::Violation> bad;
};

Loaded load_rep(const json& doc) {
  Loaded out;
  switch (io::kind_of(doc)) {
    case io::DocKind::Crisp: {
      auto r = io::crisp_from_json(doc);
      if (r) out.crisp = r.value(); else out.bad = r.violation();
      break;
    }
    case io::DocKind::Fuzzy: {
      auto r = io::fuzzy_from_json(doc);
      if (r) out.fuzzy = r.value(); else out.bad = r.violation();
      break;
    }
    default:
      throw Error("MalformedInput", "expected a crisp or fuzzy representation");
  }
  return out;
}

Result invalid(const ambrel::Violation& v) { return {io::to_json(v), kInvalid, "invalid: " + v.code + ": " + v.message}; }

Result value(json body, std::string summary = {}) { return {std::move(body), kOk, std::move(summary)}; }

Result run_validate(const Options& opt) {
  const json doc = need_doc(opt.rep, "--rep");
  json canonical;
  std::string kind;
  std::optional<ambrel::Violation> bad;
  auto take = [&](auto checked, const char* k) {
    kind = k;
    if (checked) canonical = io::to_json(checked.value()); else bad = checked.violation();
  };
  switch (io::kind_of(doc)) {
    case io::DocKind::Crisp: take(io::crisp_from_json(doc), "crisp"); break;
    case io::DocKind::Fuzzy: take(io::fuzzy_from_json(doc), "fuzzy"); break;
    case io::DocKind::Capacity: take(io::capacity_from_json(doc), "capacity"); break;
    case io::DocKind::Lattice: {
      kind = "lattice";
      auto spec = io::lattice_from_json(doc);
      if (spec) {
        const auto& s = spec.value();
        canonical = io::to_json(*s.lattice, s.tnorm ? &*s.tnorm : nullptr);
      } else {
        bad = spec.violation();
      }
      break;
    }
    case io::DocKind::Triples: {
      kind = "triples";
      const auto t = io::triples_from_json(doc);
      canonical = io::to_json(t);
      if (!ambrel::is_encoded(t)) {
        bad = ambrel::Violation{"NotEncoded", "triple set is not the encoding of a representation", json::object()};
      }
      break;
    }
    case io::DocKind::Unknown: throw Error("MalformedInput", "unrecognized document");
  }
  if (bad) return invalid(*bad);
  return {{{"verdict", "valid"}, {"kind", kind}, {"value", canonical}}, kOk, "valid " + kind};
}

Result run_sms(const Options& opt) {
  const auto l = load_rep(need_doc(opt.rep, "--rep"));
  if (l.bad) return invalid(*l.bad);
  if (l.crisp) return value(io::to_json(ambrel::sms(*l.crisp)));
  return value(io::to_json(ambrel::sms(*l.fuzzy)));
}

template <class Op>
Result run_binary(const Options& opt, Op op) {
  const auto l = load_rep(need_doc(opt.rep, "--rep"));
  const auto m = load_rep(need_doc(opt.rep2, "--rep2"));
  if (l.bad) return invalid(*l.bad);
  if (m.bad) return invalid(*m.bad);
  if (l.crisp && m.crisp) return value(io::to_json(op(*l.crisp, *m.crisp)));
  if (l.fuzzy && m.fuzzy) return value(io::to_json(op(*l.fuzzy, *m.fuzzy)));
  throw Error("MalformedInput", "both inputs must be crisp or both fuzzy");
}

Result run_compose(const Options& opt) {
  return run_binary(opt, [&opt](const auto& r, const auto& s) {
    if constexpr (std::is_same_v<std::decay_t<decltype(r)>, ambrel::CrispAmbRep>) {
      return ambrel::compose(r, s);
    } else {
      return ambrel::compose(r, s, resolve_tnorm(opt.tnorm, r.lattice_ptr()));
    }
  });
}

Result run_cut(const Options& opt) {
  const auto l = load_rep(need_doc(opt.rep, "--rep"));
  if (l.bad) return invalid(*l.bad);
  if (!l.fuzzy) throw Error("MalformedInput", "cut needs a fuzzy representation");
  const auto alpha = l.fuzzy->lattice().find(opt.alpha);
  if (!alpha) throw Error("MalformedInput", "--alpha must name a lattice element");
  return value(io::to_json(ambrel::alpha_cut(*l.fuzzy, *alpha)));
}

Result run_capacity(const Options& opt) {
  const auto l = load_rep(need_doc(opt.rep, "--rep"));
  if (l.bad) return invalid(*l.bad);
  if (!l.fuzzy) throw Error("MalformedInput", "capacity needs a fuzzy representation");
  const auto a = l.fuzzy->source().subset_of_labels(split_labels(opt.set));
  if (a == 0) throw Error("MalformedInput", "--set must name a nonempty source subset");
  return value(io::to_json(ambrel::capacity_of(*l.fuzzy, a)));
}

Result run_unavoidable(const Options& opt) {
  const auto l = load_rep(need_doc(opt.rep, "--rep"));
  if (l.bad) return invalid(*l.bad);
  if (!l.crisp) throw Error("MalformedInput", "unavoidable needs a crisp representation");
  const auto& r = *l.crisp;
  const auto a = r.source().subset_of_labels(split_labels(opt.set));
  if (a == 0) throw Error("MalformedInput", "--set must name a nonempty source subset");
  return value({{"set", io::subset_json(r.source(), a)},
                {"admissible", io::family_json(r.target(), ambrel::admissible(r, a))},
                {"unavoidable", io::family_json(r.target(), ambrel::unavoidable(r, a))}});
}

Result run_gen(const Options& opt) {
  const auto sizes = parse_sizes(opt.sizes, 2, {2, 2});
  const auto x = ambrel::FiniteSpace::numbered(sizes[0], "x");
  const auto y = ambrel::FiniteSpace::numbered(sizes[1], "y");
  ambrel::Rng rng(opt.seed);
  ambrel::RandomOptions ro;
  ro.density = opt.density.value_or(ro.density);
  ro.pseudo_invertible = opt.pseudo_invertible;
  if (ro.density < 0 || ro.density > 1) throw Error("MalformedInput", "--density must lie in [0, 1]");
  const std::string kind = opt.kind.empty() ? "crisp" : opt.kind;
  if (kind == "crisp") return value(io::to_json(ambrel::random_rep(x, y, rng, ro)));
  const auto spec = resolve_lattice(opt.lattice);
  if (kind == "fuzzy") return value(io::to_json(ambrel::random_fuzzy_rep(x, y, spec.lattice, rng, ro)));
  if (kind == "capacity") {
    return value(io::to_json(ambrel::random_capacity(y, spec.lattice, rng, opt.density.value_or(0.5))));
  }
  throw Error("MalformedInput", "--kind is crisp, fuzzy or capacity");
}

Result run_encode(const Options& opt) {
  const json doc = need_doc(opt.rep, "--rep");
  if (io::kind_of(doc) == io::DocKind::Triples) {
    auto decoded = ambrel::decode(io::triples_from_json(doc));
    if (!decoded) return invalid(decoded.violation());
    return value(io::to_json(decoded.value()));
  }
  const auto l = load_rep(doc);
  if (l.bad) return invalid(*l.bad);
  if (l.crisp) {
    const auto two = ambrel::share(ambrel::chain_lattice(2));
    return value(io::to_json(ambrel::encode(ambrel::embed_crisp(*l.crisp, two))));
  }
  return value(io::to_json(ambrel::encode(*l.fuzzy)));
}

ambrel::laws::LawConfig law_config(const Options& opt) {
  const auto sizes = parse_sizes(opt.sizes, 3, {2, 2, 2});
  ambrel::laws::LawConfig c;
  c.x = sizes[0];
  c.y = sizes[1];
  c.z = sizes[2];
  c.exhaustive = opt.exhaustive;
  c.trials = opt.trials;
  c.seed = opt.seed;
  c.pseudo_invertible_only = opt.pseudo_invertible;
  c.density = opt.density;
  if (c.density && (*c.density < 0 || *c.density > 1)) throw Error("MalformedInput", "--density must lie in [0, 1]");
  return c;
}

Result run_laws(const Options& opt) {
  const auto config = law_config(opt);
  ambrel::laws::LawReport report;
  if (opt.suite == "crisp") {
    report = ambrel::laws::check_crisp_laws(config);
  } else if (opt.suite == "fuzzy") {
    const auto spec = resolve_lattice(opt.lattice);
    const auto tnorm = opt.tnorm == "meet" && spec.tnorm ? *spec.tnorm : resolve_tnorm(opt.tnorm, spec.lattice);
    report = ambrel::laws::check_fuzzy_laws(config, tnorm);
  } else {
    throw Error("MalformedInput", "--suite is crisp or fuzzy");
  }
  std::size_t broken = 0;
  std::size_t recorded = 0;
  std::string names;
  for (const auto& l : report.laws) {
    if (l.holds()) continue;
    (l.invariant ? broken : recorded)++;
    if (l.invariant) names += " " + l.law;
  }
  std::string summary = report.suite + " laws: " + std::to_string(report.laws.size()) + " checked, " +
                        std::to_string(broken) + " invariant(s) violated" + (names.empty() ? "" : " (" + names.substr(1) + ")") +
                        ", " + std::to_string(recorded) + " exploratory counterexample(s)";
  return {report.to_json(), report.invariants_hold() ? kOk : kViolation, summary};
}

Result run_search(const Options& opt) {
  if (opt.law.empty()) throw Error("MalformedInput", "--law is required");
  const auto report = ambrel::laws::search(opt.law, law_config(opt));
  std::size_t checked = 0;
  for (const auto& o : report.outcomes) checked += o.checked;
  const std::string summary = opt.law + ": " + (report.found() ? "counterexample found" : "no counterexample") +
                              " after " + std::to_string(checked) + " instance(s)";
  return {report.to_json(), report.found() ? kViolation : kOk, summary};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ambrel: crisp and lattice-valued ambiguous representations"};
  app.require_subcommand(1);
  Options opt;

  struct Verb {
    const char* name;
    const char* help;
    Result (*run)(const Options&);
  };
  static const Verb verbs[] = {
      {"validate", "validate a representation, lattice, capacity or triple set", run_validate},
      {"sms", "pseudo-inverse of a representation", run_sms},
      {"compose", "composition --rep then --rep2", run_compose},
      {"cut", "alpha-cut of a fuzzy representation", run_cut},
      {"join", "join of two representations",
       [](const Options& o) { return run_binary(o, [](const auto& r, const auto& s) { return ambrel::join(r, s); }); }},
      {"meet", "meet of two representations",
       [](const Options& o) { return run_binary(o, [](const auto& r, const auto& s) { return ambrel::meet(r, s); }); }},
      {"capacity", "capacity of the fiber of --set", run_capacity},
      {"unavoidable", "admissible and unavoidable families of --set", run_unavoidable},
      {"gen", "seeded random representation or capacity", run_gen},
      {"encode", "hyperencoding of a representation, or decoding of a triple set", run_encode},
      {"laws", "law report over sampled or enumerated representations", run_laws},
      {"search", "counterexample search for an exploratory law", run_search},
  };

  std::vector<std::pair<CLI::App*, const Verb*>> subs;
  for (const auto& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    sub->add_option("--rep", opt.rep, "input JSON file");
    sub->add_option("--rep2", opt.rep2, "second input JSON file");
    sub->add_option("--lattice", opt.lattice, "chain:N, boolean-square or a lattice JSON file");
    sub->add_option("--tnorm", opt.tnorm, "meet, lukasiewicz or a lattice JSON file with a tnorm table");
    sub->add_option("--alpha", opt.alpha, "lattice element label");
    sub->add_option("--set", opt.set, "comma-separated point labels");
    sub->add_option("--sizes", opt.sizes, "comma-separated space sizes");
    sub->add_option("--trials", opt.trials, "samples per law");
    sub->add_option("--seed", opt.seed, "random seed");
    sub->add_flag("--exhaustive", opt.exhaustive, "enumerate instead of sampling where feasible");
    sub->add_option("--out", opt.out, "also write the JSON result here");
    sub->add_option("--kind", opt.kind, "gen: crisp, fuzzy or capacity");
    sub->add_option("--density", opt.density, "seed density in [0, 1]");
    sub->add_option("--suite", opt.suite, "laws: crisp or fuzzy");
    sub->add_option("--law", opt.law, "search: modular or meet-distributivity");
    sub->add_flag("--pseudo-invertible", opt.pseudo_invertible, "restrict inputs to pseudo-invertible reps");
    subs.emplace_back(sub, &v);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kMalformed;
  }

  for (const auto& [sub, verb] : subs) {
    if (!sub->parsed()) continue;
    try {
      const Result r = verb->run(opt);
      emit(opt, r);
      return r.code;
    } catch (const Error& e) {
      json body = {{"verdict", "error"}, {"code", e.code()}, {"message", e.what()}};
      std::cout << body.dump(2) << '\n';
      std::cerr << "error: " << e.what() << '\n';
      return kMalformed;
    } catch (const std::exception& e) {
      json body = {{"verdict", "error"}, {"code", "MalformedInput"}, {"message", e.what()}};
      std::cout << body.dump(2) << '\n';
      std::cerr << "error: " << e.what() << '\n';
      return kMalformed;
    }
  }
  return kMalformed;
}
