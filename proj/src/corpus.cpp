/* Copyright 2026 The ilsat Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "ilsat/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <unordered_set>

#include "ilsat/decide.hpp"
#include "ilsat/semantics.hpp"
#include "ilsat/witness.hpp"

namespace ilsat {

FormulaGenerator::FormulaGenerator(std::uint64_t seed, GeneratorParams params) : rng_(seed), params_(params) {}

double FormulaGenerator::uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

std::uint64_t FormulaGenerator::below(std::uint64_t n) { return rng_() % n; }

Formula FormulaGenerator::generate(std::size_t budget) {
  if (budget < 3 || uniform() < params_.leaf_probability) {
    if (uniform() < params_.bottom_probability) return Formula::bottom();
    static const char* const kNames[] = {"p", "q", "r"};
    const std::size_t vars = std::clamp<std::size_t>(params_.variables, 1, 3);
    return Formula::atom(kNames[below(vars)]);
  }
  const bool rhd = uniform() < params_.rhd_probability;
  const std::size_t left_budget = 1 + below(budget - 2);
  Formula left = generate(left_budget);
  Formula right = generate(budget - 1 - left.size());
  return rhd ? Formula::rhd(std::move(left), std::move(right))
             : Formula::implies(std::move(left), std::move(right));
}

Formula FormulaGenerator::next() {
  if (params_.node_budget >= 2 && uniform() < params_.negate_probability)
    return negation(generate(params_.node_budget - 1));
  return generate(params_.node_budget);
}

namespace {

std::vector<SuiteEntry> dedup(std::vector<SuiteEntry> entries) {
  std::unordered_set<Formula, FormulaHash> seen;
  std::vector<SuiteEntry> out;
  for (auto& e : entries)
    if (seen.insert(e.formula).second) out.push_back(std::move(e));
  return out;
}

Formula p() { return Formula::atom("p"); }
Formula q() { return Formula::atom("q"); }

}  // namespace

std::vector<SuiteEntry> axiom_instances() {
  const std::vector<Formula> args = {p(), q(), Formula::implies(p(), q()), Formula::rhd(p(), q()), diamond(p())};
  using F = Formula;
  std::vector<SuiteEntry> out;
  for (const F& a : args) {
    out.push_back({"GL-loeb", F::implies(box(F::implies(box(a), a)), box(a)), true});
    out.push_back({"IL-J5", F::rhd(diamond(a), a), true});
    for (const F& b : args) {
      out.push_back({"GL-taut", F::implies(a, F::implies(b, a)), true});
      out.push_back({"GL-K", F::implies(box(F::implies(a, b)), F::implies(box(a), box(b))), true});
      out.push_back({"IL-J1", F::implies(box(F::implies(a, b)), F::rhd(a, b)), true});
      out.push_back({"IL-J4", F::implies(F::rhd(a, b), F::implies(diamond(a), diamond(b))), true});
      for (const F& c : args) {
        out.push_back({"IL-J2", F::implies(conjunction(F::rhd(a, b), F::rhd(b, c)), F::rhd(a, c)), true});
        out.push_back({"IL-J3", F::implies(conjunction(F::rhd(a, c), F::rhd(b, c)), F::rhd(disjunction(a, b), c)), true});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const SuiteEntry& x, const SuiteEntry& y) { return x.group < y.group; });
  return dedup(std::move(out));
}

std::vector<SuiteEntry> non_theorems() {
  std::vector<SuiteEntry> out;
  for (const char* text : {"box p -> p", "p -> box p", "p |> q -> box (p -> q)", "dia true", "p |> q -> q |> p"})
    out.push_back({"non-theorem", parse(text), false});
  return out;
}

std::vector<SuiteEntry> gl_regression() {
  static const std::pair<const char*, bool> kCurated[] = {
      {"box (p -> q) -> box p -> box q", true},
      {"box (box p -> p) -> box p", true},
      {"box p -> box box p", true},
      {"box false -> box q", true},
      {"dia p -> dia (p & box ~p)", true},
      {"box (p & q) <-> (box p & box q)", true},
      {"box p -> box (q -> p)", true},
      {"dia dia p -> dia p", true},
      {"box dia true -> box false", true},
      {"dia true -> ~box dia true", true},
      {"box false | dia true", true},
      {"box p -> p", false},
      {"p -> box p", false},
      {"dia true", false},
      {"box false", false},
      {"box p | box ~p", false},
      {"dia p -> box dia p", false},
      {"box (box p -> p)", false},
      {"box p -> dia p", false},
      {"box (p | q) -> box p | box q", false},
  };
  std::vector<SuiteEntry> out;
  for (const auto& [text, valid] : kCurated) out.push_back({"GL-regression", parse(text), valid});
  return out;
}

namespace {

void fill_depth(CorpusLine& line, const SatResult& r) {
  line.depth = r.stats.max_sat_depth;
  line.nesting = r.stats.max_mcs_nesting;
  line.budget = r.closure->depth_budget();
}

// Certifies the witness of a satisfiable run; returns a short description.
std::string certify_witness(const SatResult& r, const Formula& phi, CorpusLine& line, std::size_t& failures) {
  const VeltmanModel model = build_from_trace(*r.trace, *r.closure);
  const CertifyReport cert = certify(model, phi);
  if (!cert.ok) {
    ++failures;
    line.ok = false;
    return "witness REJECTED (" + cert.problems.front() + ")";
  }
  return "witness certified (" + std::to_string(model.size()) + " worlds)";
}

CorpusLine check_entry(const SuiteEntry& e, std::size_t max_worlds, bool memoize, CorpusReport& report) {
  CorpusLine line{e.group, to_string(e.formula), e.expect_valid ? "VALID" : "INVALID", "", "", true};
  try {
    const ValidResult v = decide_valid(e.formula, {.memoize = memoize});
    fill_depth(line, v.negation);
    line.verdict = v.valid ? "VALID" : "INVALID";
    std::vector<std::string> checks;
    if (!v.valid) checks.push_back(certify_witness(v.negation, negation(e.formula), line, report.certify_failures));
    if (!e.expect_valid) {
      if (auto m = oracle_sat(negation(e.formula), max_worlds)) {
        checks.push_back("oracle countermodel (" + std::to_string(m->size()) + " worlds)");
      } else {
        checks.push_back("oracle found no countermodel up to " + std::to_string(max_worlds) + " worlds");
        ++report.disagreements;
        line.ok = false;
      }
    }
    if (v.valid != e.expect_valid) {
      checks.push_back("verdict differs from expectation");
      ++report.disagreements;
      line.ok = false;
    }
    for (std::size_t i = 0; i < checks.size(); ++i) line.check += (i ? "; " : "") + checks[i];
    if (line.check.empty()) line.check = "-";
  } catch (const InvariantViolation& err) {
    line.verdict = "ERROR";
    line.check = err.what();
    line.ok = false;
    ++report.invariant_failures;
  }
  return line;
}

}  // namespace

CorpusLine check_random(const std::string& group, const Formula& phi, std::size_t max_worlds, bool memoize) {
  CorpusLine line{group, to_string(phi), "-", "", "", true};
  CorpusReport scratch;
  try {
    const SatResult r = decide_sat(phi, {.memoize = memoize});
    fill_depth(line, r);
    line.verdict = r.sat ? "SAT" : "UNSAT";
    if (r.sat) {
      line.check = certify_witness(r, phi, line, scratch.certify_failures);
    } else if (auto m = oracle_sat(phi, max_worlds)) {
      line.check = "oracle DISAGREES: found a " + std::to_string(m->size()) + "-world model";
      line.ok = false;
    } else {
      line.check = "oracle agrees (no model up to " + std::to_string(max_worlds) + " worlds)";
    }
  } catch (const InvariantViolation& err) {
    line.verdict = "ERROR";
    line.check = err.what();
    line.ok = false;
  }
  return line;
}

CorpusReport run_corpus(const CorpusConfig& config) {
  CorpusReport report;
  if (config.builtin) {
    std::vector<SuiteEntry> suite = axiom_instances();
    for (auto& list : {non_theorems(), gl_regression()}) suite.insert(suite.end(), list.begin(), list.end());
    for (const SuiteEntry& e : suite) report.lines.push_back(check_entry(e, config.max_worlds, config.memoize, report));
  }
  FormulaGenerator gen(config.seed);
  for (std::size_t i = 0; i < config.random_count; ++i) {
    CorpusLine line = check_random("random#" + std::to_string(i), gen.next(), config.max_worlds, config.memoize);
    if (line.verdict == "ERROR") ++report.invariant_failures;
    else if (line.check.starts_with("witness REJECTED")) ++report.certify_failures;
    else if (!line.ok) ++report.disagreements;
    report.lines.push_back(std::move(line));
  }
  for (const CorpusLine& line : report.lines) {
    if (line.verdict == "SAT" || line.verdict == "INVALID") ++report.sat;
    if (line.verdict == "UNSAT" || line.verdict == "VALID") ++report.unsat;
  }
  return report;
}

std::string render_text(const CorpusReport& report) {
  std::ostringstream out;
  for (const CorpusLine& l : report.lines) {
    out << (l.ok ? "ok   " : "FAIL ") << l.group << " | " << l.formula << " | expected " << l.expected << " | "
        << l.verdict << " | depth " << l.depth << "/" << l.budget << " nesting " << l.nesting << " | " << l.check
        << '\n';
  }
  std::size_t failed = 0;
  for (const CorpusLine& l : report.lines) failed += l.ok ? 0 : 1;
  out << "summary: " << report.lines.size() << " formulas, " << failed << " failed, " << report.sat
      << " satisfiable/invalid, " << report.unsat << " unsatisfiable/valid, " << report.invariant_failures
      << " invariant failures, " << report.certify_failures << " certification failures, " << report.disagreements
      << " disagreements\n";
  return out.str();
}

nlohmann::ordered_json render_json(const CorpusReport& report) {
  nlohmann::ordered_json j;
  j["spec_version"] = "1.0";
  j["results"] = nlohmann::ordered_json::array();
  for (const CorpusLine& l : report.lines) {
    j["results"].push_back({{"group", l.group},
                            {"formula", l.formula},
                            {"expected", l.expected},
                            {"verdict", l.verdict},
                            {"check", l.check},
                            {"ok", l.ok},
                            {"depth", l.depth},
                            {"nesting", l.nesting},
                            {"budget", l.budget}});
  }
  j["summary"] = {{"formulas", report.lines.size()},
                  {"satisfiable", report.sat},
                  {"unsatisfiable", report.unsat},
                  {"invariant_failures", report.invariant_failures},
                  {"certification_failures", report.certify_failures},
                  {"disagreements", report.disagreements},
                  {"ok", report.ok()}};
  return j;
}

std::vector<BenchRow> run_bench(std::uint64_t seed, std::size_t per_size, bool memoize) {
  std::vector<BenchRow> rows;
  for (std::size_t budget = 4; budget <= 16; budget += 2) {
    GeneratorParams params;
    params.node_budget = budget;
    FormulaGenerator gen(seed + budget, params);
    BenchRow row{budget, per_size};
    double total = 0;
    for (std::size_t i = 0; i < per_size; ++i) {
      const Formula phi = gen.next();
      const auto start = std::chrono::steady_clock::now();
      const SatResult r = decide_sat(phi, {.memoize = memoize});
      total += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      row.max_depth = std::max(row.max_depth, r.stats.max_sat_depth);
      row.max_budget = std::max(row.max_budget, r.closure->depth_budget());
    }
    row.mean_ms = per_size ? total / static_cast<double>(per_size) : 0;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace ilsat
