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

// Built-in formula suites, the seeded random formula generator, and the
// corpus / benchmark drivers behind the command-line tool.

#ifndef ILSAT_CORPUS_HPP
#define ILSAT_CORPUS_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "ilsat/formula.hpp"

namespace ilsat {

struct GeneratorParams {
  std::size_t variables = 3;      // drawn from p, q, r
  std::size_t node_budget = 12;   // core-tree size bound
  double rhd_probability = 0.35;  // binary node is |> rather than ->
  double leaf_probability = 0.3;  // early leaf when the budget allows a binary node
  double bottom_probability = 0.1;
  double negate_probability = 0.5;  // top-level "phi -> false" with phi of budget - 1
};

// Deterministic across platforms: draws raw 64-bit outputs of
// std::mt19937_64 and maps them itself instead of using <random>
// distributions.  uniform() = (x >> 11) * 2^-53, below(n) = x % n.
class FormulaGenerator {
 public:
  explicit FormulaGenerator(std::uint64_t seed, GeneratorParams params = {});

  Formula next();
  Formula generate(std::size_t budget);

 private:
  double uniform();
  std::uint64_t below(std::uint64_t n);

  std::mt19937_64 rng_;
  GeneratorParams params_;
};

struct SuiteEntry {
  std::string group;
  Formula formula;
  bool expect_valid;
};

// The 5 IL and 3 GL axiom schemata instantiated over
// {p, q, p -> q, p |> q, dia p}, deduplicated.  All valid.
std::vector<SuiteEntry> axiom_instances();

// Known non-theorems; all invalid.
std::vector<SuiteEntry> non_theorems();

// 20 box/dia-only formulas with known GL status.
std::vector<SuiteEntry> gl_regression();

struct CorpusConfig {
  bool builtin = true;
  std::size_t random_count = 0;
  std::uint64_t seed = 1;
  std::size_t max_worlds = 3;
  bool memoize = false;
};

struct CorpusLine {
  std::string group;
  std::string formula;
  std::string expected;  // VALID / INVALID / "-" for random formulas
  std::string verdict;   // VALID / INVALID / SAT / UNSAT / ERROR
  std::string check;     // what cross-check was run and its outcome
  bool ok = true;
  std::size_t depth = 0;
  std::size_t nesting = 0;
  std::size_t budget = 0;
};

struct CorpusReport {
  std::vector<CorpusLine> lines;
  std::size_t invariant_failures = 0;
  std::size_t certify_failures = 0;
  std::size_t disagreements = 0;
  std::size_t sat = 0;
  std::size_t unsat = 0;

  bool ok() const { return invariant_failures + certify_failures + disagreements == 0; }
};

// Decides one formula for satisfiability and cross-checks the answer:
// SAT answers must yield a certified witness, UNSAT answers must not be
// contradicted by the small-model oracle.
CorpusLine check_random(const std::string& group, const Formula& phi, std::size_t max_worlds, bool memoize);

CorpusReport run_corpus(const CorpusConfig& config);

std::string render_text(const CorpusReport& report);
nlohmann::ordered_json render_json(const CorpusReport& report);

struct BenchRow {
  std::size_t node_budget = 0;
  std::size_t formulas = 0;
  double mean_ms = 0;
  std::size_t max_depth = 0;
  std::size_t max_budget = 0;
};

std::vector<BenchRow> run_bench(std::uint64_t seed, std::size_t per_size, bool memoize);

}  // namespace ilsat

#endif  // ILSAT_CORPUS_HPP
