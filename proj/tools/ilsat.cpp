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

// ilsat: decide satisfiability / validity of interpretability-logic
// formulas and emit certified Veltman countermodels.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ilsat/closure.hpp"
#include "ilsat/corpus.hpp"
#include "ilsat/decide.hpp"
#include "ilsat/formula.hpp"
#include "ilsat/semantics.hpp"
#include "ilsat/witness.hpp"

namespace {

constexpr int kExitParse = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitCertify = 3;
constexpr int kExitDisagree = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Inputs {
  std::string formula;
  std::string file;
};

std::vector<std::string> read_formula_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(line);
  }
  return out;
}

std::vector<ilsat::Formula> load(const Inputs& in) {
  std::vector<std::string> texts;
  if (!in.file.empty()) texts = read_formula_file(in.file);
  if (!in.formula.empty()) texts.push_back(in.formula);
  if (texts.empty()) throw UsageError("no formula given");
  std::vector<ilsat::Formula> out;
  for (const auto& t : texts) out.push_back(ilsat::parse(t));
  return out;
}

void write_witness(const std::string& path, const ilsat::VeltmanModel& model) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << ilsat::to_json(model).dump(2) << '\n';
}

// Builds and certifies the witness of a satisfiable run; false on rejection.
bool emit_witness(const ilsat::SatResult& r, const ilsat::Formula& phi, const std::string& path) {
  const ilsat::VeltmanModel model = ilsat::build_from_trace(*r.trace, *r.closure);
  const ilsat::CertifyReport cert = ilsat::certify(model, phi);
  if (!cert.ok) {
    for (const auto& p : cert.problems) std::cerr << "certification failed: " << p << '\n';
    return false;
  }
  write_witness(path, model);
  return true;
}

int run_decide(const Inputs& in, bool validity, const std::string& witness, bool memoize, bool json) {
  const auto formulas = load(in);
  if (!witness.empty() && formulas.size() != 1) throw UsageError("--witness needs exactly one formula");
  int status = 0;
  for (const auto& phi : formulas) {
    ilsat::SatResult r;
    std::string verdict;
    if (validity) {
      ilsat::ValidResult v = ilsat::decide_valid(phi, {.memoize = memoize});
      verdict = v.valid ? "VALID" : "INVALID";
      r = std::move(v.negation);
      if (!witness.empty() && r.sat && !emit_witness(r, ilsat::negation(phi), witness)) status = kExitCertify;
    } else {
      r = ilsat::decide_sat(phi, {.memoize = memoize});
      verdict = r.sat ? "SAT" : "UNSAT";
      if (!witness.empty() && r.sat && !emit_witness(r, phi, witness)) status = kExitCertify;
    }
    if (json) {
      nlohmann::ordered_json j{{"spec_version", "1.0"},
                               {"formula", ilsat::to_string(phi)},
                               {"result", verdict},
                               {"max_depth", r.stats.max_sat_depth},
                               {"depth_budget", r.closure->depth_budget()}};
      std::cout << j.dump() << '\n';
    } else {
      std::cout << verdict << '\n';
    }
  }
  return status;
}

int run_closure(const Inputs& in) {
  for (const auto& phi : load(in)) {
    const ilsat::ClosureSets c = ilsat::compute_closure(phi);
    auto strings = [](const std::vector<ilsat::Formula>& fs) {
      std::vector<std::string> out;
      for (const auto& f : fs) out.push_back(ilsat::to_string(f));
      return out;
    };
    nlohmann::ordered_json j{{"gamma_rhd", strings(c.gamma_rhd)},
                             {"gamma_pure", strings(c.gamma_pure)},
                             {"gamma_rhd_i", strings(c.gamma_rhd_i)},
                             {"depth_budget", c.depth_budget()}};
    std::cout << j.dump(2) << '\n';
  }
  return 0;
}

int run_oracle(const Inputs& in, std::size_t max_worlds) {
  for (const auto& phi : load(in)) {
    if (auto m = ilsat::oracle_sat(phi, max_worlds)) {
      std::cout << ilsat::to_json(*m).dump(2) << '\n';
    } else {
      std::cout << "NOT_FOUND(" << max_worlds << ")\n";
    }
  }
  return 0;
}

int run_certify(const std::string& model_path, const Inputs& in) {
  std::ifstream file(model_path);
  if (!file) throw UsageError("cannot open " + model_path);
  ilsat::VeltmanModel model;
  try {
    model = ilsat::model_from_json(nlohmann::json::parse(file));
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad model file: ") + e.what());
  }
  int status = 0;
  for (const auto& phi : load(in)) {
    const auto report = ilsat::certify(model, phi);
    if (report.ok) {
      std::cout << "OK\n";
    } else {
      for (const auto& p : report.problems) std::cout << "REJECTED: " << p << '\n';
      status = kExitCertify;
    }
  }
  return status;
}

int run_corpus(const ilsat::CorpusConfig& cfg, bool json) {
  const ilsat::CorpusReport report = ilsat::run_corpus(cfg);
  if (json) std::cout << ilsat::render_json(report).dump(2) << '\n';
  else std::cout << ilsat::render_text(report);
  if (report.invariant_failures) return kExitInvariant;
  if (report.certify_failures) return kExitCertify;
  if (report.disagreements) return kExitDisagree;
  return 0;
}

int run_bench(std::uint64_t seed, std::size_t per_size, bool memoize, bool json) {
  const auto rows = ilsat::run_bench(seed, per_size, memoize);
  if (json) {
    nlohmann::ordered_json j{{"spec_version", "1.0"}, {"rows", nlohmann::ordered_json::array()}};
    for (const auto& r : rows)
      j["rows"].push_back({{"node_budget", r.node_budget},
                           {"formulas", r.formulas},
                           {"mean_ms", r.mean_ms},
                           {"max_depth", r.max_depth},
                           {"max_depth_budget", r.max_budget}});
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "nodes  formulas  mean_ms    max_depth  max_budget\n";
  for (const auto& r : rows) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%5zu  %8zu  %9.3f  %9zu  %10zu\n", r.node_budget, r.formulas, r.mean_ms,
                  r.max_depth, r.max_budget);
    std::cout << buf;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision procedure for the interpretability logic IL"};
  app.require_subcommand(1);

  Inputs in;
  std::string witness;
  std::string model_path;
  bool memoize = false;
  bool json = false;
  std::size_t max_worlds = 3;
  std::size_t random = 0;
  std::uint64_t seed = 1;
  std::size_t per_size = 20;
  bool no_builtin = false;

  auto add_inputs = [&](CLI::App* cmd) {
    cmd->add_option("formula", in.formula, "Formula text");
    cmd->add_option("-f,--file", in.file, "File with one formula per line ('#' starts a comment)");
  };

  auto* sat = app.add_subcommand("sat", "Decide satisfiability");
  auto* valid = app.add_subcommand("valid", "Decide validity");
  for (auto* cmd : {sat, valid}) {
    add_inputs(cmd);
    cmd->add_option("--witness", witness, "Write a certified JSON model (SAT) / countermodel (INVALID)");
    cmd->add_flag("--memoize", memoize, "Cache sub-results (drops the polynomial space bound)");
    cmd->add_flag("--json", json, "JSON output");
  }
  auto* closure = app.add_subcommand("closure", "Dump closure sets and the depth budget");
  add_inputs(closure);
  auto* oracle = app.add_subcommand("oracle", "Exhaustive small-model search");
  add_inputs(oracle);
  oracle->add_option("--max-worlds", max_worlds, "World bound (at most 4)")->check(CLI::Range(1, 4));
  auto* cert = app.add_subcommand("certify", "Check a JSON model against a formula");
  cert->add_option("model", model_path, "Model JSON file")->required();
  add_inputs(cert);
  auto* corpus = app.add_subcommand("corpus", "Run the built-in suites and a seeded random corpus");
  corpus->add_option("--random", random, "Number of random formulas");
  corpus->add_option("--seed", seed, "Random seed");
  corpus->add_option("--max-worlds", max_worlds, "Oracle world bound (at most 4)")->check(CLI::Range(1, 4));
  corpus->add_flag("--memoize", memoize, "Cache sub-results");
  corpus->add_flag("--no-builtin", no_builtin, "Skip the built-in suites");
  corpus->add_flag("--json", json, "JSON report");
  auto* bench = app.add_subcommand("bench", "Time the decider over size-ramped random formulas");
  bench->add_option("--seed", seed, "Random seed");
  bench->add_option("--per-size", per_size, "Formulas per size");
  bench->add_flag("--memoize", memoize, "Cache sub-results");
  bench->add_flag("--json", json, "JSON output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sat->parsed()) return run_decide(in, false, witness, memoize, json);
    if (valid->parsed()) return run_decide(in, true, witness, memoize, json);
    if (closure->parsed()) return run_closure(in);
    if (oracle->parsed()) return run_oracle(in, max_worlds);
    if (cert->parsed()) return run_certify(model_path, in);
    if (corpus->parsed())
      return run_corpus({.builtin = !no_builtin, .random_count = random, .seed = seed, .max_worlds = max_worlds,
                         .memoize = memoize},
                        json);
    if (bench->parsed()) return run_bench(seed, per_size, memoize, json);
  } catch (const ilsat::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitParse;
  } catch (const UsageError& e) {
    std::cerr << e.what() << '\n';
    return kExitParse;
  } catch (const ilsat::InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << '\n';
    return kExitInvariant;
  }
  return 0;
}
