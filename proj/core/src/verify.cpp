// Copyright 2026 The z8poly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "z8poly/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>

#include "json.hpp"

namespace z8poly {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

VerifyReport failed(VerifyReport report, std::string message, Clock::time_point start) {
  report.error = std::move(message);
  report.pass = false;
  report.timing_ms = elapsed_ms(start);
  return report;
}

nlohmann::ordered_json report_json(const VerifyReport& r) {
  nlohmann::ordered_json j;
  j["description"] = r.description;
  j["n"] = r.n;
  j["m"] = r.m;
  j["tolerance"] = r.tolerance;
  j["per_input_deviation"] = r.per_input_deviation;
  j["max_deviation"] = r.max_deviation;
  j["pass"] = r.pass;
  j["parseval_defect"] =
      r.parseval_defect ? nlohmann::ordered_json(*r.parseval_defect) : nlohmann::ordered_json();
  j["timing_ms"] = r.timing_ms;
  if (r.error) j["error"] = *r.error;
  if (!r.final_vars.empty()) {
    auto names = nlohmann::ordered_json::array();
    for (VarId v : r.final_vars) names.push_back(to_string(v));
    j["final_vars"] = names;
  }
  if (r.global_phase) {
    j["global_phase"] = {r.global_phase->real(), r.global_phase->imag()};
  }
  return j;
}

}  // namespace

void FinalVarMap::validate(const PhasePoly& p) const {
  if (vars_.size() != p.inputs()) {
    throw std::invalid_argument("final-variable map has " + std::to_string(vars_.size()) +
                                " entries for " + std::to_string(p.inputs()) + " qubits");
  }
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (!p.contains(vars_[i])) {
      throw std::invalid_argument("final variable " + to_string(vars_[i]) +
                                  " not in polynomial");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (vars_[i] == vars_[j]) throw std::invalid_argument("final variables must be distinct");
    }
  }
}

VerifyReport check_circuit(const Circuit& circuit, double tolerance, std::string description) {
  const auto start = Clock::now();
  VerifyReport report;
  report.description = std::move(description);
  report.tolerance = tolerance;
  report.n = circuit.qubit_count;

  if (auto diags = validate(circuit); !diags.empty()) {
    return failed(std::move(report), "invalid circuit: " + diags.front().message, start);
  }
  if (circuit.qubit_count > kVerifyQubitCap) {
    return failed(std::move(report),
                  "qubit count " + std::to_string(circuit.qubit_count) + " exceeds cap " +
                      std::to_string(kVerifyQubitCap),
                  start);
  }

  const CompilationResult cr = compile(circuit);
  report.m = cr.m;
  report.final_vars = cr.final_vars();
  if (auto internal = internal_variable_count(cr.poly, report.final_vars);
      internal > kInternalVariableCap) {
    return failed(std::move(report),
                  std::to_string(internal) + " internal variables exceed cap " +
                      std::to_string(kInternalVariableCap),
                  start);
  }

  const std::size_t dim = std::size_t{1} << circuit.qubit_count;
  report.per_input_deviation.resize(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    const auto bits = basis_bits(x, circuit.qubit_count);
    const auto ours = amplitudes(cr, bits);
    const auto truth = oracle::simulate(circuit, bits);
    double worst = 0.0;
    for (std::size_t y = 0; y < dim; ++y) {
      worst = std::max(worst, std::abs(ours.values[y] - truth.values[y]));
    }
    report.per_input_deviation[x] = worst;
    report.max_deviation = std::max(report.max_deviation, worst);
  }
  if (cr.poly.variable_count() <= kNaiveTransformCap) {
    report.parseval_defect = parseval_defect(gwht_fast(phase_vector(cr.poly)));
  }
  report.pass = report.max_deviation <= tolerance;
  report.timing_ms = elapsed_ms(start);
  return report;
}

VerifyReport check_polynomial(const PhasePoly& p, const FinalVarMap& finals,
                              const oracle::UnitaryMatrix& reference, double tolerance,
                              bool up_to_global_phase, std::string description) {
  const auto start = Clock::now();
  finals.validate(p);
  const std::size_t dim = std::size_t{1} << p.inputs();
  if (reference.dim() != dim) {
    throw std::invalid_argument("reference is " + std::to_string(reference.dim()) +
                                "-dimensional, polynomial has " + std::to_string(p.inputs()) +
                                " inputs");
  }

  VerifyReport report;
  report.description = std::move(description);
  report.tolerance = tolerance;
  report.n = p.inputs();
  report.m = p.ancillas();
  report.final_vars = finals.vars();

  const auto internal = internal_variable_count(p, finals.vars());
  if (internal > kInternalVariableCap) {
    return failed(std::move(report),
                  std::to_string(internal) + " internal variables exceed cap " +
                      std::to_string(kInternalVariableCap),
                  start);
  }

  const auto ours = amplitude_matrix(p, finals.vars());
  Complex phase{1.0, 0.0};
  if (up_to_global_phase) {
    const auto data = reference.data();
    const auto pivot = static_cast<std::size_t>(
        std::max_element(data.begin(), data.end(),
                         [](Complex a, Complex b) { return std::abs(a) < std::abs(b); }) -
        data.begin());
    const Complex ratio = data[pivot] * std::conj(ours[pivot]);
    if (std::abs(ratio) > 1e-12) phase = ratio / std::abs(ratio);
    report.global_phase = phase;
  }

  report.per_input_deviation.assign(dim, 0.0);
  for (std::size_t y = 0; y < dim; ++y) {
    for (std::size_t x = 0; x < dim; ++x) {
      const double d = std::abs(phase * ours[y * dim + x] - reference(y, x));
      report.per_input_deviation[x] = std::max(report.per_input_deviation[x], d);
    }
  }
  report.max_deviation =
      *std::max_element(report.per_input_deviation.begin(), report.per_input_deviation.end());
  if (p.variable_count() <= kNaiveTransformCap) {
    report.parseval_defect = parseval_defect(gwht_fast(phase_vector(p)));
  }
  report.pass = report.max_deviation <= tolerance;
  report.timing_ms = elapsed_ms(start);
  return report;
}

FixtureSearch search_final_var_maps(const PhasePoly& p, const oracle::UnitaryMatrix& reference,
                                    double tolerance, bool up_to_global_phase,
                                    std::string description) {
  FixtureSearch search;
  search.description = std::move(description);
  const std::size_t n = p.inputs();
  const std::size_t total = p.variable_count();

  // Enumerate ordered n-tuples of distinct variables, odometer style.
  std::vector<std::size_t> pick(n, 0);
  auto distinct = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (pick[i] == pick[j]) return false;
      }
    }
    return true;
  };
  while (true) {
    if (distinct()) {
      std::vector<VarId> vars;
      for (std::size_t i : pick) vars.push_back(p.var_at(i));
      ++search.candidates;
      auto report = check_polynomial(p, FinalVarMap(vars), reference, tolerance,
                                     up_to_global_phase, search.description);
      if (report.error) {
        ++search.skipped;
      } else {
        if (!search.best || report.max_deviation < search.best->max_deviation) {
          search.best = report;
        }
        if (report.pass) search.passing.push_back(std::move(report));
      }
    }
    std::size_t i = 0;
    while (i < n && ++pick[i] == total) pick[i++] = 0;
    if (i == n) break;
  }
  return search;
}

std::vector<Circuit> random_corpus(std::uint64_t seed, std::size_t count,
                                   const CorpusOptions& options) {
  std::mt19937_64 rng(seed);
  std::vector<Circuit> corpus;
  corpus.reserve(count);
  for (std::size_t c = 0; c < count; ++c) {
    Circuit circuit;
    circuit.qubit_count = std::uniform_int_distribution<std::size_t>(1, options.max_qubits)(rng);
    const std::size_t gate_count =
        std::uniform_int_distribution<std::size_t>(1, options.max_gates)(rng);
    std::size_t ancillas = 0;
    std::vector<std::size_t> qubits(circuit.qubit_count);
    std::iota(qubits.begin(), qubits.end(), std::size_t{0});

    for (std::size_t g = 0; g < gate_count; ++g) {
      std::vector<GateKind> allowed;
      for (GateKind kind : all_gate_kinds()) {
        if (arity(kind) > circuit.qubit_count) continue;
        const Circuit probe{circuit.qubit_count, {Gate{kind, {}}}};
        if (ancillas + expected_ancillas(probe) > options.max_ancillas) continue;
        allowed.push_back(kind);
      }
      const GateKind kind =
          allowed[std::uniform_int_distribution<std::size_t>(0, allowed.size() - 1)(rng)];
      std::shuffle(qubits.begin(), qubits.end(), rng);
      Gate gate{kind, {qubits.begin(), qubits.begin() + static_cast<long>(arity(kind))}};
      ancillas += expected_ancillas(Circuit{circuit.qubit_count, {gate}});
      circuit.gates.push_back(std::move(gate));
    }
    corpus.push_back(std::move(circuit));
  }
  return corpus;
}

std::string to_json_line(const VerifyReport& report) { return report_json(report).dump(); }

std::string to_json_line(const FixtureSearch& search) {
  nlohmann::ordered_json j;
  j["description"] = search.description;
  j["kind"] = "fixture_search";
  j["candidates"] = search.candidates;
  j["skipped"] = search.skipped;
  j["pass"] = search.found();
  j["ambiguous"] = search.ambiguous();
  auto passing = nlohmann::ordered_json::array();
  for (const auto& r : search.passing) passing.push_back(report_json(r));
  j["passing"] = std::move(passing);
  j["best"] = search.best ? report_json(*search.best) : nlohmann::ordered_json();
  return j.dump();
}

}  // namespace z8poly
