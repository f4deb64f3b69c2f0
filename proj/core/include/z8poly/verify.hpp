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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "z8poly/circuit.hpp"
#include "z8poly/compiler.hpp"
#include "z8poly/oracle.hpp"
#include "z8poly/polynomial.hpp"
#include "z8poly/transform.hpp"

namespace z8poly {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr std::size_t kVerifyQubitCap = oracle::kUnitaryQubitCap;

struct VerifyReport {
  std::string description;
  std::size_t n = 0;
  std::size_t m = 0;
  double tolerance = kDefaultTolerance;
  std::vector<double> per_input_deviation;  // indexed by basis input
  double max_deviation = 0.0;
  bool pass = false;  // max_deviation <= tolerance and no error
  std::optional<double> parseval_defect;
  double timing_ms = 0.0;
  std::optional<std::string> error;  // cap or validation problem; pass is false
  std::vector<VarId> final_vars;
  std::optional<Complex> global_phase;  // only for phase-tolerant checks
};

/// One polynomial variable per logical qubit, carrying that qubit's output.
class FinalVarMap {
 public:
  explicit FinalVarMap(std::vector<VarId> vars) : vars_(std::move(vars)) {}
  static FinalVarMap from_wires(const WireMap& wires) { return FinalVarMap(wires.current_vars()); }

  const std::vector<VarId>& vars() const noexcept { return vars_; }

  /// Throws std::invalid_argument unless the variables are pairwise
  /// distinct, one per input, and inside p's variable bounds.
  void validate(const PhasePoly& p) const;

 private:
  std::vector<VarId> vars_;
};

/// Compiles `circuit`, extracts amplitudes for every basis input and compares
/// them entrywise with the statevector oracle. Caps and invalid circuits are
/// reported through VerifyReport::error rather than thrown.
VerifyReport check_circuit(const Circuit& circuit, double tolerance = kDefaultTolerance,
                           std::string description = {});

/// Compares the amplitudes of `p` under `finals` against `reference`. With
/// `up_to_global_phase`, one phase fitted on the largest-magnitude reference
/// entry is factored out first.
///
/// Throws std::invalid_argument on a dimension mismatch or invalid map.
VerifyReport check_polynomial(const PhasePoly& p, const FinalVarMap& finals,
                              const oracle::UnitaryMatrix& reference,
                              double tolerance = kDefaultTolerance,
                              bool up_to_global_phase = false, std::string description = {});

/// Outcome of checking a hand-transcribed polynomial over every candidate
/// final-variable assignment.
struct FixtureSearch {
  std::string description;
  std::size_t candidates = 0;
  std::size_t skipped = 0;  // candidates over the internal-variable cap
  std::vector<VerifyReport> passing;
  std::optional<VerifyReport> best;  // smallest max deviation seen

  bool found() const noexcept { return !passing.empty(); }
  bool ambiguous() const noexcept { return passing.size() > 1; }
};

FixtureSearch search_final_var_maps(const PhasePoly& p, const oracle::UnitaryMatrix& reference,
                                    double tolerance, bool up_to_global_phase = true,
                                    std::string description = {});

struct CorpusOptions {
  std::size_t max_qubits = 5;
  std::size_t max_gates = 25;
  // Bounds the ancillas of the compiled circuit, and with it the number of
  // summed variables during extraction.
  std::size_t max_ancillas = 16;
};

/// Deterministic pseudo-random circuits over every gate kind; the same seed
/// always yields the same corpus.
std::vector<Circuit> random_corpus(std::uint64_t seed, std::size_t count,
                                   const CorpusOptions& options = {});

/// Single-line JSON object with the VerifyReport field names.
std::string to_json_line(const VerifyReport& report);
std::string to_json_line(const FixtureSearch& search);

}  // namespace z8poly
