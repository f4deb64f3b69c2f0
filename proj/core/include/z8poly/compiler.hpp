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
#include <set>
#include <stdexcept>
#include <vector>

#include "z8poly/circuit.hpp"
#include "z8poly/polynomial.hpp"

namespace z8poly {

/// Tracks which polynomial variable currently carries each logical qubit.
///
/// Every qubit starts on its input variable x_q. A Hadamard gadget moves the
/// qubit onto a fresh ancilla and retires the variable it left; retired
/// variables are summed over during amplitude extraction.
class WireMap {
 public:
  WireMap() = default;
  explicit WireMap(std::size_t qubits);

  std::size_t qubit_count() const noexcept { return current_.size(); }
  VarId input_var(std::size_t qubit) const;
  VarId current_var(std::size_t qubit) const { return current_.at(qubit); }
  const std::vector<VarId>& current_vars() const noexcept { return current_; }
  std::size_t next_ancilla() const noexcept { return next_ancilla_; }
  const std::set<VarId>& retired() const noexcept { return retired_; }

  /// Moves `qubit` onto `ancilla`, which must be the next unallocated one.
  void advance(std::size_t qubit, VarId ancilla);

  /// Checks the map invariants; returns false on any violation.
  bool well_formed() const;

  friend bool operator==(const WireMap&, const WireMap&) = default;

 private:
  std::vector<VarId> current_;
  std::size_t next_ancilla_ = 0;
  std::set<VarId> retired_;
};

class CompileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fold accumulator for the gate rules.
struct GadgetState {
  PhasePoly poly;
  WireMap wires;

  static GadgetState fresh(std::size_t qubits) { return {PhasePoly(qubits), WireMap(qubits)}; }
};

struct CompilationResult {
  PhasePoly poly;
  WireMap wires;
  std::size_t n = 0;  // logical qubits
  std::size_t m = 0;  // ancillas, one per Hadamard gadget

  std::vector<VarId> final_vars() const { return wires.current_vars(); }
};

/// Applies one gate rule. Diagonal gates add terms on the current variables
/// of their operands:
///
///   Z: 4v   S: 2v   T: v   SDG: 6v   TDG: 7v   CZ: 4vw   CCZ: 4uvw
///
/// H allocates an ancilla a, adds 4va and moves the wire to a. X, Y and CNOT
/// are rewritten as HZH, ZHZH (plus constant 6 for the -i prefactor) and
/// H_t CZ H_t respectively.
///
/// Throws CompileError for macro gates or operands outside the wire map.
GadgetState apply_gate(GadgetState state, const Gate& gate);

/// Expands macros, folds apply_gate over the gates in temporal order and
/// canonicalizes. Throws CompileError if the circuit is invalid.
CompilationResult compile(const Circuit& circuit);

/// Number of ancillas compile() allocates: #H + 2(#X + #Y + #CNOT) over the
/// macro expansion (SWAP costs 6, TOFFOLI 12).
std::size_t expected_ancillas(const Circuit& circuit);

}  // namespace z8poly
