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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace z8poly {

enum class GateKind { X, Y, Z, S, SDG, T, TDG, H, CZ, CNOT, CCZ, SWAP, TOFFOLI };

/// Number of qubit operands the gate kind takes (1, 2 or 3).
std::size_t arity(GateKind kind);

/// SWAP and TOFFOLI are expanded before compilation and never reach the
/// gate-rule dispatcher.
bool is_macro(GateKind kind);

/// Lower-case mnemonic used in the circuit text format.
std::string_view mnemonic(GateKind kind);

/// Case-insensitive inverse of mnemonic().
std::optional<GateKind> parse_mnemonic(std::string_view text);

/// All gate kinds in declaration order.
const std::vector<GateKind>& all_gate_kinds();

struct Gate {
  GateKind kind;
  // For CNOT: control, target. For CCZ/TOFFOLI the last operand is the target.
  std::vector<std::size_t> qubits;

  friend bool operator==(const Gate&, const Gate&) = default;
};

struct Circuit {
  std::size_t qubit_count = 0;
  std::vector<Gate> gates;  // temporal order, leftmost first

  Circuit& add(GateKind kind, std::vector<std::size_t> qubits) {
    gates.push_back(Gate{kind, std::move(qubits)});
    return *this;
  }

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// Base for errors raised while reading circuit text. Carries the 1-based
/// source line, or 0 when no line applies.
class CircuitError : public std::runtime_error {
 public:
  CircuitError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Malformed text: bad token, unknown mnemonic, wrong operand count,
/// missing `qubits` header.
class ParseError : public CircuitError {
 public:
  using CircuitError::CircuitError;
};

/// Well-formed text that violates a circuit invariant (operand out of range,
/// repeated operand).
class ValidationError : public CircuitError {
 public:
  using CircuitError::CircuitError;
};

struct Diagnostic {
  enum class Kind { OutOfRange, DuplicateOperand, WrongArity, EmptyCircuit };
  Kind kind;
  std::size_t gate_index;
  std::string message;
};

/// One diagnostic per violated invariant; empty iff the circuit is valid.
std::vector<Diagnostic> validate(const Circuit& circuit);

/// Parses the line-oriented circuit format:
///
///   # comment
///   qubits 3
///   h 0
///   cnot 0 1   # control, target
///
/// Throws ParseError or ValidationError with the offending line number.
Circuit parse_circuit(std::string_view text);

/// Canonical text form; parse_circuit(to_text(c)) == c.
std::string to_text(const Circuit& circuit);

/// Replaces SWAP and TOFFOLI by sequences over the non-macro gate set.
/// Other gates are copied unchanged, so the expansion is idempotent.
Circuit expand_macros(const Circuit& circuit);

/// The 15-gate Clifford+T sequence used for TOFFOLI(c1, c2, target).
std::vector<Gate> toffoli_sequence(std::size_t control1, std::size_t control2,
                                   std::size_t target);

}  // namespace z8poly
