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

#include "z8poly/compiler.hpp"

#include <algorithm>

namespace z8poly {

WireMap::WireMap(std::size_t qubits) {
  current_.reserve(qubits);
  for (std::size_t q = 0; q < qubits; ++q) {
    current_.push_back(VarId::input(static_cast<std::uint32_t>(q)));
  }
}

VarId WireMap::input_var(std::size_t qubit) const {
  if (qubit >= current_.size()) throw std::out_of_range("qubit out of range");
  return VarId::input(static_cast<std::uint32_t>(qubit));
}

void WireMap::advance(std::size_t qubit, VarId ancilla) {
  if (qubit >= current_.size()) throw std::out_of_range("qubit out of range");
  if (ancilla != VarId::ancilla(static_cast<std::uint32_t>(next_ancilla_))) {
    throw std::logic_error("ancillas must be allocated in order");
  }
  retired_.insert(current_[qubit]);
  current_[qubit] = ancilla;
  ++next_ancilla_;
}

bool WireMap::well_formed() const {
  std::set<VarId> live(current_.begin(), current_.end());
  if (live.size() != current_.size()) return false;
  for (VarId v : retired_) {
    if (live.count(v) != 0) return false;
  }
  for (std::size_t k = 0; k < next_ancilla_; ++k) {
    const auto a = VarId::ancilla(static_cast<std::uint32_t>(k));
    if (live.count(a) == 0 && retired_.count(a) == 0) return false;
  }
  for (VarId v : live) {
    if (v.role == VarRole::Ancilla && v.index >= next_ancilla_) return false;
  }
  return true;
}

namespace {

void hadamard(GadgetState& s, std::size_t q) {
  const VarId from = s.wires.current_var(q);
  const VarId to = s.poly.add_ancilla();
  s.poly.accumulate(Monomial{from, to}, 4);
  s.wires.advance(q, to);
}

void phase(GadgetState& s, std::size_t q, int coeff) {
  s.poly.accumulate(Monomial{s.wires.current_var(q)}, coeff);
}

}  // namespace

GadgetState apply_gate(GadgetState state, const Gate& gate) {
  if (is_macro(gate.kind)) {
    throw CompileError(std::string("macro gate `") + std::string(mnemonic(gate.kind)) +
                       "` must be expanded before compilation");
  }
  if (gate.qubits.size() != arity(gate.kind)) {
    throw CompileError(std::string(mnemonic(gate.kind)) + ": wrong operand count");
  }
  for (std::size_t q : gate.qubits) {
    if (q >= state.wires.qubit_count()) {
      throw CompileError(std::string(mnemonic(gate.kind)) + ": qubit " + std::to_string(q) +
                         " out of range");
    }
  }
  auto& s = state;
  const auto& q = gate.qubits;
  switch (gate.kind) {
    case GateKind::Z: phase(s, q[0], 4); break;
    case GateKind::S: phase(s, q[0], 2); break;
    case GateKind::T: phase(s, q[0], 1); break;
    case GateKind::SDG: phase(s, q[0], 6); break;
    case GateKind::TDG: phase(s, q[0], 7); break;
    case GateKind::CZ:
      s.poly.accumulate(Monomial{s.wires.current_var(q[0]), s.wires.current_var(q[1])}, 4);
      break;
    case GateKind::CCZ:
      s.poly.accumulate(Monomial{s.wires.current_var(q[0]), s.wires.current_var(q[1]),
                                 s.wires.current_var(q[2])},
                        4);
      break;
    case GateKind::H: hadamard(s, q[0]); break;
    case GateKind::X:
      hadamard(s, q[0]);
      phase(s, q[0], 4);
      hadamard(s, q[0]);
      break;
    case GateKind::Y:
      // Y = -i Z H Z H: in time order H, Z, H, Z, with -i = zeta_8^6.
      hadamard(s, q[0]);
      phase(s, q[0], 4);
      hadamard(s, q[0]);
      phase(s, q[0], 4);
      s.poly.add_constant(6);
      break;
    case GateKind::CNOT:
      hadamard(s, q[1]);
      s.poly.accumulate(Monomial{s.wires.current_var(q[0]), s.wires.current_var(q[1])}, 4);
      hadamard(s, q[1]);
      break;
    case GateKind::SWAP:
    case GateKind::TOFFOLI:
      break;  // rejected above
  }
  return state;
}

CompilationResult compile(const Circuit& circuit) {
  if (auto diags = validate(circuit); !diags.empty()) {
    throw CompileError("invalid circuit: gate " + std::to_string(diags.front().gate_index) +
                       ": " + diags.front().message);
  }
  const Circuit expanded = expand_macros(circuit);
  auto state = GadgetState::fresh(expanded.qubit_count);
  for (const Gate& g : expanded.gates) state = apply_gate(std::move(state), g);

  CompilationResult result;
  result.n = expanded.qubit_count;
  result.m = state.poly.ancillas();
  result.poly = canonicalize(std::move(state.poly));
  result.wires = std::move(state.wires);
  return result;
}

std::size_t expected_ancillas(const Circuit& expanded) {
  std::size_t m = 0;
  for (const Gate& g : expanded.gates) {
    switch (g.kind) {
      case GateKind::H: m += 1; break;
      case GateKind::X:
      case GateKind::Y:
      case GateKind::CNOT: m += 2; break;
      case GateKind::SWAP: m += 6; break;
      case GateKind::TOFFOLI: m += 12; break;
      default: break;
    }
  }
  return m;
}

}  // namespace z8poly
