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

#include "z8poly/circuit.hpp"

#include <gtest/gtest.h>

#include "z8poly/oracle.hpp"
#include "z8poly/verify.hpp"

namespace z8poly {
namespace {

TEST(ParseCircuit, SingleHadamard) {
  const Circuit c = parse_circuit("qubits 1\nh 0");
  EXPECT_EQ(c.qubit_count, 1u);
  ASSERT_EQ(c.gates.size(), 1u);
  EXPECT_EQ(c.gates[0], (Gate{GateKind::H, {0}}));
}

TEST(ParseCircuit, SampleCircuitInSourceOrder) {
  const Circuit c = parse_circuit("qubits 3\nz 0\ns 1\nh 1\ncz 0 1\nt 2\nh 2");
  Circuit want;
  want.qubit_count = 3;
  want.add(GateKind::Z, {0}).add(GateKind::S, {1}).add(GateKind::H, {1});
  want.add(GateKind::CZ, {0, 1}).add(GateKind::T, {2}).add(GateKind::H, {2});
  EXPECT_EQ(c, want);
}

TEST(ParseCircuit, CommentsBlankLinesAndCase) {
  const Circuit c = parse_circuit(
      "# leading comment\n\nQUBITS 2   # header\n  CNOT 0 1\n\n# tail\nTdg 1\n");
  ASSERT_EQ(c.gates.size(), 2u);
  EXPECT_EQ(c.gates[0], (Gate{GateKind::CNOT, {0, 1}}));
  EXPECT_EQ(c.gates[1], (Gate{GateKind::TDG, {1}}));
}

TEST(ParseCircuit, DuplicateOperandIsValidationError) {
  try {
    parse_circuit("qubits 2\ncz 0 0");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ParseCircuit, ErrorsCarryLineNumbers) {
  auto line_of = [](const char* text) {
    try {
      parse_circuit(text);
    } catch (const CircuitError& e) {
      return e.line();
    }
    return std::size_t{999};
  };
  EXPECT_EQ(line_of("qubits 2\nh 0\nfoo 1"), 3u);
  EXPECT_EQ(line_of("qubits 2\n\nh 2"), 3u);
  EXPECT_EQ(line_of("qubits 2\ncnot 0"), 2u);
  EXPECT_EQ(line_of("qubits 2\nh x"), 2u);
  EXPECT_EQ(line_of("h 0\nqubits 1"), 1u);

  EXPECT_THROW(parse_circuit("qubits 2\nfoo 1"), ParseError);
  EXPECT_THROW(parse_circuit("qubits 2\nh 5"), ValidationError);
  EXPECT_THROW(parse_circuit("# nothing\n"), ParseError);
  EXPECT_THROW(parse_circuit(""), ParseError);
  EXPECT_THROW(parse_circuit("qubits 0"), ValidationError);
  EXPECT_THROW(parse_circuit("qubits 2\nqubits 2"), ParseError);
  EXPECT_THROW(parse_circuit("qubits -1"), ParseError);
}

TEST(ParseCircuit, RoundTripsCanonicalText) {
  for (const Circuit& c : random_corpus(11, 50)) {
    const std::string text = to_text(c);
    EXPECT_EQ(parse_circuit(text), c);
    EXPECT_EQ(to_text(parse_circuit(text)), text);
  }
}

TEST(Validate, ValidCircuitHasNoDiagnostics) {
  const Circuit c = parse_circuit("qubits 3\nccz 0 1 2\nh 1\ntoffoli 2 0 1");
  EXPECT_TRUE(validate(c).empty());
}

TEST(Validate, OutOfRangeOperand) {
  Circuit c{3, {}};
  c.add(GateKind::H, {0}).add(GateKind::X, {5});
  const auto diags = validate(c);
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_EQ(diags[0].kind, Diagnostic::Kind::OutOfRange);
  EXPECT_EQ(diags[0].gate_index, 1u);
}

TEST(Validate, CczWithRepeatedIndex) {
  Circuit c{3, {}};
  c.add(GateKind::CCZ, {0, 1, 1});
  const auto diags = validate(c);
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_EQ(diags[0].kind, Diagnostic::Kind::DuplicateOperand);
}

TEST(Validate, ArityAndEmpty) {
  Circuit c{0, {}};
  EXPECT_EQ(validate(c).size(), 1u);
  Circuit d{2, {}};
  d.add(GateKind::CNOT, {0});
  ASSERT_EQ(validate(d).size(), 1u);
  EXPECT_EQ(validate(d)[0].kind, Diagnostic::Kind::WrongArity);
}

TEST(GateKinds, ArityAndMacros) {
  for (GateKind k : all_gate_kinds()) {
    EXPECT_EQ(parse_mnemonic(mnemonic(k)), k);
    const auto a = arity(k);
    EXPECT_TRUE(a >= 1 && a <= 3);
  }
  EXPECT_EQ(arity(GateKind::SWAP), 2u);
  EXPECT_EQ(arity(GateKind::TOFFOLI), 3u);
  EXPECT_TRUE(is_macro(GateKind::SWAP));
  EXPECT_TRUE(is_macro(GateKind::TOFFOLI));
  EXPECT_FALSE(is_macro(GateKind::CCZ));
  EXPECT_EQ(parse_mnemonic("ToFfOlI"), GateKind::TOFFOLI);
  EXPECT_FALSE(parse_mnemonic("rx").has_value());
}

TEST(ExpandMacros, SwapBecomesThreeCnots) {
  Circuit c{2, {}};
  c.add(GateKind::SWAP, {0, 1});
  const Circuit e = expand_macros(c);
  ASSERT_EQ(e.gates.size(), 3u);
  EXPECT_EQ(e.gates[0], (Gate{GateKind::CNOT, {0, 1}}));
  EXPECT_EQ(e.gates[1], (Gate{GateKind::CNOT, {1, 0}}));
  EXPECT_EQ(e.gates[2], (Gate{GateKind::CNOT, {0, 1}}));
  const auto product = oracle::circuit_unitary(e);
  EXPECT_LE(oracle::max_abs_diff(product, oracle::circuit_unitary(c)), 1e-12);
}

TEST(ExpandMacros, ToffoliSequenceMatchesPermutation) {
  Circuit c{3, {}};
  c.add(GateKind::TOFFOLI, {0, 1, 2});
  const Circuit e = expand_macros(c);
  EXPECT_EQ(e.gates.size(), 15u);
  for (const Gate& g : e.gates) EXPECT_FALSE(is_macro(g.kind));
  EXPECT_LE(oracle::max_abs_diff(oracle::circuit_unitary(e), oracle::circuit_unitary(c)), 1e-12);
}

TEST(ExpandMacros, EveryOperandPlacement) {
  const std::vector<std::vector<std::size_t>> orders = {
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& o : orders) {
    Circuit c{3, {}};
    c.add(GateKind::TOFFOLI, o).add(GateKind::SWAP, {o[0], o[2]});
    EXPECT_LE(oracle::max_abs_diff(oracle::circuit_unitary(expand_macros(c)),
                                   oracle::circuit_unitary(c)),
              1e-12);
  }
}

TEST(ExpandMacros, IdentityOnMacroFreeAndIdempotent) {
  const Circuit plain = parse_circuit("qubits 3\nz 0\ns 1\nh 1\ncz 0 1\nt 2\nh 2");
  EXPECT_EQ(expand_macros(plain), plain);
  for (const Circuit& c : random_corpus(5, 40)) {
    const Circuit once = expand_macros(c);
    EXPECT_EQ(expand_macros(once), once);
  }
}

}  // namespace
}  // namespace z8poly
