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

#include <gtest/gtest.h>

#include <map>

#include "support/brute_force.hpp"
#include "z8poly/oracle.hpp"
#include "z8poly/verify.hpp"

namespace z8poly {
namespace {

const VarId x0 = VarId::input(0);
const VarId x1 = VarId::input(1);
const VarId x2 = VarId::input(2);
const VarId a0 = VarId::ancilla(0);
const VarId a1 = VarId::ancilla(1);

using TermMap = std::map<Monomial, int>;

TermMap terms_of(const PhasePoly& p) {
  TermMap out;
  for (const Term& t : p.terms()) out[t.mono] = t.coeff;
  return out;
}

CompilationResult compile_text(const char* text) { return compile(parse_circuit(text)); }

TEST(Compile, SampleCircuit) {
  const auto cr = compile_text("qubits 3\nz 0\ns 1\nh 1\ncz 0 1\nt 2\nh 2");
  EXPECT_EQ(cr.m, 2u);
  EXPECT_EQ(cr.n, 3u);
  EXPECT_EQ(cr.poly.constant(), 0);
  const TermMap want = {{Monomial{x0}, 4},     {Monomial{x1}, 2},     {Monomial{x1, a0}, 4},
                        {Monomial{x0, a0}, 4}, {Monomial{x2}, 1},     {Monomial{x2, a1}, 4}};
  EXPECT_EQ(terms_of(cr.poly), want);
  EXPECT_TRUE(is_canonical(cr.poly));
  EXPECT_EQ(cr.final_vars(), (std::vector<VarId>{x0, a0, a1}));
}

TEST(Compile, EmptyCircuit) {
  const auto cr = compile(Circuit{4, {}});
  EXPECT_TRUE(cr.poly.terms().empty());
  EXPECT_EQ(cr.poly.constant(), 0);
  EXPECT_EQ(cr.m, 0u);
  for (std::size_t q = 0; q < 4; ++q) EXPECT_EQ(cr.wires.current_var(q), cr.wires.input_var(q));
}

struct RuleCase {
  const char* circuit;
  TermMap terms;
  int constant;
  std::size_t m;
};

TEST(Compile, GateRuleTable) {
  const std::vector<RuleCase> cases = {
      {"qubits 1\nz 0", {{Monomial{x0}, 4}}, 0, 0},
      {"qubits 1\ns 0", {{Monomial{x0}, 2}}, 0, 0},
      {"qubits 1\nt 0", {{Monomial{x0}, 1}}, 0, 0},
      {"qubits 1\nsdg 0", {{Monomial{x0}, 6}}, 0, 0},
      {"qubits 1\ntdg 0", {{Monomial{x0}, 7}}, 0, 0},
      {"qubits 2\ncz 0 1", {{Monomial{x0, x1}, 4}}, 0, 0},
      {"qubits 3\nccz 0 1 2", {{Monomial{x0, x1, x2}, 4}}, 0, 0},
      {"qubits 1\nh 0", {{Monomial{x0, a0}, 4}}, 0, 1},
      {"qubits 1\nx 0", {{Monomial{x0, a0}, 4}, {Monomial{a0}, 4}, {Monomial{a0, a1}, 4}}, 0, 2},
      {"qubits 1\ny 0",
       {{Monomial{x0, a0}, 4}, {Monomial{a0}, 4}, {Monomial{a0, a1}, 4}, {Monomial{a1}, 4}},
       6,
       2},
      {"qubits 2\ncnot 0 1",
       {{Monomial{x1, a0}, 4}, {Monomial{x0, a0}, 4}, {Monomial{a0, a1}, 4}},
       0,
       2},
  };
  for (const auto& c : cases) {
    SCOPED_TRACE(c.circuit);
    const auto cr = compile_text(c.circuit);
    EXPECT_EQ(terms_of(cr.poly), c.terms);
    EXPECT_EQ(cr.poly.constant(), c.constant);
    EXPECT_EQ(cr.m, c.m);
  }
}

TEST(ApplyGate, HadamardMovesWire) {
  auto s = apply_gate(GadgetState::fresh(1), Gate{GateKind::H, {0}});
  EXPECT_EQ(s.wires.current_var(0), a0);
  EXPECT_EQ(s.wires.retired(), (std::set<VarId>{x0}));
  EXPECT_EQ(s.wires.next_ancilla(), 1u);
  EXPECT_TRUE(s.wires.well_formed());

  s = apply_gate(std::move(s), Gate{GateKind::X, {0}});
  EXPECT_EQ(s.wires.current_var(0), VarId::ancilla(2));
  EXPECT_EQ(s.wires.retired(), (std::set<VarId>{x0, a0, a1}));
}

TEST(ApplyGate, RejectsMacrosAndBadOperands) {
  EXPECT_THROW(apply_gate(GadgetState::fresh(2), Gate{GateKind::SWAP, {0, 1}}), CompileError);
  EXPECT_THROW(apply_gate(GadgetState::fresh(3), Gate{GateKind::TOFFOLI, {0, 1, 2}}),
               CompileError);
  EXPECT_THROW(apply_gate(GadgetState::fresh(1), Gate{GateKind::H, {3}}), CompileError);
  EXPECT_THROW(apply_gate(GadgetState::fresh(2), Gate{GateKind::CZ, {0}}), CompileError);
  Circuit bad{2, {}};
  bad.add(GateKind::CZ, {1, 1});
  EXPECT_THROW(compile(bad), CompileError);
}

TEST(Compile, SwapMacroShape) {
  const auto cr = compile_text("qubits 2\nswap 0 1");
  EXPECT_EQ(cr.m, 6u);
  EXPECT_EQ(cr.poly.terms().size(), 9u);
  for (const Term& t : cr.poly.terms()) {
    EXPECT_EQ(t.mono.degree(), 2u);
    EXPECT_EQ(t.coeff, 4);
  }
}

TEST(Compile, ToffoliMacroUsesTwelveAncillas) {
  const auto cr = compile_text("qubits 3\ntoffoli 0 1 2");
  EXPECT_EQ(cr.m, 12u);
}

TEST(Compile, CorpusInvariants) {
  for (const Circuit& c : random_corpus(2024, 200)) {
    const Circuit e = expand_macros(c);
    const auto cr = compile(c);
    std::size_t hs = 0, xs = 0, ys = 0, cnots = 0;
    for (const Gate& g : e.gates) {
      hs += g.kind == GateKind::H;
      xs += g.kind == GateKind::X;
      ys += g.kind == GateKind::Y;
      cnots += g.kind == GateKind::CNOT;
    }
    ASSERT_EQ(cr.m, hs + 2 * (xs + ys + cnots));
    EXPECT_EQ(cr.m, expected_ancillas(c));
    EXPECT_EQ(cr.poly.ancillas(), cr.m);
    EXPECT_EQ(cr.wires.next_ancilla(), cr.m);
    EXPECT_TRUE(cr.wires.well_formed());
    EXPECT_EQ(cr.poly.constant(), mod8(6 * static_cast<long long>(ys)));
    for (const Term& t : cr.poly.terms()) {
      if (t.mono.degree() == 1) {
        // Linear coefficients are sums of 1,2,4,6,7 on one variable; when a
        // variable gets several phase gates they combine mod 8.
        EXPECT_NE(t.coeff, 0);
      } else {
        EXPECT_EQ(t.coeff, 4);
      }
    }
    EXPECT_EQ(compile(c).poly, cr.poly);
  }
}

TEST(Compile, SinglePhaseGateCoefficients) {
  // A lone phase gate on a fresh wire shows its coefficient unmixed.
  for (const char* g : {"z", "s", "t", "sdg", "tdg"}) {
    const auto cr = compile_text((std::string("qubits 1\n") + g + " 0").c_str());
    ASSERT_EQ(cr.poly.terms().size(), 1u);
    const int c = cr.poly.terms()[0].coeff;
    EXPECT_TRUE(c == 1 || c == 2 || c == 4 || c == 6 || c == 7);
  }
}

TEST(Compile, SoundOnSmallCircuitsAgainstBruteForce) {
  // Full-assignment enumeration, independent of the transform module.
  for (const Circuit& c : random_corpus(17, 25, {3, 6, 8})) {
    const auto cr = compile(c);
    const auto u = oracle::circuit_unitary(c);
    const std::size_t dim = std::size_t{1} << c.qubit_count;
    for (std::size_t x = 0; x < dim; ++x) {
      for (std::size_t y = 0; y < dim; ++y) {
        const auto amp = testing::brute_amplitude(cr.poly, cr.final_vars(), x, y);
        ASSERT_LE(std::abs(amp - u(y, x)), 1e-9) << to_text(c);
      }
    }
  }
}

}  // namespace
}  // namespace z8poly
