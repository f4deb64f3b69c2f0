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

#include "z8poly/transform.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include "support/brute_force.hpp"
#include "support/generators.hpp"
#include "z8poly/oracle.hpp"
#include "z8poly/verify.hpp"

namespace z8poly {
namespace {

const VarId x0 = VarId::input(0);
const VarId x1 = VarId::input(1);

void expect_near(const std::vector<Complex>& got, const std::vector<Complex>& want,
                 double tol = 1e-12) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    EXPECT_LE(std::abs(got[i] - want[i]), tol) << "index " << i << ": " << got[i];
  }
}

TEST(Zeta, TableMatchesExponential) {
  for (unsigned k = 0; k < 8; ++k) {
    EXPECT_LE(std::abs(zeta8_powers()[k] - testing::zeta8(k)), 1e-15);
  }
}

TEST(PhaseVector, Examples) {
  expect_near(phase_vector(PhasePoly(1)), {1.0, 1.0});
  expect_near(phase_vector(add_term(PhasePoly(1), Monomial{x0}, 4)), {1.0, -1.0});
  const double h = std::sqrt(2.0) / 2.0;
  expect_near(phase_vector(add_term(PhasePoly(1), Monomial{x0}, 1)), {1.0, Complex{h, h}});
  for (const Complex& v : phase_vector(add_term(PhasePoly(3, 2), Monomial{x0, x1}, 3))) {
    EXPECT_NEAR(std::abs(v), 1.0, 1e-15);
  }
}

TEST(PhaseVector, MatchesEvaluate) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const PhasePoly p = testing::random_poly(rng, 5, 5);
    const auto v = phase_vector(p);
    for (std::uint64_t z = 0; z < v.size(); ++z) {
      ASSERT_LE(std::abs(v[z] - testing::zeta8(evaluate_bits(p, z))), 1e-15);
    }
  }
}

TEST(PhaseVector, Cap) {
  EXPECT_THROW(phase_vector(PhasePoly(25)), CapExceeded);
  EXPECT_THROW(phase_vector(PhasePoly(5), 4), CapExceeded);
}

TEST(GwhtNaive, Examples) {
  expect_near(gwht_naive(PhasePoly(2)).values, {4.0, 0.0, 0.0, 0.0});
  expect_near(gwht_naive(add_term(PhasePoly(1), Monomial{x0}, 4)).values, {0.0, 2.0});
  expect_near(gwht_naive(add_term(PhasePoly(2), Monomial{x0, x1}, 4)).values,
              {2.0, 2.0, 2.0, -2.0});
  EXPECT_THROW(gwht_naive(PhasePoly(15)), CapExceeded);
}

TEST(GwhtNaive, MatchesBruteForce) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const PhasePoly p = testing::random_poly(rng, 4, 4);
    expect_near(gwht_naive(p).values, testing::brute_spectrum(p), 1e-10);
  }
}

TEST(GwhtFast, Examples) {
  const auto zero3 = gwht_fast(phase_vector(PhasePoly(3)));
  EXPECT_EQ(zero3.vars, 3u);
  expect_near(zero3.values, {8.0, 0, 0, 0, 0, 0, 0, 0});
  expect_near(gwht_fast(phase_vector(add_term(PhasePoly(1), Monomial{x0}, 4))).values,
              {0.0, 2.0});
  EXPECT_THROW(gwht_fast(std::vector<Complex>(3)), std::invalid_argument);
  EXPECT_THROW(gwht_fast({}), std::invalid_argument);
}

TEST(GwhtFast, MatchesNaiveOnRandomPolynomials) {
  std::mt19937_64 rng(1234);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t vars = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
    const PhasePoly p = testing::random_poly_with(rng, vars);
    const auto naive = gwht_naive(p);
    const auto fast = gwht_fast(phase_vector(p));
    ASSERT_EQ(naive.vars, fast.vars);
    for (std::size_t u = 0; u < naive.values.size(); ++u) {
      worst = std::max(worst, std::abs(naive.values[u] - fast.values[u]));
    }
  }
  EXPECT_LE(worst, 1e-10);
}

TEST(Parseval, Defect) {
  std::mt19937_64 rng(4);
  const PhasePoly p = testing::random_poly_with(rng, 4);
  const auto s = gwht_fast(phase_vector(p));
  double total = 0;
  for (auto v : s.values) total += std::norm(v);
  EXPECT_NEAR(total, 256.0, 1e-10);
  EXPECT_LE(parseval_defect(s), 1e-12);

  Spectrum peak{3, std::vector<Complex>(8)};
  peak.values[0] = 8.0;
  EXPECT_EQ(parseval_defect(peak), 0.0);
  EXPECT_EQ(parseval_defect(Spectrum{3, std::vector<Complex>(8)}), 1.0);
}

TEST(Parseval, HoldsUpToFourteenVariables) {
  std::mt19937_64 rng(77);
  for (std::size_t vars = 1; vars <= 14; ++vars) {
    const PhasePoly p = testing::random_poly_with(rng, vars);
    EXPECT_LE(parseval_defect(gwht_fast(phase_vector(p))), 1e-9);
  }
}

TEST(Sandwich, Examples) {
  expect_near(sandwich_state(compile(parse_circuit("qubits 1"))).values, {1.0, 0.0});
  expect_near(sandwich_state(compile(parse_circuit("qubits 1\nz 0"))).values, {0.0, 1.0});

  // H T H |0> computed by the oracle.
  Circuit hth{1, {}};
  hth.add(GateKind::H, {0}).add(GateKind::T, {0}).add(GateKind::H, {0});
  const auto truth = oracle::simulate(hth, std::vector<std::uint8_t>{0});
  const auto sandwich = sandwich_state(compile(parse_circuit("qubits 1\nt 0"))).values;
  expect_near(sandwich, truth.values);
  const double c = std::cos(std::numbers::pi / 8), s = std::sin(std::numbers::pi / 8);
  const Complex e = std::polar(1.0, std::numbers::pi / 8);
  expect_near(sandwich, {c * e, Complex{0, -1} * s * e});
}

TEST(Sandwich, UnitNorm) {
  for (const Circuit& c : random_corpus(31, 30, {3, 10, 10})) {
    const auto s = sandwich_state(compile(c));
    double norm = 0;
    for (auto v : s.values) norm += std::norm(v);
    EXPECT_NEAR(norm, 1.0, 1e-9);
  }
}

TEST(Amplitudes, Examples) {
  const double r = 1.0 / std::sqrt(2.0);
  expect_near(amplitudes(compile(parse_circuit("qubits 1\nh 0")), std::vector<std::uint8_t>{0})
                  .values,
              {r, r});
  expect_near(
      amplitudes(compile(parse_circuit("qubits 2\ncnot 0 1")), std::vector<std::uint8_t>{1, 0})
          .values,
      {0, 0, 0, 1});
  expect_near(amplitudes(compile(parse_circuit("qubits 1\nx 0")), std::vector<std::uint8_t>{0})
                  .values,
              {0, 1});
  expect_near(amplitudes(compile(parse_circuit("qubits 1\ny 0")), std::vector<std::uint8_t>{0})
                  .values,
              {0, Complex{0, 1}});
}

TEST(Amplitudes, ConflictingClampsGiveZero) {
  // Qubit 1 is never touched, so its final variable is its input.
  const auto cr = compile(parse_circuit("qubits 2\nh 0"));
  const std::vector<std::uint8_t> in{0, 1};
  EXPECT_EQ(amplitude(cr.poly, cr.final_vars(), in, std::vector<std::uint8_t>{0, 0}),
            Complex(0, 0));
  EXPECT_NE(amplitude(cr.poly, cr.final_vars(), in, std::vector<std::uint8_t>{0, 1}),
            Complex(0, 0));
}

TEST(Amplitudes, SingleEntryMatchesVector) {
  for (const Circuit& c : random_corpus(41, 20, {3, 12, 12})) {
    const auto cr = compile(c);
    const std::size_t dim = std::size_t{1} << c.qubit_count;
    for (std::size_t x = 0; x < dim; ++x) {
      const auto xb = basis_bits(x, c.qubit_count);
      const auto column = amplitudes(cr, xb);
      for (std::size_t y = 0; y < dim; ++y) {
        EXPECT_LE(std::abs(amplitude(cr.poly, cr.final_vars(), xb, basis_bits(y, c.qubit_count)) -
                           column.values[y]),
                  1e-12);
        EXPECT_LE(std::abs(column.values[y] -
                           testing::brute_amplitude(cr.poly, cr.final_vars(), x, y)),
                  1e-10);
      }
    }
  }
}

TEST(Amplitudes, ArgumentErrors) {
  const auto cr = compile(parse_circuit("qubits 2\nh 0"));
  EXPECT_THROW(amplitudes(cr, std::vector<std::uint8_t>{0}), std::invalid_argument);
  EXPECT_THROW(amplitudes(cr, std::vector<std::uint8_t>{0, 2}), std::invalid_argument);
  const std::vector<VarId> dup{VarId::ancilla(0), VarId::ancilla(0)};
  EXPECT_THROW(amplitudes(cr.poly, dup, std::vector<std::uint8_t>{0, 0}), std::invalid_argument);
  const std::vector<VarId> missing{VarId::ancilla(3), x1};
  EXPECT_THROW(amplitudes(cr.poly, missing, std::vector<std::uint8_t>{0, 0}),
               std::invalid_argument);
}

TEST(Amplitudes, InternalCap) {
  // 11 Hadamards on one wire leave 10 summed ancillas.
  Circuit c{1, {}};
  for (int i = 0; i < 11; ++i) c.add(GateKind::H, {0});
  const auto cr = compile(c);
  EXPECT_EQ(internal_variable_count(cr.poly, cr.final_vars()), 10u);
  EXPECT_THROW(amplitudes(cr, std::vector<std::uint8_t>{0}, 9), CapExceeded);
  EXPECT_NO_THROW(amplitudes(cr, std::vector<std::uint8_t>{0}, 10));
}

TEST(Amplitudes, ColumnsFormUnitary) {
  for (const Circuit& c : random_corpus(55, 30)) {
    const auto cr = compile(c);
    const auto u = amplitude_matrix(cr.poly, cr.final_vars());
    const std::size_t dim = std::size_t{1} << c.qubit_count;
    const oracle::UnitaryMatrix m(dim, u);
    EXPECT_LE(oracle::unitarity_defect(m), 1e-9);
  }
}

}  // namespace
}  // namespace z8poly
