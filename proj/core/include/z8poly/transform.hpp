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

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "z8poly/compiler.hpp"
#include "z8poly/polynomial.hpp"

namespace z8poly {

using Complex = std::complex<double>;

inline constexpr std::size_t kNaiveTransformCap = 14;
inline constexpr std::size_t kFastTransformCap = 24;
inline constexpr std::size_t kInternalVariableCap = 20;

/// A resource cap (variable count, qubit count) would be exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// zeta_8^k = exp(2 pi i k / 8) for k = 0..7.
const std::array<Complex, 8>& zeta8_powers();

/// Basis index <-> bit vector, bit q of the index is entry q.
std::vector<std::uint8_t> basis_bits(std::uint64_t index, std::size_t width);
std::uint64_t basis_index(std::span<const std::uint8_t> bits);

/// Generalized Walsh-Hadamard coefficients H_f(u) = sum_x zeta_8^f(x) (-1)^(u.x),
/// u indexed with variable 0 as the least significant bit.
struct Spectrum {
  std::size_t vars = 0;
  std::vector<Complex> values;
};

/// Entry x is zeta_8^f(x). Throws CapExceeded when n+m > cap.
std::vector<Complex> phase_vector(const PhasePoly& p, std::size_t cap = kFastTransformCap);

/// Literal O(4^N) double sum. N <= kNaiveTransformCap.
Spectrum gwht_naive(const PhasePoly& p);

/// In-place butterfly over an arbitrary vector; length must be a power of two.
Spectrum gwht_fast(std::vector<Complex> values);

/// |sum_u |H(u)|^2 - 4^N| / 4^N.
double parseval_defect(const Spectrum& s);

/// 2^-(n+m) H_f(y): the output of H^(n+m) C' H^(n+m) on |0...0>.
Spectrum sandwich_state(const CompilationResult& cr, std::size_t cap = kFastTransformCap);

struct AmplitudeVector {
  std::size_t n = 0;
  std::vector<std::uint8_t> input;
  std::vector<Complex> values;  // indexed by output basis state y
};

/// Variables left to sum over once inputs and `final_vars` are clamped.
std::size_t internal_variable_count(const PhasePoly& p, std::span<const VarId> final_vars);

/// Clamped path-sum <y|C|x_in> for a polynomial with one final variable per
/// qubit. Inputs x_q are fixed to x_in[q], final variables to y[q]; all other
/// variables are summed, and the result is scaled by 2^(-m/2). Clamps that
/// disagree on a shared variable give exactly 0.
///
/// Throws std::invalid_argument on malformed arguments and CapExceeded when
/// more than `cap` variables remain to be summed.
Complex amplitude(const PhasePoly& p, std::span<const VarId> final_vars,
                  std::span<const std::uint8_t> x_in, std::span<const std::uint8_t> y,
                  std::size_t cap = kInternalVariableCap);

AmplitudeVector amplitudes(const PhasePoly& p, std::span<const VarId> final_vars,
                           std::span<const std::uint8_t> x_in,
                           std::size_t cap = kInternalVariableCap);

AmplitudeVector amplitudes(const CompilationResult& cr, std::span<const std::uint8_t> x_in,
                           std::size_t cap = kInternalVariableCap);

/// Row-major 2^n x 2^n matrix with entry (y, x) = <y|C|x>.
std::vector<Complex> amplitude_matrix(const PhasePoly& p, std::span<const VarId> final_vars,
                                      std::size_t cap = kInternalVariableCap);

}  // namespace z8poly
