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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "z8poly/circuit.hpp"

// Dense statevector reference simulator. It shares no code with the
// compiler or the transform path.

namespace z8poly::oracle {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kStateQubitCap = 12;
inline constexpr std::size_t kUnitaryQubitCap = 6;

struct StateVector {
  std::size_t n = 0;
  std::vector<Amplitude> values;  // qubit 0 is the least significant index bit

  double norm() const;
};

/// Square matrix, row-major.
class UnitaryMatrix {
 public:
  UnitaryMatrix() = default;
  explicit UnitaryMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  UnitaryMatrix(std::size_t dim, std::vector<Amplitude> row_major);

  static UnitaryMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  Amplitude& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  Amplitude operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }
  std::span<const Amplitude> data() const noexcept { return data_; }

  UnitaryMatrix adjoint() const;
  friend UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b);
  friend UnitaryMatrix operator*(Amplitude scalar, UnitaryMatrix m);

 private:
  std::size_t dim_ = 0;
  std::vector<Amplitude> data_;
};

/// max_ij |a_ij - b_ij|; throws std::invalid_argument on a size mismatch.
double max_abs_diff(const UnitaryMatrix& a, const UnitaryMatrix& b);

/// max_ij |(U U^dagger - I)_ij|.
double unitarity_defect(const UnitaryMatrix& u);

/// The gate's matrix on its own operands. Operand 0 is the most significant
/// bit of the matrix index, so CNOT is the usual |control target> matrix.
/// SWAP and TOFFOLI return their defining permutation matrices.
UnitaryMatrix gate_matrix(GateKind kind);

/// Applies the circuit to |x_in>, gate by gate. Macros are applied through
/// their defining matrices. Throws std::length_error beyond kStateQubitCap
/// qubits and std::invalid_argument for an invalid circuit or input.
StateVector simulate(const Circuit& circuit, std::span<const std::uint8_t> x_in);

/// Column x is simulate(circuit, x). Limited to kUnitaryQubitCap qubits.
UnitaryMatrix circuit_unitary(const Circuit& circuit);

}  // namespace z8poly::oracle
