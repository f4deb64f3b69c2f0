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

#include "z8poly/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace z8poly::oracle {
namespace {

constexpr Amplitude kI{0.0, 1.0};

UnitaryMatrix diagonal(std::vector<Amplitude> entries) {
  UnitaryMatrix m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

UnitaryMatrix permutation(const std::vector<std::size_t>& image) {
  UnitaryMatrix m(image.size());
  for (std::size_t col = 0; col < image.size(); ++col) m(image[col], col) = 1.0;
  return m;
}

// Applies a k-qubit matrix to `operands` of the state; operand 0 maps to the
// most significant bit of the matrix index.
void apply(std::vector<Amplitude>& state, const UnitaryMatrix& u,
           const std::vector<std::size_t>& operands) {
  const std::size_t k = operands.size();
  const std::size_t sub = std::size_t{1} << k;
  std::size_t operand_mask = 0;
  for (std::size_t q : operands) operand_mask |= std::size_t{1} << q;

  std::vector<std::size_t> offsets(sub);
  for (std::size_t local = 0; local < sub; ++local) {
    std::size_t offset = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if ((local >> (k - 1 - j)) & 1U) offset |= std::size_t{1} << operands[j];
    }
    offsets[local] = offset;
  }

  std::vector<Amplitude> in(sub);
  for (std::size_t base = 0; base < state.size(); ++base) {
    if (base & operand_mask) continue;
    for (std::size_t local = 0; local < sub; ++local) in[local] = state[base | offsets[local]];
    for (std::size_t row = 0; row < sub; ++row) {
      Amplitude acc{};
      for (std::size_t col = 0; col < sub; ++col) acc += u(row, col) * in[col];
      state[base | offsets[row]] = acc;
    }
  }
}

}  // namespace

double StateVector::norm() const {
  double sum = 0.0;
  for (const auto& a : values) sum += std::norm(a);
  return std::sqrt(sum);
}

UnitaryMatrix::UnitaryMatrix(std::size_t dim, std::vector<Amplitude> row_major)
    : dim_(dim), data_(std::move(row_major)) {
  if (data_.size() != dim * dim) throw std::invalid_argument("matrix data has wrong size");
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t dim) {
  UnitaryMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
  UnitaryMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimensions differ");
  const std::size_t d = a.dim();
  UnitaryMatrix out(d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t k = 0; k < d; ++k) {
      const Amplitude ark = a(r, k);
      if (ark == Amplitude{}) continue;
      for (std::size_t c = 0; c < d; ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

UnitaryMatrix operator*(Amplitude scalar, UnitaryMatrix m) {
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) m(r, c) *= scalar;
  }
  return m;
}

double max_abs_diff(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimensions differ");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  }
  return worst;
}

double unitarity_defect(const UnitaryMatrix& u) {
  return max_abs_diff(u * u.adjoint(), UnitaryMatrix::identity(u.dim()));
}

UnitaryMatrix gate_matrix(GateKind kind) {
  const double r = 1.0 / std::sqrt(2.0);
  const Amplitude t = std::polar(1.0, std::numbers::pi / 4);
  switch (kind) {
    case GateKind::X: return UnitaryMatrix(2, {0, 1, 1, 0});
    case GateKind::Y: return UnitaryMatrix(2, {0, -kI, kI, 0});
    case GateKind::Z: return diagonal({1, -1});
    case GateKind::S: return diagonal({1, kI});
    case GateKind::SDG: return diagonal({1, -kI});
    case GateKind::T: return diagonal({1, t});
    case GateKind::TDG: return diagonal({1, std::conj(t)});
    case GateKind::H: return UnitaryMatrix(2, {r, r, r, -r});
    case GateKind::CZ: return diagonal({1, 1, 1, -1});
    case GateKind::CNOT: return permutation({0, 1, 3, 2});
    case GateKind::CCZ: return diagonal({1, 1, 1, 1, 1, 1, 1, -1});
    case GateKind::SWAP: return permutation({0, 2, 1, 3});
    case GateKind::TOFFOLI: return permutation({0, 1, 2, 3, 4, 5, 7, 6});
  }
  throw std::invalid_argument("unknown gate kind");
}

StateVector simulate(const Circuit& circuit, std::span<const std::uint8_t> x_in) {
  const std::size_t n = circuit.qubit_count;
  if (n > kStateQubitCap) {
    throw std::length_error("simulation limited to " + std::to_string(kStateQubitCap) +
                            " qubits, circuit has " + std::to_string(n));
  }
  if (x_in.size() != n) throw std::invalid_argument("input length does not match qubit count");
  std::size_t start = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if (x_in[q] > 1) throw std::invalid_argument("input bits must be 0 or 1");
    if (x_in[q]) start |= std::size_t{1} << q;
  }
  StateVector state{n, std::vector<Amplitude>(std::size_t{1} << n)};
  state.values[start] = 1.0;
  for (const Gate& gate : circuit.gates) {
    if (gate.qubits.size() != arity(gate.kind)) throw std::invalid_argument("bad operand count");
    for (std::size_t q : gate.qubits) {
      if (q >= n) throw std::invalid_argument("operand out of range");
    }
    apply(state.values, gate_matrix(gate.kind), gate.qubits);
  }
  return state;
}

UnitaryMatrix circuit_unitary(const Circuit& circuit) {
  const std::size_t n = circuit.qubit_count;
  if (n > kUnitaryQubitCap) {
    throw std::length_error("unitary limited to " + std::to_string(kUnitaryQubitCap) +
                            " qubits, circuit has " + std::to_string(n));
  }
  const std::size_t dim = std::size_t{1} << n;
  UnitaryMatrix u(dim);
  std::vector<std::uint8_t> bits(n);
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t q = 0; q < n; ++q) bits[q] = (x >> q) & 1U;
    const auto column = simulate(circuit, bits);
    for (std::size_t y = 0; y < dim; ++y) u(y, x) = column.values[y];
  }
  return u;
}

}  // namespace z8poly::oracle
