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

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace z8poly {
namespace {

// Per-variable incidence: for each flat variable v, the terms containing v
// as (coefficient, mask of the other variables in the term).
class PhaseWalker {
 public:
  explicit PhaseWalker(const PhasePoly& p) : poly_(p), incidence_(p.variable_count()) {
    if (p.variable_count() > 64) throw CapExceeded("more than 64 variables");
    for (const Term& t : p.terms()) {
      std::uint64_t mask = 0;
      for (VarId v : t.mono.vars()) mask |= std::uint64_t{1} << p.flat_index(v);
      for (VarId v : t.mono.vars()) {
        const auto bit = p.flat_index(v);
        incidence_[bit].push_back({mask & ~(std::uint64_t{1} << bit), t.coeff});
      }
    }
  }

  // Walks every assignment of `free_bits` on top of `base` in Gray-code
  // order, calling visit(z, phase) once per assignment.
  template <typename Visit>
  void walk(std::uint64_t base, std::span<const std::size_t> free_bits, Visit&& visit) const {
    std::uint64_t z = base;
    for (std::size_t b : free_bits) z &= ~(std::uint64_t{1} << b);
    unsigned phase = evaluate_bits(poly_, z);
    visit(z, phase);
    const std::uint64_t count = std::uint64_t{1} << free_bits.size();
    for (std::uint64_t g = 1; g < count; ++g) {
      const std::size_t bit = free_bits[std::countr_zero(g)];
      unsigned delta = 0;
      for (const auto& [mask, coeff] : incidence_[bit]) {
        if ((z & mask) == mask) delta += coeff;
      }
      const std::uint64_t flag = std::uint64_t{1} << bit;
      phase = (z & flag) ? phase + 8 - (delta & 7) : phase + delta;
      phase &= 7;
      z ^= flag;
      visit(z, phase);
    }
  }

  std::array<std::uint64_t, 8> histogram(std::uint64_t base,
                                         std::span<const std::size_t> free_bits) const {
    std::array<std::uint64_t, 8> counts{};
    walk(base, free_bits, [&](std::uint64_t, unsigned phase) { ++counts[phase]; });
    return counts;
  }

 private:
  struct Incidence {
    std::uint64_t others;
    std::uint8_t coeff;
  };
  const PhasePoly& poly_;
  std::vector<std::vector<Incidence>> incidence_;
};

// 2^(-halvings/2) * sum_k counts[k] zeta^k. With zeta^(k+4) = -zeta^k the sum
// is (d0 + (d1 - d3) h) + i (d2 + (d1 + d3) h), h = 1/sqrt(2); an odd number
// of halvings is folded into h so that dyadic results stay exact.
Complex from_histogram(const std::array<std::uint64_t, 8>& counts, std::size_t halvings = 0) {
  auto diff = [&](int k) {
    return static_cast<double>(static_cast<long long>(counts[k]) -
                               static_cast<long long>(counts[k + 4]));
  };
  const double h = std::sqrt(0.5);
  const int whole = -static_cast<int>(halvings / 2);
  double unit = std::ldexp(1.0, whole);      // weight of d0, d2
  double diagonal = std::ldexp(h, whole);    // weight of d1 +- d3
  if (halvings % 2 == 1) {
    unit = std::ldexp(h, whole);
    diagonal = std::ldexp(0.5, whole);
  }
  const double d0 = diff(0), d1 = diff(1), d2 = diff(2), d3 = diff(3);
  return {d0 * unit + (d1 - d3) * diagonal, d2 * unit + (d1 + d3) * diagonal};
}

void require_cap(std::size_t vars, std::size_t cap, const char* what) {
  if (vars > cap) {
    throw CapExceeded(std::string(what) + ": " + std::to_string(vars) +
                      " variables exceed the cap of " + std::to_string(cap));
  }
}

struct Clamp {
  std::uint64_t mask = 0;
  std::uint64_t bits = 0;
  bool conflict = false;

  void set(std::size_t bit, bool value) {
    const std::uint64_t flag = std::uint64_t{1} << bit;
    if (mask & flag) {
      if (((bits & flag) != 0) != value) conflict = true;
      return;
    }
    mask |= flag;
    if (value) bits |= flag;
  }
};

void check_finals(const PhasePoly& p, std::span<const VarId> finals) {
  if (finals.size() != p.inputs()) {
    throw std::invalid_argument("need one final variable per qubit: " +
                                std::to_string(p.inputs()) + " expected, got " +
                                std::to_string(finals.size()));
  }
  for (std::size_t i = 0; i < finals.size(); ++i) {
    if (!p.contains(finals[i])) {
      throw std::invalid_argument("final variable " + to_string(finals[i]) +
                                  " not in polynomial");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (finals[i] == finals[j]) {
        throw std::invalid_argument("final variables must be distinct");
      }
    }
  }
}

void check_bits(std::span<const std::uint8_t> bits, std::size_t width, const char* what) {
  if (bits.size() != width) {
    throw std::invalid_argument(std::string(what) + " has " + std::to_string(bits.size()) +
                                " bits, expected " + std::to_string(width));
  }
  for (auto b : bits) {
    if (b > 1) throw std::invalid_argument(std::string(what) + " bits must be 0 or 1");
  }
}

// Free (summed) variables: everything not an input and not a final variable.
std::vector<std::size_t> internal_bits(const PhasePoly& p, std::span<const VarId> finals) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < p.ancillas(); ++k) {
    const auto a = VarId::ancilla(static_cast<std::uint32_t>(k));
    if (std::find(finals.begin(), finals.end(), a) == finals.end()) {
      out.push_back(p.flat_index(a));
    }
  }
  return out;
}

Complex clamped_sum(const PhaseWalker& walker, const PhasePoly& p,
                    std::span<const VarId> finals, std::span<const std::size_t> free_bits,
                    std::span<const std::uint8_t> x_in, std::uint64_t y) {
  Clamp clamp;
  for (std::size_t q = 0; q < p.inputs(); ++q) clamp.set(q, x_in[q] != 0);
  for (std::size_t q = 0; q < finals.size(); ++q) {
    clamp.set(p.flat_index(finals[q]), ((y >> q) & 1U) != 0);
  }
  if (clamp.conflict) return Complex{0.0, 0.0};
  return from_histogram(walker.histogram(clamp.bits, free_bits), p.ancillas());
}

}  // namespace

const std::array<Complex, 8>& zeta8_powers() {
  static const std::array<Complex, 8> table = [] {
    const double h = std::sqrt(0.5);
    return std::array<Complex, 8>{Complex{1, 0},  Complex{h, h},   Complex{0, 1},
                                  Complex{-h, h}, Complex{-1, 0}, Complex{-h, -h},
                                  Complex{0, -1}, Complex{h, -h}};
  }();
  return table;
}

std::vector<std::uint8_t> basis_bits(std::uint64_t index, std::size_t width) {
  std::vector<std::uint8_t> bits(width);
  for (std::size_t q = 0; q < width; ++q) bits[q] = (index >> q) & 1U;
  return bits;
}

std::uint64_t basis_index(std::span<const std::uint8_t> bits) {
  std::uint64_t index = 0;
  for (std::size_t q = 0; q < bits.size(); ++q) {
    if (bits[q]) index |= std::uint64_t{1} << q;
  }
  return index;
}

std::vector<Complex> phase_vector(const PhasePoly& p, std::size_t cap) {
  const std::size_t n = p.variable_count();
  require_cap(n, std::min(cap, kFastTransformCap), "phase vector");
  std::vector<Complex> out(std::size_t{1} << n);
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  const auto& zeta = zeta8_powers();
  PhaseWalker(p).walk(0, all, [&](std::uint64_t z, unsigned phase) { out[z] = zeta[phase]; });
  return out;
}

Spectrum gwht_naive(const PhasePoly& p) {
  const std::size_t n = p.variable_count();
  require_cap(n, kNaiveTransformCap, "naive transform");
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<std::uint8_t> phases(size);
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  PhaseWalker(p).walk(0, all, [&](std::uint64_t z, unsigned phase) {
    phases[z] = static_cast<std::uint8_t>(phase);
  });

  // (-1) = zeta^4, so each summand is a power of zeta and the sum is an
  // integer combination of zeta^0..zeta^7.
  Spectrum s{n, std::vector<Complex>(size)};
  for (std::uint64_t u = 0; u < size; ++u) {
    std::array<std::uint64_t, 8> counts{};
    for (std::uint64_t x = 0; x < size; ++x) {
      ++counts[(phases[x] + 4 * (std::popcount(u & x) & 1)) & 7];
    }
    s.values[u] = from_histogram(counts);
  }
  return s;
}

Spectrum gwht_fast(std::vector<Complex> values) {
  const std::size_t size = values.size();
  if (size == 0 || !std::has_single_bit(size)) {
    throw std::invalid_argument("transform length " + std::to_string(size) +
                                " is not a power of two");
  }
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t block = 0; block < size; block += 2 * half) {
      for (std::size_t j = block; j < block + half; ++j) {
        const Complex a = values[j];
        const Complex b = values[j + half];
        values[j] = a + b;
        values[j + half] = a - b;
      }
    }
  }
  return Spectrum{static_cast<std::size_t>(std::countr_zero(size)), std::move(values)};
}

double parseval_defect(const Spectrum& s) {
  const double expected = std::ldexp(1.0, static_cast<int>(2 * s.vars));
  double total = 0.0;
  for (const Complex& v : s.values) total += std::norm(v);
  return std::abs(total - expected) / expected;
}

Spectrum sandwich_state(const CompilationResult& cr, std::size_t cap) {
  Spectrum s = gwht_fast(phase_vector(cr.poly, cap));
  const double scale = std::ldexp(1.0, -static_cast<int>(s.vars));
  for (Complex& v : s.values) v *= scale;
  return s;
}

std::size_t internal_variable_count(const PhasePoly& p, std::span<const VarId> final_vars) {
  return internal_bits(p, final_vars).size();
}

Complex amplitude(const PhasePoly& p, std::span<const VarId> final_vars,
                  std::span<const std::uint8_t> x_in, std::span<const std::uint8_t> y,
                  std::size_t cap) {
  check_finals(p, final_vars);
  check_bits(x_in, p.inputs(), "input");
  check_bits(y, p.inputs(), "output");
  const auto free_bits = internal_bits(p, final_vars);
  require_cap(free_bits.size(), cap, "amplitude extraction");
  const PhaseWalker walker(p);
  return clamped_sum(walker, p, final_vars, free_bits, x_in, basis_index(y));
}

AmplitudeVector amplitudes(const PhasePoly& p, std::span<const VarId> final_vars,
                           std::span<const std::uint8_t> x_in, std::size_t cap) {
  check_finals(p, final_vars);
  check_bits(x_in, p.inputs(), "input");
  const auto free_bits = internal_bits(p, final_vars);
  require_cap(free_bits.size(), cap, "amplitude extraction");
  const PhaseWalker walker(p);

  AmplitudeVector out;
  out.n = p.inputs();
  out.input.assign(x_in.begin(), x_in.end());
  out.values.resize(std::size_t{1} << out.n);
  for (std::uint64_t y = 0; y < out.values.size(); ++y) {
    out.values[y] = clamped_sum(walker, p, final_vars, free_bits, x_in, y);
  }
  return out;
}

AmplitudeVector amplitudes(const CompilationResult& cr, std::span<const std::uint8_t> x_in,
                           std::size_t cap) {
  const auto finals = cr.final_vars();
  return amplitudes(cr.poly, finals, x_in, cap);
}

std::vector<Complex> amplitude_matrix(const PhasePoly& p, std::span<const VarId> final_vars,
                                      std::size_t cap) {
  const std::size_t dim = std::size_t{1} << p.inputs();
  std::vector<Complex> out(dim * dim);
  for (std::uint64_t x = 0; x < dim; ++x) {
    const auto column = amplitudes(p, final_vars, basis_bits(x, p.inputs()), cap);
    for (std::size_t y = 0; y < dim; ++y) out[y * dim + x] = column.values[y];
  }
  return out;
}

}  // namespace z8poly
