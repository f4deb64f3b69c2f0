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

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace z8poly {

/// Least nonnegative residue modulo 8.
constexpr std::uint8_t mod8(long long value) {
  return static_cast<std::uint8_t>(((value % 8) + 8) % 8);
}

enum class VarRole : std::uint8_t { Input, Ancilla };

/// A Boolean variable of a phase polynomial: either the input of a logical
/// qubit (`x<i>`) or an ancilla introduced by a Hadamard gadget (`a<k>`).
/// Inputs order before ancillas, then by index.
struct VarId {
  VarRole role = VarRole::Input;
  std::uint32_t index = 0;

  static constexpr VarId input(std::uint32_t i) { return {VarRole::Input, i}; }
  static constexpr VarId ancilla(std::uint32_t k) { return {VarRole::Ancilla, k}; }

  friend constexpr auto operator<=>(const VarId&, const VarId&) = default;
};

std::string to_string(VarId var);
std::optional<VarId> parse_var(std::string_view name);

/// Product of 1 to 3 distinct variables, stored sorted.
class Monomial {
 public:
  static constexpr std::size_t kMaxDegree = 3;

  /// Throws std::invalid_argument on repeated variables or a degree outside 1..3.
  Monomial(std::initializer_list<VarId> vars);
  explicit Monomial(std::span<const VarId> vars);

  std::size_t degree() const noexcept { return degree_; }
  std::span<const VarId> vars() const noexcept { return {vars_.data(), degree_}; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && std::equal(a.vars().begin(), a.vars().end(), b.vars().begin());
  }
  /// Canonical order: degree first, then lexicographic over the sorted variables.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::array<VarId, kMaxDegree> vars_{};
  std::size_t degree_ = 0;
};

struct Term {
  Monomial mono;
  std::uint8_t coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

class PolyFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// f : F_2^(n+m) -> Z_8, a constant plus monomials of degree <= 3.
///
/// Variables are flattened inputs-then-ancillas: x0..x(n-1) occupy positions
/// 0..n-1 and a0..a(m-1) occupy n..n+m-1. Stored coefficients are never 0;
/// terms are kept in insertion order until canonicalize() sorts them.
class PhasePoly {
 public:
  PhasePoly() = default;
  explicit PhasePoly(std::size_t inputs, std::size_t ancillas = 0, std::uint8_t constant = 0);

  /// Builds a polynomial from raw terms without merging, sorting or purging
  /// zero coefficients; coefficients are reduced mod 8. Throws
  /// std::out_of_range if a variable exceeds the bounds.
  static PhasePoly from_raw_terms(std::size_t inputs, std::size_t ancillas,
                                  std::uint8_t constant, std::vector<Term> terms);

  std::size_t inputs() const noexcept { return inputs_; }
  std::size_t ancillas() const noexcept { return ancillas_; }
  std::size_t variable_count() const noexcept { return inputs_ + ancillas_; }
  std::uint8_t constant() const noexcept { return constant_; }
  std::span<const Term> terms() const noexcept { return terms_; }

  /// Coefficient currently attached to `mono` (0 if absent).
  std::uint8_t coefficient(const Monomial& mono) const;

  bool contains(VarId var) const noexcept;
  std::size_t flat_index(VarId var) const;
  VarId var_at(std::size_t flat) const;

  /// Extends the variable set by one ancilla and returns it.
  VarId add_ancilla();
  void add_constant(long long value) { constant_ = mod8(constant_ + value); }

  /// In-place form of z8poly::add_term.
  void accumulate(const Monomial& mono, long long coeff);

  friend bool operator==(const PhasePoly&, const PhasePoly&) = default;
  friend PhasePoly canonicalize(PhasePoly p);

 private:
  std::size_t inputs_ = 0;
  std::size_t ancillas_ = 0;
  std::uint8_t constant_ = 0;
  std::vector<Term> terms_;
};

/// Returns p with (old + coeff) mod 8 on `mono`; a zero result removes the
/// term. Throws std::out_of_range if mono references a missing variable.
PhasePoly add_term(PhasePoly p, const Monomial& mono, long long coeff);

/// f(assignment) mod 8, assignment ordered inputs-then-ancillas (one byte
/// per variable, 0 or 1). Throws std::invalid_argument on a length mismatch.
std::uint8_t evaluate(const PhasePoly& p, std::span<const std::uint8_t> assignment);

/// Same, with bit i of `bits` holding flat variable i. Requires n+m <= 64.
std::uint8_t evaluate_bits(const PhasePoly& p, std::uint64_t bits);

/// Merges duplicate monomials, drops zero coefficients and sorts terms in
/// canonical monomial order.
PhasePoly canonicalize(PhasePoly p);
bool is_canonical(const PhasePoly& p);

/// JSON interchange document:
///   {"inputs": n, "ancillas": m, "constant": c,
///    "terms": [{"vars": ["x0", "a1"], "coeff": 4}, ...]}
/// Terms are written in canonical order.
std::string to_json_text(const PhasePoly& p);

/// Parses an interchange document. Unknown top-level keys are ignored.
/// Throws PolyFormatError on malformed input, out-of-range coefficients or
/// unknown variable names.
PhasePoly from_json_text(std::string_view text);

/// Human-readable sum, e.g. "4x0 + 2x1 + 4x1a0"; terms in stored order,
/// unit coefficients elided, constant first when nonzero.
std::string to_display_string(const PhasePoly& p);

}  // namespace z8poly
