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

#include "z8poly/polynomial.hpp"

#include <algorithm>
#include <charconv>

#include "json.hpp"

namespace z8poly {

std::string to_string(VarId var) {
  return (var.role == VarRole::Input ? "x" : "a") + std::to_string(var.index);
}

std::optional<VarId> parse_var(std::string_view name) {
  if (name.size() < 2) return std::nullopt;
  VarRole role;
  if (name[0] == 'x') {
    role = VarRole::Input;
  } else if (name[0] == 'a') {
    role = VarRole::Ancilla;
  } else {
    return std::nullopt;
  }
  std::uint32_t index = 0;
  const char* first = name.data() + 1;
  const char* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, index);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return VarId{role, index};
}

Monomial::Monomial(std::initializer_list<VarId> vars)
    : Monomial(std::span<const VarId>(vars.begin(), vars.size())) {}

Monomial::Monomial(std::span<const VarId> vars) {
  if (vars.empty() || vars.size() > kMaxDegree) {
    throw std::invalid_argument("monomial degree must be 1..3, got " +
                                std::to_string(vars.size()));
  }
  std::copy(vars.begin(), vars.end(), vars_.begin());
  degree_ = vars.size();
  std::sort(vars_.begin(), vars_.begin() + degree_);
  if (std::adjacent_find(vars_.begin(), vars_.begin() + degree_) != vars_.begin() + degree_) {
    throw std::invalid_argument("monomial variables must be distinct");
  }
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.vars().begin(), a.vars().end(),
                                                b.vars().begin(), b.vars().end());
}

PhasePoly::PhasePoly(std::size_t inputs, std::size_t ancillas, std::uint8_t constant)
    : inputs_(inputs), ancillas_(ancillas), constant_(mod8(constant)) {}

PhasePoly PhasePoly::from_raw_terms(std::size_t inputs, std::size_t ancillas,
                                    std::uint8_t constant, std::vector<Term> terms) {
  PhasePoly p(inputs, ancillas, constant);
  for (Term& t : terms) {
    for (VarId v : t.mono.vars()) {
      if (!p.contains(v)) throw std::out_of_range("variable " + to_string(v) + " out of bounds");
    }
    t.coeff = mod8(t.coeff);
  }
  p.terms_ = std::move(terms);
  return p;
}

std::uint8_t PhasePoly::coefficient(const Monomial& mono) const {
  long long sum = 0;
  for (const Term& t : terms_) {
    if (t.mono == mono) sum += t.coeff;
  }
  return mod8(sum);
}

bool PhasePoly::contains(VarId var) const noexcept {
  return var.role == VarRole::Input ? var.index < inputs_ : var.index < ancillas_;
}

std::size_t PhasePoly::flat_index(VarId var) const {
  if (!contains(var)) throw std::out_of_range("variable " + to_string(var) + " out of bounds");
  return var.role == VarRole::Input ? var.index : inputs_ + var.index;
}

VarId PhasePoly::var_at(std::size_t flat) const {
  if (flat >= variable_count()) throw std::out_of_range("flat variable index out of bounds");
  return flat < inputs_ ? VarId::input(static_cast<std::uint32_t>(flat))
                        : VarId::ancilla(static_cast<std::uint32_t>(flat - inputs_));
}

VarId PhasePoly::add_ancilla() {
  return VarId::ancilla(static_cast<std::uint32_t>(ancillas_++));
}

void PhasePoly::accumulate(const Monomial& mono, long long coeff) {
  for (VarId v : mono.vars()) {
    if (!contains(v)) throw std::out_of_range("variable " + to_string(v) + " out of bounds");
  }
  auto it = std::find_if(terms_.begin(), terms_.end(),
                         [&](const Term& t) { return t.mono == mono; });
  if (it == terms_.end()) {
    if (mod8(coeff) != 0) terms_.push_back({mono, mod8(coeff)});
    return;
  }
  it->coeff = mod8(it->coeff + coeff);
  if (it->coeff == 0) terms_.erase(it);
}

PhasePoly add_term(PhasePoly p, const Monomial& mono, long long coeff) {
  p.accumulate(mono, coeff);
  return p;
}

std::uint8_t evaluate(const PhasePoly& p, std::span<const std::uint8_t> assignment) {
  if (assignment.size() != p.variable_count()) {
    throw std::invalid_argument("assignment has " + std::to_string(assignment.size()) +
                                " bits, polynomial has " +
                                std::to_string(p.variable_count()) + " variables");
  }
  long long sum = p.constant();
  for (const Term& t : p.terms()) {
    bool on = true;
    for (VarId v : t.mono.vars()) on = on && assignment[p.flat_index(v)] != 0;
    if (on) sum += t.coeff;
  }
  return mod8(sum);
}

std::uint8_t evaluate_bits(const PhasePoly& p, std::uint64_t bits) {
  if (p.variable_count() > 64) throw std::invalid_argument("more than 64 variables");
  long long sum = p.constant();
  for (const Term& t : p.terms()) {
    std::uint64_t mask = 0;
    for (VarId v : t.mono.vars()) mask |= std::uint64_t{1} << p.flat_index(v);
    if ((bits & mask) == mask) sum += t.coeff;
  }
  return mod8(sum);
}

PhasePoly canonicalize(PhasePoly p) {
  std::stable_sort(p.terms_.begin(), p.terms_.end(),
                   [](const Term& a, const Term& b) { return a.mono < b.mono; });
  std::vector<Term> merged;
  merged.reserve(p.terms_.size());
  for (const Term& t : p.terms_) {
    if (!merged.empty() && merged.back().mono == t.mono) {
      merged.back().coeff = mod8(merged.back().coeff + t.coeff);
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  p.terms_ = std::move(merged);
  return p;
}

bool is_canonical(const PhasePoly& p) {
  const auto terms = p.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coeff == 0 || terms[i].coeff > 7) return false;
    if (i > 0 && !(terms[i - 1].mono < terms[i].mono)) return false;
  }
  return true;
}

std::string to_json_text(const PhasePoly& p) {
  const PhasePoly c = canonicalize(p);
  // One term per line keeps documents diffable.
  std::string out = "{\n  \"inputs\": " + std::to_string(c.inputs()) +
                    ",\n  \"ancillas\": " + std::to_string(c.ancillas()) +
                    ",\n  \"constant\": " + std::to_string(c.constant()) + ",\n  \"terms\": [";
  for (std::size_t i = 0; i < c.terms().size(); ++i) {
    const Term& t = c.terms()[i];
    auto names = nlohmann::ordered_json::array();
    for (VarId v : t.mono.vars()) names.push_back(to_string(v));
    out += (i == 0 ? "\n    " : ",\n    ");
    out += "{\"vars\": " + names.dump() + ", \"coeff\": " + std::to_string(t.coeff) + "}";
  }
  out += c.terms().empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

namespace {

std::size_t read_count(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<long long>() < 0) {
    throw PolyFormatError(std::string("`") + key + "` must be a nonnegative integer");
  }
  return doc[key].get<std::size_t>();
}

std::uint8_t read_residue(const nlohmann::json& value, const std::string& what) {
  if (!value.is_number_integer()) throw PolyFormatError(what + " must be an integer");
  const auto v = value.get<long long>();
  if (v < 0 || v > 7) {
    throw PolyFormatError(what + " " + std::to_string(v) + " outside 0..7");
  }
  return static_cast<std::uint8_t>(v);
}

}  // namespace

PhasePoly from_json_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw PolyFormatError(std::string("malformed polynomial document: ") + e.what());
  }
  if (!doc.is_object()) throw PolyFormatError("polynomial document must be a JSON object");

  PhasePoly p(read_count(doc, "inputs"), read_count(doc, "ancillas"),
              doc.contains("constant") ? read_residue(doc["constant"], "constant") : 0);
  if (!doc.contains("terms") || !doc["terms"].is_array()) {
    throw PolyFormatError("`terms` must be an array");
  }
  for (const auto& term : doc["terms"]) {
    if (!term.is_object() || !term.contains("vars") || !term["vars"].is_array() ||
        !term.contains("coeff")) {
      throw PolyFormatError("each term needs `vars` (array) and `coeff`");
    }
    std::vector<VarId> vars;
    for (const auto& name : term["vars"]) {
      if (!name.is_string()) throw PolyFormatError("variable names must be strings");
      auto var = parse_var(name.get<std::string>());
      if (!var || !p.contains(*var)) {
        throw PolyFormatError("unknown variable `" + name.get<std::string>() + "`");
      }
      vars.push_back(*var);
    }
    const auto coeff = read_residue(term["coeff"], "coefficient");
    try {
      p.accumulate(Monomial(std::span<const VarId>(vars)), coeff);
    } catch (const std::invalid_argument& e) {
      throw PolyFormatError(std::string("bad monomial: ") + e.what());
    }
  }
  return canonicalize(std::move(p));
}

std::string to_display_string(const PhasePoly& p) {
  std::string out;
  auto append = [&](const std::string& piece) {
    if (!out.empty()) out += " + ";
    out += piece;
  };
  if (p.constant() != 0) append(std::to_string(p.constant()));
  for (const Term& t : p.terms()) {
    std::string piece = t.coeff == 1 ? "" : std::to_string(t.coeff);
    for (VarId v : t.mono.vars()) piece += to_string(v);
    append(piece);
  }
  return out.empty() ? "0" : out;
}

}  // namespace z8poly
