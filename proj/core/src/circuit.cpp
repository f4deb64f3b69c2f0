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

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <sstream>

namespace z8poly {
namespace {

struct KindInfo {
  GateKind kind;
  std::string_view name;
  std::size_t arity;
};

constexpr std::array<KindInfo, 13> kKinds{{
    {GateKind::X, "x", 1},      {GateKind::Y, "y", 1},
    {GateKind::Z, "z", 1},      {GateKind::S, "s", 1},
    {GateKind::SDG, "sdg", 1},  {GateKind::T, "t", 1},
    {GateKind::TDG, "tdg", 1},  {GateKind::H, "h", 1},
    {GateKind::CZ, "cz", 2},    {GateKind::CNOT, "cnot", 2},
    {GateKind::CCZ, "ccz", 3},  {GateKind::SWAP, "swap", 2},
    {GateKind::TOFFOLI, "toffoli", 3},
}};

const KindInfo& info(GateKind kind) {
  return kKinds[static_cast<std::size_t>(kind)];
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::optional<std::size_t> parse_index(std::string_view token) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

std::string lowercase(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::size_t arity(GateKind kind) { return info(kind).arity; }

bool is_macro(GateKind kind) {
  return kind == GateKind::SWAP || kind == GateKind::TOFFOLI;
}

std::string_view mnemonic(GateKind kind) { return info(kind).name; }

std::optional<GateKind> parse_mnemonic(std::string_view text) {
  const std::string lower = lowercase(text);
  for (const auto& k : kKinds) {
    if (k.name == lower) return k.kind;
  }
  return std::nullopt;
}

const std::vector<GateKind>& all_gate_kinds() {
  static const std::vector<GateKind> kinds = [] {
    std::vector<GateKind> v;
    for (const auto& k : kKinds) v.push_back(k.kind);
    return v;
  }();
  return kinds;
}

CircuitError::CircuitError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message
                                   : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

std::vector<Diagnostic> validate(const Circuit& circuit) {
  std::vector<Diagnostic> out;
  if (circuit.qubit_count == 0) {
    out.push_back({Diagnostic::Kind::EmptyCircuit, 0, "qubit count must be positive"});
  }
  for (std::size_t g = 0; g < circuit.gates.size(); ++g) {
    const Gate& gate = circuit.gates[g];
    const auto name = std::string(mnemonic(gate.kind));
    if (gate.qubits.size() != arity(gate.kind)) {
      out.push_back({Diagnostic::Kind::WrongArity, g,
                     name + " takes " + std::to_string(arity(gate.kind)) +
                         " operand(s), got " + std::to_string(gate.qubits.size())});
    }
    for (std::size_t q : gate.qubits) {
      if (q >= circuit.qubit_count) {
        out.push_back({Diagnostic::Kind::OutOfRange, g,
                       name + ": qubit " + std::to_string(q) + " out of range for " +
                           std::to_string(circuit.qubit_count) + " qubit(s)"});
      }
    }
    auto sorted = gate.qubits;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      out.push_back({Diagnostic::Kind::DuplicateOperand, g,
                     name + ": operands must be distinct"});
    }
  }
  return out;
}

Circuit parse_circuit(std::string_view text) {
  Circuit circuit;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = split_tokens(line);
    if (tokens.empty()) continue;

    if (!have_header) {
      if (lowercase(tokens[0]) != "qubits") {
        throw ParseError(line_no, "expected `qubits <n>` header before any gate");
      }
      if (tokens.size() != 2) throw ParseError(line_no, "`qubits` takes exactly one count");
      auto n = parse_index(tokens[1]);
      if (!n) throw ParseError(line_no, "invalid qubit count `" + std::string(tokens[1]) + "`");
      if (*n == 0) throw ValidationError(line_no, "qubit count must be positive");
      circuit.qubit_count = *n;
      have_header = true;
      continue;
    }

    auto kind = parse_mnemonic(tokens[0]);
    if (!kind) {
      if (lowercase(tokens[0]) == "qubits") {
        throw ParseError(line_no, "duplicate `qubits` header");
      }
      throw ParseError(line_no, "unknown gate mnemonic `" + std::string(tokens[0]) + "`");
    }
    const std::size_t want = arity(*kind);
    if (tokens.size() - 1 != want) {
      throw ParseError(line_no, std::string(mnemonic(*kind)) + " takes " +
                                    std::to_string(want) + " operand(s), got " +
                                    std::to_string(tokens.size() - 1));
    }
    Gate gate{*kind, {}};
    for (std::size_t t = 1; t < tokens.size(); ++t) {
      auto q = parse_index(tokens[t]);
      if (!q) {
        throw ParseError(line_no, "invalid qubit index `" + std::string(tokens[t]) + "`");
      }
      if (*q >= circuit.qubit_count) {
        throw ValidationError(line_no, "qubit " + std::to_string(*q) + " out of range for " +
                                           std::to_string(circuit.qubit_count) +
                                           " qubit(s)");
      }
      if (std::find(gate.qubits.begin(), gate.qubits.end(), *q) != gate.qubits.end()) {
        throw ValidationError(line_no, "duplicate operand " + std::to_string(*q));
      }
      gate.qubits.push_back(*q);
    }
    circuit.gates.push_back(std::move(gate));
  }
  if (!have_header) throw ParseError(0, "missing `qubits <n>` header");
  return circuit;
}

std::string to_text(const Circuit& circuit) {
  std::ostringstream out;
  out << "qubits " << circuit.qubit_count << '\n';
  for (const Gate& gate : circuit.gates) {
    out << mnemonic(gate.kind);
    for (std::size_t q : gate.qubits) out << ' ' << q;
    out << '\n';
  }
  return out.str();
}

std::vector<Gate> toffoli_sequence(std::size_t i, std::size_t j, std::size_t k) {
  using K = GateKind;
  // H(k);CNOT(j,k) is written as CZ(j,k);H(k), the two leading Hadamards on
  // the target cancelling.
  return {
      {K::CZ, {j, k}},   {K::H, {k}},       {K::TDG, {k}},     {K::CNOT, {i, k}},
      {K::T, {k}},       {K::CNOT, {j, k}}, {K::TDG, {k}},     {K::CNOT, {i, k}},
      {K::T, {j}},       {K::T, {k}},       {K::CNOT, {i, j}}, {K::H, {k}},
      {K::T, {i}},       {K::TDG, {j}},     {K::CNOT, {i, j}},
  };
}

Circuit expand_macros(const Circuit& circuit) {
  Circuit out;
  out.qubit_count = circuit.qubit_count;
  for (const Gate& gate : circuit.gates) {
    switch (gate.kind) {
      case GateKind::SWAP: {
        const auto a = gate.qubits.at(0);
        const auto b = gate.qubits.at(1);
        out.add(GateKind::CNOT, {a, b});
        out.add(GateKind::CNOT, {b, a});
        out.add(GateKind::CNOT, {a, b});
        break;
      }
      case GateKind::TOFFOLI: {
        auto seq = toffoli_sequence(gate.qubits.at(0), gate.qubits.at(1), gate.qubits.at(2));
        out.gates.insert(out.gates.end(), seq.begin(), seq.end());
        break;
      }
      default:
        out.gates.push_back(gate);
    }
  }
  return out;
}

}  // namespace z8poly
