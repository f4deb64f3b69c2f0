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


#include "z8poly/cli.hpp"

#include <fmt/format.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "z8poly/circuit.hpp"
#include "z8poly/compiler.hpp"
#include "z8poly/oracle.hpp"
#include "z8poly/polynomial.hpp"
#include "z8poly/transform.hpp"
#include "z8poly/verify.hpp"

#ifndef Z8POLY_DEFAULT_FIXTURES_DIR
#define Z8POLY_DEFAULT_FIXTURES_DIR "fixtures"
#endif

namespace z8poly::cli {
namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parse or validation problem in a named input file.
struct InputError {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Circuit load_circuit(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_circuit(text);
  } catch (const ParseError& e) {
    throw InputError{kParseFailure, fmt::format("{}: {}", path, e.what())};
  } catch (const ValidationError& e) {
    throw InputError{kUsageFailure, fmt::format("{}: {}", path, e.what())};
  }
}

PhasePoly load_polynomial(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return from_json_text(text);
  } catch (const PolyFormatError& e) {
    throw InputError{kParseFailure, fmt::format("{}: {}", path, e.what())};
  }
}

// Runs `body` writing to --out when given, stdout otherwise.
void with_output(const std::string& path, std::ostream& out,
                 const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  body(file);
}

std::vector<std::uint8_t> parse_bits(const std::string& text, std::size_t width,
                                     const char* flag) {
  if (text.size() != width) {
    throw UsageError(fmt::format("{} has {} bits, circuit has {} qubits", flag, text.size(), width));
  }
  std::vector<std::uint8_t> bits(width);
  for (std::size_t i = 0; i < width; ++i) {
    const char c = text[width - 1 - i];
    if (c != '0' && c != '1') throw UsageError(fmt::format("{} must be a bitstring", flag));
    bits[i] = static_cast<std::uint8_t>(c - '0');
  }
  return bits;
}

void dump(std::ostream& os, std::span<const Complex> values, std::size_t width) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    os << to_bitstring(i, width) << ' ' << format_real(values[i].real()) << ' '
       << format_real(values[i].imag()) << '\n';
  }
}

json var_list(std::span<const VarId> vars) {
  auto j = json::array();
  for (VarId v : vars) j.push_back(to_string(v));
  return j;
}

// The interchange document with the wire-map summary appended before the closing brace.
std::string compile_document(const CompilationResult& cr) {
  std::string doc = to_json_text(cr.poly);
  doc.resize(doc.rfind('}'));
  while (!doc.empty() && doc.back() == '\n') doc.pop_back();
  const auto finals = cr.final_vars();
  return fmt::format("{},\n  \"final_vars\": {},\n  \"m\": {}\n}}\n", doc,
                     var_list(finals).dump(), cr.m);
}

std::vector<VarId> read_final_vars(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw InputError{kParseFailure, fmt::format("{}: {}", path, e.what())};
  }
  if (!doc.contains("final_vars") || !doc["final_vars"].is_array()) {
    throw InputError{kParseFailure, path + ": missing final_vars array"};
  }
  std::vector<VarId> vars;
  for (const auto& item : doc["final_vars"]) {
    const auto v = item.is_string() ? parse_var(item.get<std::string>()) : std::nullopt;
    if (!v) throw InputError{kParseFailure, path + ": bad entry in final_vars"};
    vars.push_back(*v);
  }
  return vars;
}

// ---------------------------------------------------------------------------

struct Options {
  std::string circuit_path;
  std::string out_path;
  bool naive = false;
  bool sandwich = false;
  std::string input_bits;
  std::string output_bits;
  std::vector<std::uint64_t> corpus;
  bool fixtures = false;
  std::string fixtures_dir = Z8POLY_DEFAULT_FIXTURES_DIR;
  std::string poly_path;
  std::string against_path;
  std::string report_path;
  double tolerance = kDefaultTolerance;
  CorpusOptions corpus_options;
  std::string demo_name;
};

int cmd_compile(const Options& o, std::ostream& out) {
  const CompilationResult cr = compile(load_circuit(o.circuit_path));
  with_output(o.out_path, out, [&](std::ostream& os) { os << compile_document(cr); });
  return kOk;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const CompilationResult cr = compile(load_circuit(o.circuit_path));
  Spectrum s;
  if (o.naive) {
    s = gwht_naive(cr.poly);
    if (o.sandwich) {
      const double scale = std::ldexp(1.0, -static_cast<int>(s.vars));
      for (Complex& v : s.values) v *= scale;
    }
  } else if (o.sandwich) {
    s = sandwich_state(cr);
  } else {
    s = gwht_fast(phase_vector(cr.poly));
  }
  with_output(o.out_path, out, [&](std::ostream& os) { dump(os, s.values, s.vars); });
  return kOk;
}

int cmd_amplitude(const Options& o, std::ostream& out) {
  const CompilationResult cr = compile(load_circuit(o.circuit_path));
  const auto x_in = parse_bits(o.input_bits, cr.n, "--input");
  const auto finals = cr.final_vars();
  if (!o.output_bits.empty()) {
    const auto y = parse_bits(o.output_bits, cr.n, "--output");
    const Complex a = amplitude(cr.poly, finals, x_in, y);
    out << format_real(a.real()) << ' ' << format_real(a.imag()) << '\n';
    return kOk;
  }
  const AmplitudeVector v = amplitudes(cr, x_in);
  dump(out, v.values, cr.n);
  return kOk;
}

// Collects report lines and a pass/fail tally for the verify command.
class Report {
 public:
  void add(const std::string& line, bool gating, bool pass, const std::string& summary) {
    lines_.push_back(line);
    summaries_.push_back(fmt::format("{} {}", gating ? (pass ? "PASS" : "FAIL") : "INFO", summary));
    if (gating && !pass) ++failures_;
  }
  void add(const VerifyReport& r) {
    std::string summary = fmt::format("{} (n={}, m={}, max deviation {})", r.description, r.n,
                                      r.m, format_real(r.max_deviation));
    if (r.error) summary += ": " + *r.error;
    add(to_json_line(r), true, r.pass, summary);
  }

  int finish(const std::string& path, std::ostream& out, std::ostream& err) const {
    std::ostream& summary_stream = path.empty() ? err : out;
    with_output(path, out, [&](std::ostream& os) {
      for (const auto& line : lines_) os << line << '\n';
    });
    for (const auto& s : summaries_) summary_stream << s << '\n';
    summary_stream << fmt::format("{} checks, {} failed\n", lines_.size(), failures_);
    return failures_ == 0 ? kOk : kVerificationFailure;
  }

 private:
  std::vector<std::string> lines_;
  std::vector<std::string> summaries_;
  std::size_t failures_ = 0;
};

std::string sample_text() {
  return "qubits 3\nz 0\ns 1\nh 1\ncz 0 1\nt 2\nh 2\n";
}

std::string describe_search(const FixtureSearch& s) {
  std::string text = fmt::format("{}: {} of {} final-variable maps pass", s.description,
                                 s.passing.size(), s.candidates);
  if (s.skipped) text += fmt::format(" ({} over the cap)", s.skipped);
  if (s.best) text += fmt::format(", best max deviation {}", format_real(s.best->max_deviation));
  if (s.ambiguous()) text += ", ambiguous";
  return text;
}

void fixture_checks(const Options& o, Report& report) {
  namespace fs = std::filesystem;
  const fs::path dir(o.fixtures_dir);

  // The sample circuit must compile to the transcribed polynomial exactly.
  const PhasePoly expected = load_polynomial((dir / "sample.json").string());
  const CompilationResult cr = compile(parse_circuit(sample_text()));
  const bool exact = cr.poly == expected;
  json j;
  j["description"] = "sample exact polynomial";
  j["kind"] = "exact_match";
  j["pass"] = exact;
  j["expected"] = to_display_string(expected);
  j["actual"] = to_display_string(cr.poly);
  j["expected_ancillas"] = expected.ancillas();
  j["actual_ancillas"] = cr.m;
  report.add(j.dump(), true, exact,
             fmt::format("sample exact polynomial: {}", to_display_string(cr.poly)));

  // Our own SWAP and Toffoli compilations against the oracle.
  report.add(check_circuit(parse_circuit("qubits 2\nswap 0 1\n"), o.tolerance, "swap compiled"));
  report.add(check_circuit(parse_circuit("qubits 3\ntoffoli 0 1 2\n"), o.tolerance,
                           "toffoli compiled"));

  // Transcribed polynomials: every final-variable map is tried and the outcome reported.
  struct Fixture {
    const char* file;
    const char* circuit;
    const char* description;
  };
  for (const Fixture& f : {Fixture{"swap_reference.json", "qubits 2\nswap 0 1\n", "swap reference polynomial"},
                           Fixture{"toffoli_reference.json", "qubits 3\ntoffoli 0 1 2\n",
                                   "toffoli reference polynomial"}}) {
    const PhasePoly p = load_polynomial((dir / f.file).string());
    const auto reference = oracle::circuit_unitary(parse_circuit(f.circuit));
    const FixtureSearch s = search_final_var_maps(p, reference, 1e-6, true, f.description);
    json line = json::parse(to_json_line(s));
    line["gating"] = false;
    report.add(line.dump(), false, s.found(), describe_search(s));
  }
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const int modes = !o.circuit_path.empty() + !o.corpus.empty() + o.fixtures + !o.poly_path.empty();
  if (modes != 1) {
    throw UsageError("verify takes exactly one of: a circuit file, --corpus, --fixtures, --poly");
  }
  if (!(o.tolerance > 0)) throw UsageError("--tol must be positive");
  Report report;
  if (!o.circuit_path.empty()) {
    report.add(check_circuit(load_circuit(o.circuit_path), o.tolerance, o.circuit_path));
  } else if (!o.corpus.empty()) {
    const auto circuits = random_corpus(o.corpus[0], o.corpus[1], o.corpus_options);
    for (std::size_t i = 0; i < circuits.size(); ++i) {
      report.add(check_circuit(circuits[i], o.tolerance,
                               fmt::format("corpus seed {} #{}", o.corpus[0], i)));
    }
  } else if (o.fixtures) {
    fixture_checks(o, report);
  } else {
    if (o.against_path.empty()) throw UsageError("--poly requires --against");
    const PhasePoly p = load_polynomial(o.poly_path);
    const FinalVarMap finals(read_final_vars(o.poly_path));
    const Circuit c = load_circuit(o.against_path);
    if (c.qubit_count > kVerifyQubitCap) {
      throw CapExceeded(fmt::format("reference circuit has {} qubits, cap is {}", c.qubit_count,
                                    kVerifyQubitCap));
    }
    try {
      finals.validate(p);
    } catch (const std::invalid_argument& e) {
      throw InputError{kUsageFailure, fmt::format("{}: {}", o.poly_path, e.what())};
    }
    if (p.inputs() != c.qubit_count) {
      throw UsageError(fmt::format("polynomial has {} inputs, circuit has {} qubits", p.inputs(),
                                   c.qubit_count));
    }
    report.add(check_polynomial(p, finals, oracle::circuit_unitary(c), o.tolerance, false,
                                o.poly_path + " against " + o.against_path));
  }
  return report.finish(o.report_path, out, err);
}

int cmd_demo(const Options& o, std::ostream& out) {
  std::string text;
  if (o.demo_name == "swap") {
    text = "qubits 2\nswap 0 1\n";
  } else if (o.demo_name == "toffoli") {
    text = "qubits 3\ntoffoli 0 1 2\n";
  } else if (o.demo_name == "sample") {
    text = sample_text();
  } else {
    throw UsageError("unknown demo '" + o.demo_name + "' (choose swap, toffoli or sample)");
  }
  const Circuit c = parse_circuit(text);
  const Circuit expanded = expand_macros(c);

  out << "circuit:\n";
  std::istringstream lines(to_text(c));
  for (std::string line; std::getline(lines, line);) out << "  " << line << '\n';
  if (expanded.gates.size() != c.gates.size()) {
    out << fmt::format("expanded to {} gates\n", expanded.gates.size());
  }

  // Folding the gadgets by hand keeps terms in the order the rules emit them.
  GadgetState state = GadgetState::fresh(c.qubit_count);
  for (const Gate& g : expanded.gates) state = apply_gate(std::move(state), g);
  const CompilationResult cr = compile(c);

  out << "polynomial: " << to_display_string(state.poly) << '\n';
  out << fmt::format("terms: {}, constant {}, ancillas m = {}\n", cr.poly.terms().size(),
                     cr.poly.constant(), cr.m);
  out << "ancilla map:\n";
  for (std::size_t q = 0; q < cr.n; ++q) {
    out << fmt::format("  qubit {}: {} -> {}\n", q, to_string(cr.wires.input_var(q)),
                       to_string(cr.wires.current_var(q)));
  }
  std::string retired;
  for (VarId v : cr.wires.retired()) retired += " " + to_string(v);
  out << "  retired:" << (retired.empty() ? " none" : retired) << '\n';

  const VerifyReport r = check_circuit(c, kDefaultTolerance, o.demo_name);
  out << fmt::format("verification: {} (max deviation {}, tolerance {})\n",
                     r.pass ? "pass" : "fail", format_real(r.max_deviation),
                     format_real(r.tolerance));
  return r.pass ? kOk : kVerificationFailure;
}

}  // namespace

std::string format_real(double value) {
  if (value == 0.0) value = 0.0;  // drops the sign of negative zero
  return fmt::format("{:.17g}", value);
}

std::string to_bitstring(std::uint64_t index, std::size_t width) {
  std::string s(width, '0');
  for (std::size_t i = 0; i < width; ++i) {
    if ((index >> i) & 1U) s[width - 1 - i] = '1';
  }
  return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Phase polynomials over Z8 for Clifford+T circuits", "z8poly"};
  app.require_subcommand(1);

  auto* compile_cmd = app.add_subcommand("compile", "Compile a circuit to its phase polynomial");
  compile_cmd->add_option("circuit", o.circuit_path, "Circuit file")->required();
  compile_cmd->add_option("-o,--out", o.out_path, "Write the document here instead of stdout");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Dump the Walsh-Hadamard spectrum");
  spectrum_cmd->add_option("circuit", o.circuit_path, "Circuit file")->required();
  spectrum_cmd->add_flag("--naive", o.naive, "Use the quadratic reference transform");
  spectrum_cmd->add_flag("--sandwich", o.sandwich, "Dump the normalized sandwich state");
  spectrum_cmd->add_option("-o,--out", o.out_path, "Write the dump here instead of stdout");

  auto* amplitude_cmd = app.add_subcommand("amplitude", "Extract output amplitudes");
  amplitude_cmd->add_option("circuit", o.circuit_path, "Circuit file")->required();
  amplitude_cmd->add_option("--input", o.input_bits, "Input basis state, qubit n-1 first")
      ->required();
  amplitude_cmd->add_option("--output", o.output_bits, "Single output basis state");

  auto* verify_cmd = app.add_subcommand("verify", "Check compiled amplitudes against simulation");
  verify_cmd->add_option("circuit", o.circuit_path, "Circuit file");
  verify_cmd->add_option("--corpus", o.corpus, "Random corpus: SEED COUNT")->expected(2);
  verify_cmd->add_option("--max-qubits", o.corpus_options.max_qubits, "Corpus qubit bound")
      ->check(CLI::Range(std::size_t{1}, kVerifyQubitCap));
  verify_cmd->add_option("--max-gates", o.corpus_options.max_gates, "Corpus gate bound");
  verify_cmd->add_option("--max-ancillas", o.corpus_options.max_ancillas, "Corpus ancilla bound")
      ->check(CLI::Range(std::size_t{0}, kInternalVariableCap));
  verify_cmd->add_flag("--fixtures", o.fixtures, "Check the transcribed reference polynomials");
  verify_cmd->add_option("--fixtures-dir", o.fixtures_dir, "Directory holding fixture documents");
  verify_cmd->add_option("--poly", o.poly_path, "Polynomial document written by compile");
  verify_cmd->add_option("--against", o.against_path, "Reference circuit for --poly");
  verify_cmd->add_option("--report", o.report_path, "Write JSON lines here instead of stdout");
  verify_cmd->add_option("--tol", o.tolerance, "Maximum absolute deviation");

  auto* demo_cmd = app.add_subcommand("demo", "Walk through a built-in example");
  demo_cmd->add_option("name", o.demo_name, "swap, toffoli or sample")->required();

  std::vector<const char*> argv{"z8poly"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageFailure;
  }

  try {
    if (compile_cmd->parsed()) return cmd_compile(o, out);
    if (spectrum_cmd->parsed()) return cmd_spectrum(o, out);
    if (amplitude_cmd->parsed()) return cmd_amplitude(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out, err);
    return cmd_demo(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageFailure;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const std::length_error& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  }
}

}  // namespace z8poly::cli
