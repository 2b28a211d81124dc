// Copyright 2026 The tdepth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tdepth/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "tdepth/anf.hpp"
#include "tdepth/ciphers.hpp"
#include "tdepth/circuit.hpp"
#include "tdepth/decomp.hpp"
#include "tdepth/errors.hpp"
#include "tdepth/estimate.hpp"
#include "tdepth/lowering.hpp"
#include "tdepth/synth.hpp"
#include "tdepth/verify.hpp"

namespace tdepth::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kMaxVerifyArity = 20;
constexpr int kMaxStatevectorArity = 10;

// Raised for problems with the command line or its input files.
class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Signals a completed run whose checks failed (exit 3).
struct CheckFailed {};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

std::optional<MultiOutputFunction> builtin_function(const std::string& name) {
  if (name == "aes_sbox" || name == "aes") return aes_sbox();
  if (name == "lowmc_sbox" || name == "lowmc") return lowmc_sbox();
  return std::nullopt;
}

struct InputOptions {
  std::string anf;
  std::string table;
  std::string expr;

  void attach(CLI::App& cmd) {
    auto* a = cmd.add_option("--anf", anf,
                             "ANF file, or a built-in: aes_sbox, lowmc_sbox");
    auto* t = cmd.add_option("--table", table, "truth-table file");
    auto* e = cmd.add_option(
        "--expr", expr, "inline ANF; ';' separates output coordinates");
    a->excludes(t)->excludes(e);
    t->excludes(e);
  }

  bool given() const { return !anf.empty() || !table.empty() || !expr.empty(); }

  MultiOutputFunction load() const {
    if (!anf.empty()) {
      if (!std::filesystem::exists(anf)) {
        if (auto f = builtin_function(anf)) return *f;
      }
      return parse_anf(read_file(anf));
    }
    if (!table.empty()) return parse_truth_tables(read_file(table));
    if (!expr.empty()) {
      std::string text = expr;
      std::replace(text.begin(), text.end(), ';', '\n');
      return parse_anf(text);
    }
    throw UsageError("one of --anf, --table or --expr is required");
  }
};

Json report_json(const ResourceReport& r) {
  return {{"qubit_count", r.qubit_count},   {"input_count", r.input_count},
          {"output_count", r.output_count}, {"ancilla_count", r.ancilla_count},
          {"t_count", r.t_count},           {"t_depth", r.t_depth},
          {"cnot_count", r.cnot_count},     {"cnot_depth", r.cnot_depth},
          {"total_depth", r.total_depth},   {"measure_count", r.measure_count}};
}

Json verification_json(const VerificationReport& r) {
  return Json::parse(to_json(r));
}

Json bounds_json(const ResourceBounds& b) {
  return {{"source", std::string(to_string(b.source))},
          {"n", b.n},
          {"m", b.m},
          {"variant", std::string(to_string(b.variant))},
          {"ancilla", to_string(b.ancilla)},
          {"t_count", to_string(b.t_count)},
          {"t_depth", to_string(b.t_depth)},
          {"cnot_count", to_string(b.cnot_count)},
          {"cnot_depth", to_string(b.cnot_depth)}};
}

void print_fields(std::ostream& out,
                  std::initializer_list<std::pair<const char*, std::string>> rows) {
  for (const auto& [key, value] : rows) {
    out << std::left << std::setw(14) << key << value << "\n";
  }
}

// synth ----------------------------------------------------------------------

struct SynthOptions {
  InputOptions input;
  std::string variant = "tdepth1";
  std::string out_path;
  std::string report_path;
  bool toffoli_level = false;
  bool verify = false;
  bool json = false;
};

int cmd_synth(const SynthOptions& o, std::ostream& out) {
  const MultiOutputFunction f = o.input.load();
  const SynthesisResult r = synthesize(f, parse_variant(o.variant));

  std::optional<VerificationReport> check;
  if (o.verify) {
    if (f.arity() > kMaxVerifyArity) {
      throw UsageError("--verify supports at most " +
                       std::to_string(kMaxVerifyArity) + " inputs");
    }
    check = exhaustive_check(r.toffoli_circuit, f);
  }

  Json report = {{"variant", o.variant},
                 {"n", f.arity()},
                 {"m", f.outputs()},
                 {"max_degree", r.plan.max_degree()},
                 {"resources", report_json(r.report)},
                 {"cnot_depth_stages",
                  {{"fan_out", r.stage_depths.fan_out},
                   {"output_xor", r.stage_depths.output_xor},
                   {"gadget", r.stage_depths.gadget},
                   {"fan_in", r.stage_depths.fan_in},
                   {"predicted_total", r.stage_depths.predicted_total},
                   {"measured_total", r.stage_depths.measured_total}}}};
  if (check) report["verification"] = verification_json(*check);

  if (!o.out_path.empty()) {
    write_file(o.out_path,
               export_text(o.toffoli_level ? r.toffoli_circuit : r.circuit));
  }
  if (!o.report_path.empty()) write_file(o.report_path, report.dump(2) + "\n");

  if (o.json) {
    out << report.dump(2) << "\n";
  } else {
    const ResourceReport& m = r.report;
    print_fields(out, {{"variant", o.variant},
                       {"inputs", std::to_string(f.arity())},
                       {"outputs", std::to_string(f.outputs())},
                       {"max_degree", std::to_string(r.plan.max_degree())},
                       {"qubits", std::to_string(m.qubit_count)},
                       {"ancilla", std::to_string(m.ancilla_count)},
                       {"t_count", std::to_string(m.t_count)},
                       {"t_depth", std::to_string(m.t_depth)},
                       {"cnot_count", std::to_string(m.cnot_count)},
                       {"cnot_depth", std::to_string(m.cnot_depth)},
                       {"total_depth", std::to_string(m.total_depth)},
                       {"measurements", std::to_string(m.measure_count)}});
    if (check) {
      out << std::left << std::setw(14) << "verify"
          << (check->passed() ? "passed" : "FAILED") << " (" << check->checked
          << " cases)\n";
      for (const Failure& fail : check->failures) {
        out << "  x=" << fail.x << " y=" << fail.y << ": " << fail.message
            << "\n";
      }
    }
  }
  if (check && !check->passed()) throw CheckFailed{};
  return kExitOk;
}

// estimate -------------------------------------------------------------------

struct EstimateOptions {
  InputOptions input;
  std::optional<int> n;
  std::optional<int> m;
  std::string variant = "tdepth1";
  bool json = false;
};

int cmd_estimate(const EstimateOptions& o, std::ostream& out) {
  const ToffoliVariant v = parse_variant(o.variant);
  std::optional<MultiOutputFunction> f;
  if (o.input.given()) f = o.input.load();
  const int n = o.n.value_or(f ? f->arity() : 0);
  const int m = o.m.value_or(f ? f->outputs() : 1);
  if (!f && !o.n) throw UsageError("estimate needs -n or a function input");

  std::vector<ResourceBounds> rows;
  std::optional<bool> identity;
  if (n >= 2 || !f) {
    if (n < 2) throw UsageError("estimate needs n >= 2");
    if (m < 1) throw UsageError("estimate needs m >= 1");
    rows.push_back(theorem1_bounds(n, m, v));
    rows.push_back(summation_bounds(n, m, v));
    const ResourceBounds& a = rows[0];
    const ResourceBounds& b = rows[1];
    identity = a.ancilla == b.ancilla && a.t_count == b.t_count &&
               a.t_depth == b.t_depth && a.cnot_count == b.cnot_count &&
               a.cnot_depth == b.cnot_depth;
  }
  if (f) rows.push_back(function_specific_estimate(*f, v));

  if (o.json) {
    Json j = {{"bounds", Json::array()}};
    for (const auto& r : rows) j["bounds"].push_back(bounds_json(r));
    if (identity) j["closed_form_equals_summation"] = *identity;
    out << j.dump(2) << "\n";
  } else {
    out << std::left << std::setw(18) << "source" << std::setw(12) << "ancilla"
        << std::setw(12) << "t_count" << std::setw(9) << "t_depth"
        << std::setw(14) << "cnot_count" << "cnot_depth\n";
    for (const auto& r : rows) {
      out << std::left << std::setw(18) << to_string(r.source) << std::setw(12)
          << to_string(r.ancilla) << std::setw(12) << to_string(r.t_count)
          << std::setw(9) << to_string(r.t_depth) << std::setw(14)
          << to_string(r.cnot_count) << to_string(r.cnot_depth) << "\n";
    }
    if (identity) {
      out << "closed form == summation: " << (*identity ? "yes" : "NO") << "\n";
    }
  }
  if (identity && !*identity) throw CheckFailed{};
  return kExitOk;
}

// verify ---------------------------------------------------------------------

struct VerifyOptions {
  InputOptions input;
  std::string circuit_path;
  bool json = false;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const MultiOutputFunction f = o.input.load();
  const Circuit c = parse_circuit(read_file(o.circuit_path));
  VerificationReport report;
  if (c.granularity() == Granularity::Toffoli) {
    if (f.arity() > kMaxVerifyArity) {
      throw UsageError("exhaustive check supports at most " +
                       std::to_string(kMaxVerifyArity) + " inputs");
    }
    report = exhaustive_check(c, f);
  } else {
    if (f.arity() > kMaxStatevectorArity) {
      throw UsageError("Clifford+T verification supports at most " +
                       std::to_string(kMaxStatevectorArity) + " inputs");
    }
    report = statevector_check(c, f);
  }
  if (o.json) {
    out << to_json(report) << "\n";
  } else {
    out << (report.passed() ? "passed" : "FAILED") << " (" << report.checked
        << " cases, max amplitude error " << report.max_amplitude_error
        << ")\n";
    for (const Failure& fail : report.failures) {
      out << "  x=" << fail.x << " y=" << fail.y << ": " << fail.message << "\n";
    }
  }
  if (!report.passed()) throw CheckFailed{};
  return kExitOk;
}

// tables ---------------------------------------------------------------------

struct TablesOptions {
  std::string which = "all";
  bool json = false;
};

int cmd_tables(const TablesOptions& o, std::ostream& out) {
  std::vector<std::string> names;
  if (o.which == "all") {
    names = {"sbox", "round", "aes", "compare"};
  } else {
    names = {o.which};
  }
  bool ok = true;
  Json all = Json::array();
  for (std::size_t i = 0; i < names.size(); ++i) {
    const CostTable t = table_by_name(names[i]);
    ok = ok && t.reproduced();
    if (o.json) {
      all.push_back(Json::parse(render_json(t)));
    } else {
      if (i) out << "\n";
      out << render_text(t);
    }
  }
  if (o.json) out << (names.size() == 1 ? all[0] : all).dump(2) << "\n";
  if (!ok) throw CheckFailed{};
  return kExitOk;
}

// gadget-check ---------------------------------------------------------------

struct GadgetOptions {
  int max_k = 8;
};

std::string verdict(const VerificationReport& r) {
  std::ostringstream s;
  s << (r.passed() ? "pass" : "FAIL") << " (" << r.checked
    << " branch checks, max error " << std::scientific << std::setprecision(1)
    << r.max_amplitude_error << ")";
  return s.str();
}

// Every input leaves the target holding the AND of the controls and every
// tree node back at 0.
bool tree_computes_and(const Circuit& tree, int k) {
  const Qubit target = tree.qubits_with_role(QubitRole::Storage).at(0);
  const std::vector<Qubit> controls = tree.qubits_with_role(QubitRole::Input);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << k); ++x) {
    BitState state{std::vector<std::uint8_t>(tree.qubit_count(), 0),
                   std::vector<std::uint8_t>(tree.cbit_count(), 0)};
    for (int i = 0; i < k; ++i) state.qubits[index(controls[i])] = (x >> i) & 1;
    const BitState end = simulate_reversible(tree, state);
    for (std::size_t q = 0; q < end.qubits.size(); ++q) {
      const QubitRole role = tree.roles()[q];
      std::uint8_t want = state.qubits[q];
      if (q == index(target)) want = x == (std::uint64_t{1} << k) - 1;
      else if (role != QubitRole::Input) want = 0;
      if (end.qubits[q] != want) return false;
    }
  }
  return true;
}

int cmd_gadget_check(const GadgetOptions& o, std::ostream& out) {
  bool ok = true;
  for (ToffoliVariant v : {ToffoliVariant::TDepthOne, ToffoliVariant::LogicalAnd}) {
    const ToffoliGadget g = build_toffoli_gadget(v);
    const bool tdepth1 = v == ToffoliVariant::TDepthOne;
    const GadgetCosts want{4, tdepth1 ? 1u : 2u, 0, 0, tdepth1 ? 1u : 0u};
    const bool costs_ok = g.costs.t_count == want.t_count &&
                          g.costs.t_depth == want.t_depth &&
                          g.costs.helper_count == want.helper_count;
    const VerificationReport compute =
        gadget_equivalence(g.circuit, and_compute_reference());
    const VerificationReport full = gadget_equivalence(
        full_toffoli_circuit(v), full_toffoli_reference());
    ok = ok && costs_ok && compute.passed() && full.passed();
    out << to_string(v) << " gadget\n";
    out << "  t_count " << g.costs.t_count << ", t_depth " << g.costs.t_depth
        << ", helpers " << g.costs.helper_count << ", cnot "
        << g.costs.cnot_count << " (accounting "
        << accounting_cnots_per_toffoli(v) << "), cnot_depth "
        << g.costs.cnot_depth << " -> " << (costs_ok ? "contract met" : "CONTRACT BROKEN")
        << "\n";
    out << "  compute on |a,b,0>:   " << verdict(compute) << "\n";
    out << "  full Toffoli (8 in):  " << verdict(full) << "\n";
  }
  const VerificationReport erase =
      gadget_equivalence(build_uncompute_gadget().circuit, and_erase_reference());
  ok = ok && erase.passed();
  out << "measurement uncompute: " << verdict(erase) << "\n";

  out << "MCT trees (k controls, toffoli-level check, then lowered costs)\n";
  for (int k = 1; k <= o.max_k; ++k) {
    const Circuit tree = mct_circuit(k);
    const bool classical = tree_computes_and(tree, k);
    out << "  k=" << k << ": " << (classical ? "pass" : "FAIL");
    ok = ok && classical;
    for (ToffoliVariant v :
         {ToffoliVariant::TDepthOne, ToffoliVariant::LogicalAnd}) {
      const Circuit lowered = lower_toffolis(tree, {v, true});
      const ResourceReport m = metrics(lowered);
      const std::uint64_t t_want = k < 2 ? 0 : 4u * (k - 1);
      const std::uint64_t td_want =
          k < 2 ? 0 : tree_levels(k) + (v == ToffoliVariant::LogicalAnd);
      const bool law = m.t_count == t_want && m.t_depth == td_want;
      ok = ok && law;
      out << "; " << to_string(v) << " T " << m.t_count << " T-depth "
          << m.t_depth << " CNOT " << m.cnot_count << (law ? "" : " (LAW BROKEN)");
    }
    out << "\n";
  }
  out << (ok ? "all gadget checks passed" : "gadget checks FAILED") << "\n";
  if (!ok) throw CheckFailed{};
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Optimal-T-depth Clifford+T synthesis from algebraic normal form"};
  app.name("tdepth");
  app.require_subcommand(1);

  const std::vector<std::string> variants{"tdepth1", "logical-and"};

  SynthOptions synth;
  auto* s = app.add_subcommand("synth", "synthesize a circuit from a function");
  synth.input.attach(*s);
  s->add_option("--variant", synth.variant, "Toffoli decomposition")
      ->check(CLI::IsMember(variants));
  s->add_option("--out", synth.out_path, "write the circuit here");
  s->add_option("--report", synth.report_path, "write the JSON report here");
  s->add_flag("--toffoli", synth.toffoli_level,
              "write the Toffoli-level circuit instead of Clifford+T");
  s->add_flag("--verify", synth.verify, "exhaustively check the circuit");
  s->add_flag("--json", synth.json, "print the report as JSON");

  EstimateOptions est;
  auto* e = app.add_subcommand("estimate", "closed-form and per-function bounds");
  est.input.attach(*e);
  e->add_option("-n", est.n, "number of inputs");
  e->add_option("-m", est.m, "number of outputs");
  e->add_option("--variant", est.variant, "Toffoli decomposition")
      ->check(CLI::IsMember(variants));
  e->add_flag("--json", est.json, "print JSON");

  VerifyOptions ver;
  auto* v = app.add_subcommand("verify", "check a circuit file against a function");
  ver.input.attach(*v);
  v->add_option("--circuit", ver.circuit_path, "circuit file")->required();
  v->add_flag("--json", ver.json, "print the report as JSON");

  TablesOptions tab;
  auto* t = app.add_subcommand("tables", "reproduce the AES cost tables");
  t->add_option("which", tab.which, "sbox, round, aes, compare or all")
      ->check(CLI::IsMember({"sbox", "round", "aes", "compare", "all"}));
  t->add_flag("--json", tab.json, "print JSON");

  GadgetOptions gad;
  auto* g = app.add_subcommand("gadget-check",
                               "verify the Toffoli gadgets and MCT trees");
  g->add_option("--max-k", gad.max_k, "largest MCT arity to check")
      ->check(CLI::Range(1, 12));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (s->parsed()) return cmd_synth(synth, out);
    if (e->parsed()) return cmd_estimate(est, out);
    if (v->parsed()) return cmd_verify(ver, out);
    if (t->parsed()) return cmd_tables(tab, out);
    if (g->parsed()) return cmd_gadget_check(gad, out);
  } catch (const CheckFailed&) {
    return kExitFailed;
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& ex) {
    err << "parse error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const SizeError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    err << "internal error: " << ex.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace tdepth::cli
