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

#include "tdepth/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "tdepth/errors.hpp"
#include "tdepth/statevector.hpp"

namespace tdepth {
namespace {

constexpr int kMaxExhaustiveArity = 20;
constexpr std::size_t kMaxReportedFailures = 16;
constexpr int kRandomPairs = 16;
constexpr std::uint64_t kRandomSeed = 0x7d3e'5a1c'9b04'f2e6ULL;
constexpr double kTolerance = 1e-10;
constexpr double kBranchCutoff = 1e-12;
constexpr int kMaxInternalQubits = 20;

// Runs the classical gates on 64 basis states at once, one per bit lane.
void run_lanes(const Circuit& circuit, std::vector<std::uint64_t>& lanes) {
  for (const Gate& g : circuit.gates()) {
    const auto q = [&](int i) -> std::uint64_t& {
      return lanes[index(g.qubits[i])];
    };
    switch (g.kind) {
      case GateKind::X:
        q(0) = ~q(0);
        break;
      case GateKind::CNOT:
        q(1) ^= q(0);
        break;
      case GateKind::Toffoli:
      case GateKind::Uncompute:
        q(2) ^= q(0) & q(1);
        break;
      default:
        throw GranularityError("classical simulation cannot run gate '" +
                               std::string(to_string(g.kind)) + "'");
    }
  }
}

std::uint64_t lane_mask(std::uint64_t valid) {
  return valid >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << valid) - 1;
}

// Lane l of input i carries bit i of (base + l); base is a multiple of 64.
std::uint64_t input_pattern(int i, std::uint64_t base) {
  static constexpr std::uint64_t kLow[6] = {
      0xAAAA'AAAA'AAAA'AAAAULL, 0xCCCC'CCCC'CCCC'CCCCULL,
      0xF0F0'F0F0'F0F0'F0F0ULL, 0xFF00'FF00'FF00'FF00ULL,
      0xFFFF'0000'FFFF'0000ULL, 0xFFFF'FFFF'0000'0000ULL};
  if (i < 6) return kLow[i];
  return ((base >> i) & 1) ? ~std::uint64_t{0} : 0;
}

struct Layout {
  std::vector<Qubit> inputs;
  std::vector<Qubit> outputs;
  std::vector<bool> is_data;  // input or output
};

Layout layout_of(const Circuit& circuit, const MultiOutputFunction& f) {
  Layout l{circuit.qubits_with_role(QubitRole::Input),
           circuit.qubits_with_role(QubitRole::Output),
           std::vector<bool>(circuit.qubit_count(), false)};
  if (static_cast<int>(l.inputs.size()) != f.arity() ||
      static_cast<int>(l.outputs.size()) != f.outputs()) {
    throw DomainError("circuit has " + std::to_string(l.inputs.size()) +
                      " inputs and " + std::to_string(l.outputs.size()) +
                      " outputs; function is " + std::to_string(f.arity()) +
                      " -> " + std::to_string(f.outputs()));
  }
  for (Qubit q : l.inputs) l.is_data[index(q)] = true;
  for (Qubit q : l.outputs) l.is_data[index(q)] = true;
  return l;
}

// Checks one 64-lane chunk; returns the failures in lane order.
std::vector<Failure> check_chunk(const Circuit& circuit,
                                 const MultiOutputFunction& f,
                                 const Layout& l, std::uint64_t base,
                                 std::uint64_t valid) {
  std::vector<std::uint64_t> lanes(circuit.qubit_count(), 0);
  for (std::size_t i = 0; i < l.inputs.size(); ++i) {
    lanes[index(l.inputs[i])] = input_pattern(static_cast<int>(i), base);
  }
  run_lanes(circuit, lanes);

  const std::uint64_t mask = lane_mask(valid);
  std::vector<std::uint64_t> expected(l.outputs.size(), 0);
  for (std::uint64_t lane = 0; lane < valid; ++lane) {
    const std::uint64_t y = evaluate(f, base + lane);
    for (std::size_t j = 0; j < l.outputs.size(); ++j) {
      if ((y >> j) & 1) expected[j] |= std::uint64_t{1} << lane;
    }
  }

  std::uint64_t bad = 0;
  for (std::size_t i = 0; i < l.inputs.size(); ++i) {
    bad |= (lanes[index(l.inputs[i])] ^
            input_pattern(static_cast<int>(i), base)) & mask;
  }
  for (std::size_t j = 0; j < l.outputs.size(); ++j) {
    bad |= (lanes[index(l.outputs[j])] ^ expected[j]) & mask;
  }
  for (std::size_t q = 0; q < lanes.size(); ++q) {
    if (!l.is_data[q]) bad |= lanes[q] & mask;
  }

  std::vector<Failure> failures;
  for (std::uint64_t lane = 0; lane < valid; ++lane) {
    if (!((bad >> lane) & 1)) continue;
    const std::uint64_t x = base + lane;
    std::ostringstream msg;
    std::uint64_t got = 0;
    for (std::size_t j = 0; j < l.outputs.size(); ++j) {
      got |= ((lanes[index(l.outputs[j])] >> lane) & 1) << j;
    }
    std::vector<std::size_t> dirty;
    for (std::size_t q = 0; q < lanes.size(); ++q) {
      if (!l.is_data[q] && ((lanes[q] >> lane) & 1)) dirty.push_back(q);
    }
    msg << "outputs 0x" << std::hex << got << ", expected 0x"
        << evaluate(f, x) << std::dec;
    if (!dirty.empty()) {
      msg << "; ancilla left set:";
      for (std::size_t q : dirty) msg << " q[" << q << "]";
    }
    failures.push_back({x, 0, msg.str()});
    if (failures.size() >= kMaxReportedFailures) break;
  }
  return failures;
}

void check_random_pairs(const Circuit& circuit, const MultiOutputFunction& f,
                        const Layout& l, VerificationReport& report) {
  std::mt19937_64 rng(kRandomSeed);
  const int n = f.arity(), m = f.outputs();
  const std::uint64_t x_mask = lane_mask(static_cast<std::uint64_t>(n));
  const std::uint64_t y_mask = lane_mask(static_cast<std::uint64_t>(m));
  for (int trial = 0; trial < kRandomPairs; ++trial) {
    const std::uint64_t x = rng() & x_mask;
    std::uint64_t y = 0;
    while (y == 0) y = rng() & y_mask;
    BitState state{std::vector<std::uint8_t>(circuit.qubit_count(), 0),
                   std::vector<std::uint8_t>(circuit.cbit_count(), 0)};
    for (int i = 0; i < n; ++i) state.qubits[index(l.inputs[i])] = (x >> i) & 1;
    for (int j = 0; j < m; ++j) state.qubits[index(l.outputs[j])] = (y >> j) & 1;
    const BitState out = simulate_reversible(circuit, std::move(state));
    const std::uint64_t want = y ^ evaluate(f, x);
    std::uint64_t got = 0;
    for (int j = 0; j < m; ++j) {
      got |= std::uint64_t{out.qubits[index(l.outputs[j])]} << j;
    }
    bool ok = got == want;
    for (int i = 0; i < n; ++i) {
      ok = ok && out.qubits[index(l.inputs[i])] == ((x >> i) & 1);
    }
    for (std::size_t q = 0; q < out.qubits.size(); ++q) {
      ok = ok && (l.is_data[q] || out.qubits[q] == 0);
    }
    ++report.checked;
    if (!ok) {
      std::ostringstream msg;
      msg << "outputs 0x" << std::hex << got << ", expected y^f(x) = 0x"
          << want;
      report.failures.push_back({x, y, msg.str()});
    }
  }
}

}  // namespace

BitState simulate_reversible(const Circuit& circuit, BitState input) {
  if (input.qubits.size() != circuit.qubit_count()) {
    throw DomainError("state has " + std::to_string(input.qubits.size()) +
                      " qubits, circuit has " +
                      std::to_string(circuit.qubit_count()));
  }
  std::vector<std::uint64_t> lanes(input.qubits.size());
  for (std::size_t q = 0; q < lanes.size(); ++q) lanes[q] = input.qubits[q] & 1;
  run_lanes(circuit, lanes);
  for (std::size_t q = 0; q < lanes.size(); ++q) {
    input.qubits[q] = static_cast<std::uint8_t>(lanes[q] & 1);
  }
  return input;
}

std::string to_json(const VerificationReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const Failure& f : report.failures) {
    failures.push_back({{"x", f.x}, {"y", f.y}, {"message", f.message}});
  }
  nlohmann::json j = {{"checked", report.checked},
                      {"failures", std::move(failures)},
                      {"max_amplitude_error", report.max_amplitude_error}};
  return j.dump();
}

unsigned verification_threads() {
  if (const char* env = std::getenv("ANF_TDEPTH_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

VerificationReport exhaustive_check(const Circuit& circuit,
                                    const MultiOutputFunction& f,
                                    unsigned threads) {
  if (circuit.granularity() != Granularity::Toffoli) {
    throw GranularityError(
        "exhaustive check needs a Toffoli-level circuit; use gadget "
        "equivalence for Clifford+T circuits");
  }
  if (f.arity() > kMaxExhaustiveArity) {
    throw SizeError("exhaustive check supports at most " +
                    std::to_string(kMaxExhaustiveArity) + " inputs");
  }
  const Layout l = layout_of(circuit, f);
  const std::uint64_t total = std::uint64_t{1} << f.arity();
  const std::uint64_t chunks = (total + 63) / 64;
  if (threads == 0) threads = verification_threads();
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, chunks));

  VerificationReport report;
  std::atomic<std::uint64_t> next{0};
  std::mutex mu;
  auto worker = [&] {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      const std::uint64_t base = c * 64;
      auto found = check_chunk(circuit, f, l, base,
                               std::min<std::uint64_t>(64, total - base));
      if (found.empty()) continue;
      std::lock_guard lock(mu);
      report.failures.insert(report.failures.end(), found.begin(),
                             found.end());
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  std::sort(report.failures.begin(), report.failures.end(),
            [](const Failure& a, const Failure& b) { return a.x < b.x; });
  if (report.failures.size() > kMaxReportedFailures) {
    report.failures.resize(kMaxReportedFailures);
  }
  report.checked = total;
  check_random_pairs(circuit, f, l, report);
  return report;
}

// Statevector simulation ------------------------------------------------------

double BranchedState::total_probability() const {
  double p = 0;
  for (const Branch& b : branches) p += b.probability;
  return p;
}

namespace {

using Complex = std::complex<double>;

Eigen::Index bit_of(Qubit q) { return Eigen::Index{1} << index(q); }

void apply_unitary(Amplitudes& psi, GateKind kind,
                   std::span<const Qubit> qs) {
  const double r = std::sqrt(0.5);
  switch (kind) {
    case GateKind::H:
      sv::apply_h(psi, index(qs[0]));
      break;
    case GateKind::S:
      sv::apply_phase(psi, bit_of(qs[0]), Complex(0, 1));
      break;
    case GateKind::Sdg:
      sv::apply_phase(psi, bit_of(qs[0]), Complex(0, -1));
      break;
    case GateKind::T:
      sv::apply_phase(psi, bit_of(qs[0]), Complex(r, r));
      break;
    case GateKind::Tdg:
      sv::apply_phase(psi, bit_of(qs[0]), Complex(r, -r));
      break;
    case GateKind::X:
      sv::apply_x(psi, index(qs[0]));
      break;
    case GateKind::Z:
      sv::apply_phase(psi, bit_of(qs[0]), Complex(-1, 0));
      break;
    case GateKind::CZ:
      sv::apply_phase(psi, bit_of(qs[0]) | bit_of(qs[1]), Complex(-1, 0));
      break;
    case GateKind::CNOT:
      sv::apply_controlled_x(psi, bit_of(qs[0]), index(qs[1]));
      break;
    case GateKind::Toffoli:
    case GateKind::Uncompute:
      sv::apply_controlled_x(psi, bit_of(qs[0]) | bit_of(qs[1]),
                             index(qs[2]));
      break;
    default:
      throw DomainError("gate '" + std::string(to_string(kind)) +
                        "' is not unitary");
  }
}

BranchedState evolve(const Circuit& circuit, Branch start) {
  std::vector<Branch> branches;
  branches.push_back(std::move(start));
  for (const Gate& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::MeasureX:
      case GateKind::MeasureZ: {
        const unsigned q = index(g.qubits[0]);
        std::vector<Branch> next;
        next.reserve(branches.size() * 2);
        for (Branch& b : branches) {
          if (g.kind == GateKind::MeasureX) sv::apply_h(b.state, q);
          const double p1 = sv::probability_one(b.state, q);
          for (int outcome = 0; outcome < 2; ++outcome) {
            const double p = outcome ? p1 : 1.0 - p1;
            if (p < kBranchCutoff) continue;
            Branch split{b.outcomes, b.state, b.probability * p};
            sv::project(split.state, q, outcome == 1);
            split.state /= std::sqrt(p);
            split.outcomes[index(g.cbit)] = static_cast<std::int8_t>(outcome);
            next.push_back(std::move(split));
          }
        }
        branches = std::move(next);
        break;
      }
      case GateKind::Correct:
        for (Branch& b : branches) {
          if (b.outcomes[index(g.cbit)] == 1) {
            apply_unitary(b.state, g.correction, g.operands());
          }
        }
        break;
      default:
        for (Branch& b : branches) apply_unitary(b.state, g.kind, g.operands());
    }
  }
  return BranchedState{std::move(branches)};
}

void check_width(const Circuit& circuit, int limit) {
  if (static_cast<int>(circuit.qubit_count()) > limit) {
    throw SizeError("statevector simulation supports at most " +
                    std::to_string(limit) + " qubits, circuit has " +
                    std::to_string(circuit.qubit_count()));
  }
}

}  // namespace

BranchedState simulate_branches(const Circuit& circuit,
                                std::uint64_t basis_input) {
  check_width(circuit, kMaxBranchQubits);
  const Eigen::Index dim = Eigen::Index{1} << circuit.qubit_count();
  if (basis_input >= static_cast<std::uint64_t>(dim)) {
    throw DomainError("basis input out of range");
  }
  Amplitudes psi = Amplitudes::Zero(dim);
  psi(static_cast<Eigen::Index>(basis_input)) = 1.0;
  return simulate_branches(circuit, psi);
}

BranchedState simulate_branches(const Circuit& circuit,
                                const Amplitudes& initial) {
  check_width(circuit, kMaxInternalQubits);
  const Eigen::Index dim = initial.size();
  if (dim == 0 || (dim & (dim - 1)) != 0 ||
      dim < (Eigen::Index{1} << circuit.qubit_count())) {
    throw DomainError("initial state dimension must be a power of two "
                      "covering every circuit qubit");
  }
  return evolve(circuit,
                Branch{std::vector<std::int8_t>(circuit.cbit_count(), -1),
                       initial, 1.0});
}

VerificationReport statevector_check(const Circuit& circuit,
                                     const MultiOutputFunction& f) {
  check_width(circuit, kMaxInternalQubits);
  const Layout l = layout_of(circuit, f);
  const Eigen::Index dim = Eigen::Index{1} << circuit.qubit_count();
  VerificationReport report;
  const std::uint64_t total = std::uint64_t{1} << f.arity();
  for (std::uint64_t x = 0; x < total; ++x) {
    const std::uint64_t y = evaluate(f, x);
    Eigen::Index in = 0, want = 0;
    for (std::size_t i = 0; i < l.inputs.size(); ++i) {
      if ((x >> i) & 1) in |= bit_of(l.inputs[i]);
    }
    want = in;
    for (std::size_t j = 0; j < l.outputs.size(); ++j) {
      if ((y >> j) & 1) want |= bit_of(l.outputs[j]);
    }
    Amplitudes init = Amplitudes::Zero(dim), expected = Amplitudes::Zero(dim);
    init(in) = 1.0;
    expected(want) = 1.0;
    const BranchedState out = simulate_branches(circuit, init);
    for (std::size_t k = 0; k < out.branches.size(); ++k) {
      const double err = sv::phase_aligned_error(out.branches[k].state, expected);
      report.max_amplitude_error = std::max(report.max_amplitude_error, err);
      ++report.checked;
      if (err > kTolerance && report.failures.size() < kMaxReportedFailures) {
        std::ostringstream msg;
        msg << "branch " << k << " deviates from |x, f(x) = 0x" << std::hex
            << y << std::dec << ", 0> by " << err;
        report.failures.push_back({x, 0, msg.str()});
      }
    }
  }
  return report;
}

Eigen::MatrixXcd toffoli_unitary() {
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(8, 8);
  for (int i = 0; i < 8; ++i) u((i & 3) == 3 ? i ^ 4 : i, i) = 1.0;
  return u;
}

GadgetReference and_compute_reference() {
  GadgetReference ref{{0, 1, 2, 3}, Eigen::MatrixXcd::Zero(8, 4)};
  for (int i = 0; i < 4; ++i) ref.images(i == 3 ? 7 : i, i) = 1.0;
  return ref;
}

GadgetReference and_erase_reference() {
  GadgetReference ref{{0, 1, 2, 7}, Eigen::MatrixXcd::Zero(8, 4)};
  for (int i = 0; i < 4; ++i) ref.images(i, i) = 1.0;
  return ref;
}

GadgetReference full_toffoli_reference() {
  GadgetReference ref{{}, Eigen::MatrixXcd::Zero(16, 8)};
  const Eigen::MatrixXcd u = toffoli_unitary();
  for (int i = 0; i < 8; ++i) {
    ref.domain.push_back(static_cast<std::uint64_t>(i));
    ref.images.col(i).head(8) = u.col(i);
  }
  return ref;
}

GadgetReference unitary_reference(const Eigen::MatrixXcd& u) {
  GadgetReference ref{{}, u};
  for (Eigen::Index i = 0; i < u.cols(); ++i) ref.domain.push_back(i);
  return ref;
}

VerificationReport gadget_equivalence(const Circuit& gadget,
                                      const GadgetReference& reference) {
  check_width(gadget, kMaxBranchQubits);
  std::vector<unsigned> data;
  for (std::size_t q = 0; q < gadget.qubit_count(); ++q) {
    if (gadget.roles()[q] != QubitRole::Helper) {
      data.push_back(static_cast<unsigned>(q));
    }
  }
  const Eigen::Index data_dim = Eigen::Index{1} << data.size();
  const auto domain_size = static_cast<Eigen::Index>(reference.domain.size());
  if (reference.images.rows() != data_dim ||
      reference.images.cols() != domain_size || domain_size == 0) {
    throw DomainError("reference shape does not match the gadget's " +
                      std::to_string(data.size()) + " data qubits");
  }
  // Spreads a data-register index onto the full register, helpers at 0.
  const auto embed_index = [&](std::uint64_t d) {
    Eigen::Index full = 0;
    for (std::size_t k = 0; k < data.size(); ++k) {
      if ((d >> k) & 1) full |= Eigen::Index{1} << data[k];
    }
    return full;
  };
  const Eigen::Index dim = Eigen::Index{1} << gadget.qubit_count();

  VerificationReport report;
  const auto compare = [&](const Branch& b, const Amplitudes& want,
                           std::uint64_t x, std::uint64_t tag) {
    const double err = sv::phase_aligned_error(b.state, want);
    report.max_amplitude_error = std::max(report.max_amplitude_error, err);
    ++report.checked;
    if (err > kTolerance) {
      std::ostringstream msg;
      msg << "branch outcomes [";
      for (std::size_t c = 0; c < b.outcomes.size(); ++c) {
        msg << (c ? "," : "") << int(b.outcomes[c]);
      }
      msg << "] deviates by " << err;
      report.failures.push_back({x, tag, msg.str()});
    }
  };

  // Pass 1: each basis input separately.
  for (Eigen::Index j = 0; j < domain_size; ++j) {
    const std::uint64_t x = reference.domain[j];
    Amplitudes want = Amplitudes::Zero(dim);
    for (Eigen::Index d = 0; d < data_dim; ++d) {
      want(embed_index(d)) = reference.images(d, j);
    }
    const BranchedState out = simulate_branches(gadget, embed_index(x));
    for (std::size_t k = 0; k < out.branches.size(); ++k) {
      compare(out.branches[k], want, x, k);
    }
  }

  // Pass 2: the whole domain entangled with a reference register above the
  // gadget qubits, so relative phases between inputs are pinned as well.
  int r = 0;
  while ((Eigen::Index{1} << r) < domain_size) ++r;
  if (static_cast<int>(gadget.qubit_count()) + r <= kMaxInternalQubits) {
    const Eigen::Index ext = dim << r;
    const double norm = 1.0 / std::sqrt(static_cast<double>(domain_size));
    Amplitudes init = Amplitudes::Zero(ext);
    Amplitudes want = Amplitudes::Zero(ext);
    for (Eigen::Index j = 0; j < domain_size; ++j) {
      const Eigen::Index tag = j * dim;
      init(tag + embed_index(reference.domain[j])) = norm;
      for (Eigen::Index d = 0; d < data_dim; ++d) {
        want(tag + embed_index(d)) = norm * reference.images(d, j);
      }
    }
    const BranchedState out = simulate_branches(gadget, init);
    for (std::size_t k = 0; k < out.branches.size(); ++k) {
      compare(out.branches[k], want, ~std::uint64_t{0}, k);
    }
  }
  std::stable_sort(report.failures.begin(), report.failures.end(),
                   [](const Failure& a, const Failure& b) { return a.x < b.x; });
  return report;
}

}  // namespace tdepth
