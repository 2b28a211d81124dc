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

#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "tdepth/ciphers.hpp"
#include "tdepth/circuit.hpp"
#include "tdepth/errors.hpp"
#include "tdepth/synth.hpp"

namespace tdepth {
namespace {

using testing::Rng;

Circuit qubits(int n, Granularity g = Granularity::CliffordT) {
  Circuit c(g);
  for (int i = 0; i < n; ++i) c.add_qubit(QubitRole::Input);
  return c;
}

Qubit q(std::uint32_t i) { return Qubit{i}; }

TEST(Circuit, RejectsIllegalGates) {
  Circuit c = qubits(3);
  EXPECT_THROW(c.append(gates::toffoli(q(0), q(1), q(2))), GranularityError);
  EXPECT_THROW(c.append(gates::cnot(q(0), q(0))), DomainError);
  EXPECT_THROW(c.append(gates::h(q(5))), DomainError);
  // A classical bit must be written before a correction reads it.
  const Cbit b = c.add_cbit();
  EXPECT_THROW(c.append(gates::correct(b, GateKind::X, {q(0)})), DomainError);
  c.append(gates::measure_x(q(0), b));
  EXPECT_NO_THROW(c.append(gates::correct(b, GateKind::CZ, {q(1), q(2)})));

  Circuit t = qubits(2, Granularity::Toffoli);
  EXPECT_THROW(t.append(gates::measure_z(q(0), t.add_cbit())),
               GranularityError);
}

TEST(Circuit, MetricsRefuseToffoliLevelCircuits) {
  Circuit c = qubits(3, Granularity::Toffoli);
  c.append(gates::toffoli(q(0), q(1), q(2)));
  EXPECT_THROW(metrics(c), GranularityError);
}

TEST(Circuit, CountsRolesAndAncilla) {
  Circuit c(Granularity::CliffordT);
  c.add_qubit(QubitRole::Input);
  c.add_qubit(QubitRole::Helper);
  c.add_qubit(QubitRole::Output);
  c.add_qubit(QubitRole::TreeNode);
  const ResourceReport r = metrics(c);
  EXPECT_EQ(r.qubit_count, 4u);
  EXPECT_EQ(r.ancilla_count, 2u);
  EXPECT_EQ(c.count(QubitRole::Helper), 1u);
}

TEST(Schedule, ParallelGatesShareALayer) {
  Circuit c = qubits(4);
  c.append(gates::t(q(0)));
  c.append(gates::t(q(1)));
  c.append(gates::cnot(q(0), q(1)));
  c.append(gates::t(q(2)));
  const Schedule s = schedule(c);
  EXPECT_EQ(s.depth, 2u);
  EXPECT_EQ(s.layer, (std::vector<std::uint32_t>{1, 1, 2, 1}));
  EXPECT_EQ(weighted_depth(c, DepthWeight::T), 1u);
  EXPECT_EQ(weighted_depth(c, DepthWeight::Cnot), 1u);
}

TEST(Schedule, ClassicalBitsOrderMeasurementAndCorrection) {
  Circuit c = qubits(3);
  const Cbit b = c.add_cbit();
  c.append(gates::measure_x(q(0), b));
  c.append(gates::t(q(1)));
  c.append(gates::correct(b, GateKind::CZ, {q(1), q(2)}));
  EXPECT_EQ(schedule(c).depth, 2u);
}

Circuit random_clifford_t(Rng& rng, int n, int gates_count) {
  Circuit c = qubits(n);
  const GateKind singles[] = {GateKind::H, GateKind::S, GateKind::T,
                              GateKind::Tdg, GateKind::X};
  for (int i = 0; i < gates_count; ++i) {
    const auto a = static_cast<std::uint32_t>(rng.between(0, n - 1));
    auto b = static_cast<std::uint32_t>(rng.between(0, n - 2));
    if (b >= a) ++b;
    switch (rng.between(0, 3)) {
      case 0: c.append(gates::cnot(q(a), q(b))); break;
      case 1: c.append(gates::cz(q(a), q(b))); break;
      default: {
        Gate g = gates::h(q(a));
        g.kind = singles[rng.between(0, 4)];
        c.append(g);
      }
    }
  }
  return c;
}

TEST(Depth, MatchesBruteForceDagOracle) {
  Rng rng(31337);
  for (int trial = 0; trial < 200; ++trial) {
    const Circuit c =
        random_clifford_t(rng, rng.between(2, 6), rng.between(0, 60));
    ASSERT_EQ(weighted_depth(c, DepthWeight::T),
              testing::brute_force_depth(c, is_t_gate));
    ASSERT_EQ(weighted_depth(c, DepthWeight::Cnot),
              testing::brute_force_depth(
                  c, [](const Gate& g) { return g.kind == GateKind::CNOT; }));
    ASSERT_EQ(weighted_depth(c, DepthWeight::All),
              testing::brute_force_depth(c, [](const Gate&) { return true; }));
  }
}

TEST(Depth, SynthesizedCircuitsMatchOracle) {
  const SynthesisResult r = synthesize(lowmc_sbox());
  EXPECT_EQ(r.report.t_depth, testing::brute_force_depth(r.circuit, is_t_gate));
  EXPECT_EQ(r.report.cnot_depth,
            testing::brute_force_depth(r.circuit, [](const Gate& g) {
              return g.kind == GateKind::CNOT;
            }));
}

TEST(Export, RoundTripsGateExactly) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Circuit c = random_clifford_t(rng, rng.between(2, 5), 40);
    EXPECT_EQ(parse_circuit(export_text(c)), c);
  }
  for (ToffoliVariant v : {ToffoliVariant::TDepthOne, ToffoliVariant::LogicalAnd}) {
    const SynthesisResult r = synthesize(lowmc_sbox(), v);
    EXPECT_EQ(parse_circuit(export_text(r.circuit)), r.circuit);
    EXPECT_EQ(parse_circuit(export_text(r.toffoli_circuit)), r.toffoli_circuit);
  }
}

TEST(Export, WritesReadableHeaderAndRoles) {
  Circuit c(Granularity::CliffordT);
  c.add_qubit(QubitRole::Input);
  c.add_qubit(QubitRole::Helper);
  const Cbit b = c.add_cbit();
  c.append(gates::measure_x(q(0), b));
  c.append(gates::correct(b, GateKind::X, {q(1)}));
  const std::string text = export_text(c);
  EXPECT_NE(text.find("OPENQASM 2.0;"), std::string::npos);
  EXPECT_NE(text.find("// granularity: clifford-t"), std::string::npos);
  EXPECT_NE(text.find("// q[1]: helper"), std::string::npos);
  EXPECT_NE(text.find("h q[0]; measure q[0] -> c[0];"), std::string::npos);
  EXPECT_NE(text.find("if (c[0] == 1) x q[1];"), std::string::npos);
}

TEST(Export, ParseErrorsCarryPositions) {
  EXPECT_THROW(parse_circuit("OPENQASM 2.0;\nqreg q[2];\nfoo q[0];\n"),
               FormatError);
  EXPECT_THROW(parse_circuit("OPENQASM 2.0;\nqreg q[2];\ncx q[0], q[7];\n"),
               std::exception);
}

TEST(Circuit, SliceAndConcatRebuildTheOriginal) {
  Rng rng(8);
  const Circuit c = random_clifford_t(rng, 4, 30);
  EXPECT_EQ(concat(c.slice(0, 12), c.slice(12, c.size())), c);
  EXPECT_THROW(c.slice(5, 100), DomainError);
}

}  // namespace
}  // namespace tdepth
