// Copyright 2026 The Flagkit Authors
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

#include "flagkit/propagation.h"

#include <gtest/gtest.h>

#include <random>

#include "dense_oracle.h"
#include "flagkit/error.h"
#include "test_util.h"

using namespace flagkit;

namespace {

PauliString oracle_conjugate(const Circuit &c, const PauliString &p) {
    oracle::Mat u = oracle::circuit_unitary(c);
    auto m = oracle::match_signed_pauli(u * oracle::pauli_to_matrix(p) * u.adjoint(), c.width());
    if (!m) {
        throw std::runtime_error("oracle: not a signed Pauli");
    }
    return *m;
}

}  // namespace

TEST(propagation, tables_match_oracle) {
    for (GateKind k : {GateKind::H, GateKind::S, GateKind::Sdg, GateKind::X, GateKind::Y, GateKind::Z}) {
        Circuit c(1);
        c.append(Gate(k, {0}));
        auto table = conjugation_table(k);
        ASSERT_EQ(table.size(), 2);
        ASSERT_EQ(table[0], oracle_conjugate(c, PauliString::from_text("X"))) << gate_name(k);
        ASSERT_EQ(table[1], oracle_conjugate(c, PauliString::from_text("Z"))) << gate_name(k);
    }
    for (GateKind k : {GateKind::CNOT, GateKind::CZ}) {
        Circuit c(2);
        c.append(Gate(k, {0, 1}));
        auto table = conjugation_table(k);
        ASSERT_EQ(table.size(), 4);
        const char *gens[] = {"XI", "ZI", "IX", "IZ"};
        for (size_t i = 0; i < 4; ++i) {
            ASSERT_EQ(table[i], oracle_conjugate(c, PauliString::from_text(gens[i]))) << gate_name(k) << gens[i];
        }
    }
}

TEST(propagation, single_gate_examples) {
    Gate cnot(GateKind::CNOT, {0, 1});
    ASSERT_EQ(conjugate_through_gate(PauliString::from_text("XI"), cnot).str(), "+XX");
    ASSERT_EQ(conjugate_through_gate(PauliString::from_text("IZ"), cnot).str(), "+ZZ");
    ASSERT_EQ(conjugate_through_gate(PauliString::from_text("ZI"), cnot).str(), "+ZI");
    ASSERT_EQ(conjugate_through_gate(PauliString::from_text("X"), Gate(GateKind::H, {0})).str(), "+Z");
    ASSERT_EQ(conjugate_through_gate(PauliString::from_text("X"), Gate(GateKind::S, {0})).str(), "+Y");
    ASSERT_THROW(conjugate_through_gate(PauliString::from_text("X"), Gate(GateKind::T, {0})), ClassificationError);
    ASSERT_THROW(conjugate_through_gate(PauliString::from_text("X"), cnot), DimensionError);
}

TEST(propagation, random_circuits_match_oracle) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        size_t n = 1 + rng() % 4;
        auto c = testutil::random_clifford_circuit(n, 1 + rng() % 20, rng);
        auto p = random_pauli(n, rng(), 0, false).with_sign(rng() & 1);
        auto got = propagate(c, p, 0, c.num_moments()).pauli;
        ASSERT_EQ(got, oracle_conjugate(c, p)) << c.serialize() << p.str();
        // Backwards propagation inverts.
        ASSERT_EQ(propagate(c, got, c.num_moments(), 0).pauli, p);
    }
}

TEST(propagation, inverse_gate_conjugation) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = testutil::random_clifford_gate(3, rng);
        auto p = random_pauli(3, rng(), 0, false);
        ASSERT_EQ(conjugate_through_gate_inverse(conjugate_through_gate(p, g), g), p) << g.str();
    }
}

TEST(propagation, two_qubit_gates_change_weight_by_at_most_one) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 1000; ++trial) {
        auto g = testutil::random_clifford_gate(2, rng);
        if (g.arity() != 2) {
            continue;
        }
        auto p = random_pauli(2, rng(), 0, false);
        auto q = conjugate_through_gate(p, g);
        ASSERT_LE(std::abs(int(weight(q)) - int(weight(p))), 1);
    }
}

TEST(propagation, layer_trace) {
    auto c = Circuit::parse("qubits 2\ncnot 0 1\n");
    auto r = propagate(c, PauliString::from_text("XI"), 0, 1);
    ASSERT_EQ(r.layer_trace.size(), 2);
    ASSERT_EQ(r.layer_trace[0].str(), "+XI");
    ASSERT_EQ(r.layer_trace[1].str(), "+XX");
}

TEST(propagation, identity_section) {
    auto c = Circuit::parse("qubits 2\ncnot 0 1\nh 0\n");
    auto p = PauliString::from_text("-YZ");
    auto r = propagate(c, p, 1, 1);
    ASSERT_EQ(r.pauli, p);
}

TEST(propagation, compatibility_with_non_clifford_gates) {
    auto c = Circuit::parse("qubits 2\nt 0\ncnot 0 1\nrx 1 0.3\n");
    ASSERT_TRUE(check_compatibility(c, PauliString::from_text("IX"), 0).compatible);
    ASSERT_TRUE(check_compatibility(c, PauliString::from_text("ZI"), 0).compatible);
    auto bad = check_compatibility(c, PauliString::from_text("XI"), 0);
    ASSERT_FALSE(bad.compatible);
    ASSERT_EQ(bad.violation->moment, 0);
    ASSERT_EQ(bad.violation->qubit, 0);
    ASSERT_EQ(bad.violation->gate.kind(), GateKind::T);
    // Z0 Z1 reaches the rx on qubit 1 as Z1 (CNOT maps ZZ -> IZ), which does not commute with X.
    auto late = check_compatibility(c, PauliString::from_text("ZZ"), 0);
    ASSERT_FALSE(late.compatible);
    ASSERT_EQ(late.violation->moment, 2);
    ASSERT_EQ(late.violation->gate.kind(), GateKind::RX);
    ASSERT_THROW(propagate(c, PauliString::from_text("XI"), 0, 3), CompatibilityError);
    // Same-axis rotation is passed unchanged.
    auto r = propagate(Circuit::parse("qubits 1\nrx 0 0.3\n"), PauliString::from_text("-X"), 0, 1);
    ASSERT_EQ(r.pauli.str(), "-X");
}

TEST(propagation, zzzzz_compatibility) {
    auto c = zzzzz_rotation_circuit(5, M_PI / 4);
    ASSERT_TRUE(check_compatibility(c, PauliString::from_text("ZZZZZ"), 0).compatible);
    ASSERT_TRUE(check_compatibility(c, PauliString::from_text("ZIIII"), 0).compatible);
    ASSERT_FALSE(check_compatibility(c, PauliString::from_text("XIIII"), 0).compatible);
}

TEST(propagation, disentangling_operator_matches_oracle) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        size_t n = 2 + rng() % 3;
        auto c = testutil::random_clifford_circuit(n, 10, rng);
        auto f = random_pauli(n, rng(), 0, true);
        ASSERT_EQ(disentangling_operator(c, f), oracle_conjugate(c, f));
        size_t a = rng() % (c.num_moments() + 1);
        size_t b = a + rng() % (c.num_moments() + 1 - a);
        ASSERT_EQ(disentangling_operator(c, f, MomentRange{a, b}), oracle_conjugate(c.slice({a, b}), f));
    }
}
