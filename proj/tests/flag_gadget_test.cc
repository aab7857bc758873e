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

#include "flagkit/flag_gadget.h"

#include <gtest/gtest.h>

#include <random>

#include "dense_oracle.h"
#include "flagkit/densesim.h"
#include "flagkit/error.h"
#include "test_util.h"

using namespace flagkit;

namespace {

// Noiseless instrumented output must be U|psi> on the data register with every
// ancilla in |+>.
void expect_identity(const Circuit &c, const NestedFlagSet &flags) {
    auto inst = instrument(c, flags);
    std::mt19937_64 rng(c.num_gates());
    std::normal_distribution<double> gauss;
    std::vector<Complex> amps(size_t{1} << c.width());
    double norm = 0;
    for (auto &a : amps) {
        a = Complex(gauss(rng), gauss(rng));
        norm += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(norm);
    }
    StateVector psi(c.width(), amps);
    auto out = psi.widened(inst.width());
    out.apply(inst);
    auto expected = psi;
    expected.apply(c);
    size_t extra = inst.width() - c.width();
    double amp_plus = std::pow(1 / std::sqrt(2.0), double(extra));
    for (size_t i = 0; i < out.amplitudes().size(); ++i) {
        size_t data = i & ((size_t{1} << c.width()) - 1);
        Complex want = expected.amplitudes()[data] * amp_plus;
        bool on_ancillas = true;
        for (size_t a : flags.ancillas()) {
            on_ancillas = on_ancillas && a < inst.width();
        }
        ASSERT_TRUE(on_ancillas);
        ASSERT_LT(std::abs(out.amplitudes()[i] - want), 1e-10) << "index " << i;
    }
}

}  // namespace

TEST(flag_gadget, synthesize_examples) {
    auto c = Circuit::parse("qubits 2\ncnot 0 1\n");
    auto g = synthesize(c, PauliString::from_text("XI"));
    ASSERT_EQ(g.entangle.str(), "+XI");
    ASSERT_EQ(g.disentangle.str(), "+XX");
    ASSERT_FALSE(g.sign_fix);
    ASSERT_EQ(g.ancilla, 2);
    ASSERT_EQ(g.two_qubit_gate_count(), 3);

    auto y = synthesize(Circuit::parse("qubits 1\nh 0\n"), PauliString::from_text("Y"));
    ASSERT_EQ(y.disentangle.str(), "+Y");
    ASSERT_TRUE(y.sign_fix);
    ASSERT_EQ(y.signed_disentangle().str(), "-Y");

    ASSERT_THROW(synthesize(c, PauliString(2)), ArgumentError);
    ASSERT_THROW(synthesize(c, PauliString::from_text("XII")), DimensionError);
    ASSERT_THROW(synthesize(c, PauliString::from_text("XI"), {}, 1), ArgumentError);
}

TEST(flag_gadget, instrument_layout) {
    auto c = Circuit::parse("qubits 2\nh 0\ncnot 0 1\n");
    auto g = synthesize(c, PauliString::from_text("ZY"), MomentRange{1, 2});
    auto inst = instrument(c, g);
    ASSERT_EQ(inst.width(), 3);
    size_t two = 0;
    for (const auto &m : inst.moments()) {
        for (const auto &gate : m) {
            two += gate.arity() == 2;
        }
    }
    ASSERT_EQ(two, 1 + g.two_qubit_gate_count());
}

TEST(flag_gadget, noiseless_identity_single) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        size_t n = 1 + rng() % 4;
        auto c = testutil::random_clifford_circuit(n, 12, rng);
        size_t a = rng() % (c.num_moments() + 1);
        size_t b = a + rng() % (c.num_moments() + 1 - a);
        auto g = synthesize(c, testutil::random_nonidentity(n, rng), MomentRange{a, b});
        expect_identity(c, NestedFlagSet({g}));
    }
}

TEST(flag_gadget, noiseless_identity_nested) {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 20; ++trial) {
        size_t n = 2 + rng() % 3;
        auto c = testutil::random_clifford_circuit(n, 12, rng);
        auto g1 = synthesize(c, testutil::random_nonidentity(n, rng), {}, n);
        auto g2 = synthesize(c, testutil::random_nonidentity(n, rng), {}, n + 1);
        NestedFlagSet set({g1, g2});
        ASSERT_TRUE(validate_nesting(c, set).valid);
        expect_identity(c, set);
    }
}

TEST(flag_gadget, nesting_validation) {
    auto c = Circuit::parse("qubits 2\ncnot 0 1\nh 1\n");
    auto g1 = synthesize(c, PauliString::from_text("XI"), {}, 2);
    auto g2 = synthesize(c, PauliString::from_text("IZ"), {}, 3);
    NestedFlagSet ok({g1, g2});
    ASSERT_EQ(ok.disentangle_order, (std::vector<size_t>{1, 0}));
    ASSERT_TRUE(validate_nesting(c, ok).valid);

    NestedFlagSet crossed({g1, g2});
    crossed.disentangle_order = {0, 1};
    auto r = validate_nesting(crossed);
    ASSERT_FALSE(r.valid);
    ASSERT_EQ(r.kind, "ordering");
    ASSERT_THROW(instrument(c, crossed), ArgumentError);

    auto same = synthesize(c, PauliString::from_text("IZ"), {}, 2);
    auto r2 = validate_nesting(NestedFlagSet({g1, same}));
    ASSERT_FALSE(r2.valid);
    ASSERT_EQ(r2.kind, "ancilla");

    auto other_section = synthesize(c, PauliString::from_text("IZ"), MomentRange{0, 1}, 3);
    ASSERT_EQ(validate_nesting(NestedFlagSet({g1, other_section})).kind, "section");

    auto wrong = g2;
    wrong.disentangle = PauliString::from_text("XX");
    ASSERT_EQ(validate_nesting(c, NestedFlagSet({g1, wrong})).kind, "gadget");
}

TEST(flag_gadget, gate_count_bound) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 500; ++trial) {
        size_t n = 1 + rng() % 6;
        auto c = testutil::random_clifford_circuit(n, 20, rng);
        auto g = synthesize(c, testutil::random_nonidentity(n, rng));
        ASSERT_EQ(g.two_qubit_gate_count(), weight(g.entangle) + weight(g.disentangle));
        ASSERT_LE(g.two_qubit_gate_count(), 2 * n);
    }
}

TEST(flag_gadget, json) {
    auto c = Circuit::parse("qubits 2\ncnot 0 1\n");
    auto g = synthesize(c, PauliString::from_text("XI"));
    ASSERT_EQ(to_json(g),
              R"({"entangle":"+XI","disentangle":"+XX","ancilla":2,"entry":0,"exit":1,"sign_fix":false})");
}
