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

#include "flagkit/pauli.h"

#include <gtest/gtest.h>

#include <random>

#include "dense_oracle.h"
#include "flagkit/error.h"

using namespace flagkit;

TEST(pauli, parse_and_render) {
    auto p = PauliString::from_text("+IXYZ");
    ASSERT_EQ(p.num_qubits(), 4);
    ASSERT_EQ(p.letter(0), 'I');
    ASSERT_EQ(p.letter(1), 'X');
    ASSERT_EQ(p.letter(2), 'Y');
    ASSERT_EQ(p.letter(3), 'Z');
    ASSERT_EQ(p.str(), "+IXYZ");
    ASSERT_EQ(PauliString::from_text("-ZZIII").str(), "-ZZIII");
    ASSERT_EQ(PauliString::from_text("XY").str(), "+XY");
    ASSERT_EQ(PauliString::from_text("+_X").str(), "+IX");
    ASSERT_THROW(PauliString::from_text("+XQ"), ArgumentError);
    ASSERT_THROW(PauliString::from_text(""), ArgumentError);
}

TEST(pauli, weight) {
    ASSERT_EQ(weight(PauliString::from_text("+IXYZ")), 3);
    ASSERT_EQ(weight(PauliString(5)), 0);
    ASSERT_EQ(weight(PauliString::from_text("-YYYYY")), 5);
}

TEST(pauli, commutation_examples) {
    ASSERT_FALSE(commutes(PauliString::from_text("X"), PauliString::from_text("Z")));
    ASSERT_TRUE(commutes(PauliString::from_text("XX"), PauliString::from_text("ZZ")));
    ASSERT_TRUE(commutes(PauliString::from_text("XI"), PauliString::from_text("IZ")));
    ASSERT_TRUE(commutes(PauliString::from_text("XYZ"), PauliString::from_text("ZZZ")));
    ASSERT_FALSE(commutes(PauliString::from_text("XYI"), PauliString::from_text("ZIZ")));
}

TEST(pauli, products_with_phase) {
    auto xz = multiply(PauliString::from_text("X"), PauliString::from_text("Z"));
    ASSERT_EQ(xz.pauli.unsigned_part().str(), "+Y");
    // X Z = -iY
    ASSERT_EQ(xz.phase, 3);
    auto zx = multiply(PauliString::from_text("Z"), PauliString::from_text("X"));
    ASSERT_EQ(zx.phase, 1);
    auto p = PauliString::from_text("XX") * PauliString::from_text("ZZ");
    ASSERT_EQ(p.str(), "-YY");
    ASSERT_THROW(PauliString::from_text("X") * PauliString::from_text("Z"), ArgumentError);
    ASSERT_THROW(multiply(PauliString(2), PauliString(3)), DimensionError);
}

TEST(pauli, products_match_dense_oracle) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        size_t n = 1 + rng() % 3;
        auto a = random_pauli(n, rng(), 0, false).with_sign(rng() & 1);
        auto b = random_pauli(n, rng(), 0, false).with_sign(rng() & 1);
        auto prod = multiply(a, b);
        oracle::Mat expected = oracle::pauli_to_matrix(a) * oracle::pauli_to_matrix(b);
        oracle::Mat got = oracle::pauli_to_matrix(prod.pauli) * std::pow(oracle::C(0, 1), prod.phase);
        ASSERT_LT((expected - got).cwiseAbs().maxCoeff(), 1e-12) << a.str() << " " << b.str();
        oracle::Mat ab = oracle::pauli_to_matrix(a) * oracle::pauli_to_matrix(b);
        oracle::Mat ba = oracle::pauli_to_matrix(b) * oracle::pauli_to_matrix(a);
        ASSERT_EQ(commutes(a, b), (ab - ba).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST(pauli, product_properties) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        size_t n = 1 + rng() % 64;
        auto a = random_pauli(n, rng(), 0, false);
        auto b = random_pauli(n, rng(), 0, false);
        auto c = random_pauli(n, rng(), 0, false);
        // Self-inverse.
        auto aa = multiply(a, a);
        ASSERT_TRUE(aa.pauli.is_identity());
        ASSERT_EQ(aa.phase, 0);
        // Associativity including phase.
        auto left = multiply(multiply(a, b), c);
        auto bc = multiply(b, c);
        auto right = multiply(a, bc.pauli);
        ASSERT_EQ(left.pauli, right.pauli);
        ASSERT_EQ(left.phase, (right.phase + bc.phase) % 4);
        // Commutation is symmetric and matches the product order.
        ASSERT_EQ(commutes(a, b), commutes(b, a));
        auto ab = multiply(a, b), ba = multiply(b, a);
        ASSERT_EQ(ab.pauli, ba.pauli);
        ASSERT_EQ(commutes(a, b), ab.phase == ba.phase);
    }
}

TEST(pauli, random_pauli_is_deterministic) {
    for (uint64_t i = 0; i < 20; ++i) {
        ASSERT_EQ(random_pauli(5, 42, i, true), random_pauli(5, 42, i, true));
        ASSERT_FALSE(random_pauli(5, 42, i, true).is_identity());
    }
    ASSERT_NE(random_pauli(30, 42, 0, true), random_pauli(30, 42, 1, true));
    ASSERT_NE(random_pauli(30, 42, 0, true), random_pauli(30, 43, 0, true));
}

TEST(pauli, random_pauli_letters_are_uniform) {
    size_t counts[4] = {};
    for (uint64_t i = 0; i < 4000; ++i) {
        auto p = random_pauli(5, 3, i, false);
        for (size_t q = 0; q < 5; ++q) {
            counts[std::string_view("IXYZ").find(p.letter(q))]++;
        }
    }
    for (size_t c : counts) {
        ASSERT_NEAR(c, 5000.0, 300.0);
    }
}

TEST(pauli, support_overlap) {
    ASSERT_EQ(support_overlap(PauliString::from_text("XXIIZ"), PauliString::from_text("ZIIYZ")), 2);
    ASSERT_EQ(support_overlap(PauliString::from_text("XIIII"), PauliString::from_text("IZZZZ")), 0);
}

TEST(pauli, restricted_and_widened) {
    auto p = PauliString::from_text("-XYZ");
    ASSERT_EQ(p.restricted(0b101).str(), "-XIZ");
    ASSERT_EQ(p.widened(5).str(), "-XYZII");
}
