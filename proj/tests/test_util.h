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

#ifndef FLAGKIT_TESTS_TEST_UTIL_H
#define FLAGKIT_TESTS_TEST_UTIL_H

#include <cmath>
#include <random>

#include "flagkit/circuit.h"
#include "flagkit/pauli.h"

namespace testutil {

inline flagkit::Gate random_clifford_gate(size_t width, std::mt19937_64 &rng) {
    using flagkit::GateKind;
    static constexpr GateKind single[] = {GateKind::H, GateKind::S, GateKind::Sdg, GateKind::X, GateKind::Y,
                                          GateKind::Z, GateKind::RX, GateKind::RY, GateKind::RZ};
    std::uniform_int_distribution<size_t> qubit(0, width - 1);
    std::uniform_int_distribution<int> quarter(-3, 4);
    bool two = width >= 2 && (rng() % 3 != 0);
    if (two) {
        size_t a = qubit(rng), b = qubit(rng);
        while (b == a) {
            b = qubit(rng);
        }
        switch (rng() % 3) {
            case 0:
                return flagkit::Gate(GateKind::CNOT, {a, b});
            case 1:
                return flagkit::Gate(GateKind::CZ, {a, b});
            default:
                return flagkit::Gate(GateKind::XX, {a, b}, quarter(rng) * M_PI / 4);
        }
    }
    GateKind k = single[rng() % std::size(single)];
    double angle = flagkit::gate_has_angle(k) ? quarter(rng) * M_PI / 2 : 0;
    return flagkit::Gate(k, {qubit(rng)}, angle);
}

inline flagkit::Circuit random_clifford_circuit(size_t width, size_t gates, std::mt19937_64 &rng) {
    flagkit::Circuit c(width);
    for (size_t i = 0; i < gates; ++i) {
        c.append(random_clifford_gate(width, rng));
    }
    return c;
}

inline flagkit::PauliString random_nonidentity(size_t width, std::mt19937_64 &rng) {
    return flagkit::random_pauli(width, rng(), 0, true);
}

}  // namespace testutil

#endif
