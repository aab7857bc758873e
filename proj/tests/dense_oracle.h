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

// Test-only dense reference: gate matrices written out from their definitions
// and assembled into full unitaries with Eigen. Shares no code with the
// library's own matrix construction.

#ifndef FLAGKIT_TESTS_DENSE_ORACLE_H
#define FLAGKIT_TESTS_DENSE_ORACLE_H

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "flagkit/circuit.h"
#include "flagkit/pauli.h"

namespace oracle {

using C = std::complex<double>;
using Mat = Eigen::MatrixXcd;

inline const C I1{0, 1};

inline Mat m2(C a, C b, C c, C d) {
    Mat m(2, 2);
    m << a, b, c, d;
    return m;
}

inline Mat pauli_matrix(char letter) {
    switch (letter) {
        case 'X':
            return m2(0, 1, 1, 0);
        case 'Y':
            return m2(0, -I1, I1, 0);
        case 'Z':
            return m2(1, 0, 0, -1);
        default:
            return m2(1, 0, 0, 1);
    }
}

// Local matrix of a gate; for two-qubit gates the first listed qubit is the
// low bit of the local index.
inline Mat local_matrix(const flagkit::Gate &g) {
    using flagkit::GateKind;
    const double t = g.angle();
    const double r = 1 / std::sqrt(2.0);
    switch (g.kind()) {
        case GateKind::H:
            return m2(r, r, r, -r);
        case GateKind::S:
            return m2(1, 0, 0, I1);
        case GateKind::Sdg:
            return m2(1, 0, 0, -I1);
        case GateKind::X:
            return pauli_matrix('X');
        case GateKind::Y:
            return pauli_matrix('Y');
        case GateKind::Z:
            return pauli_matrix('Z');
        case GateKind::T:
            return m2(1, 0, 0, std::exp(I1 * (M_PI / 4)));
        case GateKind::Tdg:
            return m2(1, 0, 0, std::exp(-I1 * (M_PI / 4)));
        case GateKind::RX:
            return m2(std::cos(t / 2), -I1 * std::sin(t / 2), -I1 * std::sin(t / 2), std::cos(t / 2));
        case GateKind::RY:
            return m2(std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2));
        case GateKind::RZ:
            return m2(std::exp(-I1 * (t / 2)), 0, 0, std::exp(I1 * (t / 2)));
        case GateKind::CNOT: {
            // control = local bit 0, target = local bit 1
            Mat m = Mat::Zero(4, 4);
            m(0, 0) = 1;
            m(2, 2) = 1;
            m(3, 1) = 1;
            m(1, 3) = 1;
            return m;
        }
        case GateKind::CZ: {
            Mat m = Mat::Identity(4, 4);
            m(3, 3) = -1;
            return m;
        }
        case GateKind::XX: {
            Mat xx = Mat::Zero(4, 4);
            xx(0, 3) = xx(3, 0) = xx(1, 2) = xx(2, 1) = 1;
            return std::cos(t) * Mat::Identity(4, 4) - I1 * std::sin(t) * xx;
        }
    }
    return Mat();
}

// Embed a local operator acting on `qubits` into an n-qubit register (qubit 0
// is the least significant bit of the basis index).
inline Mat embed(const Mat &local, const std::vector<size_t> &qubits, size_t n) {
    const size_t dim = size_t{1} << n;
    const size_t k = qubits.size();
    Mat out = Mat::Zero(dim, dim);
    for (size_t col = 0; col < dim; ++col) {
        size_t lc = 0;
        for (size_t i = 0; i < k; ++i) {
            lc |= ((col >> qubits[i]) & 1) << i;
        }
        for (size_t lr = 0; lr < (size_t{1} << k); ++lr) {
            size_t row = col;
            for (size_t i = 0; i < k; ++i) {
                row &= ~(size_t{1} << qubits[i]);
                row |= ((lr >> i) & 1) << qubits[i];
            }
            out(row, col) += local(lr, lc);
        }
    }
    return out;
}

inline Mat gate_unitary(const flagkit::Gate &g, size_t n) {
    std::vector<size_t> qs(g.qubits().begin(), g.qubits().end());
    return embed(local_matrix(g), qs, n);
}

inline Mat circuit_unitary(const flagkit::Circuit &c) {
    Mat u = Mat::Identity(size_t{1} << c.width(), size_t{1} << c.width());
    for (const auto &moment : c.moments()) {
        for (const auto &g : moment) {
            u = gate_unitary(g, c.width()) * u;
        }
    }
    return u;
}

inline Mat pauli_to_matrix(const flagkit::PauliString &p) {
    const size_t n = p.num_qubits();
    Mat m = Mat::Identity(size_t{1} << n, size_t{1} << n);
    for (size_t q = 0; q < n; ++q) {
        char l = p.letter(q);
        if (l != 'I') {
            m = embed(pauli_matrix(l), {q}, n) * m;
        }
    }
    return p.negative() ? Mat(-m) : m;
}

// Identify a matrix as +-P for an n-qubit Pauli P, or nullopt.
inline std::optional<flagkit::PauliString> match_signed_pauli(const Mat &m, size_t n, double tol = 1e-9) {
    const double dim = double(size_t{1} << n);
    const char letters[4] = {'I', 'X', 'Y', 'Z'};
    size_t total = size_t{1} << (2 * n);
    for (size_t code = 0; code < total; ++code) {
        flagkit::PauliString p(n);
        for (size_t q = 0; q < n; ++q) {
            p.set_letter(q, letters[(code >> (2 * q)) & 3]);
        }
        C overlap = (pauli_to_matrix(p).adjoint() * m).trace() / dim;
        if (std::abs(std::abs(overlap) - 1) < tol) {
            if (std::abs(overlap.imag()) > tol) {
                return std::nullopt;
            }
            return p.with_sign(overlap.real() < 0);
        }
    }
    return std::nullopt;
}

inline bool equal_up_to_phase(const Mat &a, const Mat &b, double tol) {
    Eigen::Index r = 0, c = 0;
    a.cwiseAbs().maxCoeff(&r, &c);
    if (std::abs(b(r, c)) < tol) {
        return false;
    }
    C phase = a(r, c) / b(r, c);
    phase /= std::abs(phase);
    return (a - phase * b).cwiseAbs().maxCoeff() < tol;
}

}  // namespace oracle

#endif
