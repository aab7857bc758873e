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

#include "flagkit/densesim.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "flagkit/error.h"

namespace flagkit {

namespace {

constexpr double kNormTol = 1e-10;

void check_width(size_t width) {
    if (width > kMaxDenseWidth) {
        throw ResourceError("dense simulation width " + std::to_string(width) + " exceeds guard of " +
                            std::to_string(kMaxDenseWidth));
    }
}

CMatrix pauli_matrix(char letter) {
    const Complex i{0, 1};
    switch (letter) {
        case 'X':
            return CMatrix(2, 2, {0, 1, 1, 0});
        case 'Y':
            return CMatrix(2, 2, {0, -i, i, 0});
        case 'Z':
            return CMatrix(2, 2, {1, 0, 0, -1});
        default:
            return CMatrix::identity(2);
    }
}

CMatrix conjugated(const CMatrix &m) {
    CMatrix r = m;
    for (Complex &v : r.data()) {
        v = std::conj(v);
    }
    return r;
}

// exp(-i eps/2 A) for a gate's axis A.
CMatrix overrotation_matrix(const Gate &g, double epsilon) {
    switch (g.kind()) {
        case GateKind::RX:
            return Gate(GateKind::RX, {0}, epsilon).matrix();
        case GateKind::RY:
            return Gate(GateKind::RY, {0}, epsilon).matrix();
        case GateKind::RZ:
            return Gate(GateKind::RZ, {0}, epsilon).matrix();
        case GateKind::XX:
            return Gate(GateKind::XX, {0, 1}, epsilon / 2).matrix();
        default:
            throw ArgumentError("overrotation model needs a native-compiled circuit, found '" + g.str() + "'");
    }
}

}  // namespace

StateVector::StateVector(size_t width, std::vector<Complex> amplitudes) : width_(width), amps_(std::move(amplitudes)) {
    check_width(width);
    if (amps_.size() != (size_t{1} << width)) {
        throw DimensionError("state vector needs 2^" + std::to_string(width) + " amplitudes");
    }
}

StateVector StateVector::zero(size_t width) {
    check_width(width);
    std::vector<Complex> a(size_t{1} << width);
    a[0] = 1;
    return StateVector(width, std::move(a));
}

StateVector StateVector::product(std::string_view spec) {
    check_width(spec.size());
    std::vector<Complex> a{1};
    const double r = 1 / std::sqrt(2.0);
    for (size_t q = 0; q < spec.size(); q++) {
        Complex lo, hi;
        switch (spec[q]) {
            case '0':
                lo = 1, hi = 0;
                break;
            case '1':
                lo = 0, hi = 1;
                break;
            case '+':
                lo = r, hi = r;
                break;
            case '-':
                lo = r, hi = -r;
                break;
            default:
                throw ArgumentError("bad product-state character '" + std::string(1, spec[q]) + "'");
        }
        // Qubit q becomes the new most significant bit.
        std::vector<Complex> next(a.size() * 2);
        for (size_t k = 0; k < a.size(); k++) {
            next[k] = a[k] * lo;
            next[k + a.size()] = a[k] * hi;
        }
        a = std::move(next);
    }
    return StateVector(spec.size(), std::move(a));
}

double StateVector::norm() const {
    double s = 0;
    for (const Complex &v : amps_) {
        s += std::norm(v);
    }
    return std::sqrt(s);
}

void StateVector::apply(const Gate &g) {
    if (g.max_qubit() >= width_) {
        throw DimensionError("gate '" + g.str() + "' outside state of width " + std::to_string(width_));
    }
    apply_local(amps_, g.matrix(), g.qubits());
}

void StateVector::apply(const Circuit &c) {
    if (c.width() != width_) {
        throw DimensionError("circuit width does not match state width");
    }
    for (const Moment &m : c.moments()) {
        for (const Gate &g : m) {
            apply(g);
        }
    }
}

StateVector StateVector::widened(size_t width) const {
    if (width < width_) {
        throw DimensionError("cannot shrink a state");
    }
    std::vector<Complex> a(size_t{1} << width);
    std::copy(amps_.begin(), amps_.end(), a.begin());
    return StateVector(width, std::move(a));
}

DensityMatrix DensityMatrix::from_pure(const StateVector &psi) {
    DensityMatrix rho;
    rho.width_ = psi.width();
    size_t d = rho.dim();
    rho.data_.resize(d * d);
    auto a = psi.amplitudes();
    for (size_t r = 0; r < d; r++) {
        for (size_t c = 0; c < d; c++) {
            rho.data_[r * d + c] = a[r] * std::conj(a[c]);
        }
    }
    return rho;
}

DensityMatrix DensityMatrix::maximally_mixed(size_t width) {
    check_width(width);
    DensityMatrix rho;
    rho.width_ = width;
    size_t d = rho.dim();
    rho.data_.resize(d * d);
    for (size_t k = 0; k < d; k++) {
        rho.data_[k * d + k] = 1.0 / static_cast<double>(d);
    }
    return rho;
}

void DensityMatrix::apply_unitary(const CMatrix &local, std::span<const size_t> qubits) {
    // vec(rho) is a 2w-qubit vector: column bits are qubits [0, w), row bits [w, 2w).
    std::vector<size_t> row_qubits, col_qubits;
    for (size_t q : qubits) {
        if (q >= width_) {
            throw DimensionError("qubit " + std::to_string(q) + " outside density matrix");
        }
        col_qubits.push_back(q);
        row_qubits.push_back(q + width_);
    }
    apply_local(data_, local, row_qubits);
    apply_local(data_, conjugated(local), col_qubits);
}

void DensityMatrix::apply_gate(const Gate &g) {
    apply_unitary(g.matrix(), g.qubits());
}

void DensityMatrix::apply_pauli(const PauliString &p) {
    if (p.num_qubits() > width_ && (p.support() >> width_) != 0) {
        throw DimensionError("Pauli acts outside density matrix");
    }
    for (size_t q = 0; q < std::min(width_, p.num_qubits()); q++) {
        char l = p.letter(q);
        if (l != 'I') {
            size_t qs[] = {q};
            apply_unitary(pauli_matrix(l), qs);
        }
    }
}

void DensityMatrix::apply_depolarizing(size_t qubit, double p) {
    if (qubit >= width_) {
        throw DimensionError("qubit " + std::to_string(qubit) + " outside density matrix");
    }
    if (p == 0) {
        return;
    }
    size_t d = dim();
    size_t bit = size_t{1} << qubit;
    double keep_diag = 1 - 2 * p / 3, swap_diag = 2 * p / 3, off = 1 - 4 * p / 3;
    for (size_t r = 0; r < d; r++) {
        if (r & bit) {
            continue;
        }
        for (size_t c = 0; c < d; c++) {
            if (c & bit) {
                continue;
            }
            Complex &a = data_[r * d + c];
            Complex &b = data_[r * d + (c | bit)];
            Complex &cc = data_[(r | bit) * d + c];
            Complex &dd = data_[(r | bit) * d + (c | bit)];
            Complex na = keep_diag * a + swap_diag * dd;
            Complex nd = keep_diag * dd + swap_diag * a;
            a = na;
            dd = nd;
            b *= off;
            cc *= off;
        }
    }
}

Complex DensityMatrix::trace() const {
    Complex t = 0;
    for (size_t k = 0; k < dim(); k++) {
        t += data_[k * dim() + k];
    }
    return t;
}

double DensityMatrix::hermiticity_error() const {
    double e = 0;
    size_t d = dim();
    for (size_t r = 0; r < d; r++) {
        for (size_t c = r; c < d; c++) {
            e = std::max(e, std::abs(data_[r * d + c] - std::conj(data_[c * d + r])));
        }
    }
    return e;
}

double DensityMatrix::min_eigenvalue() const {
    size_t d = dim();
    Eigen::MatrixXcd m(d, d);
    for (size_t r = 0; r < d; r++) {
        for (size_t c = 0; c < d; c++) {
            m(r, c) = data_[r * d + c];
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

DensityMatrix simulate(const Circuit &c, const NoiseModel &m, const StateVector &input,
                       std::span<const PauliInjection> injections) {
    check_width(c.width());
    m.validate();
    if (input.width() != c.width()) {
        throw DimensionError("input state width " + std::to_string(input.width()) + " does not match circuit width " +
                             std::to_string(c.width()));
    }
    if (std::abs(input.norm() - 1) > kNormTol) {
        throw ArgumentError("input state is not normalized");
    }
    if (m.kind == NoiseKind::Overrotation && !c.is_native()) {
        throw ArgumentError("overrotation model needs a native-compiled circuit");
    }
    DensityMatrix rho = DensityMatrix::from_pure(input);
    for (size_t mi = 0; mi < c.num_moments(); mi++) {
        const Moment &moment = c.moments()[mi];
        for (const Gate &g : moment) {
            rho.apply_gate(g);
        }
        for (const Gate &g : moment) {
            switch (m.kind) {
                case NoiseKind::Overrotation:
                    if (m.epsilon != 0) {
                        rho.apply_unitary(overrotation_matrix(g, m.epsilon), g.qubits());
                    }
                    break;
                case NoiseKind::Crosstalk:
                    if (g.arity() == 2) {
                        for (size_t n : chain_neighbors(g, c.width())) {
                            rho.apply_depolarizing(n, m.p * m.crosstalk_ratio);
                        }
                    }
                    [[fallthrough]];
                case NoiseKind::Depolarizing:
                    if (g.arity() == 2) {
                        for (size_t q : g.qubits()) {
                            rho.apply_depolarizing(q, m.p);
                        }
                    }
                    break;
            }
        }
        for (const PauliInjection &inj : injections) {
            if (inj.after_moment == mi) {
                rho.apply_pauli(inj.pauli);
            }
        }
    }
    return rho;
}

PostSelectedState postselect_ancillas(const DensityMatrix &rho, std::vector<size_t> ancillas) {
    std::sort(ancillas.begin(), ancillas.end());
    if (std::adjacent_find(ancillas.begin(), ancillas.end()) != ancillas.end()) {
        throw ArgumentError("repeated ancilla index");
    }
    if (!ancillas.empty() && ancillas.back() >= rho.width()) {
        throw ArgumentError("ancilla " + std::to_string(ancillas.back()) + " outside density matrix");
    }
    DensityMatrix cur = rho;
    // Highest index first so lower indices stay put.
    for (auto it = ancillas.rbegin(); it != ancillas.rend(); ++it) {
        size_t a = *it;
        size_t w = cur.width_ - 1;
        size_t d = size_t{1} << w;
        size_t low = (size_t{1} << a) - 1;
        auto insert = [&](size_t k, size_t bit) { return (k & low) | (bit << a) | ((k & ~low) << 1); };
        DensityMatrix next;
        next.width_ = w;
        next.data_.assign(d * d, 0);
        size_t old_w = cur.width_;
        for (size_t r = 0; r < d; r++) {
            for (size_t c = 0; c < d; c++) {
                Complex s = 0;
                for (size_t i = 0; i < 2; i++) {
                    for (size_t j = 0; j < 2; j++) {
                        s += cur.data_[(insert(r, i) << old_w) | insert(c, j)];
                    }
                }
                next.data_[r * d + c] = s / 2.0;
            }
        }
        cur = std::move(next);
    }
    double survival = cur.trace().real();
    if (survival < 1e-15) {
        throw DegeneratePostselectionError("flag survival probability " + std::to_string(survival) + " is zero");
    }
    for (Complex &v : cur.data_) {
        v /= survival;
    }
    return PostSelectedState{std::move(cur), survival};
}

PostSelectedState postselect_flags(const DensityMatrix &rho, const NestedFlagSet &flags) {
    return postselect_ancillas(rho, flags.ancillas());
}

FidelityResult fidelity(const DensityMatrix &rho, const StateVector &reference) {
    if (rho.width() != reference.width()) {
        throw DimensionError("fidelity: state widths differ");
    }
    if (std::abs(reference.norm() - 1) > kNormTol) {
        throw ArgumentError("fidelity reference is not normalized");
    }
    auto psi = reference.amplitudes();
    size_t d = rho.dim();
    Complex acc = 0;
    for (size_t r = 0; r < d; r++) {
        if (psi[r] == Complex{}) {
            continue;
        }
        Complex row = 0;
        for (size_t c = 0; c < d; c++) {
            row += rho(r, c) * psi[c];
        }
        acc += std::conj(psi[r]) * row;
    }
    double v = acc.real();
    FidelityResult out;
    out.health_warning = v < -1e-9 || v > 1 + 1e-9;
    out.value = std::clamp(v, 0.0, 1.0);
    return out;
}

StateVector ideal_output(const Circuit &c, const StateVector &input) {
    StateVector out = input;
    out.apply(c);
    return out;
}

FidelityResult raw_fidelity(const Circuit &c, const NoiseModel &m, const StateVector &input,
                            const StateVector &reference) {
    const Circuit run = m.kind == NoiseKind::Overrotation ? compile_to_native(c) : c;
    return fidelity(simulate(run, m, input), reference);
}

SimOutcome simulate_flagged(const Circuit &c, const NestedFlagSet &flags, const NoiseModel &m,
                            const StateVector &input, const StateVector &reference, std::optional<double> raw) {
    SimOutcome out;
    out.model = m;
    out.parameter = m.parameter();
    if (raw) {
        out.fidelity_raw = *raw;
    } else {
        FidelityResult f = raw_fidelity(c, m, input, reference);
        out.fidelity_raw = f.value;
        out.health_warning |= f.health_warning;
    }
    Circuit inst = instrument(c, flags);
    if (m.kind == NoiseKind::Overrotation) {
        inst = compile_to_native(inst);
    }
    DensityMatrix rho = simulate(inst, m, input.widened(inst.width()));
    PostSelectedState post = postselect_flags(rho, flags);
    FidelityResult f = fidelity(post.data, reference);
    out.fidelity_postselected = f.value;
    out.health_warning |= f.health_warning;
    out.survival_probability = std::clamp(post.survival, 0.0, 1.0);
    return out;
}

}  // namespace flagkit
