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

#ifndef FLAGKIT_DENSESIM_H
#define FLAGKIT_DENSESIM_H

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "flagkit/circuit.h"
#include "flagkit/fault_analysis.h"
#include "flagkit/flag_gadget.h"
#include "flagkit/linalg.h"
#include "flagkit/pauli.h"

namespace flagkit {

/// Pure state on a little-endian register.
class StateVector {
   public:
    StateVector() = default;
    /// Throws DimensionError when the amplitude count is not 2^width.
    StateVector(size_t width, std::vector<Complex> amplitudes);

    static StateVector zero(size_t width);
    /// Product state from one character per qubit (qubit 0 first): '0', '1', '+', '-'.
    static StateVector product(std::string_view spec);

    size_t width() const noexcept {
        return width_;
    }
    std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }
    double norm() const;

    void apply(const Gate &g);
    void apply(const Circuit &c);
    /// Tensors |0> onto new high-index qubits.
    StateVector widened(size_t width) const;

   private:
    size_t width_ = 0;
    std::vector<Complex> amps_;
};

struct PostSelectedState;

class DensityMatrix {
   public:
    DensityMatrix() = default;
    static DensityMatrix from_pure(const StateVector &psi);
    static DensityMatrix maximally_mixed(size_t width);

    size_t width() const noexcept {
        return width_;
    }
    size_t dim() const noexcept {
        return size_t{1} << width_;
    }
    Complex operator()(size_t row, size_t col) const {
        return data_[(row << width_) | col];
    }

    /// rho -> U rho U^dagger for a 2^k x 2^k `local` on `qubits`.
    void apply_unitary(const CMatrix &local, std::span<const size_t> qubits);
    void apply_gate(const Gate &g);
    void apply_pauli(const PauliString &p);
    /// (1-p) rho + p/3 (X rho X + Y rho Y + Z rho Z) on one qubit.
    void apply_depolarizing(size_t qubit, double p);

    Complex trace() const;
    double hermiticity_error() const;
    double min_eigenvalue() const;

   private:
    friend PostSelectedState postselect_ancillas(const DensityMatrix &rho, std::vector<size_t> ancillas);
    size_t width_ = 0;
    std::vector<Complex> data_;  // row-major, index (row << width) | col
};

/// A Pauli inserted after every gate of moment `after_moment` (test and validation hook).
struct PauliInjection {
    size_t after_moment = 0;
    PauliString pauli;
};

/// Runs `c` on `input` with the channels of `m` after each moment's gates.
/// Throws ResourceError above kMaxDenseWidth, ArgumentError for an unnormalized input
/// or a non-native circuit under the overrotation model.
DensityMatrix simulate(const Circuit &c, const NoiseModel &m, const StateVector &input,
                       std::span<const PauliInjection> injections = {});

struct PostSelectedState {
    DensityMatrix data;  // renormalized, ancillas traced out
    double survival = 1;
};

/// Projects every listed ancilla onto |+>, traces them out and renormalizes.
/// Throws DegeneratePostselectionError when the survival probability is below 1e-15.
PostSelectedState postselect_ancillas(const DensityMatrix &rho, std::vector<size_t> ancillas);
PostSelectedState postselect_flags(const DensityMatrix &rho, const NestedFlagSet &flags);

struct FidelityResult {
    double value = 0;
    /// The raw overlap fell outside [0, 1] by more than 1e-9 before clamping.
    bool health_warning = false;
};

/// <psi|rho|psi>, clamped to [0, 1]. Throws DimensionError on mismatched widths.
FidelityResult fidelity(const DensityMatrix &rho, const StateVector &reference);

/// Noiseless output of `c` on `input`; the fidelity reference.
StateVector ideal_output(const Circuit &c, const StateVector &input);

struct SimOutcome {
    double fidelity_raw = 1;
    double fidelity_postselected = 1;
    double survival_probability = 1;
    NoiseModel model;
    double parameter = 0;
    bool health_warning = false;
};

/// Fidelity of the unflagged circuit under `m` (native-compiled first for overrotation).
FidelityResult raw_fidelity(const Circuit &c, const NoiseModel &m, const StateVector &input,
                            const StateVector &reference);

/// Instruments `c` with `flags`, simulates under `m`, post-selects on every flag and
/// compares against `reference`. `raw` skips recomputing the unflagged fidelity.
SimOutcome simulate_flagged(const Circuit &c, const NestedFlagSet &flags, const NoiseModel &m,
                            const StateVector &input, const StateVector &reference,
                            std::optional<double> raw = std::nullopt);

}  // namespace flagkit

#endif
