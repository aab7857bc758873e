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

#ifndef FLAGKIT_FAULT_ANALYSIS_H
#define FLAGKIT_FAULT_ANALYSIS_H

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flagkit/circuit.h"
#include "flagkit/flag_gadget.h"
#include "flagkit/pauli.h"
#include "flagkit/propagation.h"

namespace flagkit {

enum class NoiseKind { Depolarizing, Crosstalk, Overrotation };

std::string_view noise_kind_name(NoiseKind kind);
std::optional<NoiseKind> noise_kind_from_name(std::string_view name);

/// One of the three fault models.
///
/// - depolarizing: D_p on both qubits after every two-qubit gate; single-qubit gates are noiseless.
/// - crosstalk: depolarizing plus D_{ratio*p} on the chain neighbours (q-1, q+1) of each
///   two-qubit gate, excluding the gate's own qubits.
/// - overrotation: exp(-i eps/2 A) after every native gate, A the gate's Pauli axis.
struct NoiseModel {
    NoiseKind kind = NoiseKind::Depolarizing;
    double p = 0;
    double crosstalk_ratio = 0.1;
    double epsilon = 0;

    static NoiseModel depolarizing(double p);
    static NoiseModel crosstalk(double p, double ratio = 0.1);
    static NoiseModel overrotation(double epsilon);

    /// p for the channel models, epsilon for overrotation.
    double parameter() const noexcept;
    NoiseModel with_parameter(double value) const;
    /// Throws ArgumentError for out-of-range parameters.
    void validate() const;
    std::string str() const;
};

/// Chain neighbours of a gate's qubits within `width`, excluding the gate's own qubits.
std::vector<size_t> chain_neighbors(const Gate &g, size_t width);

struct FaultLocation {
    size_t moment = 0;
    size_t gate_index = 0;  // within the moment
    std::vector<size_t> qubits;
    /// Every Pauli this location can emit, on the full register.
    std::vector<PauliString> faults;
    /// Relative rate: 1 for gate locations, the crosstalk ratio for neighbour locations.
    double weight = 1;
    bool neighbor = false;
};

/// Enumerates fault locations in time order over `window` (default: whole circuit).
/// Throws ArgumentError when an overrotation model meets a non-native gate.
std::vector<FaultLocation> fault_locations(const Circuit &c, const NoiseModel &m,
                                           std::optional<MomentRange> window = {});

struct OutputError {
    size_t location = 0;  // index into ErrorSet::locations
    PauliString fault;
    PauliString output;  // fault conjugated to the end of the window
    double weight = 1;
};

struct ErrorSet {
    size_t width = 0;
    MomentRange window;
    std::vector<FaultLocation> locations;
    std::vector<OutputError> errors;
    /// Faults that hit an incompatible non-Clifford gate; `output` is the operator arriving there.
    std::vector<OutputError> non_propagable;

    size_t num_faults() const noexcept {
        return errors.size() + non_propagable.size();
    }
    double total_weight() const;
};

/// Propagates every single fault located in `window` to the window's end.
ErrorSet output_error_set(const Circuit &c, const NoiseModel &m, std::optional<MomentRange> window = {});

/// Error set of `section` of the unflagged circuit, as used by quality().
/// Overrotation models score the native compilation of the section.
ErrorSet section_error_set(const Circuit &c, MomentRange section, const NoiseModel &m);

/// Penalty per non-identity letter of P and of P'.
struct ScoringCoefficients {
    double entangle = 6;
    double disentangle = 6;

    /// 6/6 for depolarizing, 6(1+ratio) for crosstalk, 1/1 for overrotation.
    static ScoringCoefficients for_model(const NoiseModel &m);
};

struct FlagScore {
    FlagGadget flag;
    double n_detected = 0;
    double q = 0;
    double detected_fraction = 0;
    double penalty_entangle = 0;
    double penalty_disentangle = 0;
};

/// q = N_detected - c_P w(P) - c_P' w(P'), with N_detected the weighted count of
/// output errors anticommuting with P'. `errors` should cover the flag's section
/// of the unflagged circuit.
FlagScore quality(const FlagGadget &flag, const ErrorSet &errors, const NoiseModel &m,
                  std::optional<ScoringCoefficients> coefficients = {});

struct ExactScore {
    double n_detected = 0;          // weighted faults on the instrumented circuit that flip a flag
    double undetected_harmful = 0;  // weighted undetected faults acting on the data register
    double raw_total = 0;           // weighted faults of the unflagged circuit
    double q = 0;                   // raw_total - undetected_harmful
    size_t num_faults = 0;
};

/// Enumerates faults on the instrumented circuit (including gadget gates) and
/// classifies each by whether any flag ancilla ends with a Z component.
/// Overrotation models compile both circuits to native gates first.
ExactScore quality_exact(const Circuit &c, const NestedFlagSet &flags, const NoiseModel &m);

struct RankOptions {
    bool exact = false;
    std::optional<ScoringCoefficients> coefficients;
};

struct RankResult {
    std::vector<FlagScore> ranked;
    std::vector<std::pair<PauliString, std::string>> rejected;  // candidate, reason
};

/// Ranking order: q descending, then w(P)+w(P') ascending, then entangle and
/// disentangle text.
bool ranks_before(const FlagScore &a, const FlagScore &b);

/// Synthesizes and scores every compatible candidate over `section`, sorted by
/// ranks_before.
RankResult rank_flags(const Circuit &c, const std::vector<PauliString> &candidates, std::optional<MomentRange> section,
                      const NoiseModel &m, const RankOptions &options = {});

/// CSV with header flag_entangle,flag_disentangle,weight_P,weight_Pprime,n_detected,q.
std::string rank_to_csv(const std::vector<FlagScore> &scores);

}  // namespace flagkit

#endif
