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

#ifndef FLAGKIT_PROPAGATION_H
#define FLAGKIT_PROPAGATION_H

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "flagkit/circuit.h"
#include "flagkit/pauli.h"

namespace flagkit {

/// g p g^dagger for a Clifford gate. Throws ClassificationError for non-Clifford gates.
PauliString conjugate_through_gate(const PauliString &p, const Gate &g);
/// g^dagger p g.
PauliString conjugate_through_gate_inverse(const PauliString &p, const Gate &g);

/// Per-kind conjugation tables for the fixed Clifford gates: images of
/// X0, Z0 (and X1, Z1 for two-qubit gates) in local qubit order.
/// Returns an empty vector for kinds that are not table driven.
std::vector<PauliString> conjugation_table(GateKind kind);

struct PropagationResult {
    PauliString pauli;
    /// Input operator followed by the operator after each moment crossed.
    std::vector<PauliString> layer_trace;
};

/// Where a propagated operator first fails to commute with a non-Clifford gate.
struct CompatibilityViolation {
    size_t moment = 0;
    size_t qubit = 0;
    Gate gate;
    PauliString pauli;  // operator arriving at the gate
    std::string describe() const;
};

struct CompatibilityReport {
    bool compatible = true;
    std::optional<CompatibilityViolation> violation;
    explicit operator bool() const noexcept {
        return compatible;
    }
};

/// Conjugates `p` moment by moment from boundary `from` to boundary `to`.
/// With to < from the inverse gates are used (propagating towards the input).
/// Non-Clifford rotations are crossed unchanged when `p` commutes with their
/// axis on the gate's qubits; otherwise throws CompatibilityError.
PropagationResult propagate(const Circuit &c, const PauliString &p, size_t from, size_t to);

/// Checks that `p`, entering at moment `from`, passes every non-Clifford gate up to `to`
/// (default: circuit end) by acting as identity or along the rotation axis.
CompatibilityReport check_compatibility(const Circuit &c, const PauliString &p, size_t from,
                                        std::optional<size_t> to = std::nullopt);

/// F' = U F U^dagger over `section` (the whole circuit by default).
/// Throws CompatibilityError when `f` is not compatible.
PauliString disentangling_operator(const Circuit &c, const PauliString &f, std::optional<MomentRange> section = {});

}  // namespace flagkit

#endif
