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

#ifndef FLAGKIT_FLAG_GADGET_H
#define FLAGKIT_FLAG_GADGET_H

#include <cstddef>
#include <string>
#include <vector>

#include "flagkit/circuit.h"
#include "flagkit/pauli.h"

namespace flagkit {

/// A Pauli flag: |+> ancilla, controlled-P before a circuit section and
/// controlled-P' after it, measured in the X basis.
struct FlagGadget {
    PauliString entangle;     // P, sign +1
    PauliString disentangle;  // P' with its sign moved into sign_fix
    size_t ancilla = 0;
    size_t entry_moment = 0;
    size_t exit_moment = 0;
    bool sign_fix = false;  // P' carried -1: Z on the ancilla before measurement

    MomentRange section() const noexcept {
        return {entry_moment, exit_moment};
    }
    /// One controlled-Pauli per non-identity letter of P and P'.
    size_t two_qubit_gate_count() const;
    /// P' including its sign.
    PauliString signed_disentangle() const {
        return disentangle.with_sign(sign_fix);
    }

    bool operator==(const FlagGadget &other) const = default;
};

/// Several flags on one section. Entangling legs run in `gadgets` order.
struct NestedFlagSet {
    std::vector<FlagGadget> gadgets;
    /// Indices into `gadgets` giving the disentangling order; a valid set uses
    /// the exact reverse of the entangling order.
    std::vector<size_t> disentangle_order;

    NestedFlagSet() = default;
    explicit NestedFlagSet(std::vector<FlagGadget> g);

    size_t size() const noexcept {
        return gadgets.size();
    }
    std::vector<size_t> ancillas() const;
};

/// Builds a flag for `p` over `section` (whole circuit by default).
/// The ancilla defaults to the first index past the data register.
/// Throws ArgumentError for identity `p`, CompatibilityError if `p` is not compatible.
FlagGadget synthesize(const Circuit &c, const PauliString &p, std::optional<MomentRange> section = {},
                      std::optional<size_t> ancilla = {});

struct NestingReport {
    bool valid = true;
    std::string kind;  // "ancilla", "gadget", "section", "ordering"
    std::string detail;
    explicit operator bool() const noexcept {
        return valid;
    }
};

/// Structural checks only: ancilla distinctness, section agreement, reversed disentangle order.
NestingReport validate_nesting(const NestedFlagSet &flags);
/// Structural checks plus per-gadget validity against `c`.
NestingReport validate_nesting(const Circuit &c, const NestedFlagSet &flags);

/// Emits prefix, ancilla H and controlled-P legs, the flagged section, controlled-P'
/// legs in reverse gadget order, the suffix, then sign-fix Z gates. The result is
/// widened to hold every ancilla. Throws ArgumentError on invalid nesting.
Circuit instrument(const Circuit &c, const NestedFlagSet &flags);
Circuit instrument(const Circuit &c, const FlagGadget &flag);

/// JSON object text: {entangle, disentangle, ancilla, entry, exit, sign_fix}.
std::string to_json(const FlagGadget &flag);

}  // namespace flagkit

#endif
