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

#ifndef FLAGKIT_PAULI_H
#define FLAGKIT_PAULI_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace flagkit {

/// Largest register a PauliString can describe (one machine word per component).
inline constexpr size_t kMaxPauliQubits = 64;

/// A signed n-qubit Pauli operator, stored as paired X/Z bit masks.
///
/// Qubit i carries I for (x,z) = (0,0), X for (1,0), Z for (0,1) and Y for (1,1).
/// The overall sign is always +1 or -1; products that would pick up a factor of
/// +-i are only available through `PhasedPauli`.
class PauliString {
   public:
    PauliString() = default;
    /// Identity on `num_qubits` qubits.
    explicit PauliString(size_t num_qubits);
    PauliString(size_t num_qubits, uint64_t xs, uint64_t zs, bool negative = false);

    /// Parses "+IXYZ", "-ZZ" or an unsigned "XYZ". Throws ArgumentError.
    static PauliString from_text(std::string_view text);
    /// Single-letter operator on one qubit of an `num_qubits` register.
    static PauliString single(size_t num_qubits, size_t qubit, char letter);

    std::string str() const;

    size_t num_qubits() const noexcept {
        return num_qubits_;
    }
    uint64_t xs() const noexcept {
        return xs_;
    }
    uint64_t zs() const noexcept {
        return zs_;
    }
    bool negative() const noexcept {
        return negative_;
    }
    int sign() const noexcept {
        return negative_ ? -1 : +1;
    }
    uint64_t support() const noexcept {
        return xs_ | zs_;
    }
    bool is_identity() const noexcept {
        return support() == 0;
    }

    /// One of 'I', 'X', 'Y', 'Z'.
    char letter(size_t qubit) const;
    void set_letter(size_t qubit, char letter);

    PauliString with_sign(bool negative) const;
    PauliString unsigned_part() const {
        return with_sign(false);
    }
    PauliString operator-() const {
        return with_sign(!negative_);
    }

    /// The operator restricted to the qubits in `mask` (identity elsewhere), sign kept.
    PauliString restricted(uint64_t mask) const;
    /// Same letters on a register of `num_qubits` >= current size.
    PauliString widened(size_t num_qubits) const;

    bool operator==(const PauliString &other) const = default;

   private:
    size_t num_qubits_ = 0;
    uint64_t xs_ = 0;
    uint64_t zs_ = 0;
    bool negative_ = false;
};

/// A Pauli product carrying an arbitrary quarter phase: i^phase * letters.
///
/// `pauli` always holds a +1 sign; the sign of Hermitian results is folded into
/// `phase` (0 or 2).
struct PhasedPauli {
    PauliString pauli;
    uint8_t phase = 0;

    bool is_hermitian() const noexcept {
        return (phase & 1) == 0;
    }
    /// The signed operator. Throws ArgumentError when the phase is +-i.
    PauliString to_signed() const;
};

size_t weight(const PauliString &p);

/// True iff ab = ba. Throws DimensionError on mismatched sizes.
bool commutes(const PauliString &a, const PauliString &b);

/// The product a*b with its full quarter phase. Throws DimensionError on mismatched sizes.
PhasedPauli multiply(const PauliString &a, const PauliString &b);
PhasedPauli multiply(const PhasedPauli &a, const PauliString &b);

/// Product of two commuting operators. Throws ArgumentError if they anticommute.
PauliString operator*(const PauliString &a, const PauliString &b);

/// Deterministic uniform draw over {I,X,Y,Z}^n keyed by (seed, draw_index).
/// With `nonidentity`, re-draws (on an internal stream) until the weight is at least 1.
PauliString random_pauli(size_t num_qubits, uint64_t seed, uint64_t draw_index, bool nonidentity);

/// Number of qubits where both operators act non-trivially.
size_t support_overlap(const PauliString &a, const PauliString &b);

}  // namespace flagkit

#endif
