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

#ifndef FLAGKIT_CIRCUIT_H
#define FLAGKIT_CIRCUIT_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flagkit/linalg.h"
#include "flagkit/pauli.h"

namespace flagkit {

enum class GateKind : uint8_t { H, S, Sdg, X, Y, Z, T, Tdg, CNOT, CZ, RX, RY, RZ, XX };

/// Lowercase mnemonic used by the text format.
std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);
size_t gate_arity(GateKind kind);
bool gate_has_angle(GateKind kind);

/// One gate. Rotations follow RX/RY/RZ(t) = exp(-i t/2 A) and XX(t) = exp(-i t X(x)X).
class Gate {
   public:
    /// Validates arity, distinct qubits and angle presence. Throws ArgumentError.
    Gate(GateKind kind, std::span<const size_t> qubits, double angle = 0);
    Gate(GateKind kind, std::initializer_list<size_t> qubits, double angle = 0)
        : Gate(kind, std::span<const size_t>(qubits.begin(), qubits.size()), angle) {
    }

    GateKind kind() const noexcept {
        return kind_;
    }
    std::span<const size_t> qubits() const noexcept {
        return {qubits_.data(), arity_};
    }
    size_t arity() const noexcept {
        return arity_;
    }
    double angle() const noexcept {
        return angle_;
    }
    uint64_t qubit_mask() const noexcept;
    size_t max_qubit() const noexcept;

    bool is_clifford() const;
    /// RX, RY, RZ or XX.
    bool is_native() const noexcept;
    /// Pauli axis of the rotation this gate generates, on a `width` register.
    /// Empty for H, CNOT and CZ, whose generators are not a single Pauli.
    std::optional<PauliString> axis(size_t width) const;
    /// The inverse gate (same kind family).
    Gate inverse() const;

    /// 2x2 or 4x4 matrix, first listed qubit least significant.
    CMatrix matrix() const;

    std::string str() const;
    bool operator==(const Gate &other) const = default;

   private:
    GateKind kind_;
    uint8_t arity_ = 0;
    std::array<size_t, 2> qubits_{};
    double angle_ = 0;
};

using Moment = std::vector<Gate>;

/// Half-open range of moment indices.
struct MomentRange {
    size_t begin = 0;
    size_t end = 0;
    bool operator==(const MomentRange &other) const = default;
};

/// A layered circuit. Gates in one moment act on disjoint qubits.
class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(size_t width);

    /// Reads the line-oriented text format. Throws ParseError with the line number.
    static Circuit parse(std::string_view text);
    /// Text form; angles printed with 17 significant digits.
    std::string serialize() const;

    /// Places `gate` in the earliest moment after every earlier gate on its qubits.
    void append(const Gate &gate);
    void append(const Circuit &other);

    size_t width() const noexcept {
        return width_;
    }
    const std::vector<Moment> &moments() const noexcept {
        return moments_;
    }
    size_t num_moments() const noexcept {
        return moments_.size();
    }
    MomentRange full_range() const noexcept {
        return {0, moments_.size()};
    }
    size_t num_gates() const;
    size_t num_two_qubit_gates() const;
    size_t num_non_clifford_gates() const;
    bool is_native() const;

    /// Moments [range.begin, range.end) with their layering kept as-is.
    Circuit slice(MomentRange range) const;
    /// Same gates on a larger register.
    Circuit widened(size_t width) const;

    bool operator==(const Circuit &other) const = default;

   private:
    size_t width_ = 0;
    std::vector<Moment> moments_;
    std::vector<size_t> frontier_;  // per qubit: first moment with that qubit free onward
};

/// Largest width accepted by dense constructions.
inline constexpr size_t kMaxDenseWidth = 12;

/// Product of the moment unitaries in time order. Throws ResourceError above kMaxDenseWidth.
CMatrix to_unitary(const Circuit &c);

/// Rewrites every gate into RX/RY/RZ/XX, equal to the input up to global phase.
Circuit compile_to_native(const Circuit &c);

/// Parity ladder onto qubit n-1, RZ(theta), mirrored ladder: exp(-i theta/2 Z...Z).
Circuit zzzzz_rotation_circuit(size_t n_qubits, double theta);

/// T layer on five qubits followed by a Clifford decoder for the five-qubit code.
Circuit magic_distillation_circuit();
/// Source text of the magic-state benchmark and its FNV-1a checksum.
std::string_view magic_distillation_source();
uint64_t magic_distillation_checksum();

uint64_t fnv1a64(std::string_view text);

}  // namespace flagkit

#endif
