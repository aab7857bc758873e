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

#include <bit>
#include <random>

#include "flagkit/error.h"

namespace flagkit {

namespace {

uint64_t low_mask(size_t n) {
    return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

void check_size(size_t n) {
    if (n > kMaxPauliQubits) {
        throw DimensionError("PauliString supports at most 64 qubits, got " + std::to_string(n));
    }
}

void check_same_size(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError(
            "Pauli size mismatch: " + std::to_string(a.num_qubits()) + " vs " + std::to_string(b.num_qubits()));
    }
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

PauliString::PauliString(size_t num_qubits) : num_qubits_(num_qubits) {
    check_size(num_qubits);
}

PauliString::PauliString(size_t num_qubits, uint64_t xs, uint64_t zs, bool negative)
    : num_qubits_(num_qubits), xs_(xs), zs_(zs), negative_(negative) {
    check_size(num_qubits);
    if (((xs | zs) & ~low_mask(num_qubits)) != 0) {
        throw DimensionError("Pauli mask has bits beyond qubit count " + std::to_string(num_qubits));
    }
}

PauliString PauliString::from_text(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) {
        throw ArgumentError("empty Pauli string");
    }
    PauliString result(text.size());
    result.negative_ = negative;
    for (size_t q = 0; q < text.size(); q++) {
        char c = text[q];
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z' && c != '_') {
            throw ArgumentError("bad Pauli letter '" + std::string(1, c) + "' in \"" + std::string(text) + "\"");
        }
        result.set_letter(q, c == '_' ? 'I' : c);
    }
    return result;
}

PauliString PauliString::single(size_t num_qubits, size_t qubit, char letter) {
    PauliString result(num_qubits);
    result.set_letter(qubit, letter);
    return result;
}

std::string PauliString::str() const {
    std::string out;
    out.reserve(num_qubits_ + 1);
    out.push_back(negative_ ? '-' : '+');
    for (size_t q = 0; q < num_qubits_; q++) {
        out.push_back(letter(q));
    }
    return out;
}

char PauliString::letter(size_t qubit) const {
    if (qubit >= num_qubits_) {
        throw DimensionError("qubit " + std::to_string(qubit) + " out of range");
    }
    bool x = (xs_ >> qubit) & 1;
    bool z = (zs_ >> qubit) & 1;
    return "IXZY"[x | (z << 1)];
}

void PauliString::set_letter(size_t qubit, char letter) {
    if (qubit >= num_qubits_) {
        throw DimensionError("qubit " + std::to_string(qubit) + " out of range");
    }
    uint64_t bit = uint64_t{1} << qubit;
    bool x = letter == 'X' || letter == 'Y';
    bool z = letter == 'Z' || letter == 'Y';
    if (!x && !z && letter != 'I') {
        throw ArgumentError("bad Pauli letter '" + std::string(1, letter) + "'");
    }
    xs_ = x ? (xs_ | bit) : (xs_ & ~bit);
    zs_ = z ? (zs_ | bit) : (zs_ & ~bit);
}

PauliString PauliString::with_sign(bool negative) const {
    PauliString r = *this;
    r.negative_ = negative;
    return r;
}

PauliString PauliString::restricted(uint64_t mask) const {
    return PauliString(num_qubits_, xs_ & mask, zs_ & mask, negative_);
}

PauliString PauliString::widened(size_t num_qubits) const {
    if (num_qubits < num_qubits_) {
        throw DimensionError("cannot shrink a Pauli string");
    }
    return PauliString(num_qubits, xs_, zs_, negative_);
}

PauliString PhasedPauli::to_signed() const {
    if (!is_hermitian()) {
        throw ArgumentError("product has an imaginary phase and is not a signed Pauli");
    }
    return pauli.with_sign(phase == 2);
}

size_t weight(const PauliString &p) {
    return std::popcount(p.support());
}

bool commutes(const PauliString &a, const PauliString &b) {
    check_same_size(a, b);
    return (std::popcount((a.xs() & b.zs()) ^ (a.zs() & b.xs())) & 1) == 0;
}

PhasedPauli multiply(const PauliString &a, const PauliString &b) {
    check_same_size(a, b);
    uint64_t ax = a.xs() & ~a.zs(), ay = a.xs() & a.zs(), az = ~a.xs() & a.zs();
    uint64_t bx = b.xs() & ~b.zs(), by = b.xs() & b.zs(), bz = ~b.xs() & b.zs();
    // XY = iZ, YZ = iX, ZX = iY and the reversed orders pick up -i.
    int plus = std::popcount((ax & by) | (ay & bz) | (az & bx));
    int minus = std::popcount((ay & bx) | (az & by) | (ax & bz));
    int phase = 2 * a.negative() + 2 * b.negative() + plus - minus;
    PhasedPauli r;
    r.pauli = PauliString(a.num_qubits(), a.xs() ^ b.xs(), a.zs() ^ b.zs());
    r.phase = static_cast<uint8_t>(((phase % 4) + 4) % 4);
    return r;
}

PhasedPauli multiply(const PhasedPauli &a, const PauliString &b) {
    PhasedPauli r = multiply(a.pauli, b);
    r.phase = static_cast<uint8_t>((r.phase + a.phase) % 4);
    return r;
}

PauliString operator*(const PauliString &a, const PauliString &b) {
    PhasedPauli r = multiply(a, b);
    if (!r.is_hermitian()) {
        throw ArgumentError("product of anticommuting Paulis " + a.str() + " and " + b.str() + " is not Hermitian");
    }
    return r.to_signed();
}

PauliString random_pauli(size_t num_qubits, uint64_t seed, uint64_t draw_index, bool nonidentity) {
    if (num_qubits == 0) {
        throw ArgumentError("random_pauli needs at least one qubit");
    }
    check_size(num_qubits);
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(draw_index)));
    while (true) {
        uint64_t xs = 0, zs = 0;
        uint64_t bits = 0;
        for (size_t q = 0; q < num_qubits; q++) {
            if (q % 32 == 0) {
                bits = rng();
            }
            xs |= (bits & 1) << q;
            zs |= ((bits >> 1) & 1) << q;
            bits >>= 2;
        }
        if (!nonidentity || (xs | zs) != 0) {
            return PauliString(num_qubits, xs, zs);
        }
    }
}

size_t support_overlap(const PauliString &a, const PauliString &b) {
    check_same_size(a, b);
    return std::popcount(a.support() & b.support());
}

}  // namespace flagkit
