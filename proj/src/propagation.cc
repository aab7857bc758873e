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

#include "flagkit/propagation.h"

#include <cmath>
#include <numbers>

#include "flagkit/error.h"

namespace flagkit {

namespace {

// Frozen images of X0, Z0 (, X1, Z1) under g . g^dagger. The table test
// regenerates these from the gate matrices and compares.
struct TableEntry {
    GateKind kind;
    const char *images[4];
};

constexpr TableEntry kTables[] = {
    {GateKind::H, {"+Z", "+X"}},
    {GateKind::S, {"+Y", "+Z"}},
    {GateKind::Sdg, {"-Y", "+Z"}},
    {GateKind::X, {"+X", "-Z"}},
    {GateKind::Y, {"-X", "-Z"}},
    {GateKind::Z, {"-X", "+Z"}},
    {GateKind::CNOT, {"+XX", "+ZI", "+IX", "+ZZ"}},
    {GateKind::CZ, {"+XZ", "+ZI", "+ZX", "+IZ"}},
};

using ParsedTable = std::vector<PauliString>;

// Images parsed once, indexed by GateKind; empty for rotation kinds.
const ParsedTable *find_table(GateKind kind) {
    static const std::vector<ParsedTable> parsed = [] {
        std::vector<ParsedTable> out(static_cast<size_t>(GateKind::XX) + 1);
        for (const TableEntry &e : kTables) {
            for (size_t k = 0; k < 2 * gate_arity(e.kind); k++) {
                out[static_cast<size_t>(e.kind)].push_back(PauliString::from_text(e.images[k]));
            }
        }
        return out;
    }();
    const ParsedTable &t = parsed[static_cast<size_t>(kind)];
    return t.empty() ? nullptr : &t;
}

PauliString conjugate_by_table(const PauliString &p, const Gate &g, const ParsedTable &table) {
    auto qs = g.qubits();
    size_t k = qs.size();
    PhasedPauli acc{PauliString(k), 0};
    for (size_t j = 0; j < k; j++) {
        char letter = p.letter(qs[j]);
        bool x = letter == 'X' || letter == 'Y';
        bool z = letter == 'Z' || letter == 'Y';
        if (x) {
            acc = multiply(acc, table[2 * j]);
        }
        if (z) {
            acc = multiply(acc, table[2 * j + 1]);
        }
        if (x && z) {
            acc.phase = static_cast<uint8_t>((acc.phase + 1) % 4);  // Y = iXZ
        }
    }
    PauliString local = acc.to_signed();
    PauliString out = p.restricted(~g.qubit_mask());
    for (size_t j = 0; j < k; j++) {
        out.set_letter(qs[j], local.letter(j));
    }
    return out.with_sign(p.negative() != local.negative());
}

// Clifford-angle rotation: U P U^dagger = P (cos t + i sin t A) for anticommuting P,
// with t a multiple of pi/2.
PauliString conjugate_by_rotation(const PauliString &p, const Gate &g) {
    PauliString axis = *g.axis(p.num_qubits());
    if (commutes(p, axis)) {
        return p;
    }
    double step = g.kind() == GateKind::XX ? std::numbers::pi / 4 : std::numbers::pi / 2;
    long turns = std::lround(g.angle() / step);
    int quarter = static_cast<int>(((turns % 4) + 4) % 4);
    switch (quarter) {
        case 0:
            return p;
        case 2:
            return -p;
        default: {
            PhasedPauli r = multiply(p, axis);
            r.phase = static_cast<uint8_t>((r.phase + (quarter == 1 ? 1 : 3)) % 4);
            return r.to_signed();
        }
    }
}

void check_width(const PauliString &p, const Gate &g) {
    if (g.max_qubit() >= p.num_qubits()) {
        throw DimensionError("gate '" + g.str() + "' outside Pauli of " + std::to_string(p.num_qubits()) + " qubits");
    }
}

// Crosses one gate; returns false (leaving p untouched) on an incompatible non-Clifford gate.
bool cross_gate(PauliString &p, const Gate &g, bool inverse) {
    if (g.is_clifford()) {
        p = inverse ? conjugate_through_gate_inverse(p, g) : conjugate_through_gate(p, g);
        return true;
    }
    check_width(p, g);
    return commutes(p, *g.axis(p.num_qubits()));
}

CompatibilityViolation make_violation(size_t moment, const Gate &g, const PauliString &p) {
    size_t qubit = g.qubits()[0];
    for (size_t q : g.qubits()) {
        if (p.letter(q) != 'I') {
            qubit = q;
            break;
        }
    }
    return CompatibilityViolation{moment, qubit, g, p};
}

std::optional<CompatibilityViolation> run(const Circuit &c, PauliString &p, size_t from, size_t to,
                                          std::vector<PauliString> *trace) {
    if (p.num_qubits() < c.width()) {
        throw DimensionError("Pauli of " + std::to_string(p.num_qubits()) + " qubits on circuit of width " +
                             std::to_string(c.width()));
    }
    if (from > c.num_moments() || to > c.num_moments()) {
        throw ArgumentError("moment boundary outside circuit of " + std::to_string(c.num_moments()) + " moments");
    }
    if (trace) {
        trace->push_back(p);
    }
    bool backward = to < from;
    size_t steps = backward ? from - to : to - from;
    for (size_t s = 0; s < steps; s++) {
        size_t m = backward ? from - 1 - s : from + s;
        for (const Gate &g : c.moments()[m]) {
            if (!cross_gate(p, g, backward)) {
                return make_violation(m, g, p);
            }
        }
        if (trace) {
            trace->push_back(p);
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<PauliString> conjugation_table(GateKind kind) {
    const ParsedTable *t = find_table(kind);
    return t ? *t : std::vector<PauliString>{};
}

PauliString conjugate_through_gate(const PauliString &p, const Gate &g) {
    if (!g.is_clifford()) {
        throw ClassificationError("cannot conjugate a Pauli through non-Clifford gate '" + g.str() + "'");
    }
    check_width(p, g);
    if (const ParsedTable *t = find_table(g.kind())) {
        return conjugate_by_table(p, g, *t);
    }
    return conjugate_by_rotation(p, g);
}

PauliString conjugate_through_gate_inverse(const PauliString &p, const Gate &g) {
    return conjugate_through_gate(p, g.inverse());
}

std::string CompatibilityViolation::describe() const {
    return "moment " + std::to_string(moment) + ", qubit " + std::to_string(qubit) + ": operator " + pauli.str() +
           " does not commute with non-Clifford gate '" + gate.str() + "'";
}

PropagationResult propagate(const Circuit &c, const PauliString &p, size_t from, size_t to) {
    PropagationResult result{p, {}};
    if (auto v = run(c, result.pauli, from, to, &result.layer_trace)) {
        throw CompatibilityError("incompatible propagation at " + v->describe());
    }
    return result;
}

CompatibilityReport check_compatibility(const Circuit &c, const PauliString &p, size_t from, std::optional<size_t> to) {
    PauliString cur = p;
    auto v = run(c, cur, from, to.value_or(c.num_moments()), nullptr);
    return CompatibilityReport{!v.has_value(), v};
}

PauliString disentangling_operator(const Circuit &c, const PauliString &f, std::optional<MomentRange> section) {
    MomentRange r = section.value_or(c.full_range());
    if (r.begin > r.end) {
        throw ArgumentError("section begins after it ends");
    }
    return propagate(c, f, r.begin, r.end).pauli;
}

}  // namespace flagkit
