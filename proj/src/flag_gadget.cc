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

#include "flagkit/flag_gadget.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "flagkit/error.h"
#include "flagkit/propagation.h"
#include "json.hpp"

namespace flagkit {

namespace {

void append_controlled_pauli(Circuit &out, size_t control, const PauliString &p) {
    for (size_t q = 0; q < p.num_qubits(); q++) {
        switch (p.letter(q)) {
            case 'X':
                out.append(Gate(GateKind::CNOT, {control, q}));
                break;
            case 'Z':
                out.append(Gate(GateKind::CZ, {control, q}));
                break;
            case 'Y':
                out.append(Gate(GateKind::Sdg, {q}));
                out.append(Gate(GateKind::CNOT, {control, q}));
                out.append(Gate(GateKind::S, {q}));
                break;
            default:
                break;
        }
    }
}

void append_moments(Circuit &out, const Circuit &c, MomentRange r) {
    for (size_t m = r.begin; m < r.end; m++) {
        for (const Gate &g : c.moments()[m]) {
            out.append(g);
        }
    }
}

NestingReport fail(std::string kind, std::string detail) {
    return NestingReport{false, std::move(kind), std::move(detail)};
}

}  // namespace

size_t FlagGadget::two_qubit_gate_count() const {
    return weight(entangle) + weight(disentangle);
}

NestedFlagSet::NestedFlagSet(std::vector<FlagGadget> g) : gadgets(std::move(g)), disentangle_order(gadgets.size()) {
    std::iota(disentangle_order.rbegin(), disentangle_order.rend(), size_t{0});
}

std::vector<size_t> NestedFlagSet::ancillas() const {
    std::vector<size_t> out;
    for (const FlagGadget &g : gadgets) {
        out.push_back(g.ancilla);
    }
    return out;
}

FlagGadget synthesize(const Circuit &c, const PauliString &p, std::optional<MomentRange> section,
                      std::optional<size_t> ancilla) {
    if (p.num_qubits() != c.width()) {
        throw DimensionError("flag operator has " + std::to_string(p.num_qubits()) + " qubits, circuit has " +
                             std::to_string(c.width()));
    }
    if (p.is_identity()) {
        throw ArgumentError("an identity flag detects nothing");
    }
    MomentRange r = section.value_or(c.full_range());
    if (r.begin > r.end || r.end > c.num_moments()) {
        throw ArgumentError("flag section outside circuit");
    }
    size_t anc = ancilla.value_or(c.width());
    if (anc < c.width()) {
        throw ArgumentError("ancilla " + std::to_string(anc) + " overlaps the data register");
    }
    PauliString entangle = p.unsigned_part();
    PauliString out = disentangling_operator(c, entangle, r);
    FlagGadget g;
    g.entangle = entangle;
    g.disentangle = out.unsigned_part();
    g.sign_fix = out.negative();
    g.ancilla = anc;
    g.entry_moment = r.begin;
    g.exit_moment = r.end;
    return g;
}

NestingReport validate_nesting(const NestedFlagSet &flags) {
    std::set<size_t> seen;
    for (const FlagGadget &g : flags.gadgets) {
        if (!seen.insert(g.ancilla).second) {
            return fail("ancilla", "ancilla " + std::to_string(g.ancilla) + " used by more than one flag");
        }
        if (g.entangle.is_identity() || g.entangle.negative() || g.disentangle.negative() ||
            g.entangle.num_qubits() != g.disentangle.num_qubits()) {
            return fail("gadget", "malformed gadget " + g.entangle.str() + " -> " + g.disentangle.str());
        }
        if (g.ancilla < g.entangle.num_qubits()) {
            return fail("ancilla", "ancilla " + std::to_string(g.ancilla) + " overlaps the data register");
        }
        if (g.section() != flags.gadgets.front().section()) {
            return fail("section", "nested flags must share one section");
        }
    }
    size_t n = flags.gadgets.size();
    if (flags.disentangle_order.size() != n) {
        return fail("ordering", "disentangle order lists " + std::to_string(flags.disentangle_order.size()) +
                                    " gadgets, set has " + std::to_string(n));
    }
    for (size_t k = 0; k < n; k++) {
        if (flags.disentangle_order[k] != n - 1 - k) {
            return fail("ordering", "disentangling flag " + std::to_string(k) + " is gadget " +
                                        std::to_string(flags.disentangle_order[k]) + ", expected " +
                                        std::to_string(n - 1 - k) + " (reverse of entangling order)");
        }
    }
    return {};
}

NestingReport validate_nesting(const Circuit &c, const NestedFlagSet &flags) {
    NestingReport r = validate_nesting(flags);
    if (!r) {
        return r;
    }
    for (size_t k = 0; k < flags.gadgets.size(); k++) {
        const FlagGadget &g = flags.gadgets[k];
        if (g.entangle.num_qubits() != c.width() || g.ancilla < c.width() || g.exit_moment > c.num_moments()) {
            return fail("gadget", "gadget " + std::to_string(k) + " does not fit the circuit");
        }
        CompatibilityReport compat = check_compatibility(c, g.entangle, g.entry_moment, g.exit_moment);
        if (!compat) {
            return fail("gadget", "gadget " + std::to_string(k) + " incompatible: " + compat.violation->describe());
        }
        PauliString expected = disentangling_operator(c, g.entangle, g.section());
        if (expected != g.signed_disentangle()) {
            return fail("gadget", "gadget " + std::to_string(k) + " disentangles with " + g.signed_disentangle().str() +
                                      ", circuit requires " + expected.str());
        }
    }
    return {};
}

Circuit instrument(const Circuit &c, const NestedFlagSet &flags) {
    if (flags.gadgets.empty()) {
        return c;
    }
    NestingReport report = validate_nesting(flags);
    if (!report) {
        throw ArgumentError("invalid flag set (" + report.kind + "): " + report.detail);
    }
    size_t width = c.width();
    for (const FlagGadget &g : flags.gadgets) {
        if (g.entangle.num_qubits() != c.width()) {
            throw ArgumentError("flag operator size does not match circuit width");
        }
        width = std::max(width, g.ancilla + 1);
    }
    MomentRange section = flags.gadgets.front().section();
    if (section.end > c.num_moments()) {
        throw ArgumentError("flag section outside circuit");
    }

    Circuit out(width);
    append_moments(out, c, {0, section.begin});
    for (const FlagGadget &g : flags.gadgets) {
        out.append(Gate(GateKind::H, {g.ancilla}));
        append_controlled_pauli(out, g.ancilla, g.entangle);
    }
    append_moments(out, c, section);
    for (size_t k : flags.disentangle_order) {
        const FlagGadget &g = flags.gadgets[k];
        append_controlled_pauli(out, g.ancilla, g.disentangle);
    }
    append_moments(out, c, {section.end, c.num_moments()});
    for (const FlagGadget &g : flags.gadgets) {
        if (g.sign_fix) {
            out.append(Gate(GateKind::Z, {g.ancilla}));
        }
    }
    return out;
}

Circuit instrument(const Circuit &c, const FlagGadget &flag) {
    return instrument(c, NestedFlagSet({flag}));
}

std::string to_json(const FlagGadget &flag) {
    nlohmann::ordered_json j;
    j["entangle"] = flag.entangle.str();
    j["disentangle"] = flag.disentangle.str();
    j["ancilla"] = flag.ancilla;
    j["entry"] = flag.entry_moment;
    j["exit"] = flag.exit_moment;
    j["sign_fix"] = flag.sign_fix;
    return j.dump();
}

}  // namespace flagkit
