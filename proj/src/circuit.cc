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

#include "flagkit/circuit.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "flagkit/error.h"

namespace flagkit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleTol = 1e-9;

bool is_multiple_of(double angle, double step) {
    double k = angle / step;
    return std::abs(k - std::round(k)) < kAngleTol;
}

std::string format_angle(double angle) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", angle);
    return buf;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) {
            k++;
        }
        size_t start = k;
        while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) {
            k++;
        }
        if (k > start) {
            out.push_back(line.substr(start, k - start));
        }
    }
    return out;
}

template <typename T>
std::optional<T> parse_number(std::string_view tok) {
    T value{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        return std::nullopt;
    }
    return value;
}

}  // namespace

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "h";
        case GateKind::S:
            return "s";
        case GateKind::Sdg:
            return "sdg";
        case GateKind::X:
            return "x";
        case GateKind::Y:
            return "y";
        case GateKind::Z:
            return "z";
        case GateKind::T:
            return "t";
        case GateKind::Tdg:
            return "tdg";
        case GateKind::CNOT:
            return "cnot";
        case GateKind::CZ:
            return "cz";
        case GateKind::RX:
            return "rx";
        case GateKind::RY:
            return "ry";
        case GateKind::RZ:
            return "rz";
        case GateKind::XX:
            return "xx";
    }
    return "?";
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
    static constexpr GateKind all[] = {GateKind::H,    GateKind::S,  GateKind::Sdg, GateKind::X,  GateKind::Y,
                                       GateKind::Z,    GateKind::T,  GateKind::Tdg, GateKind::CNOT, GateKind::CZ,
                                       GateKind::RX,   GateKind::RY, GateKind::RZ,  GateKind::XX};
    for (GateKind k : all) {
        if (gate_name(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

size_t gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::CNOT:
        case GateKind::CZ:
        case GateKind::XX:
            return 2;
        default:
            return 1;
    }
}

bool gate_has_angle(GateKind kind) {
    return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ || kind == GateKind::XX;
}

Gate::Gate(GateKind kind, std::span<const size_t> qubits, double angle) : kind_(kind) {
    if (qubits.size() != gate_arity(kind)) {
        throw ArgumentError(std::string(gate_name(kind)) + " takes " + std::to_string(gate_arity(kind)) +
                            " qubit(s), got " + std::to_string(qubits.size()));
    }
    if (qubits.size() == 2 && qubits[0] == qubits[1]) {
        throw ArgumentError(std::string(gate_name(kind)) + " has a repeated qubit " + std::to_string(qubits[0]));
    }
    if (!std::isfinite(angle)) {
        throw ArgumentError("non-finite rotation angle");
    }
    arity_ = static_cast<uint8_t>(qubits.size());
    std::copy(qubits.begin(), qubits.end(), qubits_.begin());
    angle_ = gate_has_angle(kind) ? angle : 0.0;
}

uint64_t Gate::qubit_mask() const noexcept {
    uint64_t m = 0;
    for (size_t q : qubits()) {
        m |= uint64_t{1} << q;
    }
    return m;
}

size_t Gate::max_qubit() const noexcept {
    return arity_ == 2 ? std::max(qubits_[0], qubits_[1]) : qubits_[0];
}

bool Gate::is_clifford() const {
    switch (kind_) {
        case GateKind::T:
        case GateKind::Tdg:
            return false;
        case GateKind::RX:
        case GateKind::RY:
        case GateKind::RZ:
            return is_multiple_of(angle_, kPi / 2);
        case GateKind::XX:
            return is_multiple_of(angle_, kPi / 4);
        default:
            return true;
    }
}

bool Gate::is_native() const noexcept {
    return gate_has_angle(kind_);
}

std::optional<PauliString> Gate::axis(size_t width) const {
    switch (kind_) {
        case GateKind::RX:
        case GateKind::X:
            return PauliString::single(width, qubits_[0], 'X');
        case GateKind::RY:
        case GateKind::Y:
            return PauliString::single(width, qubits_[0], 'Y');
        case GateKind::RZ:
        case GateKind::Z:
        case GateKind::S:
        case GateKind::Sdg:
        case GateKind::T:
        case GateKind::Tdg:
            return PauliString::single(width, qubits_[0], 'Z');
        case GateKind::XX: {
            PauliString p(width);
            p.set_letter(qubits_[0], 'X');
            p.set_letter(qubits_[1], 'X');
            return p;
        }
        default:
            return std::nullopt;
    }
}

Gate Gate::inverse() const {
    switch (kind_) {
        case GateKind::S:
            return Gate(GateKind::Sdg, qubits());
        case GateKind::Sdg:
            return Gate(GateKind::S, qubits());
        case GateKind::T:
            return Gate(GateKind::Tdg, qubits());
        case GateKind::Tdg:
            return Gate(GateKind::T, qubits());
        case GateKind::RX:
        case GateKind::RY:
        case GateKind::RZ:
        case GateKind::XX:
            return Gate(kind_, qubits(), -angle_);
        default:
            return *this;
    }
}

CMatrix Gate::matrix() const {
    const Complex i{0, 1};
    const double r = 1 / std::sqrt(2.0);
    double c = std::cos(angle_ / 2), s = std::sin(angle_ / 2);
    switch (kind_) {
        case GateKind::H:
            return CMatrix(2, 2, {r, r, r, -r});
        case GateKind::S:
            return CMatrix(2, 2, {1, 0, 0, i});
        case GateKind::Sdg:
            return CMatrix(2, 2, {1, 0, 0, -i});
        case GateKind::X:
            return CMatrix(2, 2, {0, 1, 1, 0});
        case GateKind::Y:
            return CMatrix(2, 2, {0, -i, i, 0});
        case GateKind::Z:
            return CMatrix(2, 2, {1, 0, 0, -1});
        case GateKind::T:
            return CMatrix(2, 2, {1, 0, 0, std::polar(1.0, kPi / 4)});
        case GateKind::Tdg:
            return CMatrix(2, 2, {1, 0, 0, std::polar(1.0, -kPi / 4)});
        case GateKind::RX:
            return CMatrix(2, 2, {c, -i * s, -i * s, c});
        case GateKind::RY:
            return CMatrix(2, 2, {c, -s, s, c});
        case GateKind::RZ:
            return CMatrix(2, 2, {std::polar(1.0, -angle_ / 2), 0, 0, std::polar(1.0, angle_ / 2)});
        case GateKind::CNOT: {
            CMatrix m(4, 4);
            for (size_t ctl = 0; ctl < 2; ctl++) {
                for (size_t tgt = 0; tgt < 2; tgt++) {
                    m(ctl + 2 * (tgt ^ ctl), ctl + 2 * tgt) = 1;
                }
            }
            return m;
        }
        case GateKind::CZ:
            return CMatrix(4, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1});
        case GateKind::XX: {
            CMatrix m(4, 4);
            for (size_t l = 0; l < 4; l++) {
                m(l, l) = std::cos(angle_);
                m(l ^ 3, l) = -i * std::sin(angle_);
            }
            return m;
        }
    }
    throw ArgumentError("unknown gate kind");
}

std::string Gate::str() const {
    std::string out(gate_name(kind_));
    for (size_t q : qubits()) {
        out += ' ';
        out += std::to_string(q);
    }
    if (gate_has_angle(kind_)) {
        out += ' ';
        out += format_angle(angle_);
    }
    return out;
}

Circuit::Circuit(size_t width) : width_(width), frontier_(width, 0) {
}

void Circuit::append(const Gate &gate) {
    if (gate.max_qubit() >= width_) {
        throw ArgumentError("gate '" + gate.str() + "' outside circuit width " + std::to_string(width_));
    }
    size_t slot = 0;
    for (size_t q : gate.qubits()) {
        slot = std::max(slot, frontier_[q]);
    }
    if (slot == moments_.size()) {
        moments_.emplace_back();
    }
    moments_[slot].push_back(gate);
    for (size_t q : gate.qubits()) {
        frontier_[q] = slot + 1;
    }
}

void Circuit::append(const Circuit &other) {
    for (const Moment &m : other.moments()) {
        for (const Gate &g : m) {
            append(g);
        }
    }
}

size_t Circuit::num_gates() const {
    size_t n = 0;
    for (const Moment &m : moments_) {
        n += m.size();
    }
    return n;
}

size_t Circuit::num_two_qubit_gates() const {
    size_t n = 0;
    for (const Moment &m : moments_) {
        n += std::count_if(m.begin(), m.end(), [](const Gate &g) { return g.arity() == 2; });
    }
    return n;
}

size_t Circuit::num_non_clifford_gates() const {
    size_t n = 0;
    for (const Moment &m : moments_) {
        n += std::count_if(m.begin(), m.end(), [](const Gate &g) { return !g.is_clifford(); });
    }
    return n;
}

bool Circuit::is_native() const {
    for (const Moment &m : moments_) {
        for (const Gate &g : m) {
            if (!g.is_native()) {
                return false;
            }
        }
    }
    return true;
}

Circuit Circuit::slice(MomentRange range) const {
    if (range.begin > range.end || range.end > moments_.size()) {
        throw ArgumentError("moment range [" + std::to_string(range.begin) + ", " + std::to_string(range.end) +
                            ") outside circuit of " + std::to_string(moments_.size()) + " moments");
    }
    Circuit out(width_);
    out.moments_.assign(moments_.begin() + range.begin, moments_.begin() + range.end);
    for (size_t m = 0; m < out.moments_.size(); m++) {
        for (const Gate &g : out.moments_[m]) {
            for (size_t q : g.qubits()) {
                out.frontier_[q] = m + 1;
            }
        }
    }
    return out;
}

Circuit Circuit::widened(size_t width) const {
    if (width < width_) {
        throw ArgumentError("cannot shrink a circuit");
    }
    Circuit out = *this;
    out.width_ = width;
    out.frontier_.resize(width, 0);
    return out;
}

Circuit Circuit::parse(std::string_view text) {
    std::optional<Circuit> circuit;
    size_t line_no = 0;
    while (!text.empty()) {
        size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        line_no++;
        if (size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto tokens = split_ws(line);
        if (tokens.empty()) {
            continue;
        }
        if (!circuit) {
            if (tokens[0] != "qubits" || tokens.size() != 2) {
                throw ParseError(line_no, "expected header 'qubits <N>'");
            }
            auto n = parse_number<size_t>(tokens[1]);
            if (!n || *n == 0 || *n > kMaxPauliQubits) {
                throw ParseError(line_no, "bad qubit count '" + std::string(tokens[1]) + "'");
            }
            circuit.emplace(*n);
            continue;
        }
        auto kind = gate_kind_from_name(tokens[0]);
        if (!kind) {
            throw ParseError(line_no, "unknown gate '" + std::string(tokens[0]) + "'");
        }
        size_t arity = gate_arity(*kind);
        size_t expected = 1 + arity + (gate_has_angle(*kind) ? 1 : 0);
        if (tokens.size() != expected) {
            throw ParseError(line_no, "'" + std::string(tokens[0]) + "' expects " + std::to_string(expected - 1) +
                                          " operand(s)");
        }
        std::array<size_t, 2> qs{};
        for (size_t k = 0; k < arity; k++) {
            auto q = parse_number<size_t>(tokens[1 + k]);
            if (!q) {
                throw ParseError(line_no, "bad qubit index '" + std::string(tokens[1 + k]) + "'");
            }
            if (*q >= circuit->width()) {
                throw ParseError(line_no, "qubit " + std::to_string(*q) + " out of range for width " +
                                              std::to_string(circuit->width()));
            }
            qs[k] = *q;
        }
        if (arity == 2 && qs[0] == qs[1]) {
            throw ParseError(line_no, "duplicate qubit " + std::to_string(qs[0]));
        }
        double angle = 0;
        if (gate_has_angle(*kind)) {
            auto a = parse_number<double>(tokens.back());
            if (!a || !std::isfinite(*a)) {
                throw ParseError(line_no, "malformed angle '" + std::string(tokens.back()) + "'");
            }
            angle = *a;
        }
        circuit->append(Gate(*kind, std::span<const size_t>(qs.data(), arity), angle));
    }
    if (!circuit) {
        throw ParseError(line_no, "missing 'qubits <N>' header");
    }
    return *std::move(circuit);
}

std::string Circuit::serialize() const {
    std::string out = "qubits " + std::to_string(width_) + "\n";
    for (const Moment &m : moments_) {
        for (const Gate &g : m) {
            out += g.str();
            out += '\n';
        }
    }
    return out;
}

CMatrix to_unitary(const Circuit &c) {
    if (c.width() > kMaxDenseWidth) {
        throw ResourceError("to_unitary: width " + std::to_string(c.width()) + " exceeds guard of " +
                            std::to_string(kMaxDenseWidth));
    }
    size_t dim = size_t{1} << c.width();
    // Evolve each basis column; columns are contiguous in the transposed buffer.
    std::vector<Complex> cols(dim * dim);
    for (size_t k = 0; k < dim; k++) {
        cols[k * dim + k] = 1;
    }
    for (const Moment &m : c.moments()) {
        for (const Gate &g : m) {
            CMatrix local = g.matrix();
            for (size_t k = 0; k < dim; k++) {
                apply_local(std::span<Complex>(cols.data() + k * dim, dim), local, g.qubits());
            }
        }
    }
    CMatrix u(dim, dim);
    for (size_t k = 0; k < dim; k++) {
        for (size_t r = 0; r < dim; r++) {
            u(r, k) = cols[k * dim + r];
        }
    }
    return u;
}

Circuit compile_to_native(const Circuit &c) {
    Circuit out(c.width());
    auto emit = [&](GateKind k, std::initializer_list<size_t> qs, double angle) { out.append(Gate(k, qs, angle)); };
    auto hadamard = [&](size_t q) {
        emit(GateKind::RZ, {q}, kPi);
        emit(GateKind::RY, {q}, kPi / 2);
    };
    auto cnot = [&](size_t ctl, size_t tgt) {
        emit(GateKind::RY, {ctl}, kPi / 2);
        emit(GateKind::XX, {ctl, tgt}, kPi / 4);
        emit(GateKind::RX, {ctl}, -kPi / 2);
        emit(GateKind::RX, {tgt}, -kPi / 2);
        emit(GateKind::RY, {ctl}, -kPi / 2);
    };
    for (const Moment &m : c.moments()) {
        for (const Gate &g : m) {
            size_t q = g.qubits()[0];
            switch (g.kind()) {
                case GateKind::H:
                    hadamard(q);
                    break;
                case GateKind::S:
                    emit(GateKind::RZ, {q}, kPi / 2);
                    break;
                case GateKind::Sdg:
                    emit(GateKind::RZ, {q}, -kPi / 2);
                    break;
                case GateKind::T:
                    emit(GateKind::RZ, {q}, kPi / 4);
                    break;
                case GateKind::Tdg:
                    emit(GateKind::RZ, {q}, -kPi / 4);
                    break;
                case GateKind::X:
                    emit(GateKind::RX, {q}, kPi);
                    break;
                case GateKind::Y:
                    emit(GateKind::RY, {q}, kPi);
                    break;
                case GateKind::Z:
                    emit(GateKind::RZ, {q}, kPi);
                    break;
                case GateKind::CNOT:
                    cnot(g.qubits()[0], g.qubits()[1]);
                    break;
                case GateKind::CZ:
                    hadamard(g.qubits()[1]);
                    cnot(g.qubits()[0], g.qubits()[1]);
                    hadamard(g.qubits()[1]);
                    break;
                default:
                    out.append(g);
            }
        }
    }
    return out;
}

Circuit zzzzz_rotation_circuit(size_t n_qubits, double theta) {
    if (n_qubits < 2) {
        throw ArgumentError("zzzzz_rotation_circuit needs at least 2 qubits");
    }
    Circuit c(n_qubits);
    for (size_t k = 0; k + 1 < n_qubits; k++) {
        c.append(Gate(GateKind::CNOT, {k, k + 1}));
    }
    c.append(Gate(GateKind::RZ, {n_qubits - 1}, theta));
    for (size_t k = n_qubits - 1; k-- > 0;) {
        c.append(Gate(GateKind::CNOT, {k, k + 1}));
    }
    return c;
}

uint64_t fnv1a64(std::string_view text) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

Circuit magic_distillation_circuit() {
    return Circuit::parse(magic_distillation_source());
}

uint64_t magic_distillation_checksum() {
    return fnv1a64(magic_distillation_source());
}

}  // namespace flagkit
