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

#include "flagkit/fault_analysis.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "flagkit/error.h"

namespace flagkit {

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<PauliString> depolarizing_faults(size_t width, size_t q) {
    return {PauliString::single(width, q, 'X'), PauliString::single(width, q, 'Y'),
            PauliString::single(width, q, 'Z')};
}

bool flips_any(const PauliString &out, const std::vector<size_t> &ancillas) {
    for (size_t a : ancillas) {
        if ((out.zs() >> a) & 1) {
            return true;
        }
    }
    return false;
}

}  // namespace

std::string_view noise_kind_name(NoiseKind kind) {
    switch (kind) {
        case NoiseKind::Depolarizing:
            return "depolarizing";
        case NoiseKind::Crosstalk:
            return "crosstalk";
        case NoiseKind::Overrotation:
            return "overrotation";
    }
    return "?";
}

std::optional<NoiseKind> noise_kind_from_name(std::string_view name) {
    for (NoiseKind k : {NoiseKind::Depolarizing, NoiseKind::Crosstalk, NoiseKind::Overrotation}) {
        if (noise_kind_name(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

NoiseModel NoiseModel::depolarizing(double p) {
    NoiseModel m;
    m.kind = NoiseKind::Depolarizing;
    m.p = p;
    m.validate();
    return m;
}

NoiseModel NoiseModel::crosstalk(double p, double ratio) {
    NoiseModel m;
    m.kind = NoiseKind::Crosstalk;
    m.p = p;
    m.crosstalk_ratio = ratio;
    m.validate();
    return m;
}

NoiseModel NoiseModel::overrotation(double epsilon) {
    NoiseModel m;
    m.kind = NoiseKind::Overrotation;
    m.epsilon = epsilon;
    m.validate();
    return m;
}

double NoiseModel::parameter() const noexcept {
    return kind == NoiseKind::Overrotation ? epsilon : p;
}

NoiseModel NoiseModel::with_parameter(double value) const {
    NoiseModel m = *this;
    (kind == NoiseKind::Overrotation ? m.epsilon : m.p) = value;
    m.validate();
    return m;
}

void NoiseModel::validate() const {
    if (!(p >= 0 && p <= 1)) {
        throw ArgumentError("error probability " + fmt_double(p) + " outside [0, 1]");
    }
    if (!(crosstalk_ratio >= 0 && crosstalk_ratio <= 1)) {
        throw ArgumentError("crosstalk ratio " + fmt_double(crosstalk_ratio) + " outside [0, 1]");
    }
    if (!std::isfinite(epsilon)) {
        throw ArgumentError("overrotation angle must be finite");
    }
}

std::string NoiseModel::str() const {
    std::string out(noise_kind_name(kind));
    if (kind == NoiseKind::Overrotation) {
        return out + "(epsilon=" + fmt_double(epsilon) + ")";
    }
    out += "(p=" + fmt_double(p);
    if (kind == NoiseKind::Crosstalk) {
        out += ", ratio=" + fmt_double(crosstalk_ratio);
    }
    return out + ")";
}

std::vector<size_t> chain_neighbors(const Gate &g, size_t width) {
    uint64_t own = g.qubit_mask();
    std::vector<size_t> out;
    for (size_t q : g.qubits()) {
        for (size_t n : {q - 1, q + 1}) {
            if (q == 0 && n == q - 1) {
                continue;
            }
            if (n < width && !((own >> n) & 1) && std::find(out.begin(), out.end(), n) == out.end()) {
                out.push_back(n);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FaultLocation> fault_locations(const Circuit &c, const NoiseModel &m, std::optional<MomentRange> window) {
    m.validate();
    MomentRange r = window.value_or(c.full_range());
    if (r.begin > r.end || r.end > c.num_moments()) {
        throw ArgumentError("fault window outside circuit");
    }
    std::vector<FaultLocation> out;
    for (size_t mi = r.begin; mi < r.end; mi++) {
        const Moment &moment = c.moments()[mi];
        for (size_t gi = 0; gi < moment.size(); gi++) {
            const Gate &g = moment[gi];
            if (m.kind == NoiseKind::Overrotation) {
                if (!g.is_native()) {
                    throw ArgumentError("overrotation model needs a native-compiled circuit, found '" + g.str() + "'");
                }
                out.push_back(FaultLocation{mi, gi, {g.qubits().begin(), g.qubits().end()}, {*g.axis(c.width())}, 1,
                                            false});
                continue;
            }
            if (g.arity() != 2) {
                continue;
            }
            for (size_t q : g.qubits()) {
                out.push_back(FaultLocation{mi, gi, {q}, depolarizing_faults(c.width(), q), 1, false});
            }
            if (m.kind == NoiseKind::Crosstalk) {
                for (size_t n : chain_neighbors(g, c.width())) {
                    out.push_back(
                        FaultLocation{mi, gi, {n}, depolarizing_faults(c.width(), n), m.crosstalk_ratio, true});
                }
            }
        }
    }
    return out;
}

double ErrorSet::total_weight() const {
    double w = 0;
    for (const OutputError &e : errors) {
        w += e.weight;
    }
    for (const OutputError &e : non_propagable) {
        w += e.weight;
    }
    return w;
}

ErrorSet output_error_set(const Circuit &c, const NoiseModel &m, std::optional<MomentRange> window) {
    ErrorSet set;
    set.width = c.width();
    set.window = window.value_or(c.full_range());
    set.locations = fault_locations(c, m, set.window);
    for (size_t li = 0; li < set.locations.size(); li++) {
        const FaultLocation &loc = set.locations[li];
        for (const PauliString &f : loc.faults) {
            // Faults sit after their gate's moment.
            CompatibilityReport rep = check_compatibility(c, f, loc.moment + 1, set.window.end);
            if (!rep) {
                set.non_propagable.push_back(OutputError{li, f, rep.violation->pauli, loc.weight});
                continue;
            }
            PauliString out = propagate(c, f, loc.moment + 1, set.window.end).pauli;
            set.errors.push_back(OutputError{li, f, out, loc.weight});
        }
    }
    return set;
}

ErrorSet section_error_set(const Circuit &c, MomentRange section, const NoiseModel &m) {
    if (m.kind == NoiseKind::Overrotation) {
        Circuit native = compile_to_native(c.slice(section));
        return output_error_set(native, m);
    }
    return output_error_set(c, m, section);
}

ScoringCoefficients ScoringCoefficients::for_model(const NoiseModel &m) {
    switch (m.kind) {
        case NoiseKind::Depolarizing:
            return {6, 6};
        case NoiseKind::Crosstalk:
            return {6 * (1 + m.crosstalk_ratio), 6 * (1 + m.crosstalk_ratio)};
        case NoiseKind::Overrotation:
            return {1, 1};
    }
    return {};
}

FlagScore quality(const FlagGadget &flag, const ErrorSet &errors, const NoiseModel &m,
                  std::optional<ScoringCoefficients> coefficients) {
    ScoringCoefficients coef = coefficients.value_or(ScoringCoefficients::for_model(m));
    PauliString check = flag.disentangle.widened(std::max(errors.width, flag.disentangle.num_qubits()));
    FlagScore s;
    s.flag = flag;
    for (const OutputError &e : errors.errors) {
        PauliString out = e.output.widened(check.num_qubits());
        if (!commutes(out, check)) {
            s.n_detected += e.weight;
        }
    }
    s.penalty_entangle = coef.entangle * static_cast<double>(weight(flag.entangle));
    s.penalty_disentangle = coef.disentangle * static_cast<double>(weight(flag.disentangle));
    s.q = s.n_detected - s.penalty_entangle - s.penalty_disentangle;
    double total = errors.total_weight();
    s.detected_fraction = total > 0 ? s.n_detected / total : 0;
    return s;
}

ExactScore quality_exact(const Circuit &c, const NestedFlagSet &flags, const NoiseModel &m) {
    bool native = m.kind == NoiseKind::Overrotation;
    Circuit raw = native ? compile_to_native(c) : c;
    Circuit inst = instrument(c, flags);
    if (native) {
        inst = compile_to_native(inst);
    }
    std::vector<size_t> ancillas = flags.ancillas();
    uint64_t data_mask = c.width() >= 64 ? ~uint64_t{0} : (uint64_t{1} << c.width()) - 1;

    ExactScore s;
    s.raw_total = output_error_set(raw, m).total_weight();
    ErrorSet set = output_error_set(inst, m);
    s.num_faults = set.num_faults();
    for (const OutputError &e : set.errors) {
        if (flips_any(e.output, ancillas)) {
            s.n_detected += e.weight;
        } else if ((e.output.support() & data_mask) != 0) {
            s.undetected_harmful += e.weight;
        }
    }
    for (const OutputError &e : set.non_propagable) {
        s.undetected_harmful += e.weight;
    }
    s.q = s.raw_total - s.undetected_harmful;
    return s;
}

bool ranks_before(const FlagScore &a, const FlagScore &b) {
    if (a.q != b.q) {
        return a.q > b.q;
    }
    size_t wa = a.flag.two_qubit_gate_count(), wb = b.flag.two_qubit_gate_count();
    if (wa != wb) {
        return wa < wb;
    }
    std::string ea = a.flag.entangle.str(), eb = b.flag.entangle.str();
    if (ea != eb) {
        return ea < eb;
    }
    return a.flag.signed_disentangle().str() < b.flag.signed_disentangle().str();
}

RankResult rank_flags(const Circuit &c, const std::vector<PauliString> &candidates, std::optional<MomentRange> section,
                      const NoiseModel &m, const RankOptions &options) {
    MomentRange r = section.value_or(c.full_range());
    RankResult result;
    std::optional<ErrorSet> errors;
    if (!options.exact) {
        errors = section_error_set(c, r, m);
    }
    for (const PauliString &p : candidates) {
        if (p.is_identity()) {
            result.rejected.emplace_back(p, "identity flag");
            continue;
        }
        CompatibilityReport compat = check_compatibility(c, p, r.begin, r.end);
        if (!compat) {
            result.rejected.emplace_back(p, compat.violation->describe());
            continue;
        }
        FlagGadget g = synthesize(c, p, r);
        if (options.exact) {
            ExactScore e = quality_exact(c, NestedFlagSet({g}), m);
            FlagScore s;
            s.flag = g;
            s.n_detected = e.n_detected;
            s.q = e.q;
            s.detected_fraction = e.num_faults ? e.n_detected / static_cast<double>(e.num_faults) : 0;
            result.ranked.push_back(s);
        } else {
            result.ranked.push_back(quality(g, *errors, m, options.coefficients));
        }
    }
    std::stable_sort(result.ranked.begin(), result.ranked.end(), ranks_before);
    return result;
}

std::string rank_to_csv(const std::vector<FlagScore> &scores) {
    std::string out = "flag_entangle,flag_disentangle,weight_P,weight_Pprime,n_detected,q\n";
    for (const FlagScore &s : scores) {
        out += s.flag.entangle.str() + "," + s.flag.signed_disentangle().str() + "," +
               std::to_string(weight(s.flag.entangle)) + "," + std::to_string(weight(s.flag.disentangle)) + "," +
               fmt_double(s.n_detected) + "," + fmt_double(s.q) + "\n";
    }
    return out;
}

}  // namespace flagkit
