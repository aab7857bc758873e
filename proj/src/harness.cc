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

#include "flagkit/harness.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <thread>

#include "flagkit/error.h"
#include "flagkit/propagation.h"
#include "json.hpp"
#include "parallel.h"

namespace flagkit {

namespace {

using nlohmann::ordered_json;

constexpr uint64_t kPairStream = 0x70616972735f7631ULL;

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string flag_id(char prefix, size_t k) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%c%03zu", prefix, k);
    return buf;
}

std::string resolve_input_spec(const ExperimentConfig &cfg, const LoadedCircuit &lc) {
    if (!cfg.input) {
        return lc.input_spec;
    }
    size_t w = lc.circuit.width();
    if (*cfg.input == "zero") {
        return std::string(w, '0');
    }
    if (*cfg.input == "plus") {
        return std::string(w, '+');
    }
    if (cfg.input->size() != w) {
        throw ArgumentError("input state spec '" + *cfg.input + "' does not match circuit width " + std::to_string(w));
    }
    return *cfg.input;
}

struct Prepared {
    LoadedCircuit loaded;
    MomentRange section;
    StateVector input;
    StateVector reference;
    std::vector<double> grid;
    NoiseModel base_model;
    size_t workers = 1;
};

Prepared prepare(const ExperimentConfig &cfg) {
    cfg.validate();
    Prepared p;
    p.loaded = load_circuit(cfg.circuit);
    const Circuit &c = p.loaded.circuit;
    p.section = cfg.section.value_or(p.loaded.section);
    if (p.section.begin > p.section.end || p.section.end > c.num_moments()) {
        throw ArgumentError("section " + std::to_string(p.section.begin) + ":" + std::to_string(p.section.end) +
                            " outside circuit of " + std::to_string(c.num_moments()) + " moments");
    }
    p.input = StateVector::product(resolve_input_spec(cfg, p.loaded));
    p.reference = ideal_output(c, p.input);
    p.grid = cfg.parameter_grid.empty() ? default_grid(cfg.model) : cfg.parameter_grid;
    p.base_model.kind = cfg.model;
    p.base_model.crosstalk_ratio = cfg.crosstalk_ratio;
    for (double v : p.grid) {
        p.base_model.with_parameter(v);  // validates
    }
    p.workers = resolve_workers(cfg.workers);
    return p;
}

std::vector<double> raw_fidelities(const Prepared &p) {
    std::vector<double> raw(p.grid.size());
    internal::parallel_for(p.grid.size(), p.workers, [&](size_t k) {
        raw[k] = raw_fidelity(p.loaded.circuit, p.base_model.with_parameter(p.grid[k]), p.input, p.reference).value;
    });
    return raw;
}

ordered_json config_json(const ExperimentConfig &cfg, const Prepared &p) {
    ordered_json j;
    j["circuit"] = cfg.circuit;
    j["model"] = std::string(noise_kind_name(cfg.model));
    if (cfg.model == NoiseKind::Crosstalk) {
        j["crosstalk_ratio"] = cfg.crosstalk_ratio;
    }
    j["parameter_grid"] = p.grid;
    j["n_flags"] = cfg.n_flags;
    j["n_pairs"] = cfg.n_pairs;
    j["seed"] = cfg.seed;
    j["section"] = {p.section.begin, p.section.end};
    j["input"] = resolve_input_spec(cfg, p.loaded);
    j["exact_scoring"] = cfg.exact_scoring;
    return j;
}

ordered_json circuit_json(const LoadedCircuit &lc) {
    ordered_json j;
    j["name"] = lc.name;
    j["width"] = lc.circuit.width();
    j["moments"] = lc.circuit.num_moments();
    j["gates"] = lc.circuit.num_gates();
    j["two_qubit_gates"] = lc.circuit.num_two_qubit_gates();
    j["non_clifford_gates"] = lc.circuit.num_non_clifford_gates();
    j["density"] = static_cast<double>(lc.circuit.num_gates()) / static_cast<double>(lc.circuit.width());
    return j;
}

// Per-parameter summary over flag rows grouped by id.
ordered_json sweep_summary(const std::vector<ExperimentRecord> &records, const std::vector<double> &grid,
                           const std::vector<double> &raw) {
    ordered_json points = ordered_json::array();
    for (size_t k = 0; k < grid.size(); k++) {
        const ExperimentRecord *best = nullptr;
        size_t improving = 0, total = 0;
        double min_ps = 1, max_ps = 0;
        for (const ExperimentRecord &r : records) {
            if (r.flag_id == "none" || r.parameter != grid[k]) {
                continue;
            }
            total++;
            improving += r.fidelity_postselected > r.fidelity_raw;
            min_ps = std::min(min_ps, r.fidelity_postselected);
            max_ps = std::max(max_ps, r.fidelity_postselected);
            if (!best || r.fidelity_postselected > best->fidelity_postselected) {
                best = &r;
            }
        }
        ordered_json j;
        j["parameter"] = grid[k];
        j["fidelity_raw"] = raw[k];
        j["fraction_improving"] = total ? static_cast<double>(improving) / static_cast<double>(total) : 0.0;
        j["postselected_spread"] = total ? max_ps - min_ps : 0.0;
        if (best) {
            j["best"] = {{"flag_id", best->flag_id},
                         {"entangle", best->entangle},
                         {"disentangle", best->disentangle},
                         {"fidelity_postselected", best->fidelity_postselected},
                         {"survival_probability", best->survival_probability}};
        }
        points.push_back(j);
    }
    return points;
}

std::optional<size_t> smallest_nonzero(const std::vector<double> &grid) {
    std::optional<size_t> out;
    for (size_t k = 0; k < grid.size(); k++) {
        if (grid[k] != 0 && (!out || std::abs(grid[k]) < std::abs(grid[*out]))) {
            out = k;
        }
    }
    return out;
}

}  // namespace

LoadedCircuit load_circuit(const std::string &name_or_path) {
    LoadedCircuit lc;
    lc.name = name_or_path;
    if (name_or_path == "magic") {
        lc.circuit = magic_distillation_circuit();
        lc.section = {1, lc.circuit.num_moments()};  // the Clifford block after the T layer
        lc.input_spec = std::string(lc.circuit.width(), '+');
        return lc;
    }
    if (name_or_path.rfind("zzzzz", 0) == 0) {
        size_t n = 5;
        double theta = std::numbers::pi / 4;
        if (name_or_path.size() > 5) {
            std::string rest = name_or_path.substr(5);
            size_t sep = rest.find(':', 1);
            if (rest[0] != ':' || sep == std::string::npos) {
                throw ArgumentError("expected zzzzz:<n>:<theta>, got '" + name_or_path + "'");
            }
            try {
                n = std::stoul(rest.substr(1, sep - 1));
                theta = std::stod(rest.substr(sep + 1));
            } catch (const std::exception &) {
                throw ArgumentError("expected zzzzz:<n>:<theta>, got '" + name_or_path + "'");
            }
        }
        lc.circuit = zzzzz_rotation_circuit(n, theta);
        lc.section = lc.circuit.full_range();
        lc.input_spec = std::string(n, '+');
        return lc;
    }
    std::ifstream in(name_or_path);
    if (!in) {
        throw IoError("cannot open circuit '" + name_or_path + "' (not a built-in name or readable file)");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    lc.circuit = Circuit::parse(buf.str());
    lc.section = lc.circuit.full_range();
    lc.input_spec = std::string(lc.circuit.width(), '0');
    return lc;
}

std::vector<double> default_grid(NoiseKind kind) {
    if (kind == NoiseKind::Overrotation) {
        return {1e-3, 3e-3, 1e-2, 3e-2, 1e-1};
    }
    return {1e-4, 3e-4, 1e-3, 3e-3, 1e-2};
}

void ExperimentConfig::validate() const {
    if (n_flags < 1) {
        throw ArgumentError("need at least one flag");
    }
    if (n_pairs < 1) {
        throw ArgumentError("need at least one pair");
    }
    NoiseModel m;
    m.kind = model;
    m.crosstalk_ratio = crosstalk_ratio;
    for (double v : parameter_grid) {
        m.with_parameter(v);
    }
}

size_t resolve_workers(size_t requested) {
    if (requested > 0) {
        return requested;
    }
    if (const char *env = std::getenv("FLAGKIT_WORKERS")) {
        size_t v = 0;
        auto [ptr, ec] = std::from_chars(env, env + std::char_traits<char>::length(env), v);
        if (ec == std::errc() && v > 0) {
            return v;
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::string ExperimentTable::to_csv() const {
    std::string out =
        "flag_id,entangle,disentangle,q,n_detected,parameter,fidelity_raw,fidelity_postselected,"
        "survival_probability\n";
    for (const ExperimentRecord &r : records) {
        out += r.flag_id + "," + r.entangle + "," + r.disentangle + "," + (r.q ? fmt_double(*r.q) : "") + "," +
               (r.n_detected ? fmt_double(*r.n_detected) : "") + "," + fmt_double(r.parameter) + "," +
               fmt_double(r.fidelity_raw) + "," + fmt_double(r.fidelity_postselected) + "," +
               fmt_double(r.survival_probability) + "\n";
    }
    return out;
}

std::vector<PauliString> draw_compatible_flags(const Circuit &c, MomentRange section, size_t count, uint64_t seed) {
    std::vector<PauliString> out;
    size_t cap = 100 * count;
    size_t draws = 0;
    std::map<std::string, size_t> blockers;
    while (out.size() < count) {
        if (draws >= cap) {
            std::string stats = "accepted " + std::to_string(out.size()) + " of " + std::to_string(count) + " after " +
                                std::to_string(draws) + " draws; blocking gates:";
            for (const auto &[gate, n] : blockers) {
                stats += " '" + gate + "' x" + std::to_string(n);
            }
            throw CapExhaustedError("flag re-draw cap exhausted: " + stats);
        }
        PauliString p = random_pauli(c.width(), seed, draws++, true);
        CompatibilityReport rep = check_compatibility(c, p, section.begin, section.end);
        if (rep) {
            out.push_back(p);
        } else {
            blockers[rep.violation->gate.str() + "@" + std::to_string(rep.violation->moment)]++;
        }
    }
    return out;
}

RankResult run_rank(const ExperimentConfig &cfg) {
    cfg.validate();
    LoadedCircuit lc = load_circuit(cfg.circuit);
    MomentRange section = cfg.section.value_or(lc.section);
    std::vector<double> grid = cfg.parameter_grid.empty() ? default_grid(cfg.model) : cfg.parameter_grid;
    NoiseModel m;
    m.kind = cfg.model;
    m.crosstalk_ratio = cfg.crosstalk_ratio;
    m = m.with_parameter(grid.front());
    auto candidates = draw_compatible_flags(lc.circuit, section, cfg.n_flags, cfg.seed);
    return rank_flags(lc.circuit, candidates, section, m, RankOptions{cfg.exact_scoring, std::nullopt});
}

ExperimentTable run_single_flag_experiment(const ExperimentConfig &cfg) {
    Prepared p = prepare(cfg);
    const Circuit &c = p.loaded.circuit;
    NoiseModel scoring_model = p.base_model.with_parameter(p.grid.front());
    auto candidates = draw_compatible_flags(c, p.section, cfg.n_flags, cfg.seed);

    size_t n = candidates.size();
    std::vector<FlagGadget> flags(n);
    std::vector<double> q(n), detected(n);
    std::optional<ErrorSet> errors;
    if (!cfg.exact_scoring) {
        errors = section_error_set(c, p.section, scoring_model);
    }
    internal::parallel_for(n, p.workers, [&](size_t k) {
        flags[k] = synthesize(c, candidates[k], p.section);
        if (cfg.exact_scoring) {
            ExactScore e = quality_exact(c, NestedFlagSet({flags[k]}), scoring_model);
            q[k] = e.q;
            detected[k] = e.n_detected;
        } else {
            FlagScore s = quality(flags[k], *errors, scoring_model);
            q[k] = s.q;
            detected[k] = s.n_detected;
        }
    });

    std::vector<double> raw = raw_fidelities(p);
    size_t g = p.grid.size();
    std::vector<SimOutcome> outcomes(n * g);
    internal::parallel_for(n * g, p.workers, [&](size_t t) {
        size_t k = t / g, j = t % g;
        outcomes[t] = simulate_flagged(c, NestedFlagSet({flags[k]}), p.base_model.with_parameter(p.grid[j]), p.input,
                                       p.reference, raw[j]);
    });

    ExperimentTable table;
    for (size_t j = 0; j < g; j++) {
        table.records.push_back(ExperimentRecord{"none", "", "", std::nullopt, std::nullopt, p.grid[j], raw[j], raw[j], 1});
    }
    for (size_t k = 0; k < n; k++) {
        for (size_t j = 0; j < g; j++) {
            const SimOutcome &o = outcomes[k * g + j];
            table.records.push_back(ExperimentRecord{flag_id('f', k), flags[k].entangle.str(),
                                                     flags[k].signed_disentangle().str(), q[k], detected[k],
                                                     p.grid[j], o.fidelity_raw, o.fidelity_postselected,
                                                     o.survival_probability});
        }
    }

    ordered_json summary;
    summary["config"] = config_json(cfg, p);
    summary["circuit"] = circuit_json(p.loaded);
    summary["points"] = sweep_summary(table.records, p.grid, raw);
    std::vector<size_t> by_q(n);
    for (size_t k = 0; k < n; k++) {
        by_q[k] = k;
    }
    std::vector<FlagScore> scores(n);
    for (size_t k = 0; k < n; k++) {
        scores[k].flag = flags[k];
        scores[k].q = q[k];
    }
    std::stable_sort(by_q.begin(), by_q.end(), [&](size_t a, size_t b) { return ranks_before(scores[a], scores[b]); });
    ordered_json top = ordered_json::array();
    for (size_t r = 0; r < std::min<size_t>(3, n); r++) {
        top.push_back({{"flag_id", flag_id('f', by_q[r])}, {"disentangle", flags[by_q[r]].signed_disentangle().str()},
                       {"q", q[by_q[r]]}});
    }
    summary["top_q"] = top;
    if (auto s = smallest_nonzero(p.grid)) {
        summary["best_at_smallest_nonzero"] = summary["points"][*s].value("best", ordered_json());
    }
    table.summary_json = summary.dump(2);
    return table;
}

ExperimentTable run_pair_experiment(const ExperimentConfig &cfg) {
    Prepared p = prepare(cfg);
    const Circuit &c = p.loaded.circuit;
    size_t max_overlap = cfg.max_pair_overlap.value_or(c.width() / 2);
    NoiseModel scoring_model = p.base_model.with_parameter(p.grid.front());

    std::vector<NestedFlagSet> pairs;
    uint64_t stream = cfg.seed ^ kPairStream;
    size_t draws = 0, rejected_overlap = 0, rejected_compat = 0;
    size_t cap = 100 * cfg.n_pairs;
    while (pairs.size() < cfg.n_pairs) {
        if (draws >= cap) {
            throw CapExhaustedError("pair re-draw cap exhausted: accepted " + std::to_string(pairs.size()) + " of " +
                                    std::to_string(cfg.n_pairs) + " after " + std::to_string(draws) +
                                    " attempts; incompatible " + std::to_string(rejected_compat) +
                                    ", overlap too large " + std::to_string(rejected_overlap));
        }
        PauliString a = random_pauli(c.width(), stream, 2 * draws, true);
        PauliString b = random_pauli(c.width(), stream, 2 * draws + 1, true);
        draws++;
        if (!check_compatibility(c, a, p.section.begin, p.section.end) ||
            !check_compatibility(c, b, p.section.begin, p.section.end)) {
            rejected_compat++;
            continue;
        }
        if (support_overlap(a, b) > max_overlap) {
            rejected_overlap++;
            continue;
        }
        NestedFlagSet set({synthesize(c, a, p.section, c.width()), synthesize(c, b, p.section, c.width() + 1)});
        NestingReport rep = validate_nesting(c, set);
        if (!rep) {
            throw ArgumentError("internal: generated pair failed nesting validation: " + rep.detail);
        }
        pairs.push_back(std::move(set));
    }

    size_t n = pairs.size();
    std::vector<ExactScore> scores(n);
    internal::parallel_for(n, p.workers, [&](size_t k) { scores[k] = quality_exact(c, pairs[k], scoring_model); });

    std::vector<double> raw = raw_fidelities(p);
    size_t g = p.grid.size();
    std::vector<SimOutcome> outcomes(n * g);
    internal::parallel_for(n * g, p.workers, [&](size_t t) {
        size_t k = t / g, j = t % g;
        outcomes[t] = simulate_flagged(c, pairs[k], p.base_model.with_parameter(p.grid[j]), p.input, p.reference, raw[j]);
    });

    ExperimentTable table;
    for (size_t j = 0; j < g; j++) {
        table.records.push_back(ExperimentRecord{"none", "", "", std::nullopt, std::nullopt, p.grid[j], raw[j], raw[j], 1});
    }
    for (size_t k = 0; k < n; k++) {
        const auto &gs = pairs[k].gadgets;
        std::string ent = gs[0].entangle.str() + ";" + gs[1].entangle.str();
        std::string dis = gs[0].signed_disentangle().str() + ";" + gs[1].signed_disentangle().str();
        for (size_t j = 0; j < g; j++) {
            const SimOutcome &o = outcomes[k * g + j];
            table.records.push_back(ExperimentRecord{flag_id('p', k), ent, dis, scores[k].q, scores[k].n_detected,
                                                     p.grid[j], o.fidelity_raw, o.fidelity_postselected,
                                                     o.survival_probability});
        }
    }
    ordered_json summary;
    summary["config"] = config_json(cfg, p);
    summary["config"]["max_pair_overlap"] = max_overlap;
    summary["circuit"] = circuit_json(p.loaded);
    summary["draws"] = {{"attempts", draws}, {"incompatible", rejected_compat}, {"overlap_rejected", rejected_overlap}};
    summary["points"] = sweep_summary(table.records, p.grid, raw);
    if (auto s = smallest_nonzero(p.grid)) {
        summary["best_at_smallest_nonzero"] = summary["points"][*s].value("best", ordered_json());
    }
    table.summary_json = summary.dump(2);
    return table;
}

std::string explain_flag(const Circuit &c, const PauliString &flag, const NoiseModel &m,
                         std::optional<MomentRange> section) {
    MomentRange r = section.value_or(c.full_range());
    ordered_json j;
    j["flag"] = flag.str();
    j["section"] = {r.begin, r.end};
    j["model"] = m.str();
    CompatibilityReport compat = check_compatibility(c, flag, r.begin, r.end);
    if (!compat) {
        throw CompatibilityError("flag " + flag.str() + " is incompatible: " + compat.violation->describe());
    }
    PropagationResult trace = propagate(c, flag, r.begin, r.end);
    ordered_json tj = ordered_json::array();
    for (const PauliString &p : trace.layer_trace) {
        tj.push_back(p.str());
    }
    j["trace"] = tj;
    FlagGadget g = synthesize(c, flag, r);
    j["gadget"] = ordered_json::parse(to_json(g));

    ErrorSet errors = section_error_set(c, r, m);
    ordered_json locs = ordered_json::array();
    for (const FaultLocation &loc : errors.locations) {
        ordered_json faults = ordered_json::array();
        for (const PauliString &f : loc.faults) {
            faults.push_back(f.str());
        }
        locs.push_back({{"moment", loc.moment}, {"qubits", loc.qubits}, {"faults", faults}, {"weight", loc.weight}});
    }
    j["fault_locations"] = locs;
    ordered_json det = ordered_json::array();
    for (const OutputError &e : errors.errors) {
        if (!commutes(e.output, g.disentangle.widened(e.output.num_qubits()))) {
            det.push_back({{"moment", errors.locations[e.location].moment},
                           {"fault", e.fault.str()},
                           {"output", e.output.str()},
                           {"weight", e.weight}});
        }
    }
    j["detected"] = det;
    ordered_json np = ordered_json::array();
    for (const OutputError &e : errors.non_propagable) {
        np.push_back({{"moment", errors.locations[e.location].moment}, {"fault", e.fault.str()}});
    }
    j["non_propagable"] = np;
    FlagScore s = quality(g, errors, m);
    ScoringCoefficients coef = ScoringCoefficients::for_model(m);
    j["quality"] = {{"n_detected", s.n_detected},
                    {"total_faults", errors.total_weight()},
                    {"coefficient_P", coef.entangle},
                    {"coefficient_Pprime", coef.disentangle},
                    {"weight_P", weight(g.entangle)},
                    {"weight_Pprime", weight(g.disentangle)},
                    {"penalty_P", s.penalty_entangle},
                    {"penalty_Pprime", s.penalty_disentangle},
                    {"q", s.q}};
    return j.dump(2);
}

}  // namespace flagkit
