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

#ifndef FLAGKIT_HARNESS_H
#define FLAGKIT_HARNESS_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flagkit/circuit.h"
#include "flagkit/densesim.h"
#include "flagkit/fault_analysis.h"
#include "flagkit/flag_gadget.h"

namespace flagkit {

/// A benchmark or user circuit with the defaults experiments use for it.
struct LoadedCircuit {
    std::string name;
    Circuit circuit;
    MomentRange section;     // default flagged section
    std::string input_spec;  // product-state spec for the data register
};

/// "magic", "zzzzz", "zzzzz:<n>:<theta>" or a path to a circuit file.
/// Throws ArgumentError, IoError or ParseError.
LoadedCircuit load_circuit(const std::string &name_or_path);

/// Default sweep grid for a noise kind.
std::vector<double> default_grid(NoiseKind kind);

struct ExperimentConfig {
    std::string circuit = "magic";
    NoiseKind model = NoiseKind::Depolarizing;
    double crosstalk_ratio = 0.1;
    std::vector<double> parameter_grid;  // empty: default_grid(model)
    size_t n_flags = 500;
    size_t n_pairs = 100;
    uint64_t seed = 0;
    std::optional<MomentRange> section;
    std::optional<std::string> input;  // "zero", "plus" or a product-state spec
    bool exact_scoring = false;
    std::optional<size_t> max_pair_overlap;  // default floor(width/2)
    size_t workers = 0;                      // 0: FLAGKIT_WORKERS or hardware concurrency

    /// Throws ArgumentError for an invalid configuration.
    void validate() const;
};

/// One row per (flag or pair, parameter point); baseline rows use flag id "none".
struct ExperimentRecord {
    std::string flag_id;
    std::string entangle;
    std::string disentangle;
    std::optional<double> q;
    std::optional<double> n_detected;
    double parameter = 0;
    double fidelity_raw = 1;
    double fidelity_postselected = 1;
    double survival_probability = 1;
};

struct ExperimentTable {
    std::vector<ExperimentRecord> records;
    std::string summary_json;

    std::string to_csv() const;
};

/// Draws `count` compatible non-identity Paulis over `section`, re-drawing incompatible
/// ones; gives up after 100 * count draws with CapExhaustedError.
std::vector<PauliString> draw_compatible_flags(const Circuit &c, MomentRange section, size_t count, uint64_t seed);

/// Random compatible flags ranked by q.
RankResult run_rank(const ExperimentConfig &cfg);

/// Random single flags, ranked and simulated at every grid point.
ExperimentTable run_single_flag_experiment(const ExperimentConfig &cfg);

/// Random nested pairs, simulated with joint post-selection.
ExperimentTable run_pair_experiment(const ExperimentConfig &cfg);

/// JSON report: propagation trace, fault locations, detected faults and the q breakdown.
std::string explain_flag(const Circuit &c, const PauliString &flag, const NoiseModel &m,
                         std::optional<MomentRange> section = {});

size_t resolve_workers(size_t requested);

}  // namespace flagkit

#endif
