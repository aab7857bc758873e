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

#include "flagkit/flagkit.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "flagkit/circuit.h"
#include "flagkit/error.h"
#include "flagkit/fault_analysis.h"
#include "flagkit/harness.h"
#include "flagkit/propagation.h"

struct fk_circuit {
    flagkit::Circuit circuit;
};

struct fk_config {
    flagkit::ExperimentConfig config;
};

namespace {

thread_local std::string last_error;

fk_status status_for(flagkit::ErrorKind kind) {
    using flagkit::ErrorKind;
    switch (kind) {
        case ErrorKind::Dimension:
            return FK_ERR_DIMENSION;
        case ErrorKind::Parse:
            return FK_ERR_PARSE;
        case ErrorKind::Resource:
            return FK_ERR_RESOURCE;
        case ErrorKind::Classification:
            return FK_ERR_CLASSIFICATION;
        case ErrorKind::Compatibility:
            return FK_ERR_COMPATIBILITY;
        case ErrorKind::Argument:
            return FK_ERR_ARGUMENT;
        case ErrorKind::DegeneratePostselection:
            return FK_ERR_DEGENERATE_POSTSELECTION;
        case ErrorKind::CapExhausted:
            return FK_ERR_CAP_EXHAUSTED;
        case ErrorKind::Io:
            return FK_ERR_IO;
    }
    return FK_ERR_INTERNAL;
}

template <typename Fn>
fk_status guarded(Fn &&fn) {
    try {
        fn();
        last_error.clear();
        return FK_OK;
    } catch (const flagkit::Error &e) {
        last_error = e.what();
        return status_for(e.kind());
    } catch (const std::exception &e) {
        last_error = e.what();
        return FK_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return FK_ERR_INTERNAL;
    }
}

void require(const void *p, const char *what) {
    if (p == nullptr) {
        throw flagkit::ArgumentError(std::string(what) + " is NULL");
    }
}

char *dup_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw flagkit::ResourceError("out of memory");
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

flagkit::NoiseModel explain_model(const flagkit::ExperimentConfig &cfg) {
    flagkit::NoiseModel m;
    m.kind = cfg.model;
    m.crosstalk_ratio = cfg.crosstalk_ratio;
    auto grid = cfg.parameter_grid.empty() ? flagkit::default_grid(cfg.model) : cfg.parameter_grid;
    return m.with_parameter(grid.front());
}

}  // namespace

extern "C" {

const char *fk_version(void) {
    return "0.1.0";
}

const char *fk_status_name(fk_status status) {
    switch (status) {
        case FK_OK:
            return "ok";
        case FK_ERR_ARGUMENT:
            return "argument error";
        case FK_ERR_PARSE:
            return "parse error";
        case FK_ERR_DIMENSION:
            return "dimension error";
        case FK_ERR_RESOURCE:
            return "resource error";
        case FK_ERR_CLASSIFICATION:
            return "classification error";
        case FK_ERR_COMPATIBILITY:
            return "compatibility error";
        case FK_ERR_DEGENERATE_POSTSELECTION:
            return "degenerate post-selection";
        case FK_ERR_CAP_EXHAUSTED:
            return "re-draw cap exhausted";
        case FK_ERR_IO:
            return "i/o error";
        case FK_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

const char *fk_last_error(void) {
    return last_error.c_str();
}

void fk_string_free(char *s) {
    std::free(s);
}

fk_status fk_circuit_parse(const char *text, fk_circuit **out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new fk_circuit{flagkit::Circuit::parse(text)};
    });
}

fk_status fk_circuit_load(const char *name_or_path, fk_circuit **out) {
    return guarded([&] {
        require(name_or_path, "name_or_path");
        require(out, "out");
        *out = new fk_circuit{flagkit::load_circuit(name_or_path).circuit};
    });
}

void fk_circuit_free(fk_circuit *c) {
    delete c;
}

fk_status fk_circuit_width(const fk_circuit *c, size_t *out) {
    return guarded([&] {
        require(c, "circuit");
        require(out, "out");
        *out = c->circuit.width();
    });
}

fk_status fk_circuit_num_moments(const fk_circuit *c, size_t *out) {
    return guarded([&] {
        require(c, "circuit");
        require(out, "out");
        *out = c->circuit.num_moments();
    });
}

fk_status fk_circuit_num_gates(const fk_circuit *c, size_t *out) {
    return guarded([&] {
        require(c, "circuit");
        require(out, "out");
        *out = c->circuit.num_gates();
    });
}

fk_status fk_circuit_serialize(const fk_circuit *c, char **out) {
    return guarded([&] {
        require(c, "circuit");
        require(out, "out");
        *out = dup_string(c->circuit.serialize());
    });
}

fk_status fk_circuit_compile_native(const fk_circuit *c, fk_circuit **out) {
    return guarded([&] {
        require(c, "circuit");
        require(out, "out");
        *out = new fk_circuit{flagkit::compile_to_native(c->circuit)};
    });
}

fk_status fk_pauli_commutes(const char *a, const char *b, int *out) {
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(out, "out");
        *out = flagkit::commutes(flagkit::PauliString::from_text(a), flagkit::PauliString::from_text(b)) ? 1 : 0;
    });
}

fk_status fk_disentangling_operator(const fk_circuit *c, const char *flag, size_t begin, size_t end, char **out) {
    return guarded([&] {
        require(c, "circuit");
        require(flag, "flag");
        require(out, "out");
        auto p = flagkit::PauliString::from_text(flag);
        *out = dup_string(flagkit::disentangling_operator(c->circuit, p, flagkit::MomentRange{begin, end}).str());
    });
}

fk_status fk_check_compatibility(const fk_circuit *c, const char *flag, size_t begin, size_t end, int *compatible,
                                 char **detail) {
    return guarded([&] {
        require(c, "circuit");
        require(flag, "flag");
        require(compatible, "compatible");
        auto rep = flagkit::check_compatibility(c->circuit, flagkit::PauliString::from_text(flag), begin, end);
        *compatible = rep.compatible ? 1 : 0;
        if (detail != nullptr) {
            *detail = dup_string(rep.violation ? rep.violation->describe() : "");
        }
    });
}

fk_status fk_config_new(fk_config **out) {
    return guarded([&] {
        require(out, "out");
        *out = new fk_config{};
    });
}

void fk_config_free(fk_config *cfg) {
    delete cfg;
}

fk_status fk_config_set_circuit(fk_config *cfg, const char *name_or_path) {
    return guarded([&] {
        require(cfg, "config");
        require(name_or_path, "name_or_path");
        cfg->config.circuit = name_or_path;
    });
}

fk_status fk_config_set_model(fk_config *cfg, const char *model) {
    return guarded([&] {
        require(cfg, "config");
        require(model, "model");
        auto kind = flagkit::noise_kind_from_name(model);
        if (!kind) {
            throw flagkit::ArgumentError(std::string("unknown noise model '") + model + "'");
        }
        cfg->config.model = *kind;
    });
}

fk_status fk_config_set_crosstalk_ratio(fk_config *cfg, double ratio) {
    return guarded([&] {
        require(cfg, "config");
        flagkit::NoiseModel::crosstalk(0, ratio);
        cfg->config.crosstalk_ratio = ratio;
    });
}

fk_status fk_config_set_grid(fk_config *cfg, const double *values, size_t count) {
    return guarded([&] {
        require(cfg, "config");
        if (count > 0) {
            require(values, "values");
        }
        cfg->config.parameter_grid.assign(values, values + count);
    });
}

fk_status fk_config_set_flags(fk_config *cfg, size_t n_flags) {
    return guarded([&] {
        require(cfg, "config");
        if (n_flags == 0) {
            throw flagkit::ArgumentError("need at least one flag");
        }
        cfg->config.n_flags = n_flags;
    });
}

fk_status fk_config_set_pairs(fk_config *cfg, size_t n_pairs) {
    return guarded([&] {
        require(cfg, "config");
        if (n_pairs == 0) {
            throw flagkit::ArgumentError("need at least one pair");
        }
        cfg->config.n_pairs = n_pairs;
    });
}

fk_status fk_config_set_seed(fk_config *cfg, uint64_t seed) {
    return guarded([&] {
        require(cfg, "config");
        cfg->config.seed = seed;
    });
}

fk_status fk_config_set_section(fk_config *cfg, size_t begin, size_t end) {
    return guarded([&] {
        require(cfg, "config");
        if (begin > end) {
            throw flagkit::ArgumentError("section begins after it ends");
        }
        cfg->config.section = flagkit::MomentRange{begin, end};
    });
}

fk_status fk_config_set_input(fk_config *cfg, const char *input) {
    return guarded([&] {
        require(cfg, "config");
        require(input, "input");
        cfg->config.input = std::string(input);
    });
}

fk_status fk_config_set_exact_scoring(fk_config *cfg, int enabled) {
    return guarded([&] {
        require(cfg, "config");
        cfg->config.exact_scoring = enabled != 0;
    });
}

fk_status fk_config_set_max_pair_overlap(fk_config *cfg, size_t overlap) {
    return guarded([&] {
        require(cfg, "config");
        cfg->config.max_pair_overlap = overlap;
    });
}

fk_status fk_config_set_workers(fk_config *cfg, size_t workers) {
    return guarded([&] {
        require(cfg, "config");
        cfg->config.workers = workers;
    });
}

fk_status fk_run_rank(const fk_config *cfg, char **csv) {
    return guarded([&] {
        require(cfg, "config");
        require(csv, "csv");
        *csv = dup_string(flagkit::rank_to_csv(flagkit::run_rank(cfg->config).ranked));
    });
}

fk_status fk_run_sweep(const fk_config *cfg, char **csv, char **summary_json) {
    return guarded([&] {
        require(cfg, "config");
        auto table = flagkit::run_single_flag_experiment(cfg->config);
        if (csv != nullptr) {
            *csv = dup_string(table.to_csv());
        }
        if (summary_json != nullptr) {
            *summary_json = dup_string(table.summary_json);
        }
    });
}

fk_status fk_run_pair_sweep(const fk_config *cfg, char **csv, char **summary_json) {
    return guarded([&] {
        require(cfg, "config");
        auto table = flagkit::run_pair_experiment(cfg->config);
        if (csv != nullptr) {
            *csv = dup_string(table.to_csv());
        }
        if (summary_json != nullptr) {
            *summary_json = dup_string(table.summary_json);
        }
    });
}

fk_status fk_explain(const fk_config *cfg, const char *flag, char **json) {
    return guarded([&] {
        require(cfg, "config");
        require(flag, "flag");
        require(json, "json");
        auto lc = flagkit::load_circuit(cfg->config.circuit);
        auto section = cfg->config.section.value_or(lc.section);
        *json = dup_string(flagkit::explain_flag(lc.circuit, flagkit::PauliString::from_text(flag),
                                                 explain_model(cfg->config), section));
    });
}

}  // extern "C"
