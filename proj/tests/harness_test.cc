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

#include <gtest/gtest.h>

#include "flagkit/error.h"
#include "flagkit/propagation.h"
#include "json.hpp"

using namespace flagkit;

namespace {

ExperimentConfig small_config() {
    ExperimentConfig cfg;
    cfg.n_flags = 6;
    cfg.n_pairs = 4;
    cfg.seed = 17;
    cfg.parameter_grid = {0, 1e-3};
    cfg.workers = 2;
    return cfg;
}

}  // namespace

TEST(harness, load_builtins) {
    auto magic = load_circuit("magic");
    ASSERT_EQ(magic.circuit.width(), 5);
    ASSERT_EQ(magic.section, (MomentRange{1, magic.circuit.num_moments()}));
    auto z = load_circuit("zzzzz:3:0.5");
    ASSERT_EQ(z.circuit.width(), 3);
    ASSERT_EQ(z.circuit.num_non_clifford_gates(), 1);
    ASSERT_THROW(load_circuit("zzzzz:x"), ArgumentError);
    ASSERT_THROW(load_circuit("/nonexistent/circuit.qc"), IoError);
}

TEST(harness, config_validation) {
    ExperimentConfig cfg;
    cfg.n_flags = 0;
    ASSERT_THROW(cfg.validate(), ArgumentError);
    cfg.n_flags = 1;
    cfg.parameter_grid = {2.0};
    ASSERT_THROW(cfg.validate(), ArgumentError);
}

TEST(harness, drawn_flags_are_compatible_and_deterministic) {
    auto z = load_circuit("zzzzz");
    auto a = draw_compatible_flags(z.circuit, z.section, 20, 5);
    auto b = draw_compatible_flags(z.circuit, z.section, 20, 5);
    ASSERT_EQ(a, b);
    for (const auto &p : a) {
        ASSERT_TRUE(check_compatibility(z.circuit, p, z.section.begin, z.section.end).compatible);
    }
}

TEST(harness, cap_exhaustion) {
    // Every qubit carries a T gate in the section: only Z-type flags pass.
    auto c = Circuit::parse("qubits 12\nt 0\nt 1\nt 2\nt 3\nt 4\nt 5\nt 6\nt 7\nt 8\nt 9\nt 10\nt 11\n");
    try {
        draw_compatible_flags(c, c.full_range(), 5, 1);
        FAIL() << "expected cap exhaustion";
    } catch (const CapExhaustedError &e) {
        ASSERT_NE(std::string(e.what()).find("t 0"), std::string::npos);
    }
}

TEST(harness, noiseless_point_is_perfect) {
    auto cfg = small_config();
    auto table = run_single_flag_experiment(cfg);
    ASSERT_EQ(table.records.size(), 2 + 6 * 2);
    for (const auto &r : table.records) {
        ASSERT_GE(r.fidelity_postselected, 0);
        ASSERT_LE(r.fidelity_postselected, 1 + 1e-12);
        ASSERT_LE(r.survival_probability, 1 + 1e-12);
        if (r.parameter == 0) {
            ASSERT_NEAR(r.fidelity_raw, 1, 1e-10);
            ASSERT_NEAR(r.fidelity_postselected, 1, 1e-10);
            ASSERT_NEAR(r.survival_probability, 1, 1e-10);
        }
    }
    ASSERT_EQ(table.records[0].flag_id, "none");
    ASSERT_EQ(table.records[2].flag_id, "f000");
}

TEST(harness, baseline_rows_are_consistent) {
    auto table = run_single_flag_experiment(small_config());
    for (const auto &r : table.records) {
        for (const auto &base : table.records) {
            if (base.flag_id == "none" && base.parameter == r.parameter) {
                ASSERT_EQ(r.fidelity_raw, base.fidelity_raw);
            }
        }
    }
}

TEST(harness, deterministic_across_worker_counts) {
    auto cfg = small_config();
    auto a = run_single_flag_experiment(cfg);
    cfg.workers = 1;
    auto b = run_single_flag_experiment(cfg);
    ASSERT_EQ(a.to_csv(), b.to_csv());
    ASSERT_EQ(a.summary_json, b.summary_json);
    cfg.seed = 18;
    ASSERT_NE(run_single_flag_experiment(cfg).to_csv(), a.to_csv());
}

TEST(harness, summary_contents) {
    auto table = run_single_flag_experiment(small_config());
    auto j = nlohmann::json::parse(table.summary_json);
    ASSERT_EQ(j["points"].size(), 2);
    ASSERT_EQ(j["top_q"].size(), 3);
    ASSERT_TRUE(j.contains("best_at_smallest_nonzero"));
    ASSERT_EQ(j["circuit"]["width"], 5);
}

TEST(harness, pair_experiment) {
    auto cfg = small_config();
    auto table = run_pair_experiment(cfg);
    ASSERT_EQ(table.records.size(), 2 + 4 * 2);
    for (const auto &r : table.records) {
        if (r.flag_id == "none") {
            continue;
        }
        ASSERT_EQ(r.flag_id[0], 'p');
        auto semi = r.entangle.find(';');
        ASSERT_NE(semi, std::string::npos);
        auto a = PauliString::from_text(r.entangle.substr(0, semi));
        auto b = PauliString::from_text(r.entangle.substr(semi + 1));
        ASSERT_LE(support_overlap(a, b), 2);
        if (r.parameter == 0) {
            ASSERT_NEAR(r.survival_probability, 1, 1e-10);
        }
    }
    ASSERT_EQ(run_pair_experiment(cfg).to_csv(), table.to_csv());
}

TEST(harness, zzzzz_best_flag_helps) {
    ExperimentConfig cfg;
    cfg.circuit = "zzzzz";
    cfg.n_flags = 20;
    cfg.parameter_grid = {1e-4, 1e-3};
    auto table = run_single_flag_experiment(cfg);
    auto j = nlohmann::json::parse(table.summary_json);
    std::string top = j["top_q"][0]["flag_id"];
    for (const auto &r : table.records) {
        if (r.flag_id == top) {
            ASSERT_GE(r.fidelity_postselected, r.fidelity_raw) << r.parameter;
        }
    }
}

TEST(harness, explain_report) {
    auto c = Circuit::parse("qubits 2\ncnot 0 1\n");
    auto m = NoiseModel::depolarizing(1e-3);
    auto j = nlohmann::json::parse(explain_flag(c, PauliString::from_text("XI"), m));
    ASSERT_EQ(j["trace"], nlohmann::json::array({"+XI", "+XX"}));
    auto score = quality(synthesize(c, PauliString::from_text("XI")), output_error_set(c, m), m);
    ASSERT_EQ(j["quality"]["n_detected"].get<double>(), score.n_detected);
    ASSERT_EQ(j["quality"]["q"].get<double>(), score.q);
    ASSERT_THROW(explain_flag(zzzzz_rotation_circuit(5, 0.3), PauliString::from_text("XIIII"), m), CompatibilityError);
    // Identity section.
    auto id = nlohmann::json::parse(explain_flag(c, PauliString::from_text("ZY"), m, MomentRange{1, 1}));
    ASSERT_EQ(id["trace"], nlohmann::json::array({"+ZY"}));
}

TEST(harness, overrotation_pairs_spread_more) {
    ExperimentConfig cfg;
    cfg.model = NoiseKind::Overrotation;
    cfg.parameter_grid = {0.03};
    cfg.n_flags = 40;
    cfg.n_pairs = 40;
    auto single = nlohmann::json::parse(run_single_flag_experiment(cfg).summary_json);
    auto pairs = nlohmann::json::parse(run_pair_experiment(cfg).summary_json);
    ASSERT_GT(pairs["points"][0]["postselected_spread"].get<double>(),
              single["points"][0]["postselected_spread"].get<double>());
}
