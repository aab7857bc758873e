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

// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "flagkit/flagkit.h"

namespace {

struct Options {
    std::string circuit = "magic";
    std::string model = "depolarizing";
    std::vector<double> p;
    std::vector<double> epsilon;
    std::optional<double> crosstalk_ratio;
    size_t flags = 500;
    size_t pairs = 100;
    uint64_t seed = 0;
    std::string out;
    std::string section;
    std::string input;
    std::string flag;
    bool exact_scoring = false;
    std::optional<size_t> max_overlap;
};

struct Failure {
    fk_status status;
    std::string message;
};

void check(fk_status s) {
    if (s != FK_OK) {
        throw Failure{s, fk_last_error()};
    }
}

void usage_error(const std::string &message) {
    throw Failure{FK_ERR_ARGUMENT, message};
}

class OwnedString {
   public:
    OwnedString() = default;
    OwnedString(const OwnedString &) = delete;
    OwnedString &operator=(const OwnedString &) = delete;
    ~OwnedString() {
        fk_string_free(ptr_);
    }
    char **out() {
        return &ptr_;
    }
    std::string str() const {
        return ptr_ == nullptr ? std::string() : std::string(ptr_);
    }

   private:
    char *ptr_ = nullptr;
};

class Config {
   public:
    Config() {
        check(fk_config_new(&cfg_));
    }
    Config(const Config &) = delete;
    Config &operator=(const Config &) = delete;
    ~Config() {
        fk_config_free(cfg_);
    }
    fk_config *get() {
        return cfg_;
    }

   private:
    fk_config *cfg_ = nullptr;
};

std::pair<size_t, size_t> parse_section(const std::string &text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) {
        usage_error("--section expects A:B, got '" + text + "'");
    }
    try {
        size_t used_a = 0, used_b = 0;
        std::string a = text.substr(0, colon), b = text.substr(colon + 1);
        size_t begin = std::stoul(a, &used_a);
        size_t end = std::stoul(b, &used_b);
        if (used_a != a.size() || used_b != b.size()) {
            throw std::invalid_argument(text);
        }
        return {begin, end};
    } catch (const std::logic_error &) {
        usage_error("--section expects A:B, got '" + text + "'");
    }
    return {0, 0};
}

void configure(Config &cfg, const Options &o) {
    check(fk_config_set_circuit(cfg.get(), o.circuit.c_str()));
    check(fk_config_set_model(cfg.get(), o.model.c_str()));
    const auto &grid = o.model == "overrotation" ? o.epsilon : o.p;
    const auto &other = o.model == "overrotation" ? o.p : o.epsilon;
    if (!other.empty()) {
        usage_error(o.model == "overrotation" ? "--p does not apply to the overrotation model (use --epsilon)"
                                              : "--epsilon applies only to the overrotation model (use --p)");
    }
    if (!grid.empty()) {
        check(fk_config_set_grid(cfg.get(), grid.data(), grid.size()));
    }
    if (o.crosstalk_ratio) {
        check(fk_config_set_crosstalk_ratio(cfg.get(), *o.crosstalk_ratio));
    }
    check(fk_config_set_flags(cfg.get(), o.flags));
    check(fk_config_set_pairs(cfg.get(), o.pairs));
    check(fk_config_set_seed(cfg.get(), o.seed));
    if (!o.section.empty()) {
        auto [begin, end] = parse_section(o.section);
        check(fk_config_set_section(cfg.get(), begin, end));
    }
    if (!o.input.empty()) {
        check(fk_config_set_input(cfg.get(), o.input.c_str()));
    }
    if (o.max_overlap) {
        check(fk_config_set_max_pair_overlap(cfg.get(), *o.max_overlap));
    }
    check(fk_config_set_exact_scoring(cfg.get(), o.exact_scoring ? 1 : 0));
}

void write_file(const std::string &path, const std::string &contents) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw Failure{FK_ERR_IO, "cannot open '" + path + "' for writing"};
    }
    f << contents;
    if (!f) {
        throw Failure{FK_ERR_IO, "failed writing '" + path + "'"};
    }
}

void emit(const Options &o, const std::string &csv, const std::string &json) {
    if (o.out.empty()) {
        std::cout << (csv.empty() ? json : csv);
        return;
    }
    if (!csv.empty()) {
        write_file(o.out + ".csv", csv);
    }
    if (!json.empty()) {
        write_file(o.out + ".json", json);
    }
}

void add_common(CLI::App *sub, Options &o) {
    sub->add_option("--circuit", o.circuit, "Built-in circuit (magic, zzzzz, zzzzz:<n>:<theta>) or file path");
    sub->add_option("--model", o.model, "Noise model")
        ->check(CLI::IsMember({"depolarizing", "crosstalk", "overrotation"}));
    sub->add_option("--p", o.p, "Error probabilities (comma separated)")->delimiter(',');
    sub->add_option("--epsilon", o.epsilon, "Overrotation angles (comma separated)")->delimiter(',');
    sub->add_option("--crosstalk-ratio", o.crosstalk_ratio, "Neighbor error rate as a fraction of p");
    sub->add_option("--seed", o.seed, "Random seed");
    sub->add_option("--section", o.section, "Flagged moment range A:B");
    sub->add_option("--input", o.input, "Input state: zero, plus, or one of 0/1/+/- per qubit");
    sub->add_option("--out", o.out, "Output path prefix");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Synthesize, rank and simulate Pauli flag gadgets."};
    app.require_subcommand(1);
    Options o;

    auto *rank = app.add_subcommand("rank", "Rank random compatible flags by detection score");
    add_common(rank, o);
    rank->add_option("--flags", o.flags, "Number of candidate flags");
    rank->add_flag("--exact-scoring", o.exact_scoring, "Score by exact undetected-harmful fault count");

    auto *sweep = app.add_subcommand("sweep", "Simulate single flags over a parameter grid");
    add_common(sweep, o);
    sweep->add_option("--flags", o.flags, "Number of candidate flags");
    sweep->add_flag("--exact-scoring", o.exact_scoring, "Score by exact undetected-harmful fault count");

    auto *pair_sweep = app.add_subcommand("pair-sweep", "Simulate nested flag pairs over a parameter grid");
    add_common(pair_sweep, o);
    pair_sweep->add_option("--pairs", o.pairs, "Number of flag pairs");
    pair_sweep->add_option("--max-overlap", o.max_overlap, "Largest allowed support overlap within a pair");

    auto *explain = app.add_subcommand("explain", "Trace one flag through the circuit and score it");
    add_common(explain, o);
    explain->add_option("--flag", o.flag, "Flag operator, e.g. +XIZII")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        Config cfg;
        configure(cfg, o);
        OwnedString csv, json;
        if (rank->parsed()) {
            check(fk_run_rank(cfg.get(), csv.out()));
        } else if (sweep->parsed()) {
            check(fk_run_sweep(cfg.get(), csv.out(), json.out()));
        } else if (pair_sweep->parsed()) {
            check(fk_run_pair_sweep(cfg.get(), csv.out(), json.out()));
        } else {
            check(fk_explain(cfg.get(), o.flag.c_str(), json.out()));
        }
        emit(o, csv.str(), json.str());
    } catch (const Failure &f) {
        std::cerr << "flagkit: " << fk_status_name(f.status) << ": " << f.message << "\n";
        return 2 + static_cast<int>(f.status);
    }
    return 0;
}
