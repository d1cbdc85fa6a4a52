// Copyright 2026 The twograph Authors
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


// Command-line driver. Exit codes: 0 ok, 2 malformed input, 3 precondition
// violation, 4 internal invariant breach (including oracle mismatches).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "twograph/dense.hpp"
#include "twograph/errors.hpp"
#include "twograph/io.hpp"
#include "twograph/orbit.hpp"
#include "twograph/spectral.hpp"
#include "twograph/version.hpp"

namespace {

using namespace twograph;

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitInvariant = 4;

void emit(const std::string &text, const std::string &path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out || !(out << text)) {
        throw PreconditionError("cannot write " + path);
    }
}

std::string join(const std::vector<std::string> &parts) {
    std::string out;
    for (const auto &p : parts) {
        out += (out.empty() ? "" : " ") + p;
    }
    return out;
}

ExponentRule parse_rule(const std::string &name) {
    if (name == "exact") {
        return ExponentRule::kExact;
    }
    if (name == "truncated") {
        return ExponentRule::kTruncated;
    }
    throw ParseError("exponent rule must be 'exact' or 'truncated', got '" + name + "'");
}

struct ApplyArgs {
    std::string state;
    std::vector<std::string> ops;
    bool json = false;
    std::string output;
};

void run_apply(const ApplyArgs &a) {
    const auto s = load_state_file(a.state).to_state();
    const auto ops = Operation::parse_list(join(a.ops));
    const auto out = apply_all(s, ops);
    if (a.json) {
        emit(apply_report_json(out, ops), a.output);
        return;
    }
    const auto apf = to_apf(out);
    std::string text = to_text(StateDocument::from_state(out));
    text += apf.magnitude_string() + "\n" + apf.phase_string() + "\n";
    if (auto b = apf.boolean_phase_string()) {
        text += "boolean " + *b + "\n";
    }
    emit(text, a.output);
}

struct SpectraArgs {
    std::string state;
    std::string js = "1,2,3,4,6,8,inf";
    unsigned workers = 1;
    std::string output;
};

void run_spectra(const SpectraArgs &a) {
    const auto s = load_state_file(a.state).to_state();
    const auto report = sweep(s, {.js = parse_j_list(a.js), .workers = a.workers});
    emit(spectral_report_json(report, {.workers = a.workers}), a.output);
}

struct ClassifyArgs {
    int n = 0;
    std::string js = "3,4";
    unsigned workers = 1;
    std::string rule = "exact";
    std::string format = "json";
    std::string output;
};

void run_classify(const ClassifyArgs &a) {
    const auto js = parse_j_list(a.js);
    const ExponentRule rule = parse_rule(a.rule);
    std::vector<double> sweep_js = js;
    sweep_js.push_back(4.0);
    const auto classes = enumerate_classes(a.n, sweep_js, a.workers);
    std::vector<Table1> tables;
    for (double j : js) {
        tables.push_back(table1(classes, j, rule));
    }
    const ReportMeta meta{.workers = a.workers};
    if (a.format == "csv") {
        std::string text;
        for (const auto &t : tables) {
            text += table1_csv(t, meta);
        }
        emit(text, a.output);
    } else {
        emit(classify_report_json(classes, tables, meta), a.output);
    }
}

struct OracleArgs {
    std::vector<std::string> states;
    int random = 0;
    std::uint64_t seed = 1;
    int max_n = 6;
    double tol = 1e-9;
};

/// Independent coin per slot; L-L edges skipped, Q drawn inside R.
GeneralisedTwoGraphState random_state(int n, std::mt19937_64 &rng) {
    auto coin = [&rng] { return (rng() >> 63) != 0; };
    VertexSet r;
    for (int v = 0; v < n; ++v) {
        if (coin()) {
            r.insert(v);
        }
    }
    Gf2Graph g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const bool inside_l = i != j && !r.contains(i) && !r.contains(j);
            if (coin() && !inside_l) {
                g.toggle_edge(i, j);
            }
        }
    }
    VertexSet q;
    for (int v : r) {
        if (coin()) {
            q.insert(v);
        }
    }
    return {std::move(g), r, q};
}

int run_oracle_check(const OracleArgs &a) {
    if (a.states.empty() && a.random == 0) {
        throw PreconditionError("oracle-check needs state files or --random COUNT");
    }
    if (a.max_n < 1 || a.max_n > kMaxDenseQubits) {
        throw PreconditionError("--max-n must lie in [1, " + std::to_string(kMaxDenseQubits) + "]");
    }
    std::vector<GeneralisedTwoGraphState> states;
    for (const auto &path : a.states) {
        states.push_back(load_state_file(path).to_state());
    }
    std::mt19937_64 rng(a.seed);
    for (int k = 0; k < a.random; ++k) {
        states.push_back(random_state(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(a.max_n)), rng));
    }
    std::size_t failures = 0;
    for (const auto &s : states) {
        for (const auto &m : oracle_check(s, a.tol)) {
            ++failures;
            std::cout << "MISMATCH " << m.operation << " on " << m.state << "\n";
        }
    }
    std::cout << (failures == 0 ? "ok" : "failed") << ": " << states.size() << " states, " << failures
              << " mismatches\n";
    return failures == 0 ? 0 : kExitInvariant;
}

struct DensityArgs {
    int n = 6;
    std::vector<double> densities{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    int samples = 100;
    std::uint64_t seed = 1;
    std::string js = "1,2,3,4,6,8,inf";
    unsigned workers = 1;
    std::string format = "json";
    std::string output;
};

void run_density(const DensityArgs &a) {
    const auto table = density_sweep({.n = a.n,
                                      .densities = a.densities,
                                      .samples = a.samples,
                                      .seed = a.seed,
                                      .js = parse_j_list(a.js),
                                      .workers = a.workers});
    emit(a.format == "csv" ? density_table_csv(table) : density_table_json(table), a.output);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Generalised two-graph stabilizer states: rewrites, spectra and LC classification"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    ApplyArgs apply_args;
    auto *apply_cmd = app.add_subcommand("apply", "Apply a rewrite script to a state file");
    apply_cmd->add_option("state", apply_args.state, "State file (text or JSON)")->required();
    apply_cmd->add_option("ops", apply_args.ops, "Operations, e.g. H3 N0 swap(1,3) canon")->required();
    apply_cmd->add_flag("--json", apply_args.json, "Emit a JSON report");
    apply_cmd->add_option("-o,--output", apply_args.output, "Output file");

    SpectraArgs spectra_args;
    auto *spectra_cmd = app.add_subcommand("spectra", "L_j norms, CMF and PAR_IHN over {I,H,N}^n");
    spectra_cmd->add_option("state", spectra_args.state, "State file (text or JSON)")->required();
    spectra_cmd->add_option("--j", spectra_args.js, "Comma-separated j values; 'inf' allowed")->capture_default_str();
    spectra_cmd->add_option("--workers", spectra_args.workers, "Worker threads")->check(CLI::PositiveNumber);
    spectra_cmd->add_option("-o,--output", spectra_args.output, "Output file");

    ClassifyArgs classify_args;
    auto *classify_cmd = app.add_subcommand("classify", "LC classes of connected graphs and their norm table");
    classify_cmd->add_option("--n", classify_args.n, "Vertex count")->required();
    classify_cmd->add_option("--j", classify_args.js, "Comma-separated j values")->capture_default_str();
    classify_cmd->add_option("--workers", classify_args.workers, "Worker threads")->check(CLI::PositiveNumber);
    classify_cmd->add_option("--rule", classify_args.rule, "Exponent rule: exact or truncated")->capture_default_str();
    classify_cmd->add_option("--format", classify_args.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    classify_cmd->add_option("-o,--output", classify_args.output, "Output file");

    OracleArgs oracle_args;
    auto *oracle_cmd = app.add_subcommand("oracle-check", "Check every rewrite against the dense oracle");
    oracle_cmd->add_option("states", oracle_args.states, "State files");
    oracle_cmd->add_option("--random", oracle_args.random, "Number of random states")->check(CLI::NonNegativeNumber);
    oracle_cmd->add_option("--seed", oracle_args.seed, "Seed for random states")->capture_default_str();
    oracle_cmd->add_option("--max-n", oracle_args.max_n, "Largest random state size")->capture_default_str();
    oracle_cmd->add_option("--tol", oracle_args.tol, "Comparison tolerance")->capture_default_str();

    DensityArgs density_args;
    auto *density_cmd = app.add_subcommand("density-sweep", "Mean PAR_IHN and L_j norms of random connected graphs");
    density_cmd->add_option("--n", density_args.n, "Vertex count")->capture_default_str();
    density_cmd->add_option("--densities", density_args.densities, "Comma-separated edge probabilities")
        ->delimiter(',');
    density_cmd->add_option("--samples", density_args.samples, "Graphs per density")->capture_default_str();
    density_cmd->add_option("--seed", density_args.seed, "PRNG seed (mt19937_64)")->capture_default_str();
    density_cmd->add_option("--j", density_args.js, "Comma-separated j values")->capture_default_str();
    density_cmd->add_option("--workers", density_args.workers, "Worker threads")->check(CLI::PositiveNumber);
    density_cmd->add_option("--format", density_args.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    density_cmd->add_option("-o,--output", density_args.output, "Output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        (void)app.exit(e);
        return kExitParse;
    }

    try {
        if (apply_cmd->parsed()) {
            run_apply(apply_args);
        } else if (spectra_cmd->parsed()) {
            run_spectra(spectra_args);
        } else if (classify_cmd->parsed()) {
            run_classify(classify_args);
        } else if (oracle_cmd->parsed()) {
            return run_oracle_check(oracle_args);
        } else if (density_cmd->parsed()) {
            run_density(density_args);
        }
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const PreconditionError &e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const InvariantError &e) {
        std::cerr << "internal invariant breached: " << e.what() << "\n";
        return kExitInvariant;
    }
    return 0;
}
