// Copyright 2026 The distq Authors
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


// Command-line driver: runs the algorithms on oracles given as marked
// bitstrings, truth tables or DNF files and writes plot-ready artifacts.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "distq/circuit.hpp"
#include "distq/experiment.hpp"
#include "distq/noise.hpp"
#include "distq/splitter.hpp"

namespace {

using namespace distq;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

int fail(const char* kind, const std::string& message, int code) {
    nlohmann::ordered_json j;
    j["error"] = {{"kind", kind}, {"message", message}};
    std::cerr << j.dump() << "\n";
    return code;
}

void add_source_options(CLI::App* cmd, ExperimentConfig& cfg) {
    cmd->add_option("--n", cfg.n, "Number of qubits (with --target)");
    cmd->add_option("--target", cfg.targets, "Marked bitstring, qubit 0 rightmost; repeatable")->delimiter(',');
    cmd->add_option("--truth-table", cfg.truth_table_file, "Truth-table file")->check(CLI::ExistingFile);
    cmd->add_option("--formula", cfg.formula_file, "DNF formula file")->check(CLI::ExistingFile);
}

void add_experiment(CLI::App& app, const std::string& name, const std::string& help, Algorithm algorithm,
                    ExperimentConfig& cfg, std::string& noise, std::optional<Algorithm>& chosen) {
    CLI::App* cmd = app.add_subcommand(name, help);
    add_source_options(cmd, cfg);
    cmd->add_option("--seed", cfg.seed, "RNG seed");
    cmd->add_option("--out", cfg.out_dir, "Directory for artifacts");
    switch (algorithm) {
        case Algorithm::Grover:
        case Algorithm::GroverDist:
            cmd->add_option("--shots", cfg.shots, "Measurements per circuit")->check(CLI::PositiveNumber);
            cmd->add_option("--noise", noise, "off | p0=P | profile=NAME[,T=steps,Ng=cnots]");
            if (algorithm == Algorithm::Grover) {
                cmd->add_option("--iterations", cfg.iterations, "Override the Grover iteration count");
            } else {
                cmd->add_option("--parity", cfg.parity_qubit, "Parity qubit");
            }
            break;
        case Algorithm::Simon:
        case Algorithm::SimonDist:
            cmd->add_option("--max-queries", cfg.max_queries, "Query budget");
            break;
        case Algorithm::DjDist: cmd->add_option("--parity", cfg.parity_qubit, "Parity qubit"); break;
        case Algorithm::DjClassical:
            cmd->add_option("--epsilon", cfg.epsilon, "Allowed error; default 1/N");
            break;
        case Algorithm::Dj: break;
    }
    cmd->callback([&chosen, algorithm] { chosen = algorithm; });
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
    }
    out << text;
}

// Circuit from --circuit, else the phase oracle of the configured formula.
Circuit load_circuit(const std::string& circuit_file, const ExperimentConfig& cfg) {
    if (!circuit_file.empty()) {
        try {
            return circuit_from_text(read_text(circuit_file));
        } catch (const std::out_of_range& e) {
            throw ConfigError(e.what());
        } catch (const ConfigError&) {
            throw;
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
    if (cfg.targets.empty() && cfg.truth_table_file.empty() && cfg.formula_file.empty()) {
        throw ConfigError("give --circuit, --target, --truth-table or --formula");
    }
    return dnf_to_phase_oracle(load_formula(cfg));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distributed phase-oracle algorithms on a state-vector simulator"};
    app.require_subcommand(1);

    ExperimentConfig cfg;
    std::string noise = "off";
    std::optional<Algorithm> chosen;
    add_experiment(app, "grover", "Grover search", Algorithm::Grover, cfg, noise, chosen);
    add_experiment(app, "grover-dist", "Grover search split over two machines", Algorithm::GroverDist, cfg, noise,
                   chosen);
    add_experiment(app, "simon", "Period finding", Algorithm::Simon, cfg, noise, chosen);
    add_experiment(app, "simon-dist", "Period finding split over two machines", Algorithm::SimonDist, cfg, noise,
                   chosen);
    add_experiment(app, "dj", "Deutsch-Jozsa", Algorithm::Dj, cfg, noise, chosen);
    add_experiment(app, "dj-dist", "Deutsch-Jozsa split over two machines", Algorithm::DjDist, cfg, noise, chosen);
    add_experiment(app, "dj-classical", "Classical random-sampling baseline", Algorithm::DjClassical, cfg, noise,
                   chosen);

    std::string circuit_file;
    std::filesystem::path out_dir;

    CLI::App* split = app.add_subcommand("split", "Split a DNF-form phase oracle into even and odd halves");
    add_source_options(split, cfg);
    split->add_option("--circuit", circuit_file, "Circuit file")->check(CLI::ExistingFile);
    split->add_option("--parity", cfg.parity_qubit, "Parity qubit");
    split->add_option("--out", out_dir, "Directory for even.circuit, odd.circuit and split.json");

    CLI::App* depth_cmd = app.add_subcommand("depth", "Depth of the elementary-gate form");
    add_source_options(depth_cmd, cfg);
    depth_cmd->add_option("--circuit", circuit_file, "Circuit file")->check(CLI::ExistingFile);

    std::string profile_name = "santiago";
    std::uint64_t time_steps = 0;
    std::uint64_t cnots = 0;
    unsigned table_n = 0;
    CLI::App* noise_cmd = app.add_subcommand("noise", "Depolarizing estimate from machine data");
    noise_cmd->add_option("--profile", profile_name, "Machine profile name");
    noise_cmd->add_option("--T", time_steps, "Time steps")->required();
    noise_cmd->add_option("--Ng", cnots, "Two-qubit gate count")->required();
    noise_cmd->add_option("--n", table_n, "Also print Binomial[n, p0]");

    std::uint64_t repro_seed = 2021;
    CLI::App* repro = app.add_subcommand("reproduce", "Run the fixed reproduction suite");
    repro->add_option("--seed", repro_seed, "RNG seed");
    repro->add_option("--out", out_dir, "Directory for the report and artifacts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("config", e.what(), kExitConfig);
    }

    try {
        if (chosen) {
            cfg.algorithm = *chosen;
            cfg.noise = parse_noise_spec(noise);
            const ExperimentResult result = run_experiment(cfg);
            std::cout << result.record_json;
        } else if (split->parsed()) {
            const SplitResult s = split_circuit(load_circuit(circuit_file, cfg), cfg.parity_qubit);
            if (!out_dir.empty()) {
                std::filesystem::create_directories(out_dir);
                write_text(out_dir / "even.circuit", to_text(s.even));
                write_text(out_dir / "odd.circuit", to_text(s.odd));
                write_text(out_dir / "split.json", split_summary_json(s) + "\n");
            }
            std::cout << split_summary_json(s) << "\n";
        } else if (depth_cmd->parsed()) {
            const Circuit c = load_circuit(circuit_file, cfg);
            const DepthReport d = depth(c);
            nlohmann::ordered_json j{{"width", c.width()},
                                     {"depth", d.depth},
                                     {"gates", d.gate_count},
                                     {"cnots", d.cnot_count}};
            std::cout << j.dump(2) << "\n";
        } else if (noise_cmd->parsed()) {
            const MachineProfile p = load_profile(profile_name);
            const NoiseParams params = derive_noise(p, time_steps, cnots);
            nlohmann::ordered_json j{{"profile", p.name},     {"T", time_steps},
                                     {"Ng", cnots},           {"mu_c", params.mu_c},
                                     {"mu_g", params.mu_g},   {"lambda", params.lambda},
                                     {"p0", params.p0}};
            if (table_n > 0) {
                j["binomial"] = binomial_error_profile(table_n, params.p0);
            }
            std::cout << j.dump(2) << "\n";
        } else if (repro->parsed()) {
            const ReproReport report = reproduce_paper(out_dir, repro_seed);
            std::cout << report.text;
        }
    } catch (const SplitError& e) {
        return fail("config", e.what(), kExitConfig);
    } catch (const std::invalid_argument& e) {
        return fail("config", e.what(), kExitConfig);
    } catch (const std::out_of_range& e) {
        return fail("config", e.what(), kExitConfig);
    } catch (const std::exception& e) {
        return fail("runtime", e.what(), kExitRuntime);
    }
    return kExitOk;
}
