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


#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "distq/boolean.hpp"
#include "distq/circuit.hpp"
#include "distq/noise.hpp"
#include "distq/statevec.hpp"

namespace distq {

/// Invalid experiment configuration (bad flag values, missing files).
class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

enum class Algorithm { Grover, GroverDist, Simon, SimonDist, Dj, DjDist, DjClassical };

std::string_view to_string(Algorithm algorithm);
/// Throws ConfigError for an unknown name.
Algorithm algorithm_from_string(std::string_view name);

struct NoiseSpec {
    enum class Mode { Off, P0, Profile };
    Mode mode = Mode::Off;
    double p0 = 0;
    std::string profile;
    std::optional<std::uint64_t> time_steps;       // T override
    std::optional<std::uint64_t> two_qubit_gates;  // N_g override
};

/// "off", "p0=0.47", "profile=santiago" or "profile=santiago,T=396,Ng=291".
/// Throws ConfigError on anything else.
NoiseSpec parse_noise_spec(std::string_view text);

/// Flip probability for a circuit. A profile without overrides takes T and N_g
/// from depth(circuit). Returns nullopt when noise is off.
std::optional<NoiseParams> resolve_noise(const NoiseSpec& spec, const Circuit& circuit);

struct ExperimentConfig {
    Algorithm algorithm = Algorithm::Grover;
    unsigned n = 0;
    // Exactly one oracle source: marked bitstrings, a truth-table file or a
    // DNF formula file.
    std::vector<std::string> targets;
    std::filesystem::path truth_table_file;
    std::filesystem::path formula_file;
    std::uint64_t shots = 8096;
    std::uint64_t seed = 0;
    NoiseSpec noise;
    unsigned parity_qubit = 0;
    std::filesystem::path out_dir;  // empty: write nothing
    double epsilon = 0;             // 0: use 1/N
    std::uint64_t max_queries = 0;  // 0: use a width-based default
    std::optional<std::uint64_t> iterations;
};

/// Throws ConfigError when the configuration cannot run.
void validate(const ExperimentConfig& config);

/// The oracle's formula, resolved from the configured source.
DnfFormula load_formula(const ExperimentConfig& config);

struct ExperimentResult {
    std::string record_json;
    std::vector<std::filesystem::path> artifacts;
};

/// Runs one experiment and writes its artifacts into config.out_dir:
/// histograms as CSV and JSON, a bit-flip distance table per Grover histogram
/// and run.json. Throws ConfigError for invalid configurations; algorithm
/// failures propagate as the driver's exception.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Distance table for a histogram: the observed fraction of shots at each
/// Hamming distance from `target`, and the binomial row at the fitted p0.
std::string distance_table_csv(const ShotHistogram& hist, Bits target);

struct ReproCheck {
    std::string id;
    std::string description;
    std::string observed;
    std::string expected;
    bool pass = false;
    bool report_only = false;  // shown, not counted as a failure
};

struct ReproReport {
    std::vector<ReproCheck> checks;
    std::string text;
    std::string json;
    bool all_pass() const;
};

/// Runs the fixed reproduction suite. Writes report.txt, report.json and the
/// histograms and distance tables of the noisy runs into out_dir when it is
/// not empty. Output depends only on `seed`.
ReproReport reproduce_paper(const std::filesystem::path& out_dir, std::uint64_t seed);

}  // namespace distq
