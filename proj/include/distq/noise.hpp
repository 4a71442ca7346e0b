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
#include <string>
#include <string_view>
#include <vector>

#include "distq/bits.hpp"
#include "distq/statevec.hpp"

namespace distq {

/// Published calibration data for one device.
struct MachineProfile {
    std::string name;
    double single_qubit_error = 0;
    double two_qubit_error = 0;     // epsilon
    double coherence_time_us = 0;   // T_c
    double gate_time_ns = 0;        // R

    static MachineProfile santiago();

    /// Throws std::invalid_argument when a probability is outside [0, 1] or a
    /// time is not positive.
    void validate() const;
};

MachineProfile profile_from_json(std::string_view json_text);
std::string to_json(const MachineProfile& profile);

/// Resolves a profile by name: "<dir>/<name>.json" where dir comes from the
/// DISTQ_PROFILE_DIR environment variable, falling back to the bundled
/// profiles. Throws std::invalid_argument for an unknown name.
MachineProfile load_profile(std::string_view name);

/// Depolarizing channel rho -> lambda rho + (1 - lambda)/2 I reduced to a
/// per-qubit readout flip probability p0 = (1 - lambda)/2.
struct NoiseParams {
    double mu_c = 1;    // retention per time step
    double mu_g = 1;    // retention per two-qubit gate
    double lambda = 1;
    double p0 = 0;
    double p1 = 1;

    /// Params for an explicit flip probability (lambda = 1 - 2 p0).
    static NoiseParams from_p0(double p0);
};

/// mu_c = exp(-R/T_c), mu_g = 1 - epsilon, lambda = mu_c^T mu_g^N_g.
/// Throws std::invalid_argument when T_c is not positive.
NoiseParams derive_noise(const MachineProfile& profile, std::uint64_t time_steps, std::uint64_t two_qubit_gates);

/// Entry m = C(n, m) p0^m (1 - p0)^(n - m), m = 0..n.
std::vector<double> binomial_error_profile(unsigned n, double p0);

/// Flips every recorded bit of every shot independently with probability p0.
ShotHistogram inject_bit_flips(const ShotHistogram& hist, double p0, std::uint64_t rng_seed);

/// Fraction of shots at each Hamming distance 0..width from `target`.
std::vector<double> error_count_distribution(const ShotHistogram& hist, Bits target);

/// Mean Hamming distance from `target` divided by the width.
/// Throws std::invalid_argument for an empty histogram.
double fit_bit_flip_rate(const ShotHistogram& hist, Bits target);
/// Same, with the target as a bitstring whose length must equal the width.
double fit_bit_flip_rate(const ShotHistogram& hist, std::string_view target);

}  // namespace distq
