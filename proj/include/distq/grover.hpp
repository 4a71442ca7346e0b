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
#include <optional>
#include <stdexcept>

#include "distq/circuit.hpp"
#include "distq/noise.hpp"
#include "distq/statevec.hpp"

namespace distq {

struct GroverPlan {
    unsigned n = 0;
    std::uint64_t N = 0;
    std::uint64_t M = 0;
    double theta = 0;
    std::uint64_t r = 0;
    double predicted_success = 0;  // sin^2((2r + 1) theta)
};

/// r = floor(pi / (4 theta)), the count maximising sin^2((2r+1) theta); about
/// pi/4 sqrt(N/M) for small M/N. r = 0 when M = 0. `iterations` overrides it.
/// Throws std::invalid_argument when M = 0 and a positive iteration count is
/// requested, or when M > N.
GroverPlan make_grover_plan(unsigned n, std::uint64_t marked, std::optional<std::uint64_t> iterations = std::nullopt);

/// Plan for a phase oracle, counting its marked states by simulation.
GroverPlan make_grover_plan(const Circuit& oracle, std::optional<std::uint64_t> iterations = std::nullopt);

/// H on every qubit, then r rounds of (oracle, diffusion).
Circuit grover_circuit(const Circuit& oracle, const GroverPlan& plan);

/// Exact output state of grover_circuit on |0...0>.
StateVector grover_state(const Circuit& oracle, const GroverPlan& plan);

/// Samples grover_circuit and, when `noise` is given, flips each measured bit
/// with probability noise->p0.
ShotHistogram grover_run(const Circuit& oracle, const GroverPlan& plan, std::uint64_t shots, std::uint64_t seed,
                         const std::optional<NoiseParams>& noise = std::nullopt);

class NoVerifiedCandidate : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct DistributedGroverResult {
    Bits result = 0;  // full-width answer
    unsigned parity_qubit = 0;
    bool from_odd = false;
    GroverPlan even_plan;
    GroverPlan odd_plan;
    ShotHistogram even_histogram{1};
    ShotHistogram odd_histogram{1};
    Bits even_candidate = 0;
    Bits odd_candidate = 0;
};

/// Splits a DNF-form phase oracle, runs Grover on both halves with their own
/// plans, and returns the first modal candidate (even, then odd) that the
/// parent function accepts. Throws NoVerifiedCandidate when neither does.
DistributedGroverResult distributed_grover(const Circuit& oracle, unsigned parity_qubit, std::uint64_t shots,
                                           std::uint64_t seed,
                                           const std::optional<NoiseParams>& noise_even = std::nullopt,
                                           const std::optional<NoiseParams>& noise_odd = std::nullopt);

}  // namespace distq
