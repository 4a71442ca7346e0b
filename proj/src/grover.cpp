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


#include "distq/grover.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "distq/oracle_tools.hpp"
#include "distq/rng.hpp"
#include "distq/splitter.hpp"

namespace distq {

GroverPlan make_grover_plan(unsigned n, std::uint64_t marked, std::optional<std::uint64_t> iterations) {
    if (n == 0 || n > kMaxWidth) {
        throw std::invalid_argument("Grover width must be in [1, " + std::to_string(kMaxWidth) + "]");
    }
    GroverPlan plan;
    plan.n = n;
    plan.N = std::uint64_t{1} << n;
    if (marked > plan.N) {
        throw std::invalid_argument("more marked states than basis states");
    }
    plan.M = marked;
    if (marked == 0 && iterations.value_or(0) > 0) {
        throw std::invalid_argument("no marked states: Grover iterations cannot be requested");
    }
    plan.theta = std::asin(std::sqrt(static_cast<double>(marked) / static_cast<double>(plan.N)));
    if (iterations) {
        plan.r = *iterations;
    } else if (marked > 0) {
        plan.r = static_cast<std::uint64_t>(std::floor(std::numbers::pi / (4.0 * plan.theta)));
    }
    const double s = std::sin((2.0 * static_cast<double>(plan.r) + 1.0) * plan.theta);
    plan.predicted_success = s * s;
    return plan;
}

GroverPlan make_grover_plan(const Circuit& oracle, std::optional<std::uint64_t> iterations) {
    return make_grover_plan(oracle.width(), count_marked(oracle), iterations);
}

Circuit grover_circuit(const Circuit& oracle, const GroverPlan& plan) {
    if (oracle.width() != plan.n) {
        throw std::invalid_argument("oracle width " + std::to_string(oracle.width()) + " does not match plan n " +
                                    std::to_string(plan.n));
    }
    Circuit diffusion(plan.n, "diffusion");
    append_hadamard_layer(diffusion);
    diffusion.append(zero_state_reflection(plan.n));
    append_hadamard_layer(diffusion);

    Circuit c(plan.n, oracle.label().empty() ? "grover" : "grover: " + oracle.label());
    append_hadamard_layer(c);
    for (std::uint64_t i = 0; i < plan.r; ++i) {
        c.append(oracle);
        c.append(diffusion);
    }
    return c;
}

StateVector grover_state(const Circuit& oracle, const GroverPlan& plan) {
    return run(grover_circuit(oracle, plan), StateVector::basis(plan.n));
}

ShotHistogram grover_run(const Circuit& oracle, const GroverPlan& plan, std::uint64_t shots, std::uint64_t seed,
                         const std::optional<NoiseParams>& noise) {
    if (plan.M == 0 && plan.r > 0) {
        throw std::invalid_argument("no marked states: Grover iterations cannot be requested");
    }
    ShotHistogram hist = sample(grover_state(oracle, plan), shots, derive_seed(seed, 0));
    if (noise) {
        hist = inject_bit_flips(hist, noise->p0, derive_seed(seed, 1));
    }
    return hist;
}

DistributedGroverResult distributed_grover(const Circuit& oracle, unsigned parity_qubit, std::uint64_t shots,
                                           std::uint64_t seed, const std::optional<NoiseParams>& noise_even,
                                           const std::optional<NoiseParams>& noise_odd) {
    const SplitResult split = split_circuit(oracle, parity_qubit);
    const TruthTable f = phase_oracle_values(oracle);

    DistributedGroverResult out;
    out.parity_qubit = parity_qubit;
    out.even_plan = make_grover_plan(split.even);
    out.odd_plan = make_grover_plan(split.odd);
    out.even_histogram = grover_run(split.even, out.even_plan, shots, derive_seed(seed, 0), noise_even);
    out.odd_histogram = grover_run(split.odd, out.odd_plan, shots, derive_seed(seed, 1), noise_odd);
    out.even_candidate = out.even_histogram.modal();
    out.odd_candidate = out.odd_histogram.modal();

    const Bits even_full = insert_bit(out.even_candidate, parity_qubit, false);
    const Bits odd_full = insert_bit(out.odd_candidate, parity_qubit, true);
    if (f(even_full)) {
        out.result = even_full;
        out.from_odd = false;
    } else if (f(odd_full)) {
        out.result = odd_full;
        out.from_odd = true;
    } else {
        throw NoVerifiedCandidate("neither sub-machine candidate (" + to_bitstring(even_full, oracle.width()) + ", " +
                                  to_bitstring(odd_full, oracle.width()) + ") satisfies the oracle");
    }
    return out;
}

}  // namespace distq
