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


#include "distq/deutsch_jozsa.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "distq/oracle_tools.hpp"
#include "distq/rng.hpp"
#include "distq/splitter.hpp"
#include "distq/statevec.hpp"

namespace distq {

std::string_view to_string(DjAnswer answer) { return answer == DjAnswer::Constant ? "constant" : "balanced"; }

DjVerdict deutsch_jozsa(const Circuit& oracle) {
    Circuit c(oracle.width(), "deutsch-jozsa");
    append_hadamard_layer(c);
    c.append(oracle);
    append_hadamard_layer(c);
    const StateVector out = run(c, StateVector::basis(oracle.width()));
    DjVerdict v;
    v.prob_zero_observed = std::norm(out[0]);
    v.verdict = v.prob_zero_observed > 0.5 ? DjAnswer::Constant : DjAnswer::Balanced;
    v.queries_used = 1;
    return v;
}

DjVerdict distributed_deutsch_jozsa(const DnfFormula& formula, unsigned parity_qubit) {
    const SplitResult split = split_circuit(dnf_to_phase_oracle(formula), parity_qubit);
    const DjVerdict even = deutsch_jozsa(split.even);
    const DjVerdict odd = deutsch_jozsa(split.odd);
    DjVerdict v;
    v.queries_used = even.queries_used + odd.queries_used;
    v.prob_zero_observed = even.prob_zero_observed * odd.prob_zero_observed;
    v.verdict = DjAnswer::Balanced;
    if (even.verdict == DjAnswer::Constant && odd.verdict == DjAnswer::Constant) {
        const FormulaSplit halves = split_formula(formula, parity_qubit);
        v.queries_used += 2;
        if (evaluate(halves.even, Bits{0}) == evaluate(halves.odd, Bits{0})) {
            v.verdict = DjAnswer::Constant;
        }
    }
    return v;
}

std::uint64_t classical_dj_confirmations(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::invalid_argument("epsilon must be in (0, 1)");
    }
    return static_cast<std::uint64_t>(std::ceil(std::log2(1.0 / epsilon) - 1e-12));
}

DjVerdict classical_dj_baseline(const DnfFormula& formula, double epsilon, std::uint64_t seed) {
    const std::uint64_t k = classical_dj_confirmations(epsilon);
    const std::uint64_t dim = std::uint64_t{1} << formula.arity();
    const std::uint64_t draws = std::min(k + 1, dim);
    Rng rng(seed);
    // Partial Fisher-Yates: position i receives a uniform pick from the rest.
    std::vector<Bits> inputs(dim);
    std::iota(inputs.begin(), inputs.end(), Bits{0});
    DjVerdict v;
    v.verdict = DjAnswer::Constant;
    bool reference = false;
    std::uint64_t matches = 0;
    for (std::uint64_t i = 0; i < draws; ++i) {
        std::swap(inputs[i], inputs[i + uniform_below(rng, dim - i)]);
        const bool image = evaluate(formula, inputs[i]);
        ++v.queries_used;
        if (i == 0) {
            reference = image;
        }
        if (image != reference) {
            v.verdict = DjAnswer::Balanced;
            break;
        }
        ++matches;
    }
    v.prob_zero_observed = static_cast<double>(matches) / static_cast<double>(v.queries_used);
    return v;
}

}  // namespace distq
