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


#include "distq/simon.hpp"

#include <algorithm>
#include <string>

#include "distq/gf2.hpp"
#include "distq/oracle_tools.hpp"
#include "distq/splitter.hpp"

namespace distq {

Circuit simon_circuit(const Circuit& oracle) {
    Circuit c(oracle.width(), oracle.label().empty() ? "simon" : "simon: " + oracle.label());
    append_hadamard_layer(c);
    c.append(oracle);
    append_hadamard_layer(c);
    return c;
}

SimonSampler::SimonSampler(const Circuit& oracle)
    : probs_(probabilities(run(simon_circuit(oracle), StateVector::basis(oracle.width())))),
      sampler_(oracle.width(), probs_) {}

Bits simon_sample(const Circuit& oracle, std::uint64_t seed) {
    Rng rng(seed);
    return SimonSampler(oracle).draw(rng);
}

std::vector<std::int64_t> brute_force_fourier(const TruthTable& f) {
    if (f.arity() > kMaxFourierArity) {
        throw std::invalid_argument("Fourier transform limited to arity " + std::to_string(kMaxFourierArity));
    }
    const std::size_t dim = f.size();
    std::vector<std::int64_t> g(dim, 0);
    for (Bits y = 0; y < dim; ++y) {
        std::int64_t sum = 0;
        for (Bits x = 0; x < dim; ++x) {
            sum += ((f(x) ? 1U : 0U) ^ dot(x, y)) != 0 ? -1 : 1;
        }
        g[y] = sum;
    }
    return g;
}

std::map<Bits, std::int64_t> brute_force_fourier(const DnfFormula& formula) {
    if (formula.arity() > kMaxFourierArity) {
        throw std::invalid_argument("Fourier transform limited to arity " + std::to_string(kMaxFourierArity));
    }
    const auto g = brute_force_fourier(to_truth_table(formula));
    std::map<Bits, std::int64_t> out;
    for (Bits y = 0; y < g.size(); ++y) {
        if (g[y] != 0) {
            out.emplace(y, g[y]);
        }
    }
    return out;
}

bool is_period(const TruthTable& f, Bits s) {
    if (s >= f.size()) {
        throw std::invalid_argument("candidate period wider than the function");
    }
    for (Bits x = 0; x < f.size(); ++x) {
        if (f(x) != f(x ^ s)) {
            return false;
        }
    }
    return true;
}

std::vector<Bits> periods_of(const TruthTable& f) {
    std::vector<Bits> out;
    for (Bits s = 0; s < f.size(); ++s) {
        if (is_period(f, s)) {
            out.push_back(s);
        }
    }
    return out;
}

PeriodSearch simon_find_period(const Circuit& oracle, std::uint64_t max_queries, std::uint64_t seed) {
    const unsigned n = oracle.width();
    if (n > 63) {
        throw std::invalid_argument("oracle too wide");
    }
    const TruthTable f = phase_oracle_values(oracle);
    const SimonSampler sampler(oracle);
    Rng rng(seed);
    Gf2RowSpace space(n);
    PeriodSearch out;
    bool all_zero = true;
    while (out.queries_used < max_queries) {
        const Bits y = sampler.draw(rng);
        ++out.queries_used;
        out.rows.push_back(y);
        all_zero = all_zero && y == 0;
        space.insert(y);
        if (space.nullity() == 0) {
            out.s = 0;
            return out;
        }
        if (space.nullity() == 1) {
            const Bits c = space.nullspace_basis().front();
            out.s = is_period(f, c) ? c : 0;
            return out;
        }
    }
    throw PeriodNotResolved("period not resolved after " + std::to_string(out.queries_used) + " queries (" +
                                std::to_string(space.nullity()) + " free dimensions left)",
                            all_zero, out.queries_used);
}

std::uint64_t distributed_simon_round_budget(unsigned n) { return n > 2 ? 3 * std::uint64_t{n - 2} : 1; }

DistributedSimonResult distributed_simon(const DnfFormula& formula, std::uint64_t max_queries, std::uint64_t seed) {
    const unsigned n = formula.arity();
    if (n < 2) {
        throw std::invalid_argument("distributed period finding needs arity >= 2");
    }
    if (max_queries == 0) {
        throw std::invalid_argument("max_queries must be positive");
    }
    const TruthTable f = to_truth_table(formula);
    const Circuit oracle = dnf_to_phase_oracle(formula);
    const std::uint64_t budget = distributed_simon_round_budget(n);

    DistributedSimonResult out;
    auto verify = [&](Bits s) {
        // One f(x) versus f(x xor s) comparison per input.
        out.classical_evaluations += f.size();
        return is_period(f, s);
    };

    bool cut_short = false;
    for (unsigned j = 0; j < n && out.queries_used < max_queries; ++j) {
        const SplitResult split = split_circuit(oracle, j);
        const SimonSampler even(split.even);
        const SimonSampler odd(split.odd);
        Rng rng(derive_seed(seed, j));
        Gf2RowSpace space(n - 1);
        SimonRound round;
        round.parity_qubit = j;
        ++out.parity_choices_tried;
        Bits rejected = 0;  // last dimension-1 candidate that failed
        while (round.queries < budget && out.queries_used < max_queries) {
            space.insert(even.draw(rng));
            space.insert(odd.draw(rng));
            ++round.queries;
            ++out.queries_used;
            if (space.nullity() == 0) {
                round.trivial = true;
                break;
            }
            if (space.nullity() == 1) {
                const Bits c = space.nullspace_basis().front();
                if (c != rejected) {
                    const Bits lifted = insert_bit(c, j, false);
                    if (verify(lifted)) {
                        out.s = lifted;
                        round.resolved = true;
                        break;
                    }
                    rejected = c;
                }
            }
        }
        round.nullity = space.nullity();
        if (!round.resolved && !round.trivial && space.nullity() >= 2) {
            for (Bits c : span_of(space.nullspace_basis())) {
                if (c != 0 && verify(insert_bit(c, j, false))) {
                    out.s = insert_bit(c, j, false);
                    round.resolved = true;
                    break;
                }
            }
        }
        cut_short = !round.trivial && !round.resolved && round.queries < budget;
        out.rounds.push_back(round);
        if (round.resolved) {
            return out;
        }
    }
    if (cut_short || out.parity_choices_tried < n) {
        throw PeriodNotResolved("query budget of " + std::to_string(max_queries) +
                                    " ran out before every parity choice was tried",
                                false, out.queries_used);
    }
    // No period with a zero bit exists; 1...1 is the only nonzero option left.
    const Bits ones = low_mask(n);
    out.s = verify(ones) ? ones : 0;
    return out;
}

}  // namespace distq
