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
#include <map>
#include <stdexcept>
#include <vector>

#include "distq/bits.hpp"
#include "distq/boolean.hpp"
#include "distq/circuit.hpp"
#include "distq/rng.hpp"
#include "distq/statevec.hpp"

namespace distq {

/// H on every qubit, the phase oracle, H on every qubit.
Circuit simon_circuit(const Circuit& oracle);

/// Repeated measurements of simon_circuit on |0...0>.
class SimonSampler {
   public:
    explicit SimonSampler(const Circuit& oracle);

    unsigned width() const { return sampler_.width(); }
    /// Exact Prob(y) of every outcome.
    const std::vector<double>& distribution() const { return probs_; }
    Bits draw(Rng& rng) const { return sampler_.draw(rng); }

   private:
    std::vector<double> probs_;
    OutcomeSampler sampler_;
};

/// One measured y.
Bits simon_sample(const Circuit& oracle, std::uint64_t seed);

inline constexpr unsigned kMaxFourierArity = 12;

/// g(y) = sum_x (-1)^(f(x) + x.y) for every y, as exact integers.
/// Throws std::invalid_argument above kMaxFourierArity.
std::vector<std::int64_t> brute_force_fourier(const TruthTable& f);
/// Same as a map y -> g(y), nonzero entries only.
std::map<Bits, std::int64_t> brute_force_fourier(const DnfFormula& formula);

/// Every s with f(x xor s) = f(x) for all x, ascending (always contains 0).
std::vector<Bits> periods_of(const TruthTable& f);

/// True when f(x xor s) = f(x) for all x.
bool is_period(const TruthTable& f, Bits s);

struct PeriodSearch {
    Bits s = 0;
    std::uint64_t queries_used = 0;
    std::vector<Bits> rows;
};

/// Thrown when the sample budget runs out with two or more candidates left.
class PeriodNotResolved : public std::runtime_error {
   public:
    PeriodNotResolved(const std::string& what, bool all_rows_zero, std::uint64_t queries_used)
        : std::runtime_error(what), all_rows_zero_(all_rows_zero), queries_used_(queries_used) {}

    /// Every sample was 0...0, which is what a constant f produces.
    bool all_rows_zero() const { return all_rows_zero_; }
    std::uint64_t queries_used() const { return queries_used_; }

   private:
    bool all_rows_zero_;
    std::uint64_t queries_used_;
};

/// Samples until at most one nonzero candidate remains. A remaining candidate
/// is checked against the oracle's truth table; when it is not a period, f is
/// aperiodic and s = 0.
PeriodSearch simon_find_period(const Circuit& oracle, std::uint64_t max_queries, std::uint64_t seed);

struct SimonRound {
    unsigned parity_qubit = 0;
    std::uint64_t queries = 0;  // one query = one sample on each half
    unsigned nullity = 0;       // of the combined rows, on n-1 bits
    bool trivial = false;       // only s' = 0 fits both halves
    bool resolved = false;
};

struct DistributedSimonResult {
    Bits s = 0;
    std::uint64_t queries_used = 0;
    unsigned parity_choices_tried = 0;
    std::uint64_t classical_evaluations = 0;
    std::vector<SimonRound> rounds;
};

/// Per-round sample budget: 3(n - 2), at least 1.
std::uint64_t distributed_simon_round_budget(unsigned n);

/// Tries parity qubits 0, 1, ... in turn. Each round samples both halves and
/// pools their rows; a candidate s' is lifted to the parent by inserting a 0
/// at the parity position and checked classically. When every round ends
/// without a verified candidate, 1...1 is checked last, and s = 0 otherwise.
/// Throws std::invalid_argument for arity < 2 or max_queries == 0, and
/// PeriodNotResolved when max_queries runs out before every round finished.
DistributedSimonResult distributed_simon(const DnfFormula& formula, std::uint64_t max_queries, std::uint64_t seed);

}  // namespace distq
