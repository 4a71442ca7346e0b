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


#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "../support/brute.hpp"
#include "distq/simon.hpp"

using namespace distq;

namespace {

Circuit oracle_of(const TruthTable& t) { return dnf_to_phase_oracle(truth_table_to_dnf(t)); }

}  // namespace

TEST_CASE("Fourier spectrum matches the sum definition for every function, n <= 3") {
    for (unsigned n = 1; n <= 3; ++n) {
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << (1U << n)); ++code) {
            const TruthTable t = brute::table_from_code(n, code);
            const auto g = brute_force_fourier(t);
            const auto ref = brute::walsh(t);
            std::int64_t squares = 0;
            for (Bits y = 0; y < t.size(); ++y) {
                CHECK(g[y] == ref[y]);
                squares += g[y] * g[y];
            }
            CHECK(squares == static_cast<std::int64_t>(t.size() * t.size()));
        }
    }
}

TEST_CASE("two-bit spectra") {
    CHECK(brute_force_fourier(DnfFormula(2)) == std::map<Bits, std::int64_t>{{0, 4}});
    CHECK(brute_force_fourier(DnfFormula(2, {0, 1, 2, 3})) == std::map<Bits, std::int64_t>{{0, -4}});
    // Balanced: +-4 at a single nonzero y.
    const auto parity = brute_force_fourier(DnfFormula(2, {0b01, 0b10}));
    CHECK(parity == std::map<Bits, std::int64_t>{{0b11, 4}});
    // A single 1-preimage: +-2 everywhere.
    const auto single = brute_force_fourier(DnfFormula(2, {0b10}));
    CHECK(single.size() == 4);
    for (const auto& [y, w] : single) {
        CHECK(std::abs(w) == 2);
    }
    CHECK_THROWS_AS(brute_force_fourier(TruthTable::zeros(kMaxFourierArity + 1)), std::invalid_argument);
}

TEST_CASE("two-bit classification: 2 constant, 6 periodic, 8 aperiodic") {
    int counts[3] = {0, 0, 0};
    for (std::uint64_t code = 0; code < 16; ++code) {
        const TruthTable t = brute::table_from_code(2, code);
        const auto p = periods_of(t);
        CHECK(p == brute::periods(t));
        ++counts[p.size() == 4 ? 0 : p.size() == 2 ? 1 : 2];
        if (p.size() == 2) {
            CHECK(2 * t.ones() == t.size());
        }
    }
    CHECK(counts[0] == 2);
    CHECK(counts[1] == 6);
    CHECK(counts[2] == 8);
}

TEST_CASE("Simon distribution is (g(y)/N)^2 for every function, n <= 3") {
    for (unsigned n = 2; n <= 3; ++n) {
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << (1U << n)); ++code) {
            const TruthTable t = brute::table_from_code(n, code);
            const SimonSampler sampler(oracle_of(t));
            const auto ref = brute::walsh(t);
            const double N = static_cast<double>(t.size());
            for (Bits y = 0; y < t.size(); ++y) {
                CHECK(std::abs(sampler.distribution()[y] - (ref[y] / N) * (ref[y] / N)) < 1e-10);
            }
        }
    }
}

TEST_CASE("Simon sampling passes a chi-square test at n = 4") {
    const TruthTable t = brute::table_from_code(4, 0x6A3Cu);
    const SimonSampler sampler(oracle_of(t));
    const auto ref = brute::walsh(t);
    Rng rng(77);
    std::vector<int> counts(16, 0);
    const int shots = 10000;
    for (int i = 0; i < shots; ++i) {
        ++counts[sampler.draw(rng)];
    }
    double chi2 = 0;
    int dof = -1;
    for (Bits y = 0; y < 16; ++y) {
        const double p = (ref[y] / 16.0) * (ref[y] / 16.0);
        if (p == 0) {
            CHECK(counts[y] == 0);
            continue;
        }
        chi2 += (counts[y] - shots * p) * (counts[y] - shots * p) / (shots * p);
        ++dof;
    }
    // Mean dof, sd sqrt(2 dof): 5 sigma above the mean.
    CHECK(chi2 < dof + 5 * std::sqrt(2.0 * dof));
}

TEST_CASE("simon_sample examples") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        CHECK(simon_sample(dnf_to_phase_oracle(DnfFormula(3)), seed) == 0);
        // f = x1 has period 01.
        const Bits y = simon_sample(dnf_to_phase_oracle(DnfFormula(2, {0b10, 0b11})), seed);
        CHECK((y == 0b00 || y == 0b10));
    }
}

TEST_CASE("simon_find_period examples") {
    // f = x0 x1, independent of x2: period 100.
    const TruthTable f100(3, {0, 0, 0, 1, 0, 0, 0, 1});
    CHECK(brute::periods(f100) == std::vector<Bits>{0, 0b100});
    const PeriodSearch a = simon_find_period(oracle_of(f100), 100, 1);
    CHECK(a.s == 0b100);
    for (Bits y : a.rows) {
        CHECK(dot(y, 0b100) == 0);
    }

    const TruthTable xor2(2, {0, 1, 1, 0});
    CHECK(simon_find_period(oracle_of(xor2), 100, 3).s == 0b11);

    const TruthTable aperiodic(3, {1, 0, 0, 0, 0, 0, 0, 0});
    CHECK(simon_find_period(oracle_of(aperiodic), 100, 3).s == 0);

    try {
        simon_find_period(dnf_to_phase_oracle(DnfFormula(3)), 12, 5);
        FAIL("constant f resolved a period");
    } catch (const PeriodNotResolved& e) {
        CHECK(e.all_rows_zero());
        CHECK(e.queries_used() == 12);
    }
}

TEST_CASE("property: simon_find_period recovers every unique period, n <= 3") {
    for (unsigned n = 2; n <= 3; ++n) {
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << (1U << n)); ++code) {
            const TruthTable t = brute::table_from_code(n, code);
            const auto p = brute::periods(t);
            if (p.size() > 2) {
                continue;
            }
            const Bits s = p.size() == 2 ? p[1] : 0;
            const PeriodSearch r = simon_find_period(oracle_of(t), 1000, code);
            CHECK(r.s == s);
            CHECK(r.queries_used >= 1);
            for (Bits y : r.rows) {
                CHECK(dot(y, s) == 0);
            }
        }
    }
}

TEST_CASE("distributed Simon examples") {
    // f = x0: period 10 has a 0 at parity position 0.
    const DistributedSimonResult a = distributed_simon(DnfFormula(2, {0b01, 0b11}), 100, 1);
    CHECK(a.s == 0b10);
    CHECK(a.parity_choices_tried == 1);

    // Period 111 is odd under every parity qubit.
    const TruthTable t(3, {0, 0, 0, 1, 1, 0, 0, 0});
    CHECK(brute::periods(t) == std::vector<Bits>{0, 0b111});
    const DistributedSimonResult b = distributed_simon(truth_table_to_dnf(t), 100, 2);
    CHECK(b.s == 0b111);
    CHECK(b.parity_choices_tried == 3);
    CHECK(b.queries_used <= 3 * 3 * 1 + 3 * 3);

    const TruthTable aperiodic(3, {1, 0, 0, 0, 0, 0, 0, 0});
    const DistributedSimonResult c = distributed_simon(truth_table_to_dnf(aperiodic), 100, 3);
    CHECK(c.s == 0);

    CHECK_THROWS_AS(distributed_simon(DnfFormula(1), 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(distributed_simon(DnfFormula(3), 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(distributed_simon(truth_table_to_dnf(t), 1, 2), PeriodNotResolved);
}

TEST_CASE("property: distributed Simon recovers every unique period within 3n(n-2)+3n queries, n <= 3") {
    for (unsigned n = 2; n <= 3; ++n) {
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << (1U << n)); ++code) {
            const TruthTable t = brute::table_from_code(n, code);
            const auto p = brute::periods(t);
            if (p.size() > 2) {
                continue;
            }
            const DistributedSimonResult r = distributed_simon(truth_table_to_dnf(t), 1000, code + 17);
            CHECK(r.s == (p.size() == 2 ? p[1] : 0));
            CHECK(r.queries_used <= 3 * n * (n - 2) + 3 * n);
            CHECK(r.parity_choices_tried <= n);
        }
    }
}
