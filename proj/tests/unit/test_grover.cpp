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
#include <numbers>
#include <stdexcept>

#include "../support/brute.hpp"
#include "distq/grover.hpp"
#include "distq/oracle_tools.hpp"

using namespace distq;

namespace {

// Textbook iteration on a real amplitude vector: flip marked signs, then
// reflect every amplitude about the mean.
std::vector<double> reference_grover(const TruthTable& f, std::uint64_t r) {
    const double a = 1.0 / std::sqrt(static_cast<double>(f.size()));
    std::vector<double> psi(f.size(), a);
    for (std::uint64_t i = 0; i < r; ++i) {
        double mean = 0;
        for (Bits x = 0; x < f.size(); ++x) {
            if (f(x)) {
                psi[x] = -psi[x];
            }
            mean += psi[x];
        }
        mean /= static_cast<double>(f.size());
        for (double& v : psi) {
            v = 2 * mean - v;
        }
    }
    return psi;
}

Circuit marked_oracle(unsigned n, std::vector<Bits> marked) { return dnf_to_phase_oracle(DnfFormula(n, marked)); }

}  // namespace

TEST_CASE("plan: iteration count and predicted success") {
    const GroverPlan p4 = make_grover_plan(4, 1);
    CHECK(p4.N == 16);
    CHECK(p4.r == 3);
    CHECK(p4.theta == doctest::Approx(std::asin(0.25)));
    CHECK(p4.predicted_success == doctest::Approx(std::pow(std::sin(7 * std::asin(0.25)), 2)));
    CHECK(std::abs(p4.predicted_success - 0.961) < 0.005);

    const GroverPlan p3 = make_grover_plan(3, 1);
    CHECK(p3.r == 2);
    CHECK(std::abs(p3.predicted_success - 0.945) < 0.005);

    const GroverPlan empty = make_grover_plan(3, 0);
    CHECK(empty.r == 0);
    CHECK(empty.predicted_success == 0.0);
    CHECK_THROWS_AS(make_grover_plan(3, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_grover_plan(2, 5), std::invalid_argument);
    CHECK(make_grover_plan(3, 1, 5).r == 5);
    CHECK(make_grover_plan(2, 4).predicted_success <= 1.0);
}

TEST_CASE("property: ideal success equals sin^2((2r+1) theta), n <= 5, M in {1, 2}") {
    for (unsigned n = 2; n <= 5; ++n) {
        for (std::uint64_t m = 1; m <= 2; ++m) {
            std::vector<Bits> marked;
            for (std::uint64_t i = 0; i < m; ++i) {
                marked.push_back((Bits{5} * i + 3) & low_mask(n));
            }
            const Circuit oracle = marked_oracle(n, marked);
            const GroverPlan plan = make_grover_plan(oracle);
            CHECK(plan.M == m);
            const StateVector s = grover_state(oracle, plan);
            const TruthTable f = to_truth_table(DnfFormula(n, marked));
            const auto ref = reference_grover(f, plan.r);
            double success = 0;
            for (Bits x = 0; x < f.size(); ++x) {
                CHECK(std::abs(std::norm(s[x]) - ref[x] * ref[x]) < 1e-9);
                success += f(x) ? std::norm(s[x]) : 0.0;
            }
            CHECK(std::abs(success - plan.predicted_success) < 1e-9);
        }
    }
}

TEST_CASE("ideal Grover, n = 4 and n = 3") {
    const Circuit o4 = marked_oracle(4, {0b1111});
    CHECK(std::abs(std::norm(grover_state(o4, make_grover_plan(o4))[0b1111]) - 0.96) < 0.01);
    const Circuit o3 = marked_oracle(3, {0b111});
    CHECK(std::abs(std::norm(grover_state(o3, make_grover_plan(o3, 2))[0b111]) - 0.95) < 0.01);
    const ShotHistogram h = grover_run(o4, make_grover_plan(o4), 8096, 7);
    CHECK(h.modal() == 0b1111);
}

TEST_CASE("empty oracle with r = 0 gives a uniform histogram") {
    const Circuit oracle = dnf_to_phase_oracle(DnfFormula(3));
    const GroverPlan plan = make_grover_plan(oracle);
    CHECK(plan.r == 0);
    const ShotHistogram h = grover_run(oracle, plan, 8000, 3);
    const double sigma = std::sqrt(0.125 * 0.875 / 8000.0);
    for (Bits x = 0; x < 8; ++x) {
        CHECK(std::abs(h.fraction(x) - 0.125) < 5 * sigma);
    }
    GroverPlan forced = plan;
    forced.r = 1;
    CHECK_THROWS_AS(grover_run(oracle, forced, 10, 1), std::invalid_argument);
}

TEST_CASE("grover circuit layout") {
    const Circuit oracle = marked_oracle(3, {0b101});
    const GroverPlan plan = make_grover_plan(oracle);
    const Circuit c = grover_circuit(oracle, plan);
    const Circuit diffusion_core = zero_state_reflection(3);
    CHECK(c.size() == 3 + plan.r * (oracle.size() + 6 + diffusion_core.size()));
    CHECK_THROWS_AS(grover_circuit(oracle, make_grover_plan(4, 1)), std::invalid_argument);
}

TEST_CASE("noise at p0 = 1/2 washes the peak out") {
    const Circuit o4 = marked_oracle(4, {0b1111});
    const ShotHistogram h = grover_run(o4, make_grover_plan(o4), 20000, 1, NoiseParams::from_p0(0.5));
    const double sigma = std::sqrt(1.0 / 16 * 15.0 / 16 / 20000);
    CHECK(std::abs(h.fraction(0b1111) - 1.0 / 16) < 5 * sigma);
    CHECK(grover_run(o4, make_grover_plan(o4), 500, 4, NoiseParams::from_p0(0.2)) ==
          grover_run(o4, make_grover_plan(o4), 500, 4, NoiseParams::from_p0(0.2)));
}

TEST_CASE("distributed Grover on the four-qubit target") {
    const Circuit o4 = marked_oracle(4, {0b1111});
    const DistributedGroverResult r = distributed_grover(o4, 0, 8096, 11);
    CHECK(r.result == 0b1111);
    CHECK(r.from_odd);
    CHECK(r.odd_histogram.modal() == 0b111);
    CHECK(std::abs(r.odd_histogram.fraction(0b111) - 0.95) < 0.02);
    CHECK(r.even_plan.M == 0);
    CHECK(r.even_plan.r == 0);
    CHECK(r.odd_plan.r == 2);
}

TEST_CASE("distributed Grover: even target is found by the even machine") {
    const Circuit o = marked_oracle(3, {0b110});
    const DistributedGroverResult r = distributed_grover(o, 0, 4000, 2);
    CHECK(r.result == 0b110);
    CHECK_FALSE(r.from_odd);
    CHECK(r.even_candidate == 0b11);
}

TEST_CASE("property: distributed Grover finds every single target, n = 3, every parity qubit") {
    for (Bits target = 0; target < 8; ++target) {
        for (unsigned j = 0; j < 3; ++j) {
            const DistributedGroverResult r = distributed_grover(marked_oracle(3, {target}), j, 2000, target * 7 + j);
            CHECK(r.result == target);
            CHECK(r.from_odd == bit_at(target, j));
        }
    }
}

TEST_CASE("distributed Grover without a satisfying input fails") {
    CHECK_THROWS_AS(distributed_grover(dnf_to_phase_oracle(DnfFormula(3)), 1, 1000, 1), NoVerifiedCandidate);
}
