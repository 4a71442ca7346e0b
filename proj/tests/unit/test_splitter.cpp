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

#include <json.hpp>
#include <stdexcept>

#include "../support/brute.hpp"
#include "../support/dense.hpp"
#include "distq/splitter.hpp"

using namespace distq;

namespace {

// Parent U restricted to inputs with the parity bit at `value`, against the half.
double split_mismatch(const Circuit& parent, const Circuit& half, unsigned j, bool value) {
    const dense::Matrix u = dense::unitary(parent);
    const dense::Matrix h = dense::unitary(half);
    double worst = 0;
    for (Bits x = 0; x < h.dim; ++x) {
        for (Bits y = 0; y < h.dim; ++y) {
            worst = std::max(worst, std::abs(u(insert_bit(y, j, value), insert_bit(x, j, value)) - h(y, x)));
        }
    }
    return worst;
}

}  // namespace

TEST_CASE("the worked three-bit example splits into two 2-qubit terms") {
    const DnfFormula f(3, {0b101, 0b010});
    const FormulaSplit s = split_formula(f, 0);
    // f_e = x1 x2', f_o = x1' x2 in the parent's naming; the halves renumber
    // x1, x2 as x0, x1.
    CHECK(s.even == DnfFormula(2, {0b01}));
    CHECK(s.odd == DnfFormula(2, {0b10}));

    const SplitResult r = split_circuit(dnf_to_phase_oracle(f), 0);
    CHECK(r.even_terms == 1);
    CHECK(r.odd_terms == 1);
    CHECK(r.even.width() == 2);
    CHECK(depth(r.even).depth == 3);
    CHECK(depth(r.odd).depth == 3);
}

TEST_CASE("property: split halves act as the parent with the parity bit fixed, n <= 3 exhaustive") {
    for (unsigned n = 2; n <= 3; ++n) {
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << (1U << n)); ++code) {
            const DnfFormula f = truth_table_to_dnf(brute::table_from_code(n, code));
            for (bool cancel : {false, true}) {
                const Circuit parent = dnf_to_phase_oracle(f, OracleOptions{cancel});
                for (unsigned j = 0; j < n; ++j) {
                    const SplitResult r = split_circuit(parent, j);
                    CHECK(split_mismatch(parent, r.even, j, false) < 1e-10);
                    CHECK(split_mismatch(parent, r.odd, j, true) < 1e-10);
                    const FormulaSplit fs = split_formula(f, j);
                    CHECK(r.even_terms == fs.even.terms().size());
                    CHECK(r.odd_terms == fs.odd.terms().size());
                }
            }
        }
    }
}

TEST_CASE("two-qubit parents give single-qubit halves with Z") {
    const SplitResult r = split_circuit(dnf_to_phase_oracle(DnfFormula(2, {0b11})), 1);
    CHECK(r.odd.width() == 1);
    CHECK(r.odd.size() == 1);
    CHECK(r.odd.gates()[0] == Gate::z(0));
    CHECK(r.even.empty());
}

TEST_CASE("splitter errors") {
    Circuit bad(3);
    bad.append(Gate::cz(0, 1));
    CHECK_THROWS_AS(split_circuit(bad, 0), SplitError);
    Circuit h_on_parity(2);
    h_on_parity.append(Gate::h(0)).append(Gate::cz(0, 1));
    CHECK_THROWS_AS(split_circuit(h_on_parity, 0), SplitError);
    CHECK_NOTHROW(split_circuit(h_on_parity, 1));
    CHECK_THROWS_AS(split_circuit(Circuit(1), 0), SplitError);
    CHECK_THROWS_AS(split_circuit(Circuit(3), 3), SplitError);
    CHECK_THROWS_AS(split_formula(DnfFormula(1), 0), std::invalid_argument);
    CHECK_THROWS_AS(split_formula(DnfFormula(2), 2), std::invalid_argument);
}

TEST_CASE("empty oracle splits into two empty halves") {
    const SplitResult r = split_circuit(dnf_to_phase_oracle(DnfFormula(3)), 2);
    CHECK(r.even.empty());
    CHECK(r.odd.empty());
    const auto j = nlohmann::json::parse(split_summary_json(r));
    CHECK(j["parity_qubit"] == 2);
    CHECK(j["parent_width"] == 3);
}
