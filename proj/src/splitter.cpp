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


#include "distq/splitter.hpp"

#include <json.hpp>

namespace distq {

SplitResult split_circuit(const Circuit& oracle, unsigned parity_qubit) {
    const unsigned n = oracle.width();
    if (n < 2) {
        throw SplitError("splitting needs a circuit of width >= 2");
    }
    if (parity_qubit >= n) {
        throw SplitError("parity qubit " + std::to_string(parity_qubit) + " out of range for width " +
                         std::to_string(n));
    }
    if (!validate_dnf_form(oracle)) {
        throw SplitError("circuit is not in DNF form");
    }

    // Old qubit index -> index in the (n-1)-qubit halves.
    std::vector<Qubit> reindex(n, 0);
    for (Qubit q = 0; q < n; ++q) {
        reindex[q] = q < parity_qubit ? q : q - 1;
    }
    std::vector<Qubit> reduced_all;
    for (Qubit q = 0; q < n - 1; ++q) {
        reduced_all.push_back(q);
    }
    const Gate reduced_mcz = reduced_all.size() == 1 ? Gate::z(0) : Gate::mcz(reduced_all);

    const std::string stem = oracle.label().empty() ? std::string("oracle") : oracle.label();
    SplitResult result{Circuit(n - 1, stem + " [even]"), Circuit(n - 1, stem + " [odd]"), parity_qubit, n, 0, 0};
    bool flipped = false;
    for (const Gate& g : oracle.gates()) {
        if (g.is_single_qubit()) {
            if (g.qubits()[0] == parity_qubit) {
                if (g.kind() != GateKind::X) {
                    throw SplitError("non-X gate " + std::string(gate_name(g.kind())) + " on the parity qubit");
                }
                flipped = !flipped;
                continue;
            }
            const Gate moved = g.remapped(reindex);
            result.even.append(moved);
            result.odd.append(moved);
            continue;
        }
        // validate_dnf_form guarantees a full-width controlled Z here. With the
        // parity qubit flipped the term fires when the original bit is 0.
        if (flipped) {
            result.even.append(reduced_mcz);
            ++result.even_terms;
        } else {
            result.odd.append(reduced_mcz);
            ++result.odd_terms;
        }
    }
    return result;
}

FormulaSplit split_formula(const DnfFormula& formula, unsigned parity_var) {
    if (formula.arity() < 2) {
        throw std::invalid_argument("splitting needs arity >= 2");
    }
    if (parity_var >= formula.arity()) {
        throw std::invalid_argument("parity variable out of range");
    }
    std::vector<Bits> even;
    std::vector<Bits> odd;
    for (Bits t : formula.terms()) {
        (bit_at(t, parity_var) ? odd : even).push_back(remove_bit(t, parity_var));
    }
    return {DnfFormula(formula.arity() - 1, std::move(even)), DnfFormula(formula.arity() - 1, std::move(odd))};
}

std::string split_summary_json(const SplitResult& split) {
    nlohmann::ordered_json j;
    j["parent_width"] = split.parent_width;
    j["parity_qubit"] = split.parity_qubit;
    j["even"] = {{"width", split.even.width()}, {"terms", split.even_terms}, {"gates", split.even.size()}};
    j["odd"] = {{"width", split.odd.width()}, {"terms", split.odd_terms}, {"gates", split.odd.size()}};
    return j.dump(2);
}

}  // namespace distq
