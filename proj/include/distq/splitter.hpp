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

#include <stdexcept>
#include <string>

#include "distq/boolean.hpp"
#include "distq/circuit.hpp"

namespace distq {

class SplitError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Even/odd halves of a DNF-form phase oracle on parent_width - 1 qubits each.
/// `even` acts as the parent with the parity qubit held at 0, `odd` at 1.
struct SplitResult {
    Circuit even;
    Circuit odd;
    unsigned parity_qubit = 0;
    unsigned parent_width = 0;
    std::size_t even_terms = 0;
    std::size_t odd_terms = 0;
};

/// Routes each full-width MCZ to the even or odd half according to whether an
/// odd number of X gates currently sit on the parity qubit, deleting the parity
/// qubit from every gate. A reduced MCZ over a single qubit becomes Z.
/// Throws SplitError when the circuit is not in DNF form or a non-X gate acts on
/// the parity qubit.
SplitResult split_circuit(const Circuit& oracle, unsigned parity_qubit);

struct FormulaSplit {
    DnfFormula even;
    DnfFormula odd;
};

/// Terms with x̄_j go to `even`, terms with x_j to `odd`, each with the literal
/// removed. Requires arity >= 2 and parity_var < arity.
FormulaSplit split_formula(const DnfFormula& formula, unsigned parity_var);

/// JSON summary written next to the split circuits by the CLI.
std::string split_summary_json(const SplitResult& split);

}  // namespace distq
