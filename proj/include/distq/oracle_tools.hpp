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

#include "distq/boolean.hpp"
#include "distq/circuit.hpp"

namespace distq {

/// Reads f off a phase oracle by following each basis state through it.
/// Throws std::invalid_argument when the circuit does not act as
/// |x> -> ±|x> (up to a common global phase).
TruthTable phase_oracle_values(const Circuit& oracle);

/// Number of basis states the phase oracle marks with -1.
std::uint64_t count_marked(const Circuit& oracle);

/// H on every qubit.
void append_hadamard_layer(Circuit& circuit);

/// Phase oracle flipping only |0...0>; valid for any width >= 1.
Circuit zero_state_reflection(unsigned width);

}  // namespace distq
