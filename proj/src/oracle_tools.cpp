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


#include "distq/oracle_tools.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "distq/statevec.hpp"

namespace distq {

namespace {

bool permutes_basis_states(const Circuit& c) {
    for (const Gate& g : c.gates()) {
        if (g.kind() == GateKind::H || g.kind() == GateKind::Measure) {
            return false;
        }
    }
    return true;
}

// Image of |x> as (basis index, phase) for circuits without H.
std::pair<Bits, Amplitude> track_basis_state(const Circuit& c, Bits x) {
    Amplitude phase = 1.0;
    auto all_set = [&](std::span<const Qubit> qs) {
        for (Qubit q : qs) {
            if (!bit_at(x, q)) {
                return false;
            }
        }
        return true;
    };
    for (const Gate& g : c.gates()) {
        const Qubit q0 = g.qubits()[0];
        switch (g.kind()) {
            case GateKind::X: x ^= Bits{1} << q0; break;
            case GateKind::CNOT:
            case GateKind::MCX:
                if (all_set(g.controls())) {
                    x ^= Bits{1} << g.target();
                }
                break;
            case GateKind::CZ:
            case GateKind::MCZ:
                if (all_set(g.qubits())) {
                    phase = -phase;
                }
                break;
            default:
                // Single-qubit diagonal gate.
                if (bit_at(x, q0)) {
                    StateVector one = StateVector::basis(1, 1);
                    one.apply(Gate(g).remapped(std::vector<Qubit>(q0 + 1, 0)));
                    phase *= one[1];
                }
        }
    }
    return {x, phase};
}

std::pair<Bits, Amplitude> simulate_basis_state(const Circuit& c, Bits x) {
    const StateVector out = run(c, StateVector::basis(c.width(), x));
    const Amplitude a = out[x];
    if (std::abs(std::abs(a) - 1.0) > 1e-9) {
        return {~Bits{0}, a};
    }
    return {x, a};
}

}  // namespace

TruthTable phase_oracle_values(const Circuit& oracle) {
    const bool cheap = permutes_basis_states(oracle);
    const std::size_t dim = std::size_t{1} << oracle.width();
    std::vector<std::uint8_t> out(dim);
    Amplitude reference = 1.0;
    for (Bits x = 0; x < dim; ++x) {
        const auto [image, phase] = cheap ? track_basis_state(oracle, x) : simulate_basis_state(oracle, x);
        if (image != x) {
            throw std::invalid_argument("circuit is not a phase oracle: it moves basis state " +
                                        to_bitstring(x, oracle.width()));
        }
        if (x == 0) {
            reference = phase;
        }
        const Amplitude rel = phase / reference;
        if (std::abs(rel - 1.0) < 1e-9) {
            out[x] = 0;
        } else if (std::abs(rel + 1.0) < 1e-9) {
            out[x] = 1;
        } else {
            throw std::invalid_argument("circuit is not a phase oracle: relative phase is not ±1");
        }
    }
    // Values so far are relative to f(0). A reference of -1 means f(0) = 1;
    // any other global phase is taken as f(0) = 0.
    if (std::abs(reference + 1.0) < 1e-9) {
        for (auto& v : out) {
            v ^= 1;
        }
    }
    return TruthTable(oracle.width(), std::move(out));
}

std::uint64_t count_marked(const Circuit& oracle) { return phase_oracle_values(oracle).ones(); }

void append_hadamard_layer(Circuit& circuit) {
    for (Qubit q = 0; q < circuit.width(); ++q) {
        circuit.append(Gate::h(q));
    }
}

Circuit zero_state_reflection(unsigned width) {
    Circuit c(width, "reflect |0>");
    for (Qubit q = 0; q < width; ++q) {
        c.append(Gate::x(q));
    }
    if (width == 1) {
        c.append(Gate::z(0));
    } else {
        std::vector<Qubit> all(width);
        std::iota(all.begin(), all.end(), Qubit{0});
        c.append(Gate::mcz(all));
    }
    for (Qubit q = 0; q < width; ++q) {
        c.append(Gate::x(q));
    }
    return c;
}

}  // namespace distq
