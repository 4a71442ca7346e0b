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


#include "distq/statevec.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace distq {

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2;

Bits mask_of(std::span<const Qubit> qubits) {
    Bits m = 0;
    for (Qubit q : qubits) {
        m |= Bits{1} << q;
    }
    return m;
}

void apply_diagonal_phase(std::vector<Amplitude>& amps, Qubit q, Amplitude phase) {
    const Bits bit = Bits{1} << q;
    for (Bits i = 0; i < amps.size(); ++i) {
        if (i & bit) {
            amps[i] *= phase;
        }
    }
}

}  // namespace

StateVector StateVector::basis(unsigned width, Bits index) {
    if (width == 0 || width > kMaxWidth) {
        throw std::invalid_argument("state width must be in [1, " + std::to_string(kMaxWidth) + "]");
    }
    std::vector<Amplitude> amps(std::size_t{1} << width);
    if (index >= amps.size()) {
        throw std::out_of_range("basis index out of range");
    }
    amps[index] = 1.0;
    return StateVector(width, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
    const std::size_t n = amplitudes.size();
    if (n < 2 || (n & (n - 1)) != 0) {
        throw std::invalid_argument("amplitude count must be a power of two >= 2");
    }
    return StateVector(static_cast<unsigned>(std::countr_zero(n)), std::move(amplitudes));
}

double StateVector::norm_squared() const {
    double s = 0;
    for (const Amplitude& a : amps_) {
        s += std::norm(a);
    }
    return s;
}

void StateVector::apply(const Gate& gate) {
    for (Qubit q : gate.qubits()) {
        if (q >= width_) {
            throw std::out_of_range("qubit " + std::to_string(q) + " out of range for width " + std::to_string(width_));
        }
    }
    const auto qs = gate.qubits();
    switch (gate.kind()) {
        case GateKind::X: {
            const Bits bit = Bits{1} << qs[0];
            for (Bits i = 0; i < amps_.size(); ++i) {
                if (!(i & bit)) {
                    std::swap(amps_[i], amps_[i | bit]);
                }
            }
            return;
        }
        case GateKind::H: {
            const Bits bit = Bits{1} << qs[0];
            for (Bits i = 0; i < amps_.size(); ++i) {
                if (!(i & bit)) {
                    const Amplitude a = amps_[i];
                    const Amplitude b = amps_[i | bit];
                    amps_[i] = (a + b) * kInvSqrt2;
                    amps_[i | bit] = (a - b) * kInvSqrt2;
                }
            }
            return;
        }
        case GateKind::Z: apply_diagonal_phase(amps_, qs[0], -1.0); return;
        case GateKind::S: apply_diagonal_phase(amps_, qs[0], Amplitude(0, 1)); return;
        case GateKind::Sdg: apply_diagonal_phase(amps_, qs[0], Amplitude(0, -1)); return;
        case GateKind::T: apply_diagonal_phase(amps_, qs[0], Amplitude(kInvSqrt2, kInvSqrt2)); return;
        case GateKind::Tdg: apply_diagonal_phase(amps_, qs[0], Amplitude(kInvSqrt2, -kInvSqrt2)); return;
        case GateKind::Phase: apply_diagonal_phase(amps_, qs[0], std::polar(1.0, gate.angle())); return;
        case GateKind::CZ:
        case GateKind::MCZ: {
            const Bits m = mask_of(qs);
            for (Bits i = 0; i < amps_.size(); ++i) {
                if ((i & m) == m) {
                    amps_[i] = -amps_[i];
                }
            }
            return;
        }
        case GateKind::CNOT:
        case GateKind::MCX: {
            const Bits controls = mask_of(gate.controls());
            const Bits target = Bits{1} << gate.target();
            for (Bits i = 0; i < amps_.size(); ++i) {
                if ((i & controls) == controls && !(i & target)) {
                    std::swap(amps_[i], amps_[i | target]);
                }
            }
            return;
        }
        case GateKind::Measure:
            throw std::invalid_argument("Measure cannot be applied to a state vector; use sample()");
    }
}

StateVector apply(StateVector state, const Gate& gate) {
    state.apply(gate);
    return state;
}

StateVector run(const Circuit& circuit, StateVector initial) {
    if (circuit.width() != initial.width()) {
        throw std::invalid_argument("circuit width " + std::to_string(circuit.width()) + " != state width " +
                                    std::to_string(initial.width()));
    }
    for (const Gate& g : circuit.gates()) {
        initial.apply(g);
    }
    return initial;
}

std::vector<double> probabilities(const StateVector& state) {
    std::vector<double> p(state.dimension());
    for (std::size_t i = 0; i < p.size(); ++i) {
        p[i] = std::norm(state[i]);
    }
    return p;
}

ShotHistogram::ShotHistogram(unsigned width) : width_(width) {
    if (width_ == 0 || width_ > 63) {
        throw std::invalid_argument("histogram width must be in [1, 63]");
    }
}

std::uint64_t ShotHistogram::count(Bits outcome) const {
    auto it = counts_.find(outcome);
    return it == counts_.end() ? 0 : it->second;
}

double ShotHistogram::fraction(Bits outcome) const {
    return shots_ == 0 ? 0.0 : static_cast<double>(count(outcome)) / static_cast<double>(shots_);
}

void ShotHistogram::add(Bits outcome, std::uint64_t count) {
    if (outcome > low_mask(width_)) {
        throw std::out_of_range("outcome wider than histogram");
    }
    if (count == 0) {
        return;
    }
    counts_[outcome] += count;
    shots_ += count;
}

Bits ShotHistogram::modal() const {
    if (counts_.empty()) {
        throw std::logic_error("modal() of an empty histogram");
    }
    auto best = counts_.begin();
    for (auto it = counts_.begin(); it != counts_.end(); ++it) {
        if (it->second > best->second) {
            best = it;
        }
    }
    return best->first;
}

std::string ShotHistogram::to_csv() const {
    std::ostringstream out;
    out.precision(17);
    out << "bitstring,count,fraction\n";
    for (const auto& [outcome, n] : counts_) {
        out << to_bitstring(outcome, width_) << ',' << n << ',' << fraction(outcome) << '\n';
    }
    return out.str();
}

std::string ShotHistogram::to_json() const {
    nlohmann::ordered_json j;
    j["width"] = width_;
    j["shots"] = shots_;
    auto& counts = j["counts"] = nlohmann::ordered_json::object();
    auto& fractions = j["fractions"] = nlohmann::ordered_json::object();
    for (const auto& [outcome, n] : counts_) {
        counts[to_bitstring(outcome, width_)] = n;
        fractions[to_bitstring(outcome, width_)] = fraction(outcome);
    }
    return j.dump(2);
}

OutcomeSampler::OutcomeSampler(const StateVector& state)
    : OutcomeSampler(state.width(), probabilities(state)) {}

OutcomeSampler::OutcomeSampler(unsigned width, std::span<const double> probabilities)
    : width_(width), cdf_(probabilities.size()) {
    // Entries below this are rounding residue of exactly-zero amplitudes.
    constexpr double kNoiseFloor = 1e-24;
    double acc = 0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        acc += probabilities[i] < kNoiseFloor ? 0.0 : probabilities[i];
        cdf_[i] = acc;
    }
    if (acc <= 0) {
        throw std::invalid_argument("outcome distribution has zero mass");
    }
    for (double& c : cdf_) {
        c /= acc;
    }
}

Bits OutcomeSampler::draw(Rng& rng) const {
    const double u = uniform01(rng);
    // upper_bound never lands on a zero-probability outcome: its CDF entry
    // equals its predecessor's, which is already <= u.
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    if (it == cdf_.end()) {
        --it;
    }
    return static_cast<Bits>(it - cdf_.begin());
}

ShotHistogram sample(const StateVector& state, std::uint64_t shots, std::uint64_t rng_seed) {
    if (shots == 0) {
        throw std::invalid_argument("shots must be at least 1");
    }
    const OutcomeSampler sampler(state);
    Rng rng(rng_seed);
    ShotHistogram hist(state.width());
    for (std::uint64_t s = 0; s < shots; ++s) {
        hist.add(sampler.draw(rng));
    }
    return hist;
}

}  // namespace distq
