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

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "distq/bits.hpp"
#include "distq/circuit.hpp"
#include "distq/rng.hpp"

namespace distq {

using Amplitude = std::complex<double>;

class StateVector {
   public:
    /// |index> on `width` qubits.
    static StateVector basis(unsigned width, Bits index = 0);
    /// Takes ownership of amplitudes; size must be a power of two.
    static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

    unsigned width() const { return width_; }
    std::size_t dimension() const { return amps_.size(); }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    const Amplitude& operator[](Bits index) const { return amps_[index]; }
    double norm_squared() const;

    /// In-place gate application. Throws std::out_of_range on a qubit beyond
    /// width() and std::invalid_argument on Measure.
    void apply(const Gate& gate);

   private:
    StateVector(unsigned width, std::vector<Amplitude> amps) : width_(width), amps_(std::move(amps)) {}

    unsigned width_;
    std::vector<Amplitude> amps_;
};

StateVector apply(StateVector state, const Gate& gate);

/// Applies every gate of `circuit` in order. Throws std::invalid_argument on a
/// width mismatch or a Measure gate.
StateVector run(const Circuit& circuit, StateVector initial);

/// |amplitude|^2 per basis index.
std::vector<double> probabilities(const StateVector& state);

/// Measured bitstring -> count. Keys are basis indices; iteration order equals
/// lexicographic bitstring order.
class ShotHistogram {
   public:
    explicit ShotHistogram(unsigned width);

    unsigned width() const { return width_; }
    std::uint64_t shots() const { return shots_; }
    const std::map<Bits, std::uint64_t>& counts() const { return counts_; }
    std::uint64_t count(Bits outcome) const;
    double fraction(Bits outcome) const;

    void add(Bits outcome, std::uint64_t count = 1);

    /// Most frequent outcome; ties go to the lexicographically smallest bitstring.
    /// Throws std::logic_error when empty.
    Bits modal() const;

    /// "bitstring,count,fraction" rows sorted by bitstring, with a header line.
    std::string to_csv() const;
    std::string to_json() const;

    bool operator==(const ShotHistogram&) const = default;

   private:
    unsigned width_;
    std::uint64_t shots_ = 0;
    std::map<Bits, std::uint64_t> counts_;
};

/// Inverse-CDF sampler over a fixed outcome distribution.
class OutcomeSampler {
   public:
    explicit OutcomeSampler(const StateVector& state);
    OutcomeSampler(unsigned width, std::span<const double> probabilities);

    unsigned width() const { return width_; }
    Bits draw(Rng& rng) const;

   private:
    unsigned width_;
    std::vector<double> cdf_;
};

/// `shots` i.i.d. measurements of every qubit. Throws std::invalid_argument when
/// shots == 0.
ShotHistogram sample(const StateVector& state, std::uint64_t shots, std::uint64_t rng_seed);

}  // namespace distq
