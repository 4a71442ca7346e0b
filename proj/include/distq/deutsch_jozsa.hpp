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
#include <string_view>

#include "distq/boolean.hpp"
#include "distq/circuit.hpp"

namespace distq {

enum class DjAnswer { Constant, Balanced };

std::string_view to_string(DjAnswer answer);

struct DjVerdict {
    DjAnswer verdict = DjAnswer::Constant;
    std::uint64_t queries_used = 0;
    double prob_zero_observed = 0;
};

/// One exact simulation of H, oracle, H: constant iff Prob(0...0) > 1/2.
DjVerdict deutsch_jozsa(const Circuit& oracle);

/// Runs deutsch_jozsa on both halves of the split oracle. The answer is
/// constant only when both halves are constant with the same value; the two
/// values are compared by evaluating each half once at 0. prob_zero_observed is
/// the product of the two halves' Prob(0...0).
DjVerdict distributed_deutsch_jozsa(const DnfFormula& formula, unsigned parity_qubit);

/// Confirmations needed for error epsilon: ceil(log2(1/epsilon)).
/// Throws std::invalid_argument unless 0 < epsilon < 1.
std::uint64_t classical_dj_confirmations(double epsilon);

/// Draws inputs without replacement. The first image is the reference and the
/// answer is constant once k further draws all match it; any mismatch answers
/// balanced at once. Draws stop early when the inputs run out. prob_zero_observed
/// is the fraction of draws equal to the reference image.
DjVerdict classical_dj_baseline(const DnfFormula& formula, double epsilon, std::uint64_t seed);

}  // namespace distq
