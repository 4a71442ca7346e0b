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

#include <span>
#include <vector>

#include "distq/bits.hpp"

namespace distq {

/// Incrementally maintained row space over GF(2) for vectors of `width` bits,
/// kept in reduced row echelon form keyed by each row's highest set bit.
class Gf2RowSpace {
   public:
    explicit Gf2RowSpace(unsigned width);

    unsigned width() const { return width_; }
    unsigned rank() const { return static_cast<unsigned>(rows_.size()); }
    unsigned nullity() const { return width_ - rank(); }

    /// Returns true when `row` was independent of the rows seen so far.
    bool insert(Bits row);

    /// Basis of { s : row · s = 0 for every inserted row }.
    std::vector<Bits> nullspace_basis() const;

   private:
    unsigned width_;
    std::vector<Bits> rows_;  // fully reduced, distinct pivots
};

/// All 2^k combinations of a basis, in Gray-code order starting at 0.
std::vector<Bits> span_of(std::span<const Bits> basis);

/// Every s in {0,1}^n with y · s = 0 for all rows; 0 is dropped when
/// include_zero is false. Sorted ascending.
std::vector<Bits> solve_period(std::span<const Bits> rows, unsigned n, bool include_zero = true);

}  // namespace distq
