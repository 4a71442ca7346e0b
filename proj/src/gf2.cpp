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


#include "distq/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace distq {

namespace {

unsigned pivot_of(Bits row) { return static_cast<unsigned>(63 - std::countl_zero(row)); }

}  // namespace

Gf2RowSpace::Gf2RowSpace(unsigned width) : width_(width) {
    if (width_ == 0 || width_ > 63) {
        throw std::invalid_argument("GF(2) width must be in [1, 63]");
    }
}

bool Gf2RowSpace::insert(Bits row) {
    if (row > low_mask(width_)) {
        throw std::invalid_argument("row wider than the row space");
    }
    for (Bits r : rows_) {
        if (bit_at(row, pivot_of(r))) {
            row ^= r;
        }
    }
    if (row == 0) {
        return false;
    }
    const unsigned p = pivot_of(row);
    for (Bits& r : rows_) {
        if (bit_at(r, p)) {
            r ^= row;
        }
    }
    rows_.push_back(row);
    return true;
}

std::vector<Bits> Gf2RowSpace::nullspace_basis() const {
    Bits pivots = 0;
    for (Bits r : rows_) {
        pivots |= Bits{1} << pivot_of(r);
    }
    std::vector<Bits> basis;
    for (unsigned f = 0; f < width_; ++f) {
        if (bit_at(pivots, f)) {
            continue;
        }
        // Free column f: each row r forces its pivot bit to r_f.
        Bits v = Bits{1} << f;
        for (Bits r : rows_) {
            if (bit_at(r, f)) {
                v |= Bits{1} << pivot_of(r);
            }
        }
        basis.push_back(v);
    }
    return basis;
}

std::vector<Bits> span_of(std::span<const Bits> basis) {
    std::vector<Bits> out;
    out.reserve(std::size_t{1} << basis.size());
    Bits acc = 0;
    out.push_back(acc);
    for (std::size_t i = 1; i < (std::size_t{1} << basis.size()); ++i) {
        acc ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
        out.push_back(acc);
    }
    return out;
}

std::vector<Bits> solve_period(std::span<const Bits> rows, unsigned n, bool include_zero) {
    Gf2RowSpace space(n);
    for (Bits r : rows) {
        space.insert(r);
    }
    const auto basis = space.nullspace_basis();
    std::vector<Bits> out = span_of(basis);
    std::sort(out.begin(), out.end());
    if (!include_zero) {
        out.erase(out.begin());
    }
    return out;
}

}  // namespace distq
