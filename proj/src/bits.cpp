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


#include "distq/bits.hpp"

#include <stdexcept>

namespace distq {

std::string to_bitstring(Bits b, unsigned width) {
    std::string out(width, '0');
    for (unsigned q = 0; q < width; ++q) {
        if (bit_at(b, q)) {
            out[width - 1 - q] = '1';
        }
    }
    return out;
}

Bits parse_bitstring(std::string_view text) {
    if (text.empty() || text.size() > 63) {
        throw std::invalid_argument("bitstring must have 1..63 characters");
    }
    Bits b = 0;
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bitstring may only contain '0' and '1': '" + std::string(text) + "'");
        }
        b = (b << 1) | static_cast<Bits>(c == '1');
    }
    return b;
}

}  // namespace distq
