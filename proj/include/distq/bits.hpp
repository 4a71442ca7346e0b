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

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

namespace distq {

// A computational basis index. Qubit q is bit q of the integer (qubit 0 is the
// least significant bit). Printed bitstrings put qubit 0 rightmost.
using Bits = std::uint64_t;

inline constexpr unsigned kMaxWidth = 24;

inline constexpr Bits low_mask(unsigned width) {
    return width >= 64 ? ~Bits{0} : (Bits{1} << width) - 1;
}

inline constexpr bool bit_at(Bits b, unsigned q) { return ((b >> q) & 1U) != 0; }

/// Parity of the bitwise AND, i.e. the GF(2) dot product x·y.
inline constexpr unsigned dot(Bits x, Bits y) { return static_cast<unsigned>(std::popcount(x & y) & 1); }

inline constexpr unsigned hamming_distance(Bits a, Bits b) { return static_cast<unsigned>(std::popcount(a ^ b)); }

/// Deletes bit `pos`, shifting the higher bits down by one.
inline constexpr Bits remove_bit(Bits b, unsigned pos) {
    const Bits low = b & low_mask(pos);
    const Bits high = (b >> (pos + 1)) << pos;
    return low | high;
}

/// Inverse of remove_bit: opens a slot at `pos` and stores `value` there.
inline constexpr Bits insert_bit(Bits b, unsigned pos, bool value) {
    const Bits low = b & low_mask(pos);
    const Bits high = (b >> pos) << (pos + 1);
    return low | high | (value ? (Bits{1} << pos) : Bits{0});
}

/// Renders `b` as `width` characters, qubit 0 rightmost.
std::string to_bitstring(Bits b, unsigned width);

/// Parses a bitstring written with qubit 0 rightmost. Throws std::invalid_argument
/// on characters other than '0'/'1' or when the string is longer than 63 bits.
Bits parse_bitstring(std::string_view text);

}  // namespace distq
