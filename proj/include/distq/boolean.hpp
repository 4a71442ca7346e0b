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
#include <string>
#include <string_view>
#include <vector>

#include "distq/bits.hpp"
#include "distq/circuit.hpp"

namespace distq {

/// Single-output Boolean function given by its value on every input index.
/// Variable x_q is bit q of the index.
class TruthTable {
   public:
    TruthTable(unsigned arity, std::vector<std::uint8_t> outputs);
    static TruthTable zeros(unsigned arity);

    unsigned arity() const { return arity_; }
    std::size_t size() const { return outputs_.size(); }
    bool operator()(Bits input) const { return outputs_.at(input) != 0; }
    const std::vector<std::uint8_t>& outputs() const { return outputs_; }
    void set(Bits input, bool value) { outputs_.at(input) = value ? 1 : 0; }
    std::size_t ones() const;

    bool operator==(const TruthTable&) const = default;

   private:
    unsigned arity_;
    std::vector<std::uint8_t> outputs_;
};

/// Minterm-form DNF. Each term is a full assignment: bit q set means the literal
/// x_q appears positive, clear means x̄_q.
class DnfFormula {
   public:
    explicit DnfFormula(unsigned arity, std::vector<Bits> terms = {});

    unsigned arity() const { return arity_; }
    const std::vector<Bits>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// Human-readable form such as "x0·x1'·x2 + x0'·x1·x2'"; "0" when empty.
    std::string describe() const;

    bool operator==(const DnfFormula&) const = default;

   private:
    unsigned arity_;
    std::vector<Bits> terms_;
};

DnfFormula truth_table_to_dnf(const TruthTable& table);
TruthTable to_truth_table(const DnfFormula& formula);

bool evaluate(const DnfFormula& formula, Bits input);
/// Throws std::invalid_argument when the bitstring length differs from the arity.
bool evaluate(const DnfFormula& formula, std::string_view input);

struct OracleOptions {
    /// Drop X·X pairs left between consecutive terms.
    bool cancel_x_pairs = false;
};

/// Phase oracle |x> -> (-1)^f(x) |x>: per term, X on each negated variable,
/// a full-width MCZ, then the same X gates. Throws for arity < 2.
Circuit dnf_to_phase_oracle(const DnfFormula& formula, OracleOptions options = {});

/// Bit oracle |x>|c> -> |x>|c xor f(x)> on arity+1 qubits; the ancilla is the
/// highest qubit.
Circuit dnf_to_bit_oracle(const DnfFormula& formula, OracleOptions options = {});

// TruthTable text: "ARITY n" then one output bit per line in index order.
std::string to_text(const TruthTable& table);
TruthTable truth_table_from_text(std::string_view text);

// DnfFormula text: "ARITY n" then one term per line as a bitstring (x0 rightmost,
// '1' = positive literal).
std::string to_text(const DnfFormula& formula);
DnfFormula dnf_from_text(std::string_view text);

}  // namespace distq
