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


#include "distq/boolean.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace distq {

namespace {

unsigned checked_arity(unsigned arity) {
    if (arity == 0 || arity > kMaxWidth) {
        throw std::invalid_argument("arity must be in [1, " + std::to_string(kMaxWidth) + "]");
    }
    return arity;
}

// Returns the non-comment lines; the first must be "ARITY n".
unsigned read_arity_header(std::istream& in, std::vector<std::string>& body) {
    std::string line;
    bool have_header = false;
    unsigned arity = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (!have_header) {
            if (line.rfind("ARITY ", 0) != 0) {
                throw std::invalid_argument("expected 'ARITY n' header");
            }
            const std::string num = line.substr(6);
            auto res = std::from_chars(num.data(), num.data() + num.size(), arity);
            if (res.ec != std::errc{} || res.ptr != num.data() + num.size()) {
                throw std::invalid_argument("bad arity '" + num + "'");
            }
            have_header = true;
            continue;
        }
        body.push_back(line);
    }
    if (!have_header) {
        throw std::invalid_argument("expected 'ARITY n' header");
    }
    return arity;
}

// X on every variable that appears negated in `term`.
void decorate_negations(Circuit& c, Bits term, unsigned arity) {
    for (Qubit q = 0; q < arity; ++q) {
        if (!bit_at(term, q)) {
            c.append(Gate::x(q));
        }
    }
}

}  // namespace

TruthTable::TruthTable(unsigned arity, std::vector<std::uint8_t> outputs)
    : arity_(checked_arity(arity)), outputs_(std::move(outputs)) {
    if (outputs_.size() != (std::size_t{1} << arity_)) {
        throw std::invalid_argument("truth table needs 2^arity outputs");
    }
    for (auto& v : outputs_) {
        if (v > 1) {
            throw std::invalid_argument("truth table outputs must be 0 or 1");
        }
    }
}

TruthTable TruthTable::zeros(unsigned arity) {
    return TruthTable(arity, std::vector<std::uint8_t>(std::size_t{1} << checked_arity(arity), 0));
}

std::size_t TruthTable::ones() const { return static_cast<std::size_t>(std::count(outputs_.begin(), outputs_.end(), 1)); }

DnfFormula::DnfFormula(unsigned arity, std::vector<Bits> terms) : arity_(checked_arity(arity)), terms_(std::move(terms)) {
    std::set<Bits> seen;
    for (Bits t : terms_) {
        if (t > low_mask(arity_)) {
            throw std::invalid_argument("term assigns variables beyond the arity");
        }
        if (!seen.insert(t).second) {
            throw std::invalid_argument("duplicate DNF term " + to_bitstring(t, arity_));
        }
    }
}

std::string DnfFormula::describe() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i > 0) {
            out += " + ";
        }
        for (unsigned q = 0; q < arity_; ++q) {
            if (q > 0) {
                out += "·";
            }
            out += "x" + std::to_string(q);
            if (!bit_at(terms_[i], q)) {
                out += "'";
            }
        }
    }
    return out;
}

DnfFormula truth_table_to_dnf(const TruthTable& table) {
    std::vector<Bits> terms;
    for (Bits x = 0; x < table.size(); ++x) {
        if (table(x)) {
            terms.push_back(x);
        }
    }
    return DnfFormula(table.arity(), std::move(terms));
}

TruthTable to_truth_table(const DnfFormula& formula) {
    TruthTable table = TruthTable::zeros(formula.arity());
    for (Bits t : formula.terms()) {
        table.set(t, true);
    }
    return table;
}

bool evaluate(const DnfFormula& formula, Bits input) {
    // A minterm is the conjunction of all literals, true only on its own assignment.
    if (input > low_mask(formula.arity())) {
        throw std::invalid_argument("input wider than formula arity");
    }
    return std::find(formula.terms().begin(), formula.terms().end(), input) != formula.terms().end();
}

bool evaluate(const DnfFormula& formula, std::string_view input) {
    if (input.size() != formula.arity()) {
        throw std::invalid_argument("input has " + std::to_string(input.size()) + " bits, formula arity is " +
                                    std::to_string(formula.arity()));
    }
    return evaluate(formula, parse_bitstring(input));
}

Circuit dnf_to_phase_oracle(const DnfFormula& formula, OracleOptions options) {
    const unsigned n = formula.arity();
    if (n < 2) {
        throw std::invalid_argument("phase oracle needs arity >= 2");
    }
    Circuit c(n, "phase oracle " + formula.describe());
    std::vector<Qubit> all(n);
    std::iota(all.begin(), all.end(), Qubit{0});
    for (Bits term : formula.terms()) {
        decorate_negations(c, term, n);
        c.append(Gate::mcz(all));
        decorate_negations(c, term, n);
    }
    return options.cancel_x_pairs ? cancel_adjacent_x_pairs(c) : c;
}

Circuit dnf_to_bit_oracle(const DnfFormula& formula, OracleOptions options) {
    const unsigned n = formula.arity();
    Circuit c(n + 1, "bit oracle " + formula.describe());
    std::vector<Qubit> inputs(n);
    std::iota(inputs.begin(), inputs.end(), Qubit{0});
    for (Bits term : formula.terms()) {
        decorate_negations(c, term, n);
        if (n == 1) {
            c.append(Gate::cnot(0, 1));
        } else {
            c.append(Gate::mcx(inputs, n));
        }
        decorate_negations(c, term, n);
    }
    return options.cancel_x_pairs ? cancel_adjacent_x_pairs(c) : c;
}

std::string to_text(const TruthTable& table) {
    std::string out = "ARITY " + std::to_string(table.arity()) + "\n";
    for (std::uint8_t v : table.outputs()) {
        out += v ? "1\n" : "0\n";
    }
    return out;
}

TruthTable truth_table_from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> body;
    const unsigned arity = read_arity_header(in, body);
    std::vector<std::uint8_t> outputs;
    for (const std::string& line : body) {
        if (line != "0" && line != "1") {
            throw std::invalid_argument("truth table line must be 0 or 1, got '" + line + "'");
        }
        outputs.push_back(line == "1" ? 1 : 0);
    }
    return TruthTable(arity, std::move(outputs));
}

std::string to_text(const DnfFormula& formula) {
    std::string out = "ARITY " + std::to_string(formula.arity()) + "\n";
    for (Bits t : formula.terms()) {
        out += to_bitstring(t, formula.arity()) + "\n";
    }
    return out;
}

DnfFormula dnf_from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> body;
    const unsigned arity = read_arity_header(in, body);
    std::vector<Bits> terms;
    for (const std::string& line : body) {
        if (line.size() != arity) {
            throw std::invalid_argument("term '" + line + "' does not have " + std::to_string(arity) + " literals");
        }
        terms.push_back(parse_bitstring(line));
    }
    return DnfFormula(arity, std::move(terms));
}

}  // namespace distq
