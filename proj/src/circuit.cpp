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


#include "distq/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace distq {

namespace {

constexpr double kPi = std::numbers::pi;

void require_distinct(const std::vector<Qubit>& qubits) {
    std::vector<Qubit> sorted = qubits;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("gate qubits must be distinct");
    }
}

std::size_t expected_arity(GateKind kind) {
    switch (kind) {
        case GateKind::CNOT:
        case GateKind::CZ:
            return 2;
        case GateKind::MCZ:
        case GateKind::MCX:
            return 0;  // variadic
        default:
            return 1;
    }
}

}  // namespace

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::X: return "X";
        case GateKind::H: return "H";
        case GateKind::Z: return "Z";
        case GateKind::S: return "S";
        case GateKind::Sdg: return "SDG";
        case GateKind::T: return "T";
        case GateKind::Tdg: return "TDG";
        case GateKind::Phase: return "P";
        case GateKind::CNOT: return "CNOT";
        case GateKind::CZ: return "CZ";
        case GateKind::MCZ: return "MCZ";
        case GateKind::MCX: return "MCX";
        case GateKind::Measure: return "M";
    }
    return "?";
}

Gate::Gate(GateKind kind, std::vector<Qubit> qubits, double angle)
    : kind_(kind), qubits_(std::move(qubits)), angle_(angle) {
    const std::size_t arity = expected_arity(kind_);
    if (arity != 0 && qubits_.size() != arity) {
        throw std::invalid_argument(std::string(gate_name(kind_)) + " takes " + std::to_string(arity) + " qubit(s)");
    }
    if (arity == 0 && qubits_.size() < 2) {
        throw std::invalid_argument(std::string(gate_name(kind_)) + " needs at least two qubits");
    }
    require_distinct(qubits_);
    if (kind_ == GateKind::MCZ) {
        std::sort(qubits_.begin(), qubits_.end());
    }
}

Gate Gate::phase(Qubit q, double angle) {
    if (!std::isfinite(angle)) {
        throw std::invalid_argument("phase angle must be finite");
    }
    return Gate(GateKind::Phase, {q}, angle);
}

Gate Gate::mcz(std::vector<Qubit> qubits) { return Gate(GateKind::MCZ, std::move(qubits)); }

Gate Gate::mcx(std::vector<Qubit> controls, Qubit target) {
    controls.push_back(target);
    return Gate(GateKind::MCX, std::move(controls));
}

bool Gate::touches(Qubit q) const { return std::find(qubits_.begin(), qubits_.end(), q) != qubits_.end(); }

Gate Gate::remapped(std::span<const Qubit> map) const {
    Gate out = *this;
    for (Qubit& q : out.qubits_) {
        q = map[q];
    }
    require_distinct(out.qubits_);
    if (out.kind_ == GateKind::MCZ) {
        std::sort(out.qubits_.begin(), out.qubits_.end());
    }
    return out;
}

Circuit::Circuit(unsigned width, std::string label) : width_(width) {
    if (width_ == 0) {
        throw std::invalid_argument("circuit width must be at least 1");
    }
    set_label(std::move(label));
}

void Circuit::set_label(std::string label) {
    if (label.find_first_of("\r\n") != std::string::npos) {
        throw std::invalid_argument("circuit label must be a single line");
    }
    label_ = std::move(label);
}

Circuit& Circuit::append(Gate gate) {
    for (Qubit q : gate.qubits()) {
        if (q >= width_) {
            throw std::out_of_range("qubit " + std::to_string(q) + " out of range for width " + std::to_string(width_));
        }
    }
    gates_.push_back(std::move(gate));
    return *this;
}

Circuit& Circuit::append(const Circuit& other) {
    for (const Gate& g : other.gates()) {
        append(g);
    }
    return *this;
}

bool validate_dnf_form(const Circuit& circuit) {
    return std::all_of(circuit.gates().begin(), circuit.gates().end(), [&](const Gate& g) {
        if (g.is_single_qubit()) {
            return true;
        }
        const bool controlled_z = g.kind() == GateKind::MCZ || g.kind() == GateKind::CZ;
        return controlled_z && g.qubits().size() == circuit.width();
    });
}

bool is_elementary(const Circuit& circuit) {
    return std::all_of(circuit.gates().begin(), circuit.gates().end(),
                       [](const Gate& g) { return g.is_single_qubit() || g.kind() == GateKind::CNOT; });
}

namespace {

class Decomposer {
   public:
    explicit Decomposer(Circuit& out) : out_(out) {}

    void phase(Qubit q, double theta) {
        if (theta == kPi || theta == -kPi) {
            out_.append(Gate::z(q));
        } else if (theta == kPi / 2) {
            out_.append(Gate::s(q));
        } else if (theta == -kPi / 2) {
            out_.append(Gate::sdg(q));
        } else if (theta == kPi / 4) {
            out_.append(Gate::t(q));
        } else if (theta == -kPi / 4) {
            out_.append(Gate::tdg(q));
        } else {
            out_.append(Gate::phase(q, theta));
        }
    }

    void controlled_phase(Qubit a, Qubit b, double theta) {
        if (theta == kPi) {
            out_.append(Gate::h(b));
            out_.append(Gate::cnot(a, b));
            out_.append(Gate::h(b));
            return;
        }
        phase(a, theta / 2);
        phase(b, theta / 2);
        out_.append(Gate::cnot(a, b));
        phase(b, -theta / 2);
        out_.append(Gate::cnot(a, b));
    }

    // Toffoli-free C^2Z: six CNOTs and seven T/T† gates.
    void ccz(Qubit a, Qubit b, Qubit c) {
        out_.append(Gate::cnot(b, c));
        out_.append(Gate::tdg(c));
        out_.append(Gate::cnot(a, c));
        out_.append(Gate::t(c));
        out_.append(Gate::cnot(b, c));
        out_.append(Gate::tdg(c));
        out_.append(Gate::cnot(a, c));
        out_.append(Gate::t(b));
        out_.append(Gate::t(c));
        out_.append(Gate::cnot(a, b));
        out_.append(Gate::t(a));
        out_.append(Gate::tdg(b));
        out_.append(Gate::cnot(a, b));
    }

    // Phase e^{i theta} on the all-ones state of `qubits` (sorted).
    void multi_controlled_phase(const std::vector<Qubit>& qubits, double theta) {
        const std::size_t k = qubits.size();
        if (k == 1) {
            phase(qubits[0], theta);
            return;
        }
        if (k == 2) {
            controlled_phase(qubits[0], qubits[1], theta);
            return;
        }
        if (k == 3 && theta == kPi) {
            ccz(qubits[0], qubits[1], qubits[2]);
            return;
        }
        const Qubit target = qubits[k - 1];
        const Qubit last_control = qubits[k - 2];
        std::vector<Qubit> rest(qubits.begin(), qubits.end() - 2);
        controlled_phase(last_control, target, theta / 2);
        multi_controlled_x(rest, last_control);
        controlled_phase(last_control, target, -theta / 2);
        multi_controlled_x(rest, last_control);
        rest.push_back(target);
        std::sort(rest.begin(), rest.end());
        multi_controlled_phase(rest, theta / 2);
    }

    void multi_controlled_x(const std::vector<Qubit>& controls, Qubit target) {
        if (controls.size() == 1) {
            out_.append(Gate::cnot(controls[0], target));
            return;
        }
        std::vector<Qubit> all = controls;
        all.push_back(target);
        std::sort(all.begin(), all.end());
        out_.append(Gate::h(target));
        multi_controlled_phase(all, kPi);
        out_.append(Gate::h(target));
    }

    void gate(const Gate& g) {
        switch (g.kind()) {
            case GateKind::Measure:
                throw std::invalid_argument("cannot decompose a region containing Measure");
            case GateKind::CZ:
                controlled_phase(g.qubits()[0], g.qubits()[1], kPi);
                return;
            case GateKind::MCZ:
                multi_controlled_phase({g.qubits().begin(), g.qubits().end()}, kPi);
                return;
            case GateKind::MCX:
                multi_controlled_x({g.controls().begin(), g.controls().end()}, g.target());
                return;
            default:
                out_.append(g);
        }
    }

   private:
    Circuit& out_;
};

}  // namespace

Circuit decompose_to_elementary(const Circuit& circuit) {
    Circuit out(circuit.width(), circuit.label());
    Decomposer d(out);
    for (const Gate& g : circuit.gates()) {
        d.gate(g);
    }
    return out;
}

DepthReport depth(const Circuit& circuit) {
    const Circuit elementary = is_elementary(circuit) ? circuit : decompose_to_elementary(circuit);

    // Column types: false = single-qubit layer, true = CNOT layer.
    std::vector<bool> column_is_cnot;
    std::vector<std::size_t> last_column(elementary.width(), 0);  // 1-based; 0 = untouched
    std::vector<bool> in_single_run(elementary.width(), false);

    auto place = [&](std::size_t after, bool cnot) {
        for (std::size_t c = after; c < column_is_cnot.size(); ++c) {
            if (column_is_cnot[c] == cnot) {
                return c + 1;
            }
        }
        column_is_cnot.push_back(cnot);
        return column_is_cnot.size();
    };

    DepthReport report;
    for (const Gate& g : elementary.gates()) {
        ++report.gate_count;
        if (g.is_single_qubit()) {
            const Qubit q = g.qubits()[0];
            if (in_single_run[q]) {
                continue;
            }
            last_column[q] = place(last_column[q], false);
            in_single_run[q] = true;
            continue;
        }
        ++report.cnot_count;
        const Qubit a = g.qubits()[0];
        const Qubit b = g.qubits()[1];
        const std::size_t col = place(std::max(last_column[a], last_column[b]), true);
        last_column[a] = last_column[b] = col;
        in_single_run[a] = in_single_run[b] = false;
    }
    report.depth = column_is_cnot.size();
    report.time_steps = report.depth;
    return report;
}

Circuit cancel_adjacent_x_pairs(const Circuit& circuit) {
    const auto gates = circuit.gates();
    std::vector<bool> removed(gates.size(), false);
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> pending_x(circuit.width(), kNone);
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate& g = gates[i];
        if (g.kind() == GateKind::X) {
            const Qubit q = g.qubits()[0];
            if (pending_x[q] != kNone) {
                removed[pending_x[q]] = removed[i] = true;
                pending_x[q] = kNone;
            } else {
                pending_x[q] = i;
            }
            continue;
        }
        for (Qubit q : g.qubits()) {
            pending_x[q] = kNone;
        }
    }
    Circuit out(circuit.width(), circuit.label());
    for (std::size_t i = 0; i < gates.size(); ++i) {
        if (!removed[i]) {
            out.append(gates[i]);
        }
    }
    return out;
}

std::string to_text(const Circuit& circuit) {
    std::string out = "WIDTH " + std::to_string(circuit.width()) + "\n";
    if (!circuit.label().empty()) {
        out += "LABEL " + circuit.label() + "\n";
    }
    for (const Gate& g : circuit.gates()) {
        out += gate_name(g.kind());
        if (g.kind() == GateKind::Phase) {
            char buf[64];
            auto res = std::to_chars(buf, buf + sizeof buf, g.angle());
            out += "(";
            out.append(buf, res.ptr);
            out += ")";
        }
        for (Qubit q : g.qubits()) {
            out += " " + std::to_string(q);
        }
        out += "\n";
    }
    return out;
}

namespace {

Qubit parse_qubit(const std::string& token, std::size_t line_no) {
    Qubit q = 0;
    auto res = std::from_chars(token.data(), token.data() + token.size(), q);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": bad qubit index '" + token + "'");
    }
    return q;
}

Gate parse_gate(const std::string& name, const std::vector<Qubit>& qs, std::size_t line_no) {
    auto need = [&](std::size_t n) {
        if (qs.size() != n) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": " + name + " takes " +
                                        std::to_string(n) + " qubit(s)");
        }
    };
    if (name.rfind("P(", 0) == 0 && name.back() == ')') {
        need(1);
        const std::string num = name.substr(2, name.size() - 3);
        double angle = 0;
        auto res = std::from_chars(num.data(), num.data() + num.size(), angle);
        if (res.ec != std::errc{} || res.ptr != num.data() + num.size()) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": bad phase angle '" + num + "'");
        }
        return Gate::phase(qs[0], angle);
    }
    if (name == "X") { need(1); return Gate::x(qs[0]); }
    if (name == "H") { need(1); return Gate::h(qs[0]); }
    if (name == "Z") { need(1); return Gate::z(qs[0]); }
    if (name == "S") { need(1); return Gate::s(qs[0]); }
    if (name == "SDG") { need(1); return Gate::sdg(qs[0]); }
    if (name == "T") { need(1); return Gate::t(qs[0]); }
    if (name == "TDG") { need(1); return Gate::tdg(qs[0]); }
    if (name == "M") { need(1); return Gate::measure(qs[0]); }
    if (name == "CNOT") { need(2); return Gate::cnot(qs[0], qs[1]); }
    if (name == "CZ") { need(2); return Gate::cz(qs[0], qs[1]); }
    if (name == "MCZ") { return Gate::mcz(qs); }
    if (name == "MCX") {
        if (qs.size() < 2) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": MCX needs a control and a target");
        }
        return Gate::mcx({qs.begin(), qs.end() - 1}, qs.back());
    }
    throw std::invalid_argument("line " + std::to_string(line_no) + ": unknown gate '" + name + "'");
}

}  // namespace

Circuit circuit_from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::optional<Circuit> circuit;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (!circuit) {
            if (line.rfind("WIDTH ", 0) != 0) {
                throw std::invalid_argument("circuit text must start with 'WIDTH n'");
            }
            circuit.emplace(parse_qubit(line.substr(6), line_no));
            continue;
        }
        if (line.rfind("LABEL ", 0) == 0) {
            circuit->set_label(line.substr(6));
            continue;
        }
        std::istringstream tokens(line);
        std::string name;
        tokens >> name;
        std::vector<Qubit> qs;
        std::string tok;
        while (tokens >> tok) {
            qs.push_back(parse_qubit(tok, line_no));
        }
        circuit->append(parse_gate(name, qs, line_no));
    }
    if (!circuit) {
        throw std::invalid_argument("circuit text must start with 'WIDTH n'");
    }
    return std::move(*circuit);
}

}  // namespace distq
