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
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace distq {

using Qubit = std::uint32_t;

enum class GateKind : std::uint8_t {
    X,
    H,
    Z,
    S,
    Sdg,
    T,
    Tdg,
    Phase,  // diag(1, e^{i angle})
    CNOT,   // qubits = {control, target}
    CZ,
    MCZ,  // symmetric; qubits stored sorted
    MCX,  // qubits = {controls..., target}
    Measure,
};

std::string_view gate_name(GateKind kind);

class Gate {
   public:
    static Gate x(Qubit q) { return Gate(GateKind::X, {q}); }
    static Gate h(Qubit q) { return Gate(GateKind::H, {q}); }
    static Gate z(Qubit q) { return Gate(GateKind::Z, {q}); }
    static Gate s(Qubit q) { return Gate(GateKind::S, {q}); }
    static Gate sdg(Qubit q) { return Gate(GateKind::Sdg, {q}); }
    static Gate t(Qubit q) { return Gate(GateKind::T, {q}); }
    static Gate tdg(Qubit q) { return Gate(GateKind::Tdg, {q}); }
    static Gate phase(Qubit q, double angle);
    static Gate cnot(Qubit control, Qubit target) { return Gate(GateKind::CNOT, {control, target}); }
    static Gate cz(Qubit a, Qubit b) { return Gate(GateKind::CZ, {a, b}); }
    static Gate mcz(std::vector<Qubit> qubits);
    static Gate mcx(std::vector<Qubit> controls, Qubit target);
    static Gate measure(Qubit q) { return Gate(GateKind::Measure, {q}); }

    GateKind kind() const { return kind_; }
    std::span<const Qubit> qubits() const { return qubits_; }
    double angle() const { return angle_; }

    bool is_single_qubit() const { return qubits_.size() == 1 && kind_ != GateKind::Measure; }
    /// Target of CNOT/MCX.
    Qubit target() const { return qubits_.back(); }
    std::span<const Qubit> controls() const { return std::span<const Qubit>(qubits_).first(qubits_.size() - 1); }
    bool touches(Qubit q) const;
    /// Returns the gate with every qubit q replaced by map[q].
    Gate remapped(std::span<const Qubit> map) const;

    bool operator==(const Gate&) const = default;

   private:
    Gate(GateKind kind, std::vector<Qubit> qubits, double angle = 0.0);

    GateKind kind_;
    std::vector<Qubit> qubits_;
    double angle_ = 0.0;
};

class Circuit {
   public:
    explicit Circuit(unsigned width, std::string label = {});

    unsigned width() const { return width_; }
    const std::string& label() const { return label_; }
    void set_label(std::string label);
    std::span<const Gate> gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    /// Throws std::out_of_range when a qubit is not below width().
    Circuit& append(Gate gate);
    Circuit& append(const Circuit& other);

    bool operator==(const Circuit&) const = default;

   private:
    unsigned width_;
    std::string label_;
    std::vector<Gate> gates_;
};

/// True iff every gate is single-qubit or a multi-controlled Z over all qubits.
bool validate_dnf_form(const Circuit& circuit);

/// True iff the circuit only holds single-qubit gates and CNOTs.
bool is_elementary(const Circuit& circuit);

/// Rewrites CZ, MCZ and MCX into single-qubit gates and CNOT. Three-qubit MCZ
/// uses the 6-CNOT Clifford+T ladder; larger ones recurse through
/// controlled-phase halving without ancillas. Throws std::invalid_argument on
/// Measure.
Circuit decompose_to_elementary(const Circuit& circuit);

struct DepthReport {
    std::size_t depth = 0;
    std::size_t gate_count = 0;
    std::size_t cnot_count = 0;
    std::size_t time_steps = 0;
};

/// Column count of the elementary form. Each column holds either single-qubit
/// gates or CNOTs, never both, and an uninterrupted run of single-qubit gates on
/// one qubit occupies a single slot. Non-elementary input is decomposed first.
DepthReport depth(const Circuit& circuit);

/// Removes X·X pairs on a qubit when no other gate touches that qubit in between.
Circuit cancel_adjacent_x_pairs(const Circuit& circuit);

// Text format: "WIDTH n", optional "LABEL text", then one gate per line
// ("X 0", "MCZ 0 1 2", "MCX 0 1 2" with the target last, "P(angle) q").
std::string to_text(const Circuit& circuit);
Circuit circuit_from_text(std::string_view text);

}  // namespace distq
