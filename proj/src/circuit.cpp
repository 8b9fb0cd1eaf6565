// Copyright 2026 The psynth Authors
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

#include "psynth/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

namespace psynth {

Gate Gate::cnot(std::size_t control, std::size_t target) {
    if (control == target) {
        throw InputError("CNOT control and target must differ");
    }
    return {GateKind::CNOT, control, target, 0};
}

Gate Gate::from(const CliffordGate &g) {
    switch (g.kind) {
        case CliffordKind::H:
            return {GateKind::H, g.q0, g.q0, 0};
        case CliffordKind::S:
            return {GateKind::S, g.q0, g.q0, 0};
        case CliffordKind::Sdg:
            return {GateKind::Sdg, g.q0, g.q0, 0};
        case CliffordKind::V:
            return {GateKind::V, g.q0, g.q0, 0};
        case CliffordKind::Vdg:
            return {GateKind::Vdg, g.q0, g.q0, 0};
        case CliffordKind::CNOT:
            return cnot(g.q0, g.q1);
    }
    return {};
}

std::optional<CliffordGate> Gate::as_clifford() const {
    switch (kind) {
        case GateKind::H:
            return CliffordGate::h(q0);
        case GateKind::S:
            return CliffordGate::s(q0);
        case GateKind::Sdg:
            return CliffordGate::sdg(q0);
        case GateKind::V:
            return CliffordGate::v(q0);
        case GateKind::Vdg:
            return CliffordGate::vdg(q0);
        case GateKind::CNOT:
            return CliffordGate::cnot(q0, q1);
        case GateKind::Rz:
            return std::nullopt;
    }
    return std::nullopt;
}

namespace {

const char *qasm_name(GateKind k) {
    switch (k) {
        case GateKind::H:
            return "h";
        case GateKind::S:
            return "s";
        case GateKind::Sdg:
            return "sdg";
        case GateKind::V:
            return "sx";
        case GateKind::Vdg:
            return "sxdg";
        case GateKind::Rz:
            return "rz";
        case GateKind::CNOT:
            return "cx";
    }
    return "?";
}

std::string format_angle(double a) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), a);
    return std::string(buf, end);
}

}  // namespace

std::ostream &operator<<(std::ostream &out, const Gate &g) {
    out << qasm_name(g.kind);
    if (g.kind == GateKind::Rz) {
        out << "(" << format_angle(g.angle) << ")";
    }
    out << " " << g.q0;
    if (g.kind == GateKind::CNOT) {
        out << "," << g.q1;
    }
    return out;
}

void Circuit::append(const Gate &g) {
    if (g.q0 >= num_qubits_ || (g.is_two_qubit() && g.q1 >= num_qubits_)) {
        throw InputError("gate qubit index out of range for a " + std::to_string(num_qubits_) + "-qubit circuit");
    }
    if (g.is_two_qubit() && g.q0 == g.q1) {
        throw InputError("CNOT control and target must differ");
    }
    gates_.push_back(g);
}

void Circuit::extend(const Circuit &other) {
    if (other.num_qubits_ != num_qubits_) {
        throw InputError("cannot concatenate circuits with different qubit counts");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

Circuit concat(const Circuit &c1, const Circuit &c2) {
    Circuit out = c1;
    out.extend(c2);
    return out;
}

Metrics metrics(const Circuit &c) {
    Metrics m;
    std::vector<std::size_t> layer(c.num_qubits(), 0);
    std::vector<std::size_t> cx_layer(c.num_qubits(), 0);
    // Whether the last gate on the wire is a single-qubit slot still open for fusion.
    std::vector<char> open(c.num_qubits(), 0);
    for (const auto &g : c.gates()) {
        if (g.is_two_qubit()) {
            m.cnot_count++;
            auto l = std::max(layer[g.q0], layer[g.q1]) + 1;
            layer[g.q0] = layer[g.q1] = l;
            open[g.q0] = open[g.q1] = 0;
            auto cl = std::max(cx_layer[g.q0], cx_layer[g.q1]) + 1;
            cx_layer[g.q0] = cx_layer[g.q1] = cl;
        } else if (!open[g.q0]) {
            layer[g.q0]++;
            open[g.q0] = 1;
        }
    }
    for (std::size_t q = 0; q < c.num_qubits(); q++) {
        m.depth = std::max(m.depth, layer[q]);
        m.two_qubit_depth = std::max(m.two_qubit_depth, cx_layer[q]);
    }
    return m;
}

std::string to_qasm2(const Circuit &c) {
    std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" + std::to_string(c.num_qubits()) + "];\n";
    for (const auto &g : c.gates()) {
        out += qasm_name(g.kind);
        if (g.kind == GateKind::Rz) {
            out += "(" + format_angle(g.angle) + ")";
        }
        out += " q[" + std::to_string(g.q0) + "]";
        if (g.is_two_qubit()) {
            out += ",q[" + std::to_string(g.q1) + "]";
        }
        out += ";\n";
    }
    return out;
}

bool conforms(const Circuit &c, const Topology &t) {
    if (c.num_qubits() > t.num_qubits()) {
        return false;
    }
    return std::all_of(c.gates().begin(), c.gates().end(),
                       [&](const Gate &g) { return !g.is_two_qubit() || t.connected(g.q0, g.q1); });
}

}  // namespace psynth
