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

#ifndef PSYNTH_CIRCUIT_HPP
#define PSYNTH_CIRCUIT_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "psynth/pauli.hpp"
#include "psynth/topology.hpp"

namespace psynth {

enum class GateKind : std::uint8_t { H, S, Sdg, V, Vdg, Rz, CNOT };

struct Gate {
    GateKind kind;
    std::size_t q0 = 0;
    std::size_t q1 = 0;  // CNOT target
    double angle = 0;    // Rz only

    static Gate rz(std::size_t q, double angle) { return {GateKind::Rz, q, q, angle}; }
    static Gate cnot(std::size_t control, std::size_t target);
    static Gate from(const CliffordGate &g);

    bool is_two_qubit() const { return kind == GateKind::CNOT; }
    std::optional<CliffordGate> as_clifford() const;

    bool operator==(const Gate &) const = default;
};

std::ostream &operator<<(std::ostream &out, const Gate &g);

/// Gate list; gates()[0] is applied first.
class Circuit {
   public:
    explicit Circuit(std::size_t num_qubits = 0) : num_qubits_(num_qubits) {}

    std::size_t num_qubits() const { return num_qubits_; }
    const std::vector<Gate> &gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    /// Throws InputError on an out-of-range qubit or a CNOT on a single wire.
    void append(const Gate &g);
    void append(const CliffordGate &g) { append(Gate::from(g)); }
    /// Appends all of `other`'s gates. Qubit counts must match.
    void extend(const Circuit &other);

    bool operator==(const Circuit &) const = default;

   private:
    std::size_t num_qubits_;
    std::vector<Gate> gates_;
};

/// c1 followed by c2.
Circuit concat(const Circuit &c1, const Circuit &c2);

struct Metrics {
    std::size_t cnot_count = 0;
    std::size_t depth = 0;
    std::size_t two_qubit_depth = 0;

    bool operator==(const Metrics &) const = default;
};

/// CNOT count, depth and CNOT depth. Consecutive single-qubit gates on a wire
/// are fused into one U3 slot before the depth is taken.
Metrics metrics(const Circuit &c);

/// OpenQASM 2.0 over one register q, gates h, s, sdg, sx, sxdg, rz, cx.
std::string to_qasm2(const Circuit &c);

/// True iff every CNOT acts on an edge of `t`.
bool conforms(const Circuit &c, const Topology &t);

}  // namespace psynth

#endif
