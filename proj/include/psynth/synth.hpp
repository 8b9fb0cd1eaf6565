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

#ifndef PSYNTH_SYNTH_HPP
#define PSYNTH_SYNTH_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "psynth/circuit.hpp"
#include "psynth/pauli.hpp"
#include "psynth/tableau.hpp"
#include "psynth/topology.hpp"

namespace psynth {

enum class SynthMode { ArbitraryOrder, CommutingSets };

/// Mutable state of one synthesis run.
///
/// For every i the gadget gadgets()[i] is original gadget i conjugated by all
/// Clifford gates placed so far. With C the circuit, T the tableau and R the
/// product of unfinished gadgets (any fixed order), U_T * R * U_C equals the
/// product of the original gadgets in emitted_order() followed by the same
/// unfinished order.
class SynthesisState {
   public:
    using Observer = std::function<void(const SynthesisState &)>;

    explicit SynthesisState(const PauliPolynomial &poly, Observer observer = {});

    std::size_t num_qubits() const { return circuit_.num_qubits(); }
    const std::vector<PauliGadget> &gadgets() const { return gadgets_; }
    bool finished(std::size_t index) const { return finished_[index] != 0; }
    /// Unfinished gadget indices, increasing.
    std::vector<std::size_t> remaining() const;
    const Circuit &circuit() const { return circuit_; }
    const CliffordTableau &tableau() const { return tableau_; }
    const std::vector<std::size_t> &emitted_order() const { return emitted_; }

    /// Qubits of the subproblem being worked on. Informational only.
    const QubitSet &active() const { return active_; }
    void set_active(QubitSet active) { active_ = std::move(active); }

    /// Appends g to the circuit, conjugates every unfinished gadget by g and
    /// prepends g^dagger to the tableau.
    void place(const CliffordGate &g);

    /// Places H for an X leg or V for a Y leg of each listed gadget at `qubit`,
    /// at most one gate per letter present. Listed legs at `qubit` are Z or I after.
    std::vector<CliffordGate> diagonalize_qubit(std::span<const std::size_t> subset, std::size_t qubit);

    /// Clears the pivot leg of as many listed gadgets as possible. Every listed
    /// gadget must carry Z on the pivot. If one of them is I on the neighbor, two
    /// CNOTs move the pivot legs of those gadgets onto the neighbor. Otherwise the
    /// rule among Z/Y (no gate), Z/X (S on neighbor) and X/Y (H on neighbor) that
    /// matches the most gadgets is applied with a CNOT(pivot, neighbor).
    std::vector<CliffordGate> disconnect(std::size_t pivot, std::size_t neighbor, std::span<const std::size_t> subset);

    /// Emits a gadget with at most one leg: diagonalizes the leg and appends
    /// Rz(angle). A gadget without legs is a global phase and emits nothing.
    /// Throws InputError for a gadget with two or more legs.
    void emit_rotation(std::size_t index);

   private:
    void notify() const;

    std::vector<PauliGadget> gadgets_;
    std::vector<char> finished_;
    std::vector<std::size_t> live_;
    Circuit circuit_;
    CliffordTableau tableau_;
    std::vector<std::size_t> emitted_;
    QubitSet active_;
    Observer observer_;
};

struct SynthConfig {
    int k = 10;
    SynthMode mode = SynthMode::ArbitraryOrder;
    bool allow_permutation = true;
    /// Called after every placed gate and emitted rotation.
    SynthesisState::Observer observer;
};

struct SynthesisResult {
    Circuit circuit;
    /// Original gadget indices in the order they were implemented.
    std::vector<std::size_t> emitted_order;
    /// Logical qubit r is on wire permutation[r] at the end of the circuit.
    QubitPermutation permutation;
    Metrics metrics;
};

/// Architecture-aware synthesis of `poly` on `topo`. Every CNOT of the result
/// lies on a topology edge and the circuit implements the gadgets in
/// emitted_order up to global phase and the reported permutation.
/// Throws InputError on a qubit-count mismatch or k <= 0.
SynthesisResult synthesize(const PauliPolynomial &poly, const Topology &topo, const SynthConfig &cfg = {});

/// Baseline: every gadget in its original order as a diagonalized CNOT ladder
/// along a Steiner tree of its legs, with Rz at the root and the ladder undone.
SynthesisResult naive_synthesize(const PauliPolynomial &poly, const Topology &topo);

/// k * #I + longest non-I run - shortest non-I run (runs are maximal and contiguous).
long cost_c(std::span<const PauliLetter> column, int k);

/// Letters of the listed gadgets at `qubit`, in list order.
std::vector<PauliLetter> column(const std::vector<PauliGadget> &gadgets, std::span<const std::size_t> subset,
                                std::size_t qubit);

/// argmax of cost_c over non-cutting active qubits; ties go to the lowest index.
std::size_t pick_pivot(const std::vector<PauliGadget> &gadgets, std::span<const std::size_t> subset,
                       const QubitSet &active, const Topology &topo, int k);

/// argmax of cost_c over the active neighbors of `pivot`; ties go to the lowest
/// index. Throws InputError when the pivot has no active neighbor.
std::size_t pick_neighbor(std::size_t pivot, const std::vector<PauliGadget> &gadgets,
                          std::span<const std::size_t> subset, const QubitSet &active, const Topology &topo, int k);

struct LetterPartition {
    std::vector<std::size_t> i, x, y, z;

    std::vector<std::size_t> &operator[](PauliLetter p);
    const std::vector<std::size_t> &operator[](PauliLetter p) const;
};

/// Splits the listed gadgets by their letter at `qubit`, keeping list order.
LetterPartition partition_on_qubit(const std::vector<PauliGadget> &gadgets, std::span<const std::size_t> subset,
                                   std::size_t qubit);

/// Consecutive runs of mutually commuting gadgets: a gadget joins the current
/// set if it commutes with all of its members, otherwise it starts a new set.
std::vector<std::vector<std::size_t>> partition_commuting_sets(const PauliPolynomial &poly);

}  // namespace psynth

#endif
