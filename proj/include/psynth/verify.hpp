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

#ifndef PSYNTH_VERIFY_HPP
#define PSYNTH_VERIFY_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>

#include "psynth/circuit.hpp"
#include "psynth/pauli.hpp"
#include "psynth/synth.hpp"
#include "psynth/tableau.hpp"

// Dense 2^q x 2^q oracles. Qubit j is bit j of the basis-state index.
namespace psynth::verify {

using DenseUnitary = Eigen::MatrixXcd;

/// Largest supported register for dense matrices.
constexpr std::size_t kMaxQubits = 12;

/// Throws InputError when q exceeds kMaxQubits.
void check_size(std::size_t num_qubits);

DenseUnitary identity(std::size_t num_qubits);

/// Dense (x) letters, signed.
DenseUnitary pauli_matrix(const PauliRow &p);
DenseUnitary pauli_matrix(const PauliString &s);

/// exp(-i angle/2 P) = cos(angle/2) I - i sin(angle/2) P.
DenseUnitary gadget_unitary(const PauliGadget &g);

/// gadgets in `order` applied left to right (order[0] first).
DenseUnitary product_unitary(const PauliPolynomial &poly, std::span<const std::size_t> order);
/// All gadgets in their stored order.
DenseUnitary product_unitary(const PauliPolynomial &poly);

/// Applies `g` after `u` in place: u <- G u.
void apply_gate(DenseUnitary &u, const Gate &g);

/// Product of the gate matrices; the first gate is applied first.
DenseUnitary circuit_unitary(const Circuit &c);

/// exp(-i t/2 * sum_n angle_n P_n) through a Hermitian eigendecomposition.
DenseUnitary exact_unitary(const PauliPolynomial &poly, double t);

/// The relabeling that moves wire perm[r] to wire r.
DenseUnitary permutation_unitary(const QubitPermutation &perm);

/// max |u1 - e^{i gamma} Pi(perm) u2| over entries, minimized over the phase by
/// aligning the phases at the largest entry of Pi(perm) u2.
double distance_up_to_phase(const DenseUnitary &u1, const DenseUnitary &u2, const QubitPermutation &perm);

/// u1 == e^{i gamma} Pi(perm) u2 within `tol` (max norm).
bool equivalent(const DenseUnitary &u1, const DenseUnitary &u2, const QubitPermutation &perm, double tol = 1e-9);

/// If u conjugates every basis Pauli to a signed Pauli, its tableau.
std::optional<CliffordTableau> tableau_of_unitary(const DenseUnitary &u);

/// <0| U_exact U_circuit^dagger |0>.
std::complex<double> overlap(const DenseUnitary &exact, const DenseUnitary &circuit);

/// Overlap of exp(-i t/2 H) with `repetitions` copies of Pi(perm) U_c, where c
/// implements one repetition of poly with angles scaled by t / repetitions.
/// Throws InputError on a dimension mismatch or repetitions == 0.
std::complex<double> overlap(const PauliPolynomial &poly, const Circuit &c, const QubitPermutation &perm, double t,
                             std::size_t repetitions = 1);

/// Distance up to phase between the original gadgets in emitted-then-remaining
/// order and U_T * R * U_C for an intermediate synthesis state. The tableau is
/// turned into a unitary by synthesizing it on `topo` without permutation.
double state_distance(const PauliPolynomial &original, const SynthesisState &state, const Topology &topo);

}  // namespace psynth::verify

#endif
