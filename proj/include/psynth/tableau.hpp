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

#ifndef PSYNTH_TABLEAU_HPP
#define PSYNTH_TABLEAU_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psynth/circuit.hpp"
#include "psynth/pauli.hpp"
#include "psynth/topology.hpp"

namespace psynth {

/// Hermitian Pauli operator (-1)^sign * (x) letters, stored as x/z bit columns.
struct PauliRow {
    std::vector<std::uint8_t> x;
    std::vector<std::uint8_t> z;
    bool sign = false;

    explicit PauliRow(std::size_t num_qubits = 0) : x(num_qubits, 0), z(num_qubits, 0) {}
    static PauliRow from(const PauliString &s, bool negative = false);

    std::size_t num_qubits() const { return x.size(); }
    PauliLetter letter(std::size_t q) const { return letter_from_bits(x[q] != 0, z[q] != 0); }
    void set(std::size_t q, PauliLetter p);
    PauliString string() const;
    /// e.g. "-XIZY"
    std::string str() const;

    bool operator==(const PauliRow &) const = default;
};

/// Bijection on qubit indices. For a synthesis result, map[r] is the physical
/// wire on which logical qubit r ends up.
struct QubitPermutation {
    std::vector<std::size_t> map;

    static QubitPermutation identity(std::size_t n);
    std::size_t size() const { return map.size(); }
    std::size_t operator[](std::size_t i) const { return map[i]; }
    bool is_identity() const;
    bool is_bijection() const;
    QubitPermutation inverse() const;

    bool operator==(const QubitPermutation &) const = default;
};

/// Tableau of a Clifford unitary U over q qubits. Row r < q holds U X_r U^dagger,
/// row q + r holds U Z_r U^dagger. Column c < q is the X bit of qubit c, column
/// q + c its Z bit.
class CliffordTableau {
   public:
    /// Identity tableau.
    explicit CliffordTableau(std::size_t num_qubits);
    /// Tableau of a circuit made of Clifford gates. Throws InputError on Rz.
    static CliffordTableau from_circuit(const Circuit &c);
    /// Tableau with the given 2q rows. Throws InputError on a shape mismatch.
    static CliffordTableau from_rows(std::vector<PauliRow> rows);

    std::size_t num_qubits() const { return q_; }
    const PauliRow &row(std::size_t r) const { return rows_[r]; }
    bool bit(std::size_t r, std::size_t c) const {
        return c < q_ ? rows_[r].x[c] != 0 : rows_[r].z[c - q_] != 0;
    }
    bool sign(std::size_t r) const { return rows_[r].sign; }

    /// U <- U g: the gate acts before U. Row operations.
    void prepend(const CliffordGate &g);
    /// U <- g U: the gate acts after U. Column operations.
    void append(const CliffordGate &g);

    /// U P U^dagger.
    PauliRow conjugate(const PauliRow &p) const;
    CliffordTableau inverse() const;

    bool is_symplectic() const;
    bool is_identity() const;
    /// If every X_r maps to +X_c and Z_r to +Z_c, the map r -> c.
    std::optional<QubitPermutation> as_permutation() const;

    /// 2q lines of 2q bits, a space, and the sign bit.
    std::string dump() const;

    bool operator==(const CliffordTableau &) const = default;

   private:
    std::size_t q_;
    std::vector<PauliRow> rows_;
};

/// Row-interaction count of logical row r (r < q): for every column i, one for
/// the X row and one for the Z row when either bit of column i is set.
std::size_t h_row(const CliffordTableau &t, std::size_t r);

/// Distance-weighted interaction of row r's support with physical column c.
std::size_t h_col(const CliffordTableau &t, std::size_t r, std::size_t c, const Topology &topo);
/// The same weighting applied to row c itself.
std::size_t h_col(const CliffordTableau &t, std::size_t c, const Topology &topo);

struct TableauSynthesis {
    Circuit circuit;
    QubitPermutation permutation;
};

/// Architecture-aware synthesis. The returned circuit C satisfies
/// U_t = Pi * U_C with Pi the relabeling that moves wire permutation[r] to r;
/// the permutation is the identity when `allow_permutation` is false. Every
/// CNOT lies on an edge of `topo`.
/// Throws InputError on a non-symplectic tableau or a qubit-count mismatch.
TableauSynthesis synthesize(const CliffordTableau &t, const Topology &topo, bool allow_permutation);

/// t with the adjoints of c's gates prepended in order: the tableau of U_t U_C^dagger.
CliffordTableau residual(CliffordTableau t, const Circuit &c);

}  // namespace psynth

#endif
