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

#include "psynth/verify.hpp"

#include <Eigen/Eigenvalues>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace psynth::verify {

using cd = std::complex<double>;

namespace {

constexpr cd kI{0, 1};

std::size_t dim(std::size_t q) { return std::size_t{1} << q; }

Eigen::Matrix2cd single_qubit_matrix(const Gate &g) {
    Eigen::Matrix2cd m;
    const double r = 1 / std::sqrt(2.0);
    switch (g.kind) {
        case GateKind::H:
            m << r, r, r, -r;
            break;
        case GateKind::S:
            m << 1, 0, 0, kI;
            break;
        case GateKind::Sdg:
            m << 1, 0, 0, -kI;
            break;
        case GateKind::V:
            m << cd(0.5, 0.5), cd(0.5, -0.5), cd(0.5, -0.5), cd(0.5, 0.5);
            break;
        case GateKind::Vdg:
            m << cd(0.5, -0.5), cd(0.5, 0.5), cd(0.5, 0.5), cd(0.5, -0.5);
            break;
        case GateKind::Rz:
            m << std::exp(-kI * (g.angle / 2)), 0, 0, std::exp(kI * (g.angle / 2));
            break;
        case GateKind::CNOT:
            break;
    }
    return m;
}

}  // namespace

void check_size(std::size_t num_qubits) {
    if (num_qubits > kMaxQubits) {
        throw InputError("dense verification is limited to " + std::to_string(kMaxQubits) + " qubits, got " +
                         std::to_string(num_qubits));
    }
}

DenseUnitary identity(std::size_t num_qubits) {
    check_size(num_qubits);
    return DenseUnitary::Identity(dim(num_qubits), dim(num_qubits));
}

DenseUnitary pauli_matrix(const PauliRow &p) {
    const auto q = p.num_qubits();
    check_size(q);
    std::size_t xmask = 0;
    std::size_t zmask = 0;
    int ys = 0;
    for (std::size_t j = 0; j < q; j++) {
        xmask |= std::size_t{p.x[j]} << j;
        zmask |= std::size_t{p.z[j]} << j;
        ys += p.x[j] && p.z[j];
    }
    static const cd kIPow[4] = {1, kI, -1, -kI};
    cd base = kIPow[(ys + (p.sign ? 2 : 0)) & 3];
    const auto n = dim(q);
    DenseUnitary m = DenseUnitary::Zero(n, n);
    for (std::size_t b = 0; b < n; b++) {
        m(b ^ xmask, b) = (std::popcount(b & zmask) & 1) ? -base : base;
    }
    return m;
}

DenseUnitary pauli_matrix(const PauliString &s) { return pauli_matrix(PauliRow::from(s)); }

DenseUnitary gadget_unitary(const PauliGadget &g) {
    const auto q = g.string.size();
    const double half = g.angle / 2;
    return std::cos(half) * identity(q) - kI * std::sin(half) * pauli_matrix(g.string);
}

DenseUnitary product_unitary(const PauliPolynomial &poly, std::span<const std::size_t> order) {
    DenseUnitary u = identity(poly.num_qubits());
    for (auto i : order) {
        u = gadget_unitary(poly[i]) * u;
    }
    return u;
}

DenseUnitary product_unitary(const PauliPolynomial &poly) {
    std::vector<std::size_t> order(poly.size());
    std::iota(order.begin(), order.end(), 0);
    return product_unitary(poly, order);
}

void apply_gate(DenseUnitary &u, const Gate &g) {
    const auto n = static_cast<std::size_t>(u.rows());
    if (g.q0 >= 64 || (std::size_t{1} << g.q0) >= n || (g.is_two_qubit() && (std::size_t{1} << g.q1) >= n)) {
        throw InputError("apply_gate: qubit index out of range");
    }
    if (g.kind == GateKind::CNOT) {
        const std::size_t c = std::size_t{1} << g.q0;
        const std::size_t t = std::size_t{1} << g.q1;
        for (std::size_t i = 0; i < n; i++) {
            if ((i & c) && !(i & t)) {
                u.row(i).swap(u.row(i | t));
            }
        }
        return;
    }
    const auto m = single_qubit_matrix(g);
    const std::size_t bit = std::size_t{1} << g.q0;
    for (std::size_t i0 = 0; i0 < n; i0++) {
        if (i0 & bit) {
            continue;
        }
        const std::size_t i1 = i0 | bit;
        Eigen::RowVectorXcd a = u.row(i0);
        Eigen::RowVectorXcd b = u.row(i1);
        u.row(i0) = m(0, 0) * a + m(0, 1) * b;
        u.row(i1) = m(1, 0) * a + m(1, 1) * b;
    }
}

DenseUnitary circuit_unitary(const Circuit &c) {
    DenseUnitary u = identity(c.num_qubits());
    for (const auto &g : c.gates()) {
        apply_gate(u, g);
    }
    return u;
}

DenseUnitary exact_unitary(const PauliPolynomial &poly, double t) {
    const auto q = poly.num_qubits();
    check_size(q);
    const auto n = dim(q);
    DenseUnitary h = DenseUnitary::Zero(n, n);
    for (const auto &g : poly.gadgets()) {
        h += g.angle * pauli_matrix(g.string);
    }
    h *= t / 2;
    Eigen::SelfAdjointEigenSolver<DenseUnitary> eig(h);
    Eigen::VectorXcd phases = (-kI * eig.eigenvalues().cast<cd>()).array().exp();
    return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

DenseUnitary permutation_unitary(const QubitPermutation &perm) {
    const auto q = perm.size();
    check_size(q);
    if (!perm.is_bijection()) {
        throw InputError("permutation_unitary: not a bijection");
    }
    const auto n = dim(q);
    DenseUnitary m = DenseUnitary::Zero(n, n);
    for (std::size_t b = 0; b < n; b++) {
        std::size_t out = 0;
        for (std::size_t r = 0; r < q; r++) {
            out |= ((b >> perm[r]) & 1) << r;
        }
        m(out, b) = 1;
    }
    return m;
}

double distance_up_to_phase(const DenseUnitary &u1, const DenseUnitary &u2, const QubitPermutation &perm) {
    if (u1.rows() != u2.rows() || u1.cols() != u2.cols() || dim(perm.size()) != static_cast<std::size_t>(u2.rows())) {
        throw InputError("distance_up_to_phase: dimension mismatch");
    }
    DenseUnitary v = perm.is_identity() ? u2 : DenseUnitary(permutation_unitary(perm) * u2);
    Eigen::Index r = 0;
    Eigen::Index c = 0;
    v.cwiseAbs().maxCoeff(&r, &c);
    if (std::abs(u1(r, c)) < 1e-12) {
        return std::numeric_limits<double>::infinity();
    }
    cd phase = u1(r, c) / v(r, c);
    phase /= std::abs(phase);
    return (u1 - phase * v).cwiseAbs().maxCoeff();
}

bool equivalent(const DenseUnitary &u1, const DenseUnitary &u2, const QubitPermutation &perm, double tol) {
    return distance_up_to_phase(u1, u2, perm) <= tol;
}

std::optional<CliffordTableau> tableau_of_unitary(const DenseUnitary &u) {
    const auto n = static_cast<std::size_t>(u.rows());
    const auto q = static_cast<std::size_t>(std::countr_zero(n));
    if (u.cols() != u.rows() || dim(q) != n) {
        throw InputError("tableau_of_unitary: matrix is not 2^q x 2^q");
    }
    constexpr double tol = 1e-9;
    CliffordTableau identity_tab(q);
    std::vector<PauliRow> rows;
    for (std::size_t r = 0; r < 2 * q; r++) {
        DenseUnitary m = u * pauli_matrix(identity_tab.row(r)) * u.adjoint();
        Eigen::Index xi = 0;
        Eigen::Index unused = 0;
        m.col(0).cwiseAbs().maxCoeff(&xi, &unused);
        const auto x = static_cast<std::size_t>(xi);
        const cd c0 = m(xi, 0);
        if (std::abs(std::abs(c0) - 1) > tol) {
            return std::nullopt;
        }
        PauliRow p(q);
        int ys = 0;
        for (std::size_t j = 0; j < q; j++) {
            p.x[j] = (x >> j) & 1;
            cd ratio = m(x ^ (std::size_t{1} << j), std::size_t{1} << j) / c0;
            if (std::abs(ratio - cd(1)) < tol) {
                p.z[j] = 0;
            } else if (std::abs(ratio + cd(1)) < tol) {
                p.z[j] = 1;
            } else {
                return std::nullopt;
            }
            ys += p.x[j] && p.z[j];
        }
        static const cd kIPow[4] = {1, kI, -1, -kI};
        cd s = c0 / kIPow[ys & 3];
        if (std::abs(s - cd(1)) < tol) {
            p.sign = false;
        } else if (std::abs(s + cd(1)) < tol) {
            p.sign = true;
        } else {
            return std::nullopt;
        }
        if ((m - pauli_matrix(p)).cwiseAbs().maxCoeff() > tol) {
            return std::nullopt;
        }
        rows.push_back(std::move(p));
    }
    return CliffordTableau::from_rows(std::move(rows));
}

std::complex<double> overlap(const DenseUnitary &exact, const DenseUnitary &circuit) {
    if (exact.rows() != circuit.rows() || exact.cols() != circuit.cols()) {
        throw InputError("overlap: dimension mismatch");
    }
    return exact.row(0).dot(circuit.row(0));
}

std::complex<double> overlap(const PauliPolynomial &poly, const Circuit &c, const QubitPermutation &perm, double t,
                             std::size_t repetitions) {
    if (repetitions == 0) {
        throw InputError("overlap: repetitions must be positive");
    }
    if (c.num_qubits() != poly.num_qubits() || perm.size() != poly.num_qubits()) {
        throw InputError("overlap: circuit, permutation and polynomial sizes differ");
    }
    DenseUnitary step = circuit_unitary(c);
    if (!perm.is_identity()) {
        step = permutation_unitary(perm) * step;
    }
    DenseUnitary total = identity(poly.num_qubits());
    for (std::size_t k = 0; k < repetitions; k++) {
        total = step * total;
    }
    return overlap(exact_unitary(poly, t), total);
}

double state_distance(const PauliPolynomial &original, const SynthesisState &state, const Topology &topo) {
    std::vector<std::size_t> order = state.emitted_order();
    auto rest = state.remaining();
    order.insert(order.end(), rest.begin(), rest.end());
    DenseUnitary expected = product_unitary(original, order);

    DenseUnitary actual = circuit_unitary(state.circuit());
    for (auto i : rest) {
        actual = gadget_unitary(state.gadgets()[i]) * actual;
    }
    auto tail = synthesize(state.tableau(), topo, false);
    actual = circuit_unitary(tail.circuit) * actual;
    return distance_up_to_phase(expected, actual, QubitPermutation::identity(original.num_qubits()));
}

}  // namespace psynth::verify
