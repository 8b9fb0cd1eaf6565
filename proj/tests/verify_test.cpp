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

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <numbers>
#include <random>

#include "oracle.hpp"

using namespace psynth;
using verify::DenseUnitary;

namespace {

constexpr PauliLetter kAll[] = {PauliLetter::I, PauliLetter::X, PauliLetter::Z, PauliLetter::Y};

double max_abs(const DenseUnitary &m) { return m.cwiseAbs().maxCoeff(); }

PauliString random_string(std::size_t q, std::mt19937_64 &rng) {
    PauliString s(q);
    for (std::size_t j = 0; j < q; j++) {
        s[j] = kAll[rng() % 4];
    }
    return s;
}

}  // namespace

TEST(Verify, PauliMatrixMatchesKron) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 100; trial++) {
        auto s = random_string(1 + rng() % 4, rng);
        EXPECT_LT(max_abs(verify::pauli_matrix(s) - oracle::pauli(s)), 1e-15) << s.str();
    }
    auto neg = PauliRow::from(PauliString::parse("XZ"), true);
    EXPECT_LT(max_abs(verify::pauli_matrix(neg) + oracle::pauli(PauliString::parse("XZ"))), 1e-15);
}

TEST(Verify, GadgetClosedForms) {
    PauliGadget zero{0, PauliString::parse("XY")};
    EXPECT_LT(max_abs(verify::gadget_unitary(zero) - verify::identity(2)), 1e-15);
    PauliGadget pi_z{std::numbers::pi, PauliString::parse("Z")};
    DenseUnitary minus_i_z(2, 2);
    minus_i_z << std::complex<double>(0, -1), 0, 0, std::complex<double>(0, 1);
    EXPECT_LT(max_abs(verify::gadget_unitary(pi_z) - minus_i_z), 1e-12);
    // ZZ: e^{-i theta/2} on even parity, e^{+i theta/2} on odd parity.
    const double th = 0.77;
    auto u = verify::gadget_unitary({th, PauliString::parse("ZZ")});
    for (int b = 0; b < 4; b++) {
        int parity = (b & 1) ^ (b >> 1);
        auto expected = std::exp(std::complex<double>(0, parity ? th / 2 : -th / 2));
        EXPECT_LT(std::abs(u(b, b) - expected), 1e-12);
    }
}

TEST(Verify, CircuitUnitary) {
    EXPECT_LT(max_abs(verify::circuit_unitary(Circuit(2)) - verify::identity(2)), 1e-15);
    Circuit hh(1);
    hh.append(Gate{GateKind::H, 0, 0, 0});
    hh.append(Gate{GateKind::H, 0, 0, 0});
    EXPECT_LT(max_abs(verify::circuit_unitary(hh) - verify::identity(1)), 1e-12);
    Circuit cx(2);
    cx.append(Gate::cnot(0, 1));
    DenseUnitary expected = DenseUnitary::Zero(4, 4);
    // Control is bit 0: |01> <-> |11>.
    expected(0, 0) = expected(2, 2) = expected(3, 1) = expected(1, 3) = 1;
    EXPECT_LT(max_abs(verify::circuit_unitary(cx) - expected), 1e-15);
    Circuit hs(1);
    hs.append(Gate{GateKind::H, 0, 0, 0});
    hs.append(Gate{GateKind::S, 0, 0, 0});
    DenseUnitary ref = oracle::single(GateKind::S) * oracle::single(GateKind::H);
    EXPECT_LT(max_abs(verify::circuit_unitary(hs) - ref), 1e-12);
}

TEST(Verify, CircuitUnitaryMatchesOracle) {
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 60; trial++) {
        std::size_t q = 1 + rng() % 4;
        auto c = oracle::random_clifford_circuit(q, rng() % 30, rng);
        c.append(Gate::rz(rng() % q, 0.3));
        EXPECT_LT(max_abs(verify::circuit_unitary(c) - oracle::circuit(c)), 1e-12);
    }
}

TEST(Verify, ExactUnitary) {
    PauliPolynomial p(2);
    EXPECT_LT(max_abs(verify::exact_unitary(p, 1.0) - verify::identity(2)), 1e-12);
    p.add(0.4, "XY");
    EXPECT_LT(max_abs(verify::exact_unitary(p, 0.0) - verify::identity(2)), 1e-12);
    EXPECT_LT(max_abs(verify::exact_unitary(p, 2.5) - oracle::gadget(p.scaled(2.5)[0])), 1e-12);
    // Commuting terms: the exponential of the sum is the ordered product.
    PauliPolynomial c(3);
    c.add(0.2, "ZZI");
    c.add(0.5, "IZZ");
    c.add(-0.3, "XXX");
    c.add(0.1, "ZIZ");
    EXPECT_LT(max_abs(verify::exact_unitary(c, 1.7) - verify::product_unitary(c.scaled(1.7))), 1e-10);
}

TEST(Verify, ProductOrder) {
    PauliPolynomial p(1);
    p.add(0.4, "X");
    p.add(0.9, "Z");
    std::vector<std::size_t> rev{1, 0};
    DenseUnitary fwd = oracle::gadget(p[1]) * oracle::gadget(p[0]);
    DenseUnitary bwd = oracle::gadget(p[0]) * oracle::gadget(p[1]);
    EXPECT_LT(max_abs(verify::product_unitary(p) - fwd), 1e-12);
    EXPECT_LT(max_abs(verify::product_unitary(p, rev) - bwd), 1e-12);
}

TEST(Verify, EquivalenceUpToPhaseAndPermutation) {
    std::mt19937_64 rng(63);
    auto c = oracle::random_clifford_circuit(2, 20, rng);
    DenseUnitary u = verify::circuit_unitary(c);
    QubitPermutation id{{0, 1}}, swap{{1, 0}};
    EXPECT_TRUE(verify::equivalent(u, u, id));
    EXPECT_TRUE(verify::equivalent(u, std::complex<double>(0, 1) * u, id));
    Circuit sw(2);
    sw.append(Gate::cnot(0, 1));
    sw.append(Gate::cnot(1, 0));
    sw.append(Gate::cnot(0, 1));
    DenseUnitary swapped = verify::circuit_unitary(sw) * u;
    EXPECT_TRUE(verify::equivalent(swapped, u, swap));
    EXPECT_FALSE(verify::equivalent(swapped, u, id));
    EXPECT_LT(max_abs(verify::permutation_unitary(swap) - verify::circuit_unitary(sw)), 1e-12);
    DenseUnitary xi = verify::pauli_matrix(PauliString::parse("XI"));
    EXPECT_FALSE(verify::equivalent(xi, verify::identity(2), id));
}

TEST(Verify, PermutationUnitaryMatchesRelabel) {
    QubitPermutation p{{2, 0, 1}};
    EXPECT_LT(max_abs(verify::permutation_unitary(p) - oracle::relabel(p.map)), 1e-15);
}

TEST(Verify, TableauOfUnitary) {
    std::mt19937_64 rng(64);
    for (int trial = 0; trial < 60; trial++) {
        std::size_t q = 1 + rng() % 4;
        auto c = oracle::random_clifford_circuit(q, rng() % 40, rng);
        auto t = verify::tableau_of_unitary(verify::circuit_unitary(c));
        ASSERT_TRUE(t.has_value());
        EXPECT_EQ(*t, CliffordTableau::from_circuit(c));
    }
    Circuit rz(1);
    rz.append(Gate::rz(0, 0.3));
    EXPECT_FALSE(verify::tableau_of_unitary(verify::circuit_unitary(rz)).has_value());
}

TEST(Verify, Overlap) {
    PauliPolynomial p(2);
    p.add(0.4, "XY");
    p.add(0.2, "ZZ");
    EXPECT_NEAR(std::abs(verify::overlap(p, Circuit(2), QubitPermutation{{0, 1}}, 0.0)), 1.0, 1e-12);
    // An exact factorization of a commuting polynomial has unit overlap.
    PauliPolynomial c(2);
    c.add(0.3, "ZZ");
    c.add(0.6, "ZI");
    for (double t : {0.5, 1.0, 3.0}) {
        auto s = synthesize(c.scaled(t), Topology::line(2));
        EXPECT_NEAR(std::abs(verify::overlap(c, s.circuit, s.permutation, t)), 1.0, 1e-10);
    }
    EXPECT_NEAR(std::abs(verify::overlap(verify::identity(2), verify::identity(2))), 1.0, 1e-15);
}

TEST(Verify, StateDistanceOfFreshState) {
    PauliPolynomial p(2);
    p.add(0.4, "XY");
    SynthesisState s(p);
    EXPECT_LT(verify::state_distance(p, s, Topology::line(2)), 1e-12);
}

TEST(Verify, SizeLimit) {
    EXPECT_NO_THROW(verify::check_size(verify::kMaxQubits));
    EXPECT_THROW(verify::check_size(verify::kMaxQubits + 1), InputError);
    EXPECT_THROW(verify::identity(13), InputError);
}
