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

#include "psynth/tableau.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"

using namespace psynth;

namespace {

// Dense check: row r of t equals U B_r U^dagger for the basis Pauli B_r.
void expect_tableau_of(const CliffordTableau &t, const oracle::Mat &u) {
    const auto q = t.num_qubits();
    for (std::size_t r = 0; r < 2 * q; r++) {
        std::vector<PauliLetter> basis(q, PauliLetter::I);
        basis[r % q] = r < q ? PauliLetter::X : PauliLetter::Z;
        oracle::Mat image = u * oracle::pauli(basis) * u.adjoint();
        auto m = oracle::match_pauli(image, q, 1e-9);
        ASSERT_TRUE(m.has_value());
        EXPECT_EQ(t.row(r).string().letters(), m->letters) << "row " << r;
        EXPECT_EQ(t.sign(r), m->negative) << "row " << r;
    }
}

}  // namespace

TEST(PauliRowTest, Conversions) {
    auto r = PauliRow::from(PauliString::parse("XIYZ"), true);
    EXPECT_EQ(r.str(), "-XIYZ");
    EXPECT_EQ(r.letter(2), PauliLetter::Y);
    r.set(1, PauliLetter::Z);
    EXPECT_EQ(r.string().str(), "XZYZ");
}

TEST(QubitPermutationTest, Basics) {
    QubitPermutation p{{2, 0, 1}};
    EXPECT_TRUE(p.is_bijection());
    EXPECT_FALSE(p.is_identity());
    EXPECT_EQ(p.inverse().map, (std::vector<std::size_t>{1, 2, 0}));
    EXPECT_FALSE((QubitPermutation{{0, 0}}).is_bijection());
}

TEST(Tableau, IdentityDump) {
    CliffordTableau t(2);
    EXPECT_TRUE(t.is_identity());
    EXPECT_TRUE(t.is_symplectic());
    EXPECT_EQ(t.dump(), "1000 0\n0100 0\n0010 0\n0001 0\n");
}

TEST(Tableau, FromCircuitMatchesDenseConjugation) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 120; trial++) {
        std::size_t q = 1 + rng() % 3;
        auto c = oracle::random_clifford_circuit(q, rng() % 30, rng);
        auto t = CliffordTableau::from_circuit(c);
        EXPECT_TRUE(t.is_symplectic());
        expect_tableau_of(t, oracle::circuit(c));
    }
}

TEST(Tableau, PrependIsGateFirst) {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 80; trial++) {
        std::size_t q = 2 + rng() % 2;
        auto c = oracle::random_clifford_circuit(q, rng() % 20, rng);
        auto extra = oracle::random_clifford_circuit(q, 1, rng);
        if (extra.empty()) {
            continue;
        }
        auto g = *extra.gates()[0].as_clifford();
        auto t = CliffordTableau::from_circuit(c);
        t.prepend(g);
        // U g: g acts first.
        expect_tableau_of(t, oracle::circuit(c) * oracle::gate(g, q));
    }
}

// A fixed case written out by hand: prepending CNOT(0,1) to the identity.
TEST(Tableau, PrependCnotRowUpdate) {
    CliffordTableau t(2);
    t.prepend(CliffordGate::cnot(0, 1));
    EXPECT_EQ(t.row(0).str(), "+XX");
    EXPECT_EQ(t.row(1).str(), "+IX");
    EXPECT_EQ(t.row(2).str(), "+ZI");
    EXPECT_EQ(t.row(3).str(), "+ZZ");
}

TEST(Tableau, InverseComposesToIdentity) {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 100; trial++) {
        std::size_t q = 1 + rng() % 5;
        auto c = oracle::random_clifford_circuit(q, rng() % 60, rng);
        auto t = CliffordTableau::from_circuit(c);
        auto inv = t.inverse();
        EXPECT_TRUE(inv.is_symplectic());
        // residual(t, c) applies c's adjoint to t, giving the identity.
        EXPECT_TRUE(residual(t, c).is_identity());
        auto back = inv;
        for (const auto &g : c.gates()) {
            back.append(*g.as_clifford());
        }
        EXPECT_TRUE(back.is_identity()) << "trial " << trial;
        for (std::size_t r = 0; r < 2 * q; r++) {
            EXPECT_EQ(t.conjugate(inv.row(r)), CliffordTableau(q).row(r));
        }
    }
}

TEST(Tableau, FromCircuitRejectsRz) {
    Circuit c(1);
    c.append(Gate::rz(0, 0.2));
    EXPECT_THROW(CliffordTableau::from_circuit(c), InputError);
}

TEST(Tableau, FromRowsValidatesShape) {
    EXPECT_THROW(CliffordTableau::from_rows({PauliRow(2)}), InputError);
    EXPECT_THROW(CliffordTableau::from_rows({PauliRow(2), PauliRow(2), PauliRow(1), PauliRow(2)}), InputError);
    CliffordTableau t(2);
    std::vector<PauliRow> rows;
    for (std::size_t r = 0; r < 4; r++) {
        rows.push_back(t.row(r));
    }
    EXPECT_EQ(CliffordTableau::from_rows(rows), t);
}

TEST(Tableau, AsPermutationOfSwap) {
    CliffordTableau t(2);
    for (auto [c, tg] : {std::pair<std::size_t, std::size_t>{0, 1}, {1, 0}, {0, 1}}) {
        t.append(CliffordGate::cnot(c, tg));
    }
    auto p = t.as_permutation();
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(p->map, (std::vector<std::size_t>{1, 0}));
    CliffordTableau h(1);
    h.append(CliffordGate::h(0));
    EXPECT_FALSE(h.as_permutation().has_value());
}

TEST(Heuristics, HRowAndHCol) {
    CliffordTableau t(3);
    auto line = Topology::line(3);
    EXPECT_EQ(h_row(t, 0), 2u);
    EXPECT_EQ(h_col(t, 0, 0, line), 0u);
    EXPECT_EQ(h_col(t, 0, 2, line), 4u);  // X_0 and Z_0 both two hops from qubit 2
    t.append(CliffordGate::cnot(0, 1));
    // Row X_0 is now XX: two columns, each counted for the X row.
    EXPECT_EQ(h_row(t, 0), 3u);
    EXPECT_EQ(h_col(t, 0, 1, line), 2u);
    EXPECT_EQ(h_col(t, 1, line), h_col(t, 1, 1, line));
}

class TableauSynthesisTest : public testing::TestWithParam<bool> {};

TEST_P(TableauSynthesisTest, RoundTrip) {
    const bool allow_perm = GetParam();
    std::mt19937_64 rng(allow_perm ? 34 : 35);
    const std::vector<Topology> topos = {Topology::line(4), Topology::complete(4), Topology::cycle(5),
                                         Topology::grid(2, 2), Topology::line(1)};
    for (int trial = 0; trial < 100; trial++) {
        const auto &topo = topos[trial % topos.size()];
        auto q = topo.num_qubits();
        auto c = oracle::random_clifford_circuit(q, rng() % 100, rng);
        auto t = CliffordTableau::from_circuit(c);
        auto s = synthesize(t, topo, allow_perm);
        EXPECT_TRUE(conforms(s.circuit, topo));
        ASSERT_TRUE(s.permutation.is_bijection());
        if (!allow_perm) {
            EXPECT_TRUE(s.permutation.is_identity());
        }
        auto res = residual(t, s.circuit);
        auto perm = res.as_permutation();
        ASSERT_TRUE(perm.has_value()) << res.dump();
        EXPECT_EQ(*perm, s.permutation.inverse());
        // U_t = Pi U_C with Pi moving wire permutation[r] to r.
        oracle::Mat expected = oracle::circuit(c);
        oracle::Mat got = oracle::relabel(s.permutation.map) * oracle::circuit(s.circuit);
        EXPECT_LT(oracle::phase_distance(expected, got), 1e-9) << "trial " << trial;
    }
}

INSTANTIATE_TEST_SUITE_P(Modes, TableauSynthesisTest, testing::Bool());

TEST(TableauSynthesis, PermutationModeSavesSwap) {
    CliffordTableau t(2);
    for (auto [c, tg] : {std::pair<std::size_t, std::size_t>{0, 1}, {1, 0}, {0, 1}}) {
        t.append(CliffordGate::cnot(c, tg));
    }
    auto s = synthesize(t, Topology::line(2), true);
    EXPECT_EQ(metrics(s.circuit).cnot_count, 0u);
    EXPECT_EQ(s.permutation.map, (std::vector<std::size_t>{1, 0}));
    auto fixed = synthesize(t, Topology::line(2), false);
    EXPECT_EQ(metrics(fixed.circuit).cnot_count, 3u);
}

TEST(TableauSynthesis, Errors) {
    EXPECT_THROW(synthesize(CliffordTableau(3), Topology::line(2), true), InputError);
    CliffordTableau t(2);
    std::vector<PauliRow> rows;
    for (std::size_t r = 0; r < 4; r++) {
        rows.push_back(t.row(r));
    }
    rows[0] = rows[2];  // X_0 -> Z_0 twice: not symplectic
    EXPECT_THROW(synthesize(CliffordTableau::from_rows(rows), Topology::line(2), true), InputError);
}

TEST(TableauSynthesis, SingleCnotNeedsOneCnot) {
    CliffordTableau t(2);
    t.append(CliffordGate::cnot(0, 1));
    for (bool perm : {false, true}) {
        auto s = synthesize(t, Topology::line(2), perm);
        EXPECT_EQ(metrics(s.circuit).cnot_count, 1u);
    }
    EXPECT_TRUE(synthesize(CliffordTableau(3), Topology::line(3), true).circuit.empty());
}

TEST(TableauSynthesis, HRowGrowsAfterPrepend) {
    CliffordTableau t(2);
    t.prepend(CliffordGate::cnot(0, 1));
    EXPECT_GT(h_row(t, 0), 2u);
}

// CNOT count stays within 8 q^2 for random tableaus up to 16 qubits.
TEST(TableauSynthesis, QuadraticCnotCount) {
    std::mt19937_64 rng(36);
    for (auto spec : {"line:16", "grid:4x4", "complete:16", "cycle:9"}) {
        auto topo = Topology::from_spec(spec);
        const auto q = topo.num_qubits();
        for (int trial = 0; trial < 5; trial++) {
            auto c = oracle::random_clifford_circuit(q, 400, rng);
            auto t = CliffordTableau::from_circuit(c);
            for (bool perm : {false, true}) {
                auto s = synthesize(t, topo, perm);
                EXPECT_TRUE(conforms(s.circuit, topo));
                EXPECT_LE(metrics(s.circuit).cnot_count, 8 * q * q) << spec;
                auto res = residual(t, s.circuit).as_permutation();
                ASSERT_TRUE(res.has_value());
                EXPECT_EQ(*res, s.permutation.inverse());
            }
        }
    }
}

TEST(Tableau, SmallIdentities) {
    CliffordTableau t(1);
    t.prepend(CliffordGate::h(0));
    t.prepend(CliffordGate::h(0));
    EXPECT_TRUE(t.is_identity());
    for (int i = 0; i < 4; i++) {
        t.prepend(CliffordGate::s(0));
        EXPECT_EQ(t.is_identity(), i == 3);
    }
    // H(0) then CNOT(0,1) sends Z_0 to X_0 X_1.
    Circuit c(2);
    c.append(Gate{GateKind::H, 0, 0, 0});
    c.append(Gate::cnot(0, 1));
    auto u = CliffordTableau::from_circuit(c);
    EXPECT_EQ(u.row(2).str(), "+XX");
}
