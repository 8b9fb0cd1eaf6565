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

#include <cassert>
#include <limits>

namespace psynth {

PauliRow PauliRow::from(const PauliString &s, bool negative) {
    PauliRow r(s.size());
    for (std::size_t q = 0; q < s.size(); q++) {
        r.set(q, s[q]);
    }
    r.sign = negative;
    return r;
}

void PauliRow::set(std::size_t q, PauliLetter p) {
    x[q] = has_x(p);
    z[q] = has_z(p);
}

PauliString PauliRow::string() const {
    PauliString s(num_qubits());
    for (std::size_t q = 0; q < num_qubits(); q++) {
        s[q] = letter(q);
    }
    return s;
}

std::string PauliRow::str() const { return (sign ? "-" : "+") + string().str(); }

QubitPermutation QubitPermutation::identity(std::size_t n) {
    QubitPermutation p;
    p.map.resize(n);
    for (std::size_t i = 0; i < n; i++) {
        p.map[i] = i;
    }
    return p;
}

bool QubitPermutation::is_identity() const {
    for (std::size_t i = 0; i < map.size(); i++) {
        if (map[i] != i) {
            return false;
        }
    }
    return true;
}

bool QubitPermutation::is_bijection() const {
    std::vector<char> hit(map.size(), 0);
    for (auto v : map) {
        if (v >= map.size() || hit[v]) {
            return false;
        }
        hit[v] = 1;
    }
    return true;
}

QubitPermutation QubitPermutation::inverse() const {
    QubitPermutation p;
    p.map.resize(map.size());
    for (std::size_t i = 0; i < map.size(); i++) {
        p.map[map[i]] = i;
    }
    return p;
}

namespace {

// i^phase * (x) letters, used while multiplying rows.
struct Accumulator {
    PauliRow row;
    int phase = 0;

    explicit Accumulator(std::size_t n) : row(n) {}

    void times(const PauliRow &p) {
        for (std::size_t q = 0; q < row.num_qubits(); q++) {
            auto m = multiply(row.letter(q), p.letter(q));
            row.set(q, m.letter);
            phase += m.phase;
        }
        if (p.sign) {
            phase += 2;
        }
        phase &= 3;
    }

    PauliRow finish() {
        assert(phase % 2 == 0 && "product of tableau rows is not Hermitian");
        row.sign = phase == 2;
        return row;
    }
};

}  // namespace

CliffordTableau::CliffordTableau(std::size_t num_qubits) : q_(num_qubits), rows_(2 * num_qubits, PauliRow(num_qubits)) {
    for (std::size_t i = 0; i < q_; i++) {
        rows_[i].x[i] = 1;
        rows_[q_ + i].z[i] = 1;
    }
}

CliffordTableau CliffordTableau::from_circuit(const Circuit &c) {
    CliffordTableau t(c.num_qubits());
    for (const auto &g : c.gates()) {
        auto cg = g.as_clifford();
        if (!cg) {
            throw InputError("from_circuit: circuit contains a non-Clifford gate");
        }
        t.append(*cg);
    }
    return t;
}

CliffordTableau CliffordTableau::from_rows(std::vector<PauliRow> rows) {
    if (rows.size() % 2 != 0) {
        throw InputError("from_rows: odd number of rows");
    }
    CliffordTableau t(rows.size() / 2);
    for (const auto &r : rows) {
        if (r.num_qubits() != t.q_) {
            throw InputError("from_rows: row width does not match the row count");
        }
    }
    t.rows_ = std::move(rows);
    return t;
}

void CliffordTableau::prepend(const CliffordGate &g) {
    // Row of basis B becomes U (g B g^dagger) U^dagger, a product of old rows.
    const std::size_t n = g.arity();
    const std::array<std::size_t, 2> qs{g.q0, g.q1};
    const CliffordGate inv = g.adjoint();
    std::array<PauliRow, 4> fresh;
    for (std::size_t k = 0; k < n; k++) {
        for (int kind = 0; kind < 2; kind++) {
            std::array<PauliLetter, 2> basis{PauliLetter::I, PauliLetter::I};
            basis[k] = kind == 0 ? PauliLetter::X : PauliLetter::Z;
            auto image = conjugate_letter(inv, basis);
            Accumulator acc(q_);
            for (std::size_t j = 0; j < n; j++) {
                auto p = image.letters[j];
                if (has_x(p)) {
                    acc.times(rows_[qs[j]]);
                }
                if (has_z(p)) {
                    acc.times(rows_[q_ + qs[j]]);
                }
                if (p == PauliLetter::Y) {
                    acc.phase = (acc.phase + 1) & 3;  // Y = iXZ
                }
            }
            if (image.sign_flip) {
                acc.phase = (acc.phase + 2) & 3;
            }
            fresh[2 * k + kind] = acc.finish();
        }
    }
    for (std::size_t k = 0; k < n; k++) {
        rows_[qs[k]] = std::move(fresh[2 * k]);
        rows_[q_ + qs[k]] = std::move(fresh[2 * k + 1]);
    }
}

void CliffordTableau::append(const CliffordGate &g) {
    const CliffordGate inv = g.adjoint();
    const bool two = g.arity() == 2;
    for (auto &row : rows_) {
        std::array<PauliLetter, 2> local{row.letter(g.q0), two ? row.letter(g.q1) : PauliLetter::I};
        if (local[0] == PauliLetter::I && local[1] == PauliLetter::I) {
            continue;
        }
        auto image = conjugate_letter(inv, local);
        row.set(g.q0, image.letters[0]);
        if (two) {
            row.set(g.q1, image.letters[1]);
        }
        row.sign ^= image.sign_flip;
    }
}

PauliRow CliffordTableau::conjugate(const PauliRow &p) const {
    Accumulator acc(q_);
    for (std::size_t j = 0; j < q_; j++) {
        if (p.x[j]) {
            acc.times(rows_[j]);
        }
        if (p.z[j]) {
            acc.times(rows_[q_ + j]);
        }
        if (p.x[j] && p.z[j]) {
            acc.phase = (acc.phase + 1) & 3;
        }
    }
    if (p.sign) {
        acc.phase = (acc.phase + 2) & 3;
    }
    return acc.finish();
}

CliffordTableau CliffordTableau::inverse() const {
    // For a symplectic M, M^-1 = Omega M^T Omega, Omega swapping the X and Z halves.
    CliffordTableau inv(q_);
    auto flip = [&](std::size_t i) { return i < q_ ? i + q_ : i - q_; };
    for (std::size_t i = 0; i < 2 * q_; i++) {
        PauliRow r(q_);
        for (std::size_t j = 0; j < 2 * q_; j++) {
            bool b = bit(flip(j), flip(i));
            if (j < q_) {
                r.x[j] = b;
            } else {
                r.z[j - q_] = b;
            }
        }
        inv.rows_[i] = std::move(r);
    }
    // Signs: U (U^-1 B U^-dagger) U^dagger must give back +B.
    for (std::size_t i = 0; i < 2 * q_; i++) {
        if (conjugate(inv.rows_[i]).sign) {
            inv.rows_[i].sign = true;
        }
    }
    return inv;
}

bool CliffordTableau::is_symplectic() const {
    for (std::size_t a = 0; a < 2 * q_; a++) {
        for (std::size_t b = a; b < 2 * q_; b++) {
            unsigned form = 0;
            for (std::size_t j = 0; j < q_; j++) {
                form ^= (rows_[a].x[j] & rows_[b].z[j]) ^ (rows_[a].z[j] & rows_[b].x[j]);
            }
            unsigned expected = (b == a + q_) ? 1u : 0u;
            if (form != expected) {
                return false;
            }
        }
    }
    return true;
}

bool CliffordTableau::is_identity() const { return *this == CliffordTableau(q_); }

std::optional<QubitPermutation> CliffordTableau::as_permutation() const {
    QubitPermutation p;
    p.map.assign(q_, 0);
    for (std::size_t r = 0; r < q_; r++) {
        const auto &xr = rows_[r];
        const auto &zr = rows_[q_ + r];
        if (xr.sign || zr.sign) {
            return std::nullopt;
        }
        std::size_t target = q_;
        for (std::size_t c = 0; c < q_; c++) {
            if (xr.z[c] || zr.x[c] || xr.x[c] != zr.z[c]) {
                return std::nullopt;
            }
            if (xr.x[c]) {
                if (target != q_) {
                    return std::nullopt;
                }
                target = c;
            }
        }
        if (target == q_) {
            return std::nullopt;
        }
        p.map[r] = target;
    }
    if (!p.is_bijection()) {
        return std::nullopt;
    }
    return p;
}

std::string CliffordTableau::dump() const {
    std::string out;
    for (std::size_t r = 0; r < 2 * q_; r++) {
        for (std::size_t c = 0; c < 2 * q_; c++) {
            out.push_back(bit(r, c) ? '1' : '0');
        }
        out.push_back(' ');
        out.push_back(sign(r) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

std::size_t h_row(const CliffordTableau &t, std::size_t r) {
    const auto q = t.num_qubits();
    std::size_t total = 0;
    for (std::size_t i = 0; i < q; i++) {
        total += (t.bit(r, i) || t.bit(r, i + q)) ? 1 : 0;
        total += (t.bit(r + q, i) || t.bit(r + q, i + q)) ? 1 : 0;
    }
    return total;
}

std::size_t h_col(const CliffordTableau &t, std::size_t r, std::size_t c, const Topology &topo) {
    const auto q = t.num_qubits();
    std::size_t total = 0;
    for (std::size_t i = 0; i < q; i++) {
        auto d = topo.distance(c, i);
        total += (t.bit(r, i) || t.bit(r, i + q)) ? d : 0;
        total += (t.bit(r + q, i) || t.bit(r + q, i + q)) ? d : 0;
    }
    return total;
}

std::size_t h_col(const CliffordTableau &t, std::size_t c, const Topology &topo) { return h_col(t, c, c, topo); }

namespace {

class Eliminator {
   public:
    Eliminator(CliffordTableau remaining, const Topology &topo)
        : w_(std::move(remaining)), topo_(topo), circuit_(w_.num_qubits()) {}

    CliffordTableau &tableau() { return w_; }
    Circuit take_circuit() { return std::move(circuit_); }

    // Reduces logical row pair (r, r+q) to (+X_c, +Z_c) using gates on `active` only.
    void eliminate(std::size_t r, std::size_t c, const QubitSet &active) {
        const auto q = w_.num_qubits();
        const std::size_t rz = r + q;

        // X row: every leg to X, then collapse the legs onto c along a Steiner tree.
        for (auto i : active.members()) {
            switch (w_.row(r).letter(i)) {
                case PauliLetter::Z:
                    apply(CliffordGate::h(i));
                    break;
                case PauliLetter::Y:
                    apply(CliffordGate::s(i));
                    break;
                default:
                    break;
            }
        }
        auto tree = rooted_support(r, c, active, /*z_part=*/false);
        for (auto [p, ch] : tree.post_order) {
            if (!w_.row(r).x[p] && w_.row(r).x[ch]) {
                apply(CliffordGate::cnot(ch, p));
            }
        }
        for (auto [p, ch] : tree.post_order) {
            apply(CliffordGate::cnot(p, ch));
        }

        // Z row: gates below must fix X_c. Legs off c go to Z, a Y on c goes to Z via V.
        for (auto i : active.members()) {
            auto p = w_.row(rz).letter(i);
            if (i == c) {
                assert(p == PauliLetter::Z || p == PauliLetter::Y);
                if (p == PauliLetter::Y) {
                    apply(CliffordGate::v(i));
                }
            } else if (p == PauliLetter::X) {
                apply(CliffordGate::h(i));
            } else if (p == PauliLetter::Y) {
                apply(CliffordGate::v(i));
            }
        }
        tree = rooted_support(rz, c, active, /*z_part=*/true);
        for (auto [p, ch] : tree.post_order) {
            if (!w_.row(rz).z[p] && w_.row(rz).z[ch]) {
                apply(CliffordGate::cnot(p, ch));
            }
        }
        for (auto [p, ch] : tree.post_order) {
            apply(CliffordGate::cnot(ch, p));
        }

        // Signs are fixed on the physical wire c.
        if (w_.sign(r)) {
            apply(CliffordGate::s(c));
            apply(CliffordGate::s(c));
        }
        if (w_.sign(rz)) {
            apply(CliffordGate::v(c));
            apply(CliffordGate::v(c));
        }
    }

   private:
    void apply(const CliffordGate &g) {
        w_.append(g);
        circuit_.append(g);
    }

    RootedTree rooted_support(std::size_t row, std::size_t c, const QubitSet &active, bool z_part) {
        std::vector<std::size_t> terminals{c};
        const auto &bits = z_part ? w_.row(row).z : w_.row(row).x;
        for (auto i : active.members()) {
            if (bits[i] && i != c) {
                terminals.push_back(i);
            }
        }
        return root_tree(topo_.steiner_tree(terminals, active), c);
    }

    CliffordTableau w_;
    const Topology &topo_;
    Circuit circuit_;
};

}  // namespace

TableauSynthesis synthesize(const CliffordTableau &t, const Topology &topo, bool allow_permutation) {
    const auto q = t.num_qubits();
    if (topo.num_qubits() != q) {
        throw InputError("tableau has " + std::to_string(q) + " qubits but the topology has " +
                         std::to_string(topo.num_qubits()));
    }
    if (!t.is_symplectic()) {
        throw InputError("tableau is not symplectic");
    }
    // Appending to the inverse keeps gates on columns, which are the physical wires.
    Eliminator elim(t.inverse(), topo);
    QubitSet active(q);
    std::vector<char> row_done(q, 0);
    QubitPermutation perm = QubitPermutation::identity(q);
    constexpr auto kNone = std::numeric_limits<std::size_t>::max();

    while (!active.empty()) {
        auto candidates = topo.non_cutting(active);
        const auto &w = elim.tableau();
        std::size_t row = kNone;
        std::size_t col = kNone;
        std::size_t best = kNone;
        if (allow_permutation) {
            for (std::size_t r = 0; r < q; r++) {
                if (row_done[r]) {
                    continue;
                }
                auto score = h_row(w, r);
                if (score < best) {
                    best = score;
                    row = r;
                }
            }
            best = kNone;
            for (auto c : candidates) {
                auto score = h_col(w, row, c, topo);
                if (score < best) {
                    best = score;
                    col = c;
                }
            }
        } else {
            for (auto c : candidates) {
                auto score = h_row(w, c);
                if (score < best) {
                    best = score;
                    row = c;
                }
            }
            col = row;
        }
        elim.eliminate(row, col, active);
        row_done[row] = 1;
        active.erase(col);
        perm.map[row] = col;
    }
    assert(elim.tableau().as_permutation() == perm);
    return {elim.take_circuit(), perm};
}

CliffordTableau residual(CliffordTableau t, const Circuit &c) {
    for (const auto &g : c.gates()) {
        auto cg = g.as_clifford();
        if (!cg) {
            throw InputError("residual: circuit contains a non-Clifford gate");
        }
        t.prepend(cg->adjoint());
    }
    return t;
}

}  // namespace psynth
