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

#include "psynth/synth.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

namespace psynth {

SynthesisState::SynthesisState(const PauliPolynomial &poly, Observer observer)
    : gadgets_(poly.gadgets()),
      finished_(poly.size(), 0),
      live_(poly.size()),
      circuit_(poly.num_qubits()),
      tableau_(poly.num_qubits()),
      active_(poly.num_qubits()),
      observer_(std::move(observer)) {
    std::iota(live_.begin(), live_.end(), 0);
}

std::vector<std::size_t> SynthesisState::remaining() const { return live_; }

void SynthesisState::notify() const {
    if (observer_) {
        observer_(*this);
    }
}

void SynthesisState::place(const CliffordGate &g) {
    circuit_.append(g);
    for (auto i : live_) {
        propagate_through(g, gadgets_[i]);
    }
    tableau_.prepend(g.adjoint());
    notify();
}

std::vector<CliffordGate> SynthesisState::diagonalize_qubit(std::span<const std::size_t> subset, std::size_t qubit) {
    auto letter = PauliLetter::I;
    for (auto i : subset) {
        auto p = gadgets_[i].string[qubit];
        if (p == PauliLetter::I) {
            continue;
        }
        if (letter != PauliLetter::I && p != letter) {
            throw InputError("diagonalize_qubit: gadgets carry different letters on qubit " + std::to_string(qubit));
        }
        letter = p;
    }
    std::vector<CliffordGate> gates;
    if (letter == PauliLetter::X) {
        gates.push_back(CliffordGate::h(qubit));
    } else if (letter == PauliLetter::Y) {
        gates.push_back(CliffordGate::v(qubit));
    }
    for (const auto &g : gates) {
        place(g);
    }
    return gates;
}

std::vector<CliffordGate> SynthesisState::disconnect(std::size_t pivot, std::size_t neighbor,
                                                     std::span<const std::size_t> subset) {
    if (pivot == neighbor) {
        throw InputError("disconnect: pivot and neighbor coincide");
    }
    std::size_t counts[4] = {0, 0, 0, 0};
    for (auto i : subset) {
        if (gadgets_[i].string[pivot] != PauliLetter::Z) {
            throw InputError("disconnect: gadget " + std::to_string(i) + " is not diagonal on the pivot");
        }
        counts[static_cast<int>(gadgets_[i].string[neighbor])]++;
    }
    const auto n_i = counts[static_cast<int>(PauliLetter::I)];
    const auto n_x = counts[static_cast<int>(PauliLetter::X)];
    const auto n_y = counts[static_cast<int>(PauliLetter::Y)];
    const auto n_z = counts[static_cast<int>(PauliLetter::Z)];

    std::vector<CliffordGate> gates;
    if (n_i > 0) {
        gates = {CliffordGate::cnot(neighbor, pivot), CliffordGate::cnot(pivot, neighbor)};
    } else {
        const auto zy = n_z + n_y;
        const auto zx = n_z + n_x;
        const auto xy = n_x + n_y;
        if (zx > zy && zx >= xy) {
            gates.push_back(CliffordGate::s(neighbor));
        } else if (xy > zy && xy > zx) {
            gates.push_back(CliffordGate::h(neighbor));
        }
        gates.push_back(CliffordGate::cnot(pivot, neighbor));
    }
#ifndef NDEBUG
    std::vector<std::size_t> matched;
    for (auto i : subset) {
        auto p = gadgets_[i].string[neighbor];
        bool hit = n_i > 0 ? p == PauliLetter::I
                           : (gates.size() == 1   ? p != PauliLetter::X
                              : gates[0].kind == CliffordKind::S ? p != PauliLetter::Y
                                                                 : p != PauliLetter::Z);
        if (hit) {
            matched.push_back(i);
        }
    }
#endif
    for (const auto &g : gates) {
        place(g);
    }
#ifndef NDEBUG
    for (auto i : matched) {
        assert(gadgets_[i].string[pivot] == PauliLetter::I && "disconnect left a matched leg on the pivot");
    }
#endif
    return gates;
}

void SynthesisState::emit_rotation(std::size_t index) {
    if (index >= gadgets_.size() || finished_[index]) {
        throw InputError("emit_rotation: gadget " + std::to_string(index) + " is not pending");
    }
    const auto &s = gadgets_[index].string;
    std::size_t leg = s.size();
    for (std::size_t j = 0; j < s.size(); j++) {
        if (s[j] != PauliLetter::I) {
            if (leg != s.size()) {
                throw InputError("emit_rotation: gadget " + std::to_string(index) + " has more than one leg");
            }
            leg = j;
        }
    }
    if (leg != s.size()) {
        if (s[leg] == PauliLetter::X) {
            place(CliffordGate::h(leg));
        } else if (s[leg] == PauliLetter::Y) {
            place(CliffordGate::v(leg));
        }
        circuit_.append(Gate::rz(leg, gadgets_[index].angle));
    }
    finished_[index] = 1;
    live_.erase(std::find(live_.begin(), live_.end(), index));
    emitted_.push_back(index);
    notify();
}

std::vector<std::size_t> &LetterPartition::operator[](PauliLetter p) {
    switch (p) {
        case PauliLetter::X:
            return x;
        case PauliLetter::Y:
            return y;
        case PauliLetter::Z:
            return z;
        default:
            return i;
    }
}

const std::vector<std::size_t> &LetterPartition::operator[](PauliLetter p) const {
    return const_cast<LetterPartition &>(*this)[p];
}

LetterPartition partition_on_qubit(const std::vector<PauliGadget> &gadgets, std::span<const std::size_t> subset,
                                   std::size_t qubit) {
    LetterPartition out;
    for (auto i : subset) {
        out[gadgets[i].string[qubit]].push_back(i);
    }
    return out;
}

long cost_c(std::span<const PauliLetter> column, int k) {
    long identities = 0;
    long longest = 0;
    long shortest = 0;
    long run = 0;
    auto close_run = [&] {
        if (run > 0) {
            longest = std::max(longest, run);
            shortest = shortest == 0 ? run : std::min(shortest, run);
        }
        run = 0;
    };
    for (auto p : column) {
        if (p == PauliLetter::I) {
            identities++;
            close_run();
        } else {
            run++;
        }
    }
    close_run();
    return k * identities + longest - shortest;
}

std::vector<PauliLetter> column(const std::vector<PauliGadget> &gadgets, std::span<const std::size_t> subset,
                                std::size_t qubit) {
    std::vector<PauliLetter> out;
    out.reserve(subset.size());
    for (auto i : subset) {
        out.push_back(gadgets[i].string[qubit]);
    }
    return out;
}

namespace {

std::size_t argmax_cost(const std::vector<std::size_t> &candidates, const std::vector<PauliGadget> &gadgets,
                        std::span<const std::size_t> subset, int k) {
    std::size_t best = candidates.front();
    long best_cost = 0;
    bool first = true;
    for (auto q : candidates) {
        auto c = cost_c(column(gadgets, subset, q), k);
        if (first || c > best_cost) {
            best = q;
            best_cost = c;
            first = false;
        }
    }
    return best;
}

}  // namespace

std::size_t pick_pivot(const std::vector<PauliGadget> &gadgets, std::span<const std::size_t> subset,
                       const QubitSet &active, const Topology &topo, int k) {
    auto candidates = topo.non_cutting(active);
    if (candidates.empty()) {
        throw InputError("pick_pivot: no active qubits");
    }
    return argmax_cost(candidates, gadgets, subset, k);
}

std::size_t pick_neighbor(std::size_t pivot, const std::vector<PauliGadget> &gadgets,
                          std::span<const std::size_t> subset, const QubitSet &active, const Topology &topo, int k) {
    auto candidates = topo.neighbors(pivot, active);
    if (candidates.empty()) {
        throw InputError("pick_neighbor: qubit " + std::to_string(pivot) + " has no active neighbor");
    }
    return argmax_cost(candidates, gadgets, subset, k);
}

std::vector<std::vector<std::size_t>> partition_commuting_sets(const PauliPolynomial &poly) {
    std::vector<std::vector<std::size_t>> sets;
    for (std::size_t i = 0; i < poly.size(); i++) {
        bool joins = !sets.empty() && std::all_of(sets.back().begin(), sets.back().end(),
                                                  [&](std::size_t j) { return commutes(poly[i], poly[j]); });
        if (!joins) {
            sets.emplace_back();
        }
        sets.back().push_back(i);
    }
    return sets;
}

namespace {

struct Frame {
    bool pauli = false;  // false: identity recursion, true: Pauli recursion on `pivot`
    std::vector<std::size_t> gadgets;
    std::size_t pivot = 0;
    QubitSet qubits;
};

std::vector<std::size_t> merged(const LetterPartition &p) {
    std::vector<std::size_t> out;
    out.reserve(p.x.size() + p.y.size() + p.z.size());
    out.insert(out.end(), p.x.begin(), p.x.end());
    out.insert(out.end(), p.y.begin(), p.y.end());
    out.insert(out.end(), p.z.begin(), p.z.end());
    std::sort(out.begin(), out.end());
    return out;
}

// Emits every listed gadget with at most one leg and returns the others.
std::vector<std::size_t> emit_single_legs(SynthesisState &state, const std::vector<std::size_t> &subset) {
    std::vector<std::size_t> rest;
    for (auto i : subset) {
        if (state.gadgets()[i].string.leg_count() <= 1) {
            state.emit_rotation(i);
        } else {
            rest.push_back(i);
        }
    }
    return rest;
}

bool column_is_identity(const SynthesisState &state, const std::vector<std::size_t> &subset, std::size_t q) {
    return std::all_of(subset.begin(), subset.end(),
                       [&](std::size_t i) { return state.gadgets()[i].string[q] == PauliLetter::I; });
}

void push_split(std::vector<Frame> &stack, const LetterPartition &part, std::size_t pivot, const QubitSet &qubits) {
    auto rest = merged(part);
    if (!rest.empty()) {
        stack.push_back({true, std::move(rest), pivot, qubits});
    }
    if (!part.i.empty()) {
        stack.push_back({false, part.i, 0, qubits.without(pivot)});
    }
}

void run_recursion(SynthesisState &state, std::vector<std::size_t> subset, const Topology &topo, int k) {
    std::vector<Frame> stack;
    stack.push_back({false, std::move(subset), 0, QubitSet(topo.num_qubits())});
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        state.set_active(f.qubits);
        auto g = emit_single_legs(state, f.gadgets);
        if (g.empty()) {
            continue;
        }
        if (!f.pauli) {
            auto pivot = pick_pivot(state.gadgets(), g, f.qubits, topo, k);
            push_split(stack, partition_on_qubit(state.gadgets(), g, pivot), pivot, f.qubits);
            continue;
        }

        const auto p = f.pivot;
        auto part = partition_on_qubit(state.gadgets(), g, p);
        assert(part.i.empty());
        const std::vector<std::size_t> *group = &part.z;
        if (part.x.size() > group->size()) {
            group = &part.x;
        }
        if (part.y.size() > group->size()) {
            group = &part.y;
        }
        state.diagonalize_qubit(*group, p);

        // Neighbors that no gadget of this subproblem touches are used only when
        // nothing else is adjacent.
        QubitSet candidates = f.qubits;
        bool any_touched = false;
        for (auto n : topo.neighbors(p, f.qubits)) {
            if (column_is_identity(state, g, n)) {
                candidates.erase(n);
            } else {
                any_touched = true;
            }
        }
        const auto &allowed = any_touched ? candidates : f.qubits;
        auto n = pick_neighbor(p, state.gadgets(), *group, allowed, topo, k);
        state.disconnect(p, n, *group);

        push_split(stack, partition_on_qubit(state.gadgets(), g, p), p, f.qubits);
    }
}

SynthesisResult finish(const Circuit &prefix, const CliffordTableau &tableau, std::vector<std::size_t> order,
                       const Topology &topo, bool allow_permutation) {
    auto tail = synthesize(tableau, topo, allow_permutation);
    SynthesisResult r{concat(prefix, tail.circuit), std::move(order), std::move(tail.permutation), {}};
    r.metrics = metrics(r.circuit);
    return r;
}

void check_sizes(const PauliPolynomial &poly, const Topology &topo) {
    if (poly.num_qubits() != topo.num_qubits()) {
        throw InputError("polynomial has " + std::to_string(poly.num_qubits()) + " qubits but the topology has " +
                         std::to_string(topo.num_qubits()));
    }
}

}  // namespace

SynthesisResult synthesize(const PauliPolynomial &poly, const Topology &topo, const SynthConfig &cfg) {
    check_sizes(poly, topo);
    if (cfg.k <= 0) {
        throw InputError("weighting factor k must be positive");
    }
    SynthesisState state(poly, cfg.observer);
    if (cfg.mode == SynthMode::CommutingSets) {
        for (auto &set : partition_commuting_sets(poly)) {
            run_recursion(state, std::move(set), topo, cfg.k);
        }
    } else {
        run_recursion(state, state.remaining(), topo, cfg.k);
    }
    assert(state.remaining().empty());
    return finish(state.circuit(), state.tableau(), state.emitted_order(), topo, cfg.allow_permutation);
}

SynthesisResult naive_synthesize(const PauliPolynomial &poly, const Topology &topo) {
    check_sizes(poly, topo);
    const auto q = poly.num_qubits();
    const QubitSet all(q);
    Circuit c(q);
    for (const auto &original : poly.gadgets()) {
        PauliGadget g = original;
        std::vector<Gate> basis;
        std::vector<std::size_t> legs;
        for (std::size_t j = 0; j < q; j++) {
            auto p = g.string[j];
            if (p == PauliLetter::I) {
                continue;
            }
            legs.push_back(j);
            if (p == PauliLetter::X || p == PauliLetter::Y) {
                auto cg = p == PauliLetter::X ? CliffordGate::h(j) : CliffordGate::v(j);
                propagate_through(cg, g);
                basis.push_back(Gate::from(cg));
            }
        }
        if (legs.empty()) {
            continue;
        }
        auto tree = root_tree(topo.steiner_tree(legs, all), legs.front());
        std::vector<char> carries(q, 0);
        for (auto j : legs) {
            carries[j] = 1;
        }
        std::vector<Gate> ladder;
        for (auto [p, ch] : tree.post_order) {
            if (!carries[p] && carries[ch]) {
                ladder.push_back(Gate::cnot(p, ch));
                carries[p] = 1;
            }
        }
        for (auto [p, ch] : tree.post_order) {
            ladder.push_back(Gate::cnot(ch, p));
        }
        for (const auto &b : basis) {
            c.append(b);
        }
        for (const auto &l : ladder) {
            c.append(l);
        }
        c.append(Gate::rz(tree.root, g.angle));
        for (auto it = ladder.rbegin(); it != ladder.rend(); ++it) {
            c.append(*it);
        }
        for (auto it = basis.rbegin(); it != basis.rend(); ++it) {
            c.append(it->as_clifford()->adjoint());
        }
    }
    std::vector<std::size_t> order(poly.size());
    std::iota(order.begin(), order.end(), 0);
    SynthesisResult r{std::move(c), std::move(order), QubitPermutation::identity(q), {}};
    r.metrics = metrics(r.circuit);
    return r;
}

}  // namespace psynth
