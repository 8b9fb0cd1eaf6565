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

#include "psynth/topology.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <sstream>

#include "psynth/pauli.hpp"

namespace psynth {

QubitSet::QubitSet(std::size_t universe, bool full) : mask_(universe, full ? 1 : 0), count_(full ? universe : 0) {}

void QubitSet::insert(std::size_t q) {
    if (!mask_[q]) {
        mask_[q] = 1;
        count_++;
    }
}

void QubitSet::erase(std::size_t q) {
    if (mask_[q]) {
        mask_[q] = 0;
        count_--;
    }
}

QubitSet QubitSet::without(std::size_t q) const {
    QubitSet out = *this;
    out.erase(q);
    return out;
}

std::vector<std::size_t> QubitSet::members() const {
    std::vector<std::size_t> out;
    out.reserve(count_);
    for (std::size_t q = 0; q < mask_.size(); q++) {
        if (mask_[q]) {
            out.push_back(q);
        }
    }
    return out;
}

Topology::Topology(std::size_t num_qubits, const std::vector<Edge> &edges)
    : n_(num_qubits), adjacent_(num_qubits * num_qubits, 0), neighbors_(num_qubits) {
    if (num_qubits == 0) {
        throw InputError("topology needs at least one qubit");
    }
    for (auto [u, v] : edges) {
        if (u >= n_ || v >= n_) {
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for " +
                             std::to_string(n_) + " qubits");
        }
        if (u == v) {
            throw InputError("self-loop on qubit " + std::to_string(u));
        }
        if (u > v) {
            std::swap(u, v);
        }
        if (!adjacent_[u * n_ + v]) {
            adjacent_[u * n_ + v] = adjacent_[v * n_ + u] = 1;
            edges_.emplace_back(u, v);
            neighbors_[u].push_back(v);
            neighbors_[v].push_back(u);
        }
    }
    std::sort(edges_.begin(), edges_.end());
    for (auto &adj : neighbors_) {
        std::sort(adj.begin(), adj.end());
    }

    // Floyd-Warshall.
    dist_.assign(n_ * n_, kUnreachable);
    for (std::size_t i = 0; i < n_; i++) {
        dist_[i * n_ + i] = 0;
        for (auto j : neighbors_[i]) {
            dist_[i * n_ + j] = 1;
        }
    }
    for (std::size_t k = 0; k < n_; k++) {
        for (std::size_t i = 0; i < n_; i++) {
            auto dik = dist_[i * n_ + k];
            if (dik == kUnreachable) {
                continue;
            }
            for (std::size_t j = 0; j < n_; j++) {
                auto dkj = dist_[k * n_ + j];
                if (dkj != kUnreachable && dik + dkj < dist_[i * n_ + j]) {
                    dist_[i * n_ + j] = dik + dkj;
                }
            }
        }
    }
    for (std::size_t j = 1; j < n_; j++) {
        if (dist_[j] == kUnreachable) {
            throw InputError("topology is disconnected: qubit " + std::to_string(j) + " unreachable from qubit 0");
        }
    }
}

Topology Topology::complete(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i + 1; j < n; j++) {
            e.emplace_back(i, j);
        }
    }
    return Topology(n, e);
}

Topology Topology::line(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i + 1 < n; i++) {
        e.emplace_back(i, i + 1);
    }
    return Topology(n, e);
}

Topology Topology::cycle(std::size_t n) {
    if (n < 3) {
        return line(n);
    }
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; i++) {
        e.emplace_back(i, (i + 1) % n);
    }
    return Topology(n, e);
}

Topology Topology::grid(std::size_t rows, std::size_t cols) {
    std::vector<Edge> e;
    for (std::size_t r = 0; r < rows; r++) {
        for (std::size_t c = 0; c < cols; c++) {
            auto q = r * cols + c;
            if (c + 1 < cols) {
                e.emplace_back(q, q + 1);
            }
            if (r + 1 < rows) {
                e.emplace_back(q, q + cols);
            }
        }
    }
    return Topology(rows * cols, e);
}

namespace {

std::size_t parse_count(std::string_view s, const std::string &context) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw InputError(context + ": invalid number '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

Topology Topology::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::size_t q = 0;
    bool have_header = false;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        line_no++;
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a) || a.front() == '#') {
            continue;
        }
        auto where = "topology line " + std::to_string(line_no);
        if (!(fields >> b) || (fields >> extra)) {
            throw InputError(where + ": expected two fields");
        }
        if (!have_header) {
            if (a != "qubits") {
                throw InputError(where + ": expected header 'qubits <count>'");
            }
            q = parse_count(b, where);
            have_header = true;
            continue;
        }
        edges.emplace_back(parse_count(a, where), parse_count(b, where));
    }
    if (!have_header) {
        throw InputError("topology: missing 'qubits <count>' header");
    }
    return Topology(q, edges);
}

Topology Topology::from_spec(const std::string &spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) {
        throw InputError("topology '" + spec + "': expected <kind>:<args>");
    }
    auto kind = spec.substr(0, colon);
    auto arg = std::string_view(spec).substr(colon + 1);
    if (kind == "file") {
        std::ifstream f{std::string(arg)};
        if (!f) {
            throw InputError("cannot open topology file '" + std::string(arg) + "'");
        }
        std::stringstream buf;
        buf << f.rdbuf();
        return parse(buf.str());
    }
    if (kind == "grid") {
        auto x = arg.find('x');
        if (x == std::string_view::npos) {
            throw InputError("topology '" + spec + "': expected grid:<rows>x<cols>");
        }
        return grid(parse_count(arg.substr(0, x), spec), parse_count(arg.substr(x + 1), spec));
    }
    auto n = parse_count(arg, spec);
    if (kind == "complete") {
        return complete(n);
    }
    if (kind == "line") {
        return line(n);
    }
    if (kind == "cycle") {
        return cycle(n);
    }
    throw InputError("unknown topology kind '" + kind + "'");
}

std::vector<std::size_t> Topology::neighbors(std::size_t v, const QubitSet &active) const {
    std::vector<std::size_t> out;
    for (auto u : neighbors_[v]) {
        if (active.contains(u)) {
            out.push_back(u);
        }
    }
    return out;
}

namespace {

// Number of active nodes reachable from `start`, skipping `banned`.
std::size_t reach_count(const Topology &t, std::size_t start, const QubitSet &active, std::size_t banned) {
    std::vector<char> seen(t.num_qubits(), 0);
    std::vector<std::size_t> stack{start};
    seen[start] = 1;
    std::size_t count = 0;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        count++;
        for (auto u : t.adjacency(v)) {
            if (!seen[u] && u != banned && active.contains(u)) {
                seen[u] = 1;
                stack.push_back(u);
            }
        }
    }
    return count;
}

}  // namespace

bool Topology::induced_connected(const QubitSet &active) const {
    if (active.size() <= 1) {
        return true;
    }
    auto m = active.members();
    return reach_count(*this, m.front(), active, kUnreachable) == active.size();
}

bool Topology::is_non_cutting(std::size_t v, const QubitSet &active) const {
    if (!active.contains(v)) {
        throw InputError("qubit " + std::to_string(v) + " is not in the active set");
    }
    if (active.size() <= 2) {
        return true;
    }
    for (std::size_t s = 0; s < n_; s++) {
        if (s != v && active.contains(s)) {
            return reach_count(*this, s, active, v) == active.size() - 1;
        }
    }
    return true;
}

std::vector<std::size_t> Topology::non_cutting(const QubitSet &active) const {
    std::vector<std::size_t> out;
    for (auto v : active.members()) {
        if (is_non_cutting(v, active)) {
            out.push_back(v);
        }
    }
    return out;
}

std::vector<Edge> Topology::steiner_tree(const std::vector<std::size_t> &terminals, const QubitSet &active) const {
    if (terminals.empty()) {
        throw InputError("steiner_tree: no terminals");
    }
    for (auto t : terminals) {
        if (!active.contains(t)) {
            throw InputError("steiner_tree: terminal " + std::to_string(t) + " is not active");
        }
    }
    std::vector<char> in_tree(n_, 0);
    std::vector<char> pending(n_, 0);
    std::size_t remaining = 0;
    for (auto t : terminals) {
        if (!pending[t]) {
            pending[t] = 1;
            remaining++;
        }
    }
    in_tree[terminals.front()] = 1;
    pending[terminals.front()] = 0;
    remaining--;

    std::vector<Edge> tree;
    std::vector<std::size_t> parent(n_);
    std::vector<std::size_t> depth(n_);
    while (remaining > 0) {
        // Multi-source BFS from the current tree; sources and neighbors in index
        // order, so the nearest terminal with the lowest index wins ties.
        std::fill(depth.begin(), depth.end(), kUnreachable);
        std::deque<std::size_t> queue;
        for (std::size_t v = 0; v < n_; v++) {
            if (in_tree[v]) {
                depth[v] = 0;
                queue.push_back(v);
            }
        }
        std::size_t best = kUnreachable;
        while (!queue.empty()) {
            auto v = queue.front();
            queue.pop_front();
            if (best != kUnreachable && depth[v] >= depth[best]) {
                break;
            }
            for (auto u : neighbors_[v]) {
                if (depth[u] != kUnreachable || !active.contains(u)) {
                    continue;
                }
                depth[u] = depth[v] + 1;
                parent[u] = v;
                if (pending[u] && (best == kUnreachable || depth[u] < depth[best] ||
                                   (depth[u] == depth[best] && u < best))) {
                    best = u;
                }
                queue.push_back(u);
            }
        }
        if (best == kUnreachable) {
            throw InputError("steiner_tree: terminals are not connected within the active qubits");
        }
        for (auto v = best; !in_tree[v]; v = parent[v]) {
            in_tree[v] = 1;
            tree.emplace_back(std::min(v, parent[v]), std::max(v, parent[v]));
            if (pending[v]) {
                pending[v] = 0;
                remaining--;
            }
        }
    }
    return tree;
}

std::string Topology::str() const {
    std::string out = "qubits " + std::to_string(n_) + "\n";
    for (auto [u, v] : edges_) {
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
    return out;
}

RootedTree root_tree(const std::vector<Edge> &edges, std::size_t root) {
    RootedTree out{root, {}};
    if (edges.empty()) {
        return out;
    }
    std::size_t n = root + 1;
    for (auto [u, v] : edges) {
        n = std::max({n, u + 1, v + 1});
    }
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    // Pre-order walk, then reversed: children before parents.
    std::vector<char> seen(n, 0);
    std::vector<Edge> pre;
    std::vector<std::size_t> stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto u : adj[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                pre.emplace_back(v, u);
                stack.push_back(u);
            }
        }
    }
    if (pre.size() != edges.size()) {
        throw InputError("root_tree: edges do not form a tree containing the root");
    }
    out.post_order.assign(pre.rbegin(), pre.rend());
    return out;
}

}  // namespace psynth
