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

#ifndef PSYNTH_TOPOLOGY_HPP
#define PSYNTH_TOPOLOGY_HPP

#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace psynth {

/// Subset of the qubits of a topology. Recursive synthesis removes qubits
/// logically through this mask; the graph itself is never mutated.
class QubitSet {
   public:
    QubitSet() = default;
    /// All of {0..n-1} if `full`, otherwise empty.
    explicit QubitSet(std::size_t universe, bool full = true);

    std::size_t universe() const { return mask_.size(); }
    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }
    bool contains(std::size_t q) const { return q < mask_.size() && mask_[q]; }
    void insert(std::size_t q);
    void erase(std::size_t q);
    QubitSet without(std::size_t q) const;
    /// Members in increasing order.
    std::vector<std::size_t> members() const;

    bool operator==(const QubitSet &) const = default;

   private:
    std::vector<char> mask_;
    std::size_t count_ = 0;
};

using Edge = std::pair<std::size_t, std::size_t>;

/// Undirected, connected coupling graph with all-pairs hop distances.
class Topology {
   public:
    static constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

    /// Throws InputError on self-loops, out-of-range indices or a disconnected graph.
    /// Duplicate edges are merged.
    Topology(std::size_t num_qubits, const std::vector<Edge> &edges);

    static Topology complete(std::size_t n);
    static Topology line(std::size_t n);
    static Topology cycle(std::size_t n);
    /// rows x cols grid, qubit index = row * cols + col.
    static Topology grid(std::size_t rows, std::size_t cols);

    /// "qubits <q>" header followed by one "u v" edge per line.
    static Topology parse(std::string_view text);
    /// complete:5 | line:7 | cycle:6 | grid:4x4 | file:<path>
    static Topology from_spec(const std::string &spec);

    std::size_t num_qubits() const { return n_; }
    /// Normalized (u < v), sorted, deduplicated.
    const std::vector<Edge> &edges() const { return edges_; }
    bool connected(std::size_t u, std::size_t v) const { return adjacent_[u * n_ + v] != 0; }
    std::size_t distance(std::size_t u, std::size_t v) const { return dist_[u * n_ + v]; }
    const std::vector<std::size_t> &adjacency(std::size_t v) const { return neighbors_[v]; }

    /// Neighbors of v inside `active`, increasing.
    std::vector<std::size_t> neighbors(std::size_t v, const QubitSet &active) const;

    /// True iff removing v leaves the subgraph induced by `active` connected.
    /// Throws InputError if v is not active.
    bool is_non_cutting(std::size_t v, const QubitSet &active) const;
    std::vector<std::size_t> non_cutting(const QubitSet &active) const;

    /// True iff the subgraph induced by `active` is connected (vacuously for <= 1 node).
    bool induced_connected(const QubitSet &active) const;

    /// Approximate Steiner tree inside `active` spanning `terminals`, grown from
    /// terminals[0] by repeatedly attaching the nearest remaining terminal along a
    /// shortest path. Every leaf is a terminal. Throws InputError on empty terminals
    /// or terminals that cannot be reached within `active`.
    std::vector<Edge> steiner_tree(const std::vector<std::size_t> &terminals, const QubitSet &active) const;

    /// Edges as "u v" lines after a "qubits <q>" header.
    std::string str() const;

   private:
    std::size_t n_;
    std::vector<Edge> edges_;
    std::vector<char> adjacent_;
    std::vector<std::vector<std::size_t>> neighbors_;
    std::vector<std::size_t> dist_;
};

/// A Steiner tree oriented away from `root`: edges listed children-first
/// (every edge appears after all edges below its child).
struct RootedTree {
    std::size_t root;
    /// (parent, child) pairs in post-order.
    std::vector<Edge> post_order;
};

/// Orients `edges` (a tree containing `root`) away from root.
RootedTree root_tree(const std::vector<Edge> &edges, std::size_t root);

}  // namespace psynth

#endif
