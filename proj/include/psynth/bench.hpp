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

#ifndef PSYNTH_BENCH_HPP
#define PSYNTH_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "psynth/pauli.hpp"
#include "psynth/synth.hpp"
#include "psynth/topology.hpp"

namespace psynth {

/// Pseudo-random source used for every generated instance.
using Rng = std::mt19937_64;
inline constexpr const char *kRngName = "mt19937_64";

/// Uniform integer in [0, bound) by rejection sampling, identical on every platform.
std::uint64_t uniform_below(Rng &rng, std::uint64_t bound);

/// {pi, pi/2, pi/4, pi/8, pi/16}
std::vector<double> default_angles();
/// {pi/32, pi/64, pi/128}
std::vector<double> trotter_angles();

struct RandomSpec {
    std::size_t num_qubits = 0;
    std::size_t num_gadgets = 0;
    std::vector<double> angle_set = default_angles();
    std::uint64_t seed = 0;
};

/// Per gadget: a leg count uniform in 1..q, that many distinct uniform
/// positions, letters uniform over {X, Y, Z} and an angle uniform over the set.
/// Throws InputError for q == 0, n == 0 or an empty angle set.
PauliPolynomial random_polynomial(const RandomSpec &spec);

enum class Method { Naive, Proposed };

std::string to_string(Method m);
/// "naive" or "proposed"; throws InputError otherwise.
Method parse_method(const std::string &name);

struct ExperimentRow {
    std::string method;
    std::string topology;
    std::size_t q = 0;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::size_t cnots = 0;
    std::size_t depth = 0;
    std::size_t cnot_depth = 0;
    double wall_time_ms = 0;
};

std::string csv_header();
std::string to_csv(const ExperimentRow &row);

/// Runs `method` on `poly`. Both methods return a SynthesisResult.
SynthesisResult run_method(Method method, const PauliPolynomial &poly, const Topology &topo, const SynthConfig &cfg);

/// Calls task(i) for i in [0, count) on up to `threads` worker threads
/// (0 picks the hardware concurrency). The first exception is rethrown.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)> &task);

struct BenchmarkConfig {
    std::vector<Method> methods;
    /// Topology specs as accepted by Topology::from_spec.
    std::vector<std::string> topologies;
    /// Gadget counts.
    std::vector<std::size_t> sizes;
    std::size_t repeats = 20;
    std::uint64_t seed = 0;
    SynthConfig synth;
    /// Check equivalence densely for q <= verify_max_qubits (0 disables).
    std::size_t verify_max_qubits = 5;
    std::size_t threads = 0;
    /// If set, receives the QASM text of every produced circuit.
    std::function<void(const ExperimentRow &, const std::string &qasm)> qasm_sink;
};

/// One row per (topology, size, repeat, method), in that nesting order.
/// Instance r of a (topology, size) pair uses seed + r. Throws InputError on an
/// empty method, topology or size list, and std::runtime_error if a circuit
/// fails verification.
std::vector<ExperimentRow> run_benchmark(const BenchmarkConfig &cfg);

/// "# prng=... seed=..." line, header and rows.
void write_csv(std::ostream &out, std::uint64_t seed, const std::vector<ExperimentRow> &rows);

struct TrotterConfig {
    std::vector<Method> methods{Method::Naive, Method::Proposed};
    std::size_t instances = 20;
    std::size_t num_qubits = 6;
    std::size_t num_gadgets = 160;
    std::vector<double> angle_set = trotter_angles();
    /// Evenly spaced over [0, 2 pi], both ends included.
    std::size_t timesteps = 17;
    std::size_t repetitions = 1;
    std::uint64_t seed = 0;
    std::string topology = "complete:6";
    SynthConfig synth;
    std::size_t threads = 0;
};

struct TrotterRow {
    std::string method;
    std::size_t instance = 0;
    std::uint64_t seed = 0;
    double t = 0;
    double overlap = 0;  // |<0| U_exact U_circuit^dagger |0>|
    double distance = 0;  // operator max-norm distance up to phase, for diagnostics
};

std::vector<TrotterRow> run_trotter_error(const TrotterConfig &cfg);
void write_trotter_csv(std::ostream &out, std::uint64_t seed, const std::vector<TrotterRow> &rows);

/// Mean of 1 - overlap over the rows of `method`.
double mean_infidelity(const std::vector<TrotterRow> &rows, Method method);

}  // namespace psynth

#endif
