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

#include "psynth/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "psynth/verify.hpp"

namespace psynth {

std::uint64_t uniform_below(Rng &rng, std::uint64_t bound) {
    if (bound == 0) {
        throw InputError("uniform_below: empty range");
    }
    // Reject the top partial block so every residue is equally likely.
    const std::uint64_t limit = Rng::max() - (Rng::max() % bound + 1) % bound;
    std::uint64_t v;
    do {
        v = rng();
    } while (v > limit);
    return v % bound;
}

std::vector<double> default_angles() {
    using std::numbers::pi;
    return {pi, pi / 2, pi / 4, pi / 8, pi / 16};
}

std::vector<double> trotter_angles() {
    using std::numbers::pi;
    return {pi / 32, pi / 64, pi / 128};
}

PauliPolynomial random_polynomial(const RandomSpec &spec) {
    if (spec.num_qubits == 0 || spec.num_gadgets == 0 || spec.angle_set.empty()) {
        throw InputError("random_polynomial: need q >= 1, n >= 1 and a non-empty angle set");
    }
    static constexpr PauliLetter kLetters[3] = {PauliLetter::X, PauliLetter::Y, PauliLetter::Z};
    const auto q = spec.num_qubits;
    Rng rng(spec.seed);
    PauliPolynomial poly(q);
    std::vector<std::size_t> positions(q);
    for (std::size_t g = 0; g < spec.num_gadgets; g++) {
        const auto legs = 1 + uniform_below(rng, q);
        std::iota(positions.begin(), positions.end(), 0);
        PauliString s(q);
        for (std::size_t l = 0; l < legs; l++) {
            auto pick = l + uniform_below(rng, q - l);
            std::swap(positions[l], positions[pick]);
            s[positions[l]] = kLetters[uniform_below(rng, 3)];
        }
        const double angle = spec.angle_set[uniform_below(rng, spec.angle_set.size())];
        poly.add({angle, std::move(s)});
    }
    return poly;
}

std::string to_string(Method m) { return m == Method::Naive ? "naive" : "proposed"; }

Method parse_method(const std::string &name) {
    if (name == "naive") {
        return Method::Naive;
    }
    if (name == "proposed") {
        return Method::Proposed;
    }
    throw InputError("unknown method '" + name + "' (expected naive or proposed)");
}

std::string csv_header() { return "method,topology,q,n,seed,cnots,depth,cnot_depth,wall_time_ms"; }

std::string to_csv(const ExperimentRow &r) {
    std::ostringstream out;
    out << r.method << ',' << r.topology << ',' << r.q << ',' << r.n << ',' << r.seed << ',' << r.cnots << ','
        << r.depth << ',' << r.cnot_depth << ',' << r.wall_time_ms;
    return out.str();
}

SynthesisResult run_method(Method method, const PauliPolynomial &poly, const Topology &topo,
                           const SynthConfig &cfg) {
    return method == Method::Naive ? naive_synthesize(poly, topo) : synthesize(poly, topo, cfg);
}

void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)> &task) {
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = std::min(threads, count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; i++) {
            task(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            auto i = next.fetch_add(1);
            if (i >= count) {
                return;
            }
            try {
                task(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                next = count;
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; t++) {
        pool.emplace_back(worker);
    }
    for (auto &t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

std::vector<ExperimentRow> run_benchmark(const BenchmarkConfig &cfg) {
    if (cfg.methods.empty() || cfg.topologies.empty() || cfg.sizes.empty()) {
        throw InputError("benchmark needs at least one method, topology and size");
    }
    std::vector<Topology> topos;
    for (const auto &spec : cfg.topologies) {
        topos.push_back(Topology::from_spec(spec));
    }
    struct Task {
        std::size_t topo;
        std::size_t n;
        std::uint64_t seed;
        Method method;
    };
    std::vector<Task> tasks;
    for (std::size_t t = 0; t < topos.size(); t++) {
        for (auto n : cfg.sizes) {
            for (std::size_t r = 0; r < cfg.repeats; r++) {
                for (auto m : cfg.methods) {
                    tasks.push_back({t, n, cfg.seed + r, m});
                }
            }
        }
    }
    std::vector<ExperimentRow> rows(tasks.size());
    std::mutex sink_mutex;
    parallel_for(tasks.size(), cfg.threads, [&](std::size_t i) {
        const auto &task = tasks[i];
        const auto &topo = topos[task.topo];
        auto poly = random_polynomial({topo.num_qubits(), task.n, default_angles(), task.seed});
        auto start = std::chrono::steady_clock::now();
        auto result = run_method(task.method, poly, topo, cfg.synth);
        auto stop = std::chrono::steady_clock::now();
        if (!conforms(result.circuit, topo)) {
            throw std::runtime_error("circuit does not conform to " + cfg.topologies[task.topo]);
        }
        if (metrics(result.circuit) != result.metrics) {
            throw std::runtime_error("reported metrics differ from the circuit");
        }
        if (topo.num_qubits() <= cfg.verify_max_qubits) {
            auto expected = verify::product_unitary(poly, result.emitted_order);
            auto actual = verify::circuit_unitary(result.circuit);
            if (!verify::equivalent(expected, actual, result.permutation)) {
                throw std::runtime_error("equivalence check failed for " + to_string(task.method) + " on " +
                                         cfg.topologies[task.topo] + " seed " + std::to_string(task.seed));
            }
        }
        auto &row = rows[i];
        row.method = to_string(task.method);
        row.topology = cfg.topologies[task.topo];
        row.q = topo.num_qubits();
        row.n = task.n;
        row.seed = task.seed;
        row.cnots = result.metrics.cnot_count;
        row.depth = result.metrics.depth;
        row.cnot_depth = result.metrics.two_qubit_depth;
        row.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        if (cfg.qasm_sink) {
            std::lock_guard lock(sink_mutex);
            cfg.qasm_sink(row, to_qasm2(result.circuit));
        }
    });
    return rows;
}

void write_csv(std::ostream &out, std::uint64_t seed, const std::vector<ExperimentRow> &rows) {
    out << "# prng=" << kRngName << " seed=" << seed << "\n" << csv_header() << "\n";
    for (const auto &r : rows) {
        out << to_csv(r) << "\n";
    }
}

std::vector<TrotterRow> run_trotter_error(const TrotterConfig &cfg) {
    if (cfg.methods.empty() || cfg.instances == 0 || cfg.timesteps == 0 || cfg.repetitions == 0) {
        throw InputError("trotter-error needs methods, instances, timesteps and repetitions");
    }
    verify::check_size(cfg.num_qubits);
    const auto topo = Topology::from_spec(cfg.topology);
    if (topo.num_qubits() != cfg.num_qubits) {
        throw InputError("topology " + cfg.topology + " does not have " + std::to_string(cfg.num_qubits) +
                         " qubits");
    }
    std::vector<double> times(cfg.timesteps, 0.0);
    for (std::size_t s = 0; s < cfg.timesteps && cfg.timesteps > 1; s++) {
        times[s] = 2 * std::numbers::pi * static_cast<double>(s) / static_cast<double>(cfg.timesteps - 1);
    }
    const auto per_instance = cfg.methods.size() * cfg.timesteps;
    std::vector<TrotterRow> rows(cfg.instances * per_instance);
    parallel_for(cfg.instances, cfg.threads, [&](std::size_t inst) {
        const auto seed = cfg.seed + inst;
        auto poly = random_polynomial({cfg.num_qubits, cfg.num_gadgets, cfg.angle_set, seed});
        for (std::size_t s = 0; s < cfg.timesteps; s++) {
            const double t = times[s];
            auto exact = verify::exact_unitary(poly, t);
            auto step = poly.scaled(t / static_cast<double>(cfg.repetitions));
            for (std::size_t m = 0; m < cfg.methods.size(); m++) {
                auto result = run_method(cfg.methods[m], step, topo, cfg.synth);
                verify::DenseUnitary one = verify::permutation_unitary(result.permutation) * verify::circuit_unitary(result.circuit);
                verify::DenseUnitary total = one;
                for (std::size_t r = 1; r < cfg.repetitions; r++) {
                    total = one * total;
                }
                auto &row = rows[inst * per_instance + m * cfg.timesteps + s];
                row.method = to_string(cfg.methods[m]);
                row.instance = inst;
                row.seed = seed;
                row.t = t;
                row.overlap = std::abs(verify::overlap(exact, total));
                row.distance = verify::distance_up_to_phase(exact, total, QubitPermutation::identity(cfg.num_qubits));
            }
        }
    });
    return rows;
}

void write_trotter_csv(std::ostream &out, std::uint64_t seed, const std::vector<TrotterRow> &rows) {
    out << "# prng=" << kRngName << " seed=" << seed << "\n";
    out << "method,instance,seed,t,overlap,distance\n";
    for (const auto &r : rows) {
        out << r.method << ',' << r.instance << ',' << r.seed << ',' << r.t << ',' << r.overlap << ','
            << r.distance << "\n";
    }
}

double mean_infidelity(const std::vector<TrotterRow> &rows, Method method) {
    const auto name = to_string(method);
    double sum = 0;
    std::size_t count = 0;
    for (const auto &r : rows) {
        if (r.method == name) {
            sum += 1 - r.overlap;
            count++;
        }
    }
    return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

}  // namespace psynth
