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

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "psynth/bench.hpp"
#include "psynth/synth.hpp"
#include "psynth/verify.hpp"

namespace {

using namespace psynth;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

// Failure of a correctness check, as opposed to bad input.
struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Opens `path` for writing, or returns std::cout for "-".
class Output {
   public:
    explicit Output(const std::string &path) {
        if (path != "-") {
            file_.open(path);
            if (!file_) {
                throw InputError("cannot write " + path);
            }
        }
    }
    std::ostream &stream() { return file_.is_open() ? file_ : std::cout; }

   private:
    std::ofstream file_;
};

SynthMode parse_mode(const std::string &s) {
    if (s == "arbitrary") {
        return SynthMode::ArbitraryOrder;
    }
    if (s == "commuting-sets") {
        return SynthMode::CommutingSets;
    }
    throw InputError("unknown mode '" + s + "' (expected arbitrary or commuting-sets)");
}

struct CommonOptions {
    std::string topology;
    std::string method = "proposed";
    std::string mode = "arbitrary";
    int k = 10;
    bool no_permutation = false;

    SynthConfig config(const PauliPolynomial *poly, const Topology *topo) const {
        SynthConfig cfg;
        cfg.k = k;
        cfg.mode = parse_mode(mode);
        cfg.allow_permutation = !no_permutation;
        // Per-step dense check of the synthesis invariant on small registers.
        const char *debug = std::getenv("PSYNTH_DEBUG_VERIFY");
        if (poly && topo && debug && *debug && std::string(debug) != "0" && poly->num_qubits() <= 5) {
            cfg.observer = [poly, topo](const SynthesisState &state) {
                auto d = verify::state_distance(*poly, state, *topo);
                if (d > 1e-9) {
                    throw VerificationFailure("synthesis invariant broken after gate " +
                                              std::to_string(state.circuit().size()) +
                                              " (distance " + std::to_string(d) + ")");
                }
            };
        }
        return cfg;
    }
};

void add_common(CLI::App *cmd, CommonOptions &o, bool topology_required) {
    auto *t = cmd->add_option("--topology", o.topology, "complete:N, line:N, cycle:N, grid:RxC or file:PATH");
    if (topology_required) {
        t->required();
    }
    cmd->add_option("--method", o.method, "naive or proposed")->check(CLI::IsMember({"naive", "proposed"}));
    cmd->add_option("--mode", o.mode, "arbitrary or commuting-sets")
        ->check(CLI::IsMember({"arbitrary", "commuting-sets"}));
    cmd->add_option("--k", o.k, "pivot cost weight for identity letters")->check(CLI::PositiveNumber);
    cmd->add_flag("--no-permutation", o.no_permutation, "undo the final qubit permutation with gates");
}

std::string permutation_str(const QubitPermutation &p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); i++) {
        s += (i ? "," : "") + std::to_string(p[i]);
    }
    return s;
}

// Dense checks of a synthesis result. Returns the distance to the product in emitted order.
double check_result(const PauliPolynomial &poly, const Topology &topo, const SynthesisResult &r, SynthMode mode) {
    if (!conforms(r.circuit, topo)) {
        throw VerificationFailure("circuit has a CNOT off the topology");
    }
    auto actual = verify::circuit_unitary(r.circuit);
    auto d = verify::distance_up_to_phase(verify::product_unitary(poly, r.emitted_order), actual, r.permutation);
    if (mode == SynthMode::CommutingSets) {
        d = std::max(d, verify::distance_up_to_phase(verify::product_unitary(poly), actual, r.permutation));
    }
    return d;
}

int cmd_synth(const std::string &in, const CommonOptions &o, const std::string &out, const std::string &metrics_out,
              bool do_verify) {
    auto poly = parse_polynomial(read_file(in));
    auto topo = Topology::from_spec(o.topology);
    auto cfg = o.config(&poly, &topo);
    auto r = run_method(parse_method(o.method), poly, topo, cfg);
    {
        Output qasm(out);
        qasm.stream() << to_qasm2(r.circuit);
    }
    std::ostringstream line;
    line << "cnots=" << r.metrics.cnot_count << " depth=" << r.metrics.depth
         << " cnot_depth=" << r.metrics.two_qubit_depth << " permutation=" << permutation_str(r.permutation) << "\n";
    if (metrics_out.empty()) {
        std::cerr << line.str();
    } else {
        Output m(metrics_out);
        m.stream() << line.str();
    }
    if (do_verify) {
        if (poly.num_qubits() > 5) {
            throw InputError("--verify supports at most 5 qubits");
        }
        auto d = check_result(poly, topo, r, cfg.mode);
        if (d > 1e-9) {
            std::cerr << "FAIL distance=" << d << "\n";
            return kExitVerifyFailed;
        }
        std::cerr << "PASS distance=" << d << "\n";
    }
    return 0;
}

int cmd_verify(const std::string &in, const CommonOptions &o, double tol) {
    auto poly = parse_polynomial(read_file(in));
    auto topo = Topology::from_spec(o.topology);
    auto cfg = o.config(&poly, &topo);
    auto r = run_method(parse_method(o.method), poly, topo, cfg);
    auto d = check_result(poly, topo, r, cfg.mode);
    std::cout << (d <= tol ? "PASS" : "FAIL") << " distance=" << d << " cnots=" << r.metrics.cnot_count << "\n";
    return d <= tol ? 0 : kExitVerifyFailed;
}

std::vector<Method> parse_methods(const std::vector<std::string> &names) {
    std::vector<Method> out;
    for (const auto &n : names) {
        out.push_back(parse_method(n));
    }
    return out;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Architecture-aware synthesis of Pauli polynomials"};
    app.require_subcommand(1);

    CommonOptions synth_opts;
    std::string synth_in;
    std::string synth_out = "-";
    std::string synth_metrics;
    bool synth_verify = false;
    auto *synth = app.add_subcommand("synth", "Synthesize a polynomial file to OpenQASM 2.0");
    synth->add_option("input", synth_in, "polynomial file")->required();
    add_common(synth, synth_opts, true);
    synth->add_option("--out,--emit-qasm", synth_out, "QASM output path, - for stdout");
    synth->add_option("--metrics", synth_metrics, "metrics output path (default: stderr)");
    synth->add_flag("--verify", synth_verify, "check the result densely (q <= 5)");

    CommonOptions verify_opts;
    std::string verify_in;
    double verify_tol = 1e-9;
    auto *verify_cmd = app.add_subcommand("verify", "Synthesize and check conformance and equivalence");
    verify_cmd->add_option("input", verify_in, "polynomial file")->required();
    add_common(verify_cmd, verify_opts, true);
    verify_cmd->add_option("--tol", verify_tol, "max-norm tolerance");

    CommonOptions bench_opts;
    std::vector<std::string> bench_methods{"naive", "proposed"};
    std::vector<std::string> bench_topologies;
    std::vector<std::size_t> bench_sizes;
    std::size_t bench_repeats = 20;
    std::uint64_t bench_seed = 0;
    std::string bench_out = "-";
    std::string bench_qasm_dir;
    std::size_t bench_threads = 0;
    std::size_t bench_verify_q = 5;
    auto *bench = app.add_subcommand("bench", "Random-instance benchmark, CSV output");
    bench->add_option("--method", bench_methods, "methods to run")->check(CLI::IsMember({"naive", "proposed"}));
    bench->add_option("--topology", bench_topologies, "topologies")->required();
    bench->add_option("--gadgets,-n", bench_sizes, "gadget counts")->required();
    bench->add_option("--mode", bench_opts.mode, "arbitrary or commuting-sets")
        ->check(CLI::IsMember({"arbitrary", "commuting-sets"}));
    bench->add_option("--k", bench_opts.k, "pivot cost weight")->check(CLI::PositiveNumber);
    bench->add_flag("--no-permutation", bench_opts.no_permutation, "undo the final qubit permutation with gates");
    bench->add_option("--repeats", bench_repeats, "instances per topology and size");
    bench->add_option("--seed", bench_seed, "base seed; instance r uses seed + r");
    bench->add_option("--out", bench_out, "CSV path, - for stdout");
    bench->add_option("--emit-qasm", bench_qasm_dir, "directory for one QASM file per row");
    bench->add_option("--threads", bench_threads, "worker threads (0: hardware concurrency)");
    bench->add_option("--verify-max-qubits", bench_verify_q, "dense equivalence check up to this size");

    TrotterConfig trotter_cfg;
    CommonOptions trotter_opts;
    std::vector<std::string> trotter_methods{"naive", "proposed"};
    std::string trotter_out = "-";
    auto *trotter = app.add_subcommand("trotter-error", "Overlap with the exact evolution over time steps");
    trotter->add_option("--method", trotter_methods, "methods to run")->check(CLI::IsMember({"naive", "proposed"}));
    trotter->add_option("--topology", trotter_cfg.topology, "topology (must match --qubits)");
    trotter->add_option("--qubits", trotter_cfg.num_qubits, "qubits per instance");
    trotter->add_option("--gadgets,-n", trotter_cfg.num_gadgets, "gadgets per instance");
    trotter->add_option("--instances", trotter_cfg.instances, "random instances");
    trotter->add_option("--timesteps", trotter_cfg.timesteps, "time steps over [0, 2 pi]");
    trotter->add_option("--repeats", trotter_cfg.repetitions, "Trotter repetitions per time step");
    trotter->add_option("--seed", trotter_cfg.seed, "base seed; instance i uses seed + i");
    trotter->add_option("--mode", trotter_opts.mode, "arbitrary or commuting-sets")
        ->check(CLI::IsMember({"arbitrary", "commuting-sets"}));
    trotter->add_option("--k", trotter_opts.k, "pivot cost weight")->check(CLI::PositiveNumber);
    trotter->add_option("--threads", trotter_cfg.threads, "worker threads (0: hardware concurrency)");
    trotter->add_option("--out", trotter_out, "CSV path, - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (*synth) {
            return cmd_synth(synth_in, synth_opts, synth_out, synth_metrics, synth_verify);
        }
        if (*verify_cmd) {
            return cmd_verify(verify_in, verify_opts, verify_tol);
        }
        if (*bench) {
            BenchmarkConfig cfg;
            cfg.methods = parse_methods(bench_methods);
            cfg.topologies = bench_topologies;
            cfg.sizes = bench_sizes;
            cfg.repeats = bench_repeats;
            cfg.seed = bench_seed;
            cfg.synth = bench_opts.config(nullptr, nullptr);
            cfg.threads = bench_threads;
            cfg.verify_max_qubits = bench_verify_q;
            if (!bench_qasm_dir.empty()) {
                std::filesystem::create_directories(bench_qasm_dir);
                cfg.qasm_sink = [&](const ExperimentRow &row, const std::string &qasm) {
                    auto name = row.method + "_" + row.topology + "_n" + std::to_string(row.n) + "_s" +
                                std::to_string(row.seed) + ".qasm";
                    for (auto &ch : name) {
                        if (ch == ':') {
                            ch = '-';
                        }
                    }
                    std::ofstream f(std::filesystem::path(bench_qasm_dir) / name);
                    f << qasm;
                };
            }
            auto rows = run_benchmark(cfg);
            Output out(bench_out);
            write_csv(out.stream(), bench_seed, rows);
            return 0;
        }
        if (*trotter) {
            trotter_cfg.methods = parse_methods(trotter_methods);
            trotter_cfg.synth = trotter_opts.config(nullptr, nullptr);
            auto rows = run_trotter_error(trotter_cfg);
            Output out(trotter_out);
            write_trotter_csv(out.stream(), trotter_cfg.seed, rows);
            for (auto m : trotter_cfg.methods) {
                std::cerr << to_string(m) << " mean(1-|overlap|)=" << mean_infidelity(rows, m) << "\n";
            }
            return 0;
        }
    } catch (const InputError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const VerificationFailure &e) {
        std::cerr << "FAIL: " << e.what() << "\n";
        return kExitVerifyFailed;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return 0;
}
