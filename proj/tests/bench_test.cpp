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

#include <gtest/gtest.h>

#include <algorithm>
#include <atomic>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "psynth/verify.hpp"

using namespace psynth;

TEST(UniformBelow, RangeAndErrors) {
    Rng rng(1);
    std::vector<int> hits(7, 0);
    for (int i = 0; i < 7000; i++) {
        auto v = uniform_below(rng, 7);
        ASSERT_LT(v, 7u);
        hits[v]++;
    }
    for (auto h : hits) {
        EXPECT_GT(h, 800);
    }
    EXPECT_EQ(uniform_below(rng, 1), 0u);
    EXPECT_THROW(uniform_below(rng, 0), InputError);
}

TEST(RandomPolynomial, DeterministicPerSeed) {
    RandomSpec spec{6, 50, default_angles(), 99};
    EXPECT_EQ(random_polynomial(spec), random_polynomial(spec));
    auto other = spec;
    other.seed = 100;
    EXPECT_NE(random_polynomial(spec), random_polynomial(other));
}

TEST(RandomPolynomial, Shape) {
    auto angles = default_angles();
    auto p = random_polynomial({5, 300, angles, 3});
    ASSERT_EQ(p.size(), 300u);
    std::vector<int> legs(6, 0);
    for (const auto &g : p.gadgets()) {
        auto l = g.string.leg_count();
        ASSERT_GE(l, 1u);
        legs[l]++;
        EXPECT_NE(std::find(angles.begin(), angles.end(), g.angle), angles.end());
    }
    for (std::size_t l = 1; l <= 5; l++) {
        EXPECT_GT(legs[l], 30) << "leg count " << l;
    }
    auto single = random_polynomial({1, 50, angles, 4});
    for (const auto &g : single.gadgets()) {
        EXPECT_EQ(g.string.leg_count(), 1u);
    }
    EXPECT_THROW(random_polynomial({0, 5, angles, 0}), InputError);
    EXPECT_THROW(random_polynomial({2, 5, {}, 0}), InputError);
}

// Pearson chi-squared on leg letters, 2 degrees of freedom; 13.82 is the
// 0.999 quantile.
TEST(RandomPolynomial, LetterFrequenciesUniform) {
    auto p = random_polynomial({1, 10000, default_angles(), 5});
    double counts[4] = {0, 0, 0, 0};
    for (const auto &g : p.gadgets()) {
        counts[static_cast<int>(g.string[0])]++;
    }
    EXPECT_EQ(counts[0], 0);
    double chi2 = 0;
    for (int l = 1; l < 4; l++) {
        double e = 10000.0 / 3;
        chi2 += (counts[l] - e) * (counts[l] - e) / e;
    }
    EXPECT_LT(chi2, 13.82);
}

TEST(Methods, ParseAndPrint) {
    EXPECT_EQ(parse_method("naive"), Method::Naive);
    EXPECT_EQ(parse_method(to_string(Method::Proposed)), Method::Proposed);
    EXPECT_THROW(parse_method("tket"), InputError);
}

TEST(ParallelFor, RunsEveryIndexAndRethrows) {
    std::vector<std::atomic<int>> seen(100);
    parallel_for(100, 4, [&](std::size_t i) { seen[i]++; });
    for (auto &s : seen) {
        EXPECT_EQ(s.load(), 1);
    }
    EXPECT_THROW(parallel_for(10, 3,
                              [](std::size_t i) {
                                  if (i == 5) {
                                      throw std::runtime_error("boom");
                                  }
                              }),
                 std::runtime_error);
}

TEST(Benchmark, RowsAndCsv) {
    BenchmarkConfig cfg;
    cfg.methods = {Method::Naive, Method::Proposed};
    cfg.topologies = {"complete:4", "line:3"};
    cfg.sizes = {5, 12};
    cfg.repeats = 3;
    cfg.seed = 10;
    std::size_t sunk = 0;
    cfg.qasm_sink = [&](const ExperimentRow &, const std::string &qasm) {
        EXPECT_EQ(qasm.rfind("OPENQASM 2.0;", 0), 0u);
        sunk++;
    };
    auto rows = run_benchmark(cfg);
    ASSERT_EQ(rows.size(), 2u * 2u * 2u * 3u);
    EXPECT_EQ(sunk, rows.size());
    for (const auto &r : rows) {
        EXPECT_GE(r.seed, 10u);
        EXPECT_LT(r.seed, 13u);
        EXPECT_GE(r.depth, r.cnot_depth);
        EXPECT_GE(r.cnots, r.cnot_depth);
    }
    std::ostringstream out;
    write_csv(out, cfg.seed, rows);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "# prng=mt19937_64 seed=10");
    std::getline(in, line);
    EXPECT_EQ(line, "method,topology,q,n,seed,cnots,depth,cnot_depth,wall_time_ms");
    std::size_t data = 0;
    while (std::getline(in, line)) {
        EXPECT_EQ(std::count(line.begin(), line.end(), ','), 8);
        data++;
    }
    EXPECT_EQ(data, rows.size());
}

TEST(Benchmark, RowCountForTwentyRepeats) {
    BenchmarkConfig cfg;
    cfg.methods = {Method::Naive, Method::Proposed};
    cfg.topologies = {"complete:5"};
    cfg.sizes = {100};
    cfg.repeats = 20;
    cfg.verify_max_qubits = 0;
    auto rows = run_benchmark(cfg);
    EXPECT_EQ(rows.size(), 40u);
    double naive = 0, proposed = 0;
    for (const auto &r : rows) {
        (r.method == "naive" ? naive : proposed) += static_cast<double>(r.cnots);
    }
    EXPECT_LT(proposed, naive);
}

TEST(Benchmark, EmptyListsRejected) {
    BenchmarkConfig cfg;
    cfg.topologies = {"line:3"};
    cfg.sizes = {4};
    EXPECT_THROW(run_benchmark(cfg), InputError);
    cfg.methods = {Method::Naive};
    cfg.sizes.clear();
    EXPECT_THROW(run_benchmark(cfg), InputError);
}

TEST(Trotter, SmallRun) {
    TrotterConfig cfg;
    cfg.instances = 2;
    cfg.num_qubits = 3;
    cfg.num_gadgets = 12;
    cfg.topology = "line:3";
    cfg.timesteps = 5;
    auto rows = run_trotter_error(cfg);
    ASSERT_EQ(rows.size(), 2u * 2u * 5u);
    for (const auto &r : rows) {
        EXPECT_GE(r.overlap, 0.0);
        EXPECT_LE(r.overlap, 1.0 + 1e-9);
        if (r.t == 0) {
            EXPECT_NEAR(r.overlap, 1.0, 1e-12);
        }
    }
    EXPECT_NEAR(rows.back().t, 2 * std::numbers::pi, 1e-12);
    EXPECT_GE(mean_infidelity(rows, Method::Proposed), 0.0);
    std::ostringstream out;
    write_trotter_csv(out, cfg.seed, rows);
    EXPECT_NE(out.str().find("method,instance,seed,t,overlap,distance\n"), std::string::npos);

    cfg.topology = "line:4";
    EXPECT_THROW(run_trotter_error(cfg), InputError);
}

TEST(Trotter, CommutingPolynomialIsExact) {
    PauliPolynomial p(3);
    p.add(0.1, "ZZI");
    p.add(0.2, "XXX");
    p.add(0.3, "IZZ");
    p.add(0.4, "YYX");
    for (std::size_t a = 0; a < p.size(); a++) {
        for (std::size_t b = 0; b < p.size(); b++) {
            ASSERT_TRUE(commutes(p[a], p[b]));
        }
    }
    auto topo = Topology::line(3);
    for (auto m : {Method::Naive, Method::Proposed}) {
        for (double t : {0.0, 1.0, 2 * std::numbers::pi}) {
            auto r = run_method(m, p.scaled(t), topo, {});
            EXPECT_NEAR(std::abs(verify::overlap(p, r.circuit, r.permutation, t)), 1.0, 1e-9);
        }
    }
}
