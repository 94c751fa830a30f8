// Copyright 2026 The hhqaoa Authors
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

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "hhqaoa/errors.h"
#include "hhqaoa/solve.h"
#include "test_support.h"

namespace hhqaoa {
namespace {

using testing::naive_cost;
using testing::small_instance;

std::pair<int, int> naive_extrema(const IsingInstance &inst) {
    int lo = std::numeric_limits<int>::max();
    int hi = std::numeric_limits<int>::min();
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << inst.num_qubits()); ++i) {
        const int c = naive_cost(inst, i);
        lo = std::min(lo, c);
        hi = std::max(hi, c);
    }
    return {lo, hi};
}

TEST(BruteForce, MatchesNaiveEnumeration) {
    for (int seed = 0; seed < 5; ++seed) {
        const IsingInstance inst = small_instance(12, seed);
        const EnergyBounds b = brute_force_extrema(inst);
        const auto [lo, hi] = naive_extrema(inst);
        EXPECT_EQ(b.min_energy, lo);
        EXPECT_EQ(b.max_energy, hi);
        EXPECT_TRUE(b.exact);
        EXPECT_EQ(evaluate_cost(inst, b.argmin), b.min_energy);
    }
}

TEST(BruteForce, ArgminIsLowestIndexAndChunkingAgrees) {
    // 16 qubits takes the chunked path.
    const IsingInstance inst = generate_instance(load_coupling_map("guadalupe-16"), 3);
    const EnergyBounds b = brute_force_extrema(inst);
    const auto [lo, hi] = naive_extrema(inst);
    EXPECT_EQ(b.min_energy, lo);
    EXPECT_EQ(b.max_energy, hi);
    std::uint64_t first = 0;
    while (naive_cost(inst, first) != lo) ++first;
    EXPECT_EQ(b.argmin, spins_from_index(first, 16));
}

TEST(BruteForce, AllPlusInstanceAndSingleSpin) {
    const HeavyHexGraph g = load_coupling_map("guadalupe-16");
    const IsingInstance plus(g, std::vector<int>(16, 1), std::vector<int>(16, 1),
                             std::vector<int>(6, 1), 0);
    const EnergyBounds b = brute_force_extrema(plus);
    EXPECT_EQ(b.max_energy, 38);
    EXPECT_LT(b.min_energy, 0);
    const IsingInstance one(HeavyHexGraph::from_edges("one", 1, {}), {1}, {}, {}, 0);
    const EnergyBounds o = brute_force_extrema(one);
    EXPECT_EQ(o.min_energy, -1);
    EXPECT_EQ(o.max_energy, 1);
}

TEST(BruteForce, NegationSwapsExtrema) {
    const IsingInstance inst = small_instance(12, 8);
    const EnergyBounds b = brute_force_extrema(inst);
    const EnergyBounds n = brute_force_extrema(inst.negated());
    EXPECT_EQ(n.min_energy, -b.max_energy);
    EXPECT_EQ(n.max_energy, -b.min_energy);
}

TEST(BruteForce, CapEnforced) {
    const IsingInstance inst = generate_instance(load_coupling_map("falcon-27"), 1);
    EXPECT_THROW(brute_force_extrema(inst, 20), CapacityError);
}

TEST(Reduce, DoubleEnumerationAgrees) {
    for (int seed = 0; seed < 12; ++seed) {
        const IsingInstance inst = small_instance(10 + seed % 3, 50 + seed);
        const ReducedModel r = reduce_order(inst);
        EXPECT_EQ(r.model.num_vars(),
                  inst.num_qubits() + static_cast<int>(inst.graph().w_set().size()));
        EXPECT_EQ(enumerate_model_minimum(r.model), brute_force_extrema(inst).min_energy);
    }
}

TEST(Reduce, FeasibleAssignmentsReproduceTheCost) {
    const IsingInstance inst = small_instance(10, 4);
    const ReducedModel r = reduce_order(inst);
    const auto &w = inst.graph().w_set();
    for (std::uint64_t i = 0; i < 1024; ++i) {
        std::vector<std::uint8_t> v(r.model.num_vars(), 0);
        for (int q = 0; q < 10; ++q) v[q] = (i >> q) & 1;
        for (std::size_t k = 0; k < w.size(); ++k) v[10 + k] = v[w[k].n1] & v[w[k].n2];
        ASSERT_EQ(r.model.evaluate(v), naive_cost(inst, i));
    }
}

TEST(Reduce, NoCubicTermsNoAuxiliaries) {
    const std::pair<int, int> e[] = {{0, 1}};
    const IsingInstance inst(HeavyHexGraph::from_edges("pair", 2, e), {1, -1}, {1}, {}, 0);
    const ReducedModel r = reduce_order(inst);
    EXPECT_EQ(r.model.num_vars(), 2);
    // 1 - 2x0 - 1 + 2x1 + 1 - 2x0 - 2x1 + 4 x0 x1
    EXPECT_EQ(r.model.offset, 1);
    EXPECT_EQ(r.model.linear, (std::vector<std::int64_t>{-4, 0}));
    ASSERT_EQ(r.model.quadratic.size(), 1u);
    EXPECT_EQ(r.model.quadratic[0], (QuadraticTerm{0, 1, 4}));
}

TEST(Reduce, AutoAndExplicitPenalty) {
    const IsingInstance inst = generate_instance(load_coupling_map("guadalupe-16"), 2);
    EXPECT_EQ(reduce_order(inst).penalty, 39);
    EXPECT_EQ(reduce_order(inst, 7).penalty, 7);
    EXPECT_THROW(reduce_order(inst, 0), ValidationError);
}

TEST(Lp, RoundTripEvaluatesIdentically) {
    const IsingInstance inst = small_instance(10, 17);
    const QuadraticModel m = reduce_order(inst).model;
    const QuadraticModel back = parse_lp_model(quadratic_model_to_lp(m));
    EXPECT_EQ(back, m);
    Xoshiro256StarStar rng(4);
    for (int t = 0; t < 100; ++t) {
        std::vector<std::uint8_t> v(m.num_vars());
        for (auto &b : v) b = rng.next() >> 63;
        EXPECT_EQ(back.evaluate(v), m.evaluate(v));
    }
}

TEST(Lp, EmptyModelAndFile) {
    QuadraticModel empty;
    const std::string text = quadratic_model_to_lp(empty);
    EXPECT_NE(text.find("Minimize"), std::string::npos);
    EXPECT_NE(text.find("End"), std::string::npos);
    EXPECT_EQ(parse_lp_model(text), empty);

    const QuadraticModel m = reduce_order(small_instance(8, 1)).model;
    const auto path = std::filesystem::temp_directory_path() / "hhqaoa_model.lp";
    export_quadratic_model(m, path.string());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::filesystem::remove(path);
    EXPECT_EQ(parse_lp_model(buf.str()), m);
}

TEST(Lp, MalformedInputRejected) {
    EXPECT_THROW(parse_lp_model("Maximize\n obj: + 1 x\nEnd\n"), ValidationError);
    EXPECT_THROW(parse_lp_model("Minimize\n obj: + 1 x\nBinaries\n y\nEnd\n"), ValidationError);
    EXPECT_THROW(parse_lp_model("Minimize\n obj: + [ + 3 x * y ] / 2\nBinaries\n x y\nEnd\n"),
                 ValidationError);
    EXPECT_THROW(parse_lp_model("Minimize\n obj: + 1 x\nBinaries\n x\n"), ValidationError);
}

TEST(LocalSearch, BoundsAndDeterminism) {
    int matches = 0;
    for (int seed = 0; seed < 100; ++seed) {
        const IsingInstance inst = generate_instance(load_coupling_map("guadalupe-16"), seed);
        const EnergyBounds exact = brute_force_extrema(inst);
        const EnergyBounds h = local_search_bound(inst, 100, 7);
        EXPECT_FALSE(h.exact);
        EXPECT_GE(h.min_energy, exact.min_energy);
        EXPECT_LE(h.max_energy, exact.max_energy);
        EXPECT_EQ(evaluate_cost(inst, h.argmin), h.min_energy);
        matches += h.min_energy == exact.min_energy;
    }
    EXPECT_GE(matches, 90);
    const IsingInstance inst = generate_instance(load_coupling_map("falcon-27"), 2);
    const EnergyBounds a = local_search_bound(inst, 10, 5);
    const EnergyBounds b = local_search_bound(inst, 10, 5);
    EXPECT_EQ(a.min_energy, b.min_energy);
    EXPECT_EQ(a.argmin, b.argmin);
    EXPECT_THROW(local_search_bound(inst, 0, 1), ValidationError);
}

}  // namespace
}  // namespace hhqaoa
