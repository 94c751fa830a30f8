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
#include <random>
#include <set>

#include "hhqaoa/errors.h"
#include "hhqaoa/graph.h"
#include "hhqaoa/instance.h"
#include "hhqaoa/rng.h"
#include "test_support.h"

namespace hhqaoa {
namespace {

using testing::naive_cost;
using testing::small_instance;

TEST(Rng, SplitMixKnownAnswer) {
    SplitMix64 sm(1234567);
    EXPECT_EQ(sm.next(), 6457827717110365317ULL);
    EXPECT_EQ(sm.next(), 3203168211198807973ULL);
    EXPECT_EQ(sm.next(), 9817491932198370423ULL);
}

TEST(Rng, XoshiroKnownAnswer) {
    // Reference values from an independent transcription of the C code.
    Xoshiro256StarStar rng(42);
    EXPECT_EQ(rng.next(), 1546998764402558742ULL);
    EXPECT_EQ(rng.next(), 6990951692964543102ULL);
    EXPECT_EQ(rng.next(), 12544586762248559009ULL);
}

TEST(Rng, Uniform01Range) {
    Xoshiro256StarStar rng(3);
    for (int i = 0; i < 10000; ++i) {
        double u = rng.uniform01();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}

struct MapCounts {
    const char *name;
    int nodes, edges, w;
};

class BuiltinMaps : public ::testing::TestWithParam<MapCounts> {};

TEST_P(BuiltinMaps, CountsAndInvariants) {
    const MapCounts c = GetParam();
    const HeavyHexGraph g = load_coupling_map(c.name);
    EXPECT_EQ(g.num_nodes(), c.nodes);
    EXPECT_EQ(static_cast<int>(g.edges().size()), c.edges);
    EXPECT_EQ(static_cast<int>(g.w_set().size()), c.w);
    EXPECT_EQ(g.v2().size() + g.v3().size(), static_cast<std::size_t>(c.nodes));
    for (const Edge &e : g.edges()) {
        EXPECT_NE(g.in_v2(e.u), g.in_v2(e.v)) << e.u << "-" << e.v;
    }
    for (int v : g.v2()) {
        EXPECT_LE(g.degree(v), 2);
    }
    for (int v : g.v3()) {
        EXPECT_LE(g.degree(v), 3);
    }
    std::set<int> w_nodes;
    for (const CubicSite &w : g.w_set()) {
        EXPECT_TRUE(g.in_v2(w.l));
        EXPECT_LT(w.n1, w.n2);
        EXPECT_EQ(g.neighbors(w.l), (std::vector<int>{w.n1, w.n2}));
        w_nodes.insert(w.l);
    }
    for (int v : g.v2()) {
        EXPECT_EQ(w_nodes.count(v) == 1, g.degree(v) == 2) << v;
    }
    const IsingInstance inst = generate_instance(g, 99);
    EXPECT_EQ(static_cast<int>(inst.linear().size()), c.nodes);
    EXPECT_EQ(static_cast<int>(inst.quadratic().size()), c.edges);
    EXPECT_EQ(static_cast<int>(inst.cubic().size()), c.w);
    EXPECT_EQ(inst.num_terms(), c.nodes + c.edges + c.w);
    EXPECT_EQ(cost_parity(inst), (c.nodes + c.edges + c.w) % 2);
}

INSTANTIATE_TEST_SUITE_P(Model, BuiltinMaps,
                         ::testing::Values(MapCounts{"guadalupe-16", 16, 16, 6},
                                           MapCounts{"falcon-27", 27, 28, 11},
                                           MapCounts{"eagle-127", 127, 144, 71}));

TEST(Graph, GuadalupeWSet) {
    const HeavyHexGraph g = load_coupling_map("guadalupe-16");
    std::vector<int> ls;
    for (const CubicSite &w : g.w_set()) {
        ls.push_back(w.l);
        if (w.l == 4) {
            EXPECT_EQ(w.n1, 1);
            EXPECT_EQ(w.n2, 7);
        }
    }
    EXPECT_EQ(ls, (std::vector<int>{2, 4, 5, 10, 11, 13}));
}

TEST(Graph, SingleEdgeHasNoCubicSites) {
    const std::pair<int, int> e[] = {{0, 1}};
    const HeavyHexGraph g = HeavyHexGraph::from_edges("pair", 2, e);
    EXPECT_TRUE(g.w_set().empty());
    EXPECT_EQ(g.v2().size() + g.v3().size(), 2u);
}

TEST(Graph, PathGivesOneCubicSite) {
    const std::pair<int, int> e[] = {{0, 1}, {1, 2}};
    const HeavyHexGraph g = HeavyHexGraph::from_edges("path", 3, e);
    ASSERT_EQ(g.w_set().size(), 1u);
    EXPECT_EQ(g.w_set()[0], (CubicSite{1, 0, 2}));
}

TEST(Graph, RejectsOddCycleAndHighDegree) {
    const std::pair<int, int> triangle[] = {{0, 1}, {1, 2}, {0, 2}};
    EXPECT_THROW(HeavyHexGraph::from_edges("tri", 3, triangle), ValidationError);
    const std::pair<int, int> star[] = {{0, 1}, {0, 2}, {0, 3}, {0, 4}};
    EXPECT_THROW(HeavyHexGraph::from_edges("star", 5, star), ValidationError);
    const std::pair<int, int> loop[] = {{1, 1}};
    EXPECT_THROW(HeavyHexGraph::from_edges("loop", 2, loop), ValidationError);
    const std::pair<int, int> dup[] = {{0, 1}, {1, 0}};
    EXPECT_THROW(HeavyHexGraph::from_edges("dup", 2, dup), ValidationError);
}

TEST(Graph, StructureIndependentOfEdgeOrder) {
    const HeavyHexGraph g = load_coupling_map("falcon-27");
    std::vector<std::pair<int, int>> edges;
    for (const Edge &e : g.edges()) {
        edges.emplace_back(e.v, e.u);  // reversed orientation too
    }
    std::mt19937 shuffle_rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(edges.begin(), edges.end(), shuffle_rng);
        const HeavyHexGraph h = HeavyHexGraph::from_edges("falcon-27", 27, edges);
        EXPECT_EQ(h.edges(), g.edges());
        EXPECT_EQ(h.v2(), g.v2());
        EXPECT_EQ(h.v3(), g.v3());
        EXPECT_EQ(h.w_set(), g.w_set());
    }
}

TEST(Graph, JsonRoundTrip) {
    const HeavyHexGraph g = load_coupling_map("guadalupe-16");
    const HeavyHexGraph h = parse_coupling_map_json(coupling_map_to_json(g));
    EXPECT_EQ(h.edges(), g.edges());
    EXPECT_EQ(h.w_set(), g.w_set());
    EXPECT_THROW(parse_coupling_map_json("{not json"), ValidationError);
    EXPECT_THROW(load_coupling_map("no-such-map"), ValidationError);
}

TEST(Instance, DeterministicPerSeed) {
    const HeavyHexGraph g = load_coupling_map("falcon-27");
    const IsingInstance a = generate_instance(g, 17);
    const IsingInstance b = generate_instance(g, 17);
    const IsingInstance c = generate_instance(g, 18);
    EXPECT_EQ(a.linear(), b.linear());
    EXPECT_EQ(a.quadratic(), b.quadratic());
    EXPECT_EQ(a.cubic(), b.cubic());
    EXPECT_NE(instance_to_json(a), instance_to_json(c));
}

TEST(Instance, DrawOrderIsLinearQuadraticCubic) {
    const HeavyHexGraph g = load_coupling_map("guadalupe-16");
    const IsingInstance inst = generate_instance(g, 123);
    Xoshiro256StarStar rng(123);
    for (int d : inst.linear()) {
        EXPECT_EQ(d, rng.coin());
    }
    for (int d : inst.quadratic()) {
        EXPECT_EQ(d, rng.coin());
    }
    for (int d : inst.cubic()) {
        EXPECT_EQ(d, rng.coin());
    }
}

TEST(Instance, CoinFairness) {
    const HeavyHexGraph g = load_coupling_map("eagle-127");
    int plus = 0;
    int total = 0;
    for (std::uint64_t seed = 0; total < 10000; ++seed) {
        const IsingInstance inst = generate_instance(g, seed);
        for (const auto *v : {&inst.linear(), &inst.quadratic(), &inst.cubic()}) {
            for (int d : *v) {
                plus += d == 1;
                ++total;
            }
        }
    }
    EXPECT_NEAR(static_cast<double>(plus) / total, 0.5, 0.02);
}

TEST(Instance, RejectsNonUnitCoefficients) {
    const HeavyHexGraph g = load_coupling_map("guadalupe-16");
    std::vector<int> lin(16, 1), quad(16, 1), cub(6, 1);
    EXPECT_NO_THROW(IsingInstance(g, lin, quad, cub, 0));
    lin[3] = 2;
    EXPECT_THROW(IsingInstance(g, lin, quad, cub, 0), ValidationError);
    lin[3] = 1;
    cub.pop_back();
    EXPECT_THROW(IsingInstance(g, lin, quad, cub, 0), ValidationError);
}

TEST(Cost, AllPlusInstance) {
    const HeavyHexGraph g = load_coupling_map("guadalupe-16");
    const IsingInstance inst(g, std::vector<int>(16, 1), std::vector<int>(16, 1),
                             std::vector<int>(6, 1), 0);
    const std::vector<Spin> plus(16, +1);
    EXPECT_EQ(evaluate_cost(inst, plus), 38);
    const std::vector<Spin> minus(16, -1);
    // Odd monomials flip, the quadratic sum stays.
    EXPECT_EQ(evaluate_cost(inst, minus), -16 + 16 - 6);
}

TEST(Cost, NegationFlipsOddOrders) {
    const IsingInstance inst = small_instance(12, 4);
    Xoshiro256StarStar rng(8);
    for (int t = 0; t < 50; ++t) {
        std::vector<Spin> z(12), neg(12);
        for (int q = 0; q < 12; ++q) {
            z[q] = static_cast<Spin>(rng.coin());
            neg[q] = static_cast<Spin>(-z[q]);
        }
        int lin = 0, quad = 0, cub = 0;
        const HeavyHexGraph &g = inst.graph();
        for (int q = 0; q < 12; ++q) lin += inst.linear()[q] * z[q];
        for (std::size_t e = 0; e < g.edges().size(); ++e)
            quad += inst.quadratic()[e] * z[g.edges()[e].u] * z[g.edges()[e].v];
        for (std::size_t k = 0; k < g.w_set().size(); ++k)
            cub += inst.cubic()[k] * z[g.w_set()[k].l] * z[g.w_set()[k].n1] * z[g.w_set()[k].n2];
        EXPECT_EQ(evaluate_cost(inst, z), lin + quad + cub);
        EXPECT_EQ(evaluate_cost(inst, neg), -lin + quad - cub);
    }
}

TEST(Cost, MatchesNaiveAndParityExhaustively) {
    const IsingInstance inst = small_instance(10, 21);
    const int parity = cost_parity(inst);
    const int bound = inst.num_terms();
    for (std::uint64_t i = 0; i < 1024; ++i) {
        const int c = evaluate_cost(inst, spins_from_index(i, 10));
        ASSERT_EQ(c, naive_cost(inst, i));
        ASSERT_EQ(((c % 2) + 2) % 2, parity);
        ASSERT_LE(std::abs(c), bound);
    }
}

TEST(Cost, LengthMismatchRejected) {
    const IsingInstance inst = small_instance(8, 1);
    const std::vector<Spin> z(7, 1);
    EXPECT_THROW(evaluate_cost(inst, z), ValidationError);
}

TEST(Cost, GrayWalkMatchesDirect) {
    const IsingInstance inst = small_instance(12, 77);
    std::set<std::uint64_t> seen;
    for_each_gray_cost(inst, 0, 4096, [&](std::uint64_t index, int cost) {
        ASSERT_EQ(cost, naive_cost(inst, index));
        seen.insert(index);
    });
    EXPECT_EQ(seen.size(), 4096u);
    // A shard starting mid-sequence.
    for_each_gray_cost(inst, 1000, 1100, [&](std::uint64_t index, int cost) {
        ASSERT_EQ(cost, naive_cost(inst, index));
    });
}

TEST(Cost, IncrementalFlipDelta) {
    const IsingInstance inst = small_instance(16, 5);
    IncrementalCost walker(inst);
    Xoshiro256StarStar rng(2);
    std::uint64_t index = 0;
    walker.reset(index);
    for (int t = 0; t < 500; ++t) {
        int q = static_cast<int>(rng.next() % 16);
        int before = walker.cost();
        int delta = walker.flip_delta(q);
        walker.flip(q);
        index ^= std::uint64_t{1} << q;
        ASSERT_EQ(walker.cost(), naive_cost(inst, index));
        ASSERT_EQ(walker.cost() - before, delta);
    }
}

TEST(Bits, Conventions) {
    EXPECT_EQ(spins_from_index(0b101, 3), (std::vector<Spin>{-1, 1, -1}));
    EXPECT_EQ(spins_from_bits("100"), (std::vector<Spin>{-1, 1, 1}));
    EXPECT_EQ(bits_from_spins(spins_from_index(6, 4)), "0110");
    EXPECT_THROW(spins_from_bits("10x"), ValidationError);
}

TEST(Instance, JsonRoundTrip) {
    const IsingInstance inst = generate_instance(load_coupling_map("falcon-27"), 31);
    const IsingInstance back = instance_from_json(instance_to_json(inst));
    EXPECT_EQ(back.linear(), inst.linear());
    EXPECT_EQ(back.quadratic(), inst.quadratic());
    EXPECT_EQ(back.cubic(), inst.cubic());
    EXPECT_EQ(back.seed(), inst.seed());
    EXPECT_EQ(back.graph().name(), inst.graph().name());
    EXPECT_EQ(instance_to_json(back), instance_to_json(inst));
    EXPECT_THROW(instance_from_json("[]"), ValidationError);
}

TEST(Instance, NegatedSwapsExtremes) {
    const IsingInstance inst = small_instance(10, 9);
    const IsingInstance neg = inst.negated();
    for (std::uint64_t i = 0; i < 1024; i += 7) {
        const auto z = spins_from_index(i, 10);
        EXPECT_EQ(evaluate_cost(neg, z), -evaluate_cost(inst, z));
    }
}

TEST(Ratio, Endpoints) {
    EnergyBounds b;
    b.min_energy = -20;
    b.max_energy = 16;
    EXPECT_DOUBLE_EQ(approximation_ratio(-20, b), 1.0);
    EXPECT_DOUBLE_EQ(approximation_ratio(16, b), 0.0);
    EXPECT_DOUBLE_EQ(approximation_ratio(-2, b), 0.5);
    b.max_energy = b.min_energy;
    EXPECT_THROW(approximation_ratio(0, b), ValidationError);
}

}  // namespace
}  // namespace hhqaoa
