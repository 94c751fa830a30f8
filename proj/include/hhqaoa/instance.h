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

#ifndef HHQAOA_INSTANCE_H
#define HHQAOA_INSTANCE_H

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hhqaoa/graph.h"

namespace hhqaoa {

/// Spin vector entry: +1 or -1.
using Spin = std::int8_t;

/// One monomial d * z_a [* z_b [* z_c]] of the cost function. Sites are sorted
/// ascending; only the first `order` entries are meaningful.
struct Term {
    std::array<int, 3> sites{};
    int order = 0;
    int coeff = 0;

    std::span<const int> support() const { return {sites.data(), static_cast<size_t>(order)}; }
    int first() const { return sites[0]; }
    int last() const { return sites[order - 1]; }
};

/// Random higher-order Ising model on a heavy-hex graph:
///
///   C(z) = sum_v d_v z_v + sum_{(i,j) in E} d_ij z_i z_j + sum_{l in W} d_l z_l z_n1 z_n2
///
/// with every coefficient in {-1, +1}. Coefficient vectors are aligned with
/// graph().edges() and graph().w_set().
class IsingInstance {
   public:
    IsingInstance() = default;
    IsingInstance(HeavyHexGraph graph, std::vector<int> linear, std::vector<int> quadratic,
                  std::vector<int> cubic, std::uint64_t seed);

    const HeavyHexGraph &graph() const { return graph_; }
    int num_qubits() const { return graph_.num_nodes(); }
    const std::vector<int> &linear() const { return linear_; }
    const std::vector<int> &quadratic() const { return quadratic_; }
    const std::vector<int> &cubic() const { return cubic_; }
    std::uint64_t seed() const { return seed_; }

    /// Linear terms by node, then quadratic by edge, then cubic by l.
    const std::vector<Term> &terms() const { return terms_; }
    int num_terms() const { return static_cast<int>(terms_.size()); }

    /// Same structure with every coefficient negated (swaps minimization and
    /// maximization).
    IsingInstance negated() const;

   private:
    HeavyHexGraph graph_;
    std::vector<int> linear_;
    std::vector<int> quadratic_;
    std::vector<int> cubic_;
    std::uint64_t seed_ = 0;
    std::vector<Term> terms_;
};

/// Draws every coefficient from a xoshiro256** stream seeded with `seed`, in
/// the fixed order: linear by ascending node, quadratic by lexicographic edge,
/// cubic by ascending l.
IsingInstance generate_instance(const HeavyHexGraph &graph, std::uint64_t seed);

int evaluate_cost(const IsingInstance &instance, std::span<const Spin> z);

/// (|V| + |E| + |W|) mod 2. Every C(z) has this parity.
int cost_parity(const IsingInstance &instance);

/// Computational-basis index -> spins. Bit q of the index is qubit q; bit 0 is
/// z = +1 and bit 1 is z = -1.
std::vector<Spin> spins_from_index(std::uint64_t index, int num_qubits);
/// '0'/'1' string with character q = qubit q.
std::vector<Spin> spins_from_bits(std::string_view bits);
std::string bits_from_spins(std::span<const Spin> z);

struct EnergyBounds {
    int min_energy = 0;
    int max_energy = 0;
    std::vector<Spin> argmin;
    /// True only when computed by exhaustive enumeration.
    bool exact = false;
};

/// (Max - e) / (Max - Min). Throws ValidationError when Max == Min.
double approximation_ratio(double energy, const EnergyBounds &bounds);

/// Maintains C(z) under single spin flips. Used by the Gray-code walks in the
/// cost table and brute-force solver.
class IncrementalCost {
   public:
    explicit IncrementalCost(const IsingInstance &instance);

    /// Sets z from a basis index (num_qubits <= 63) and recomputes the cost.
    void reset(std::uint64_t index);
    void reset(std::span<const Spin> z);
    void flip(int qubit);
    /// Cost change if `qubit` were flipped.
    int flip_delta(int qubit) const;
    int cost() const { return cost_; }
    std::span<const Spin> spins() const { return z_; }

   private:
    std::vector<Term> terms_;
    std::vector<int> offsets_;
    std::vector<int> incident_;
    std::vector<Spin> z_;
    int cost_ = 0;
};

inline std::uint64_t gray_code(std::uint64_t step) { return step ^ (step >> 1); }

/// Visits (basis index, C(z)) for Gray-code steps [begin, end), i.e. basis
/// indices gray_code(begin), ..., gray_code(end - 1), with one spin flip per step.
template <typename Visitor>
void for_each_gray_cost(const IsingInstance &instance, std::uint64_t begin, std::uint64_t end,
                        Visitor &&visit) {
    if (begin >= end) {
        return;
    }
    IncrementalCost walker(instance);
    std::uint64_t index = gray_code(begin);
    walker.reset(index);
    visit(index, walker.cost());
    for (std::uint64_t step = begin + 1; step < end; ++step) {
        int q = std::countr_zero(step);
        walker.flip(q);
        index ^= std::uint64_t{1} << q;
        visit(index, walker.cost());
    }
}

/// JSON instance file: {"map", "seed", "linear": {"v": d}, "quadratic": {"i-j": d},
/// "cubic": {"l-n1-n2": d}}, keys in ascending numeric order. The graph is
/// rebuilt from the linear and quadratic keys.
std::string instance_to_json(const IsingInstance &instance);
IsingInstance instance_from_json(std::string_view text);
IsingInstance load_instance(const std::string &path);

}  // namespace hhqaoa

#endif
