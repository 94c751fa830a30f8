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

#ifndef HHQAOA_SOLVE_H
#define HHQAOA_SOLVE_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hhqaoa/instance.h"

namespace hhqaoa {

constexpr int kDefaultEnumerationCap = 28;

/// Exact extrema by Gray-code enumeration, split across workers. The argmin
/// is the lowest basis index attaining the minimum.
EnergyBounds brute_force_extrema(const IsingInstance &instance,
                                 int cap = kDefaultEnumerationCap);

struct QuadraticTerm {
    int i = 0;
    int j = 0;
    std::int64_t coeff = 0;

    bool operator==(const QuadraticTerm &) const = default;
};

/// offset + sum linear[i] v_i + sum coeff v_i v_j over binaries v.
struct QuadraticModel {
    std::vector<std::string> names;
    std::int64_t offset = 0;
    std::vector<std::int64_t> linear;
    /// i < j, each pair at most once, sorted.
    std::vector<QuadraticTerm> quadratic;

    int num_vars() const { return static_cast<int>(names.size()); }
    std::int64_t evaluate(std::span<const std::uint8_t> v) const;
    bool operator==(const QuadraticModel &) const = default;
};

struct ReducedModel {
    QuadraticModel model;
    int num_original = 0;
    std::int64_t penalty = 0;
};

/// x = (1 - z) / 2. Each cubic term d z_l z_n1 z_n2 has x_n1 x_n2 replaced by
/// an auxiliary y with penalty P (x_n1 x_n2 - 2 x_n1 y - 2 x_n2 y + 3 y),
/// which is 0 iff y = x_n1 x_n2 and >= P otherwise. Auto penalty is
/// 1 + sum |coefficients|. Variables: x0..x{n-1}, then y0.. in W order.
ReducedModel reduce_order(const IsingInstance &instance,
                          std::optional<std::int64_t> penalty = std::nullopt);

/// Minimum of the model over all assignments (n <= 30).
std::int64_t enumerate_model_minimum(const QuadraticModel &model);

/// CPLEX LP text: Minimize / obj with [ ... ] / 2 quadratic part, Binaries, End.
std::string quadratic_model_to_lp(const QuadraticModel &model);
QuadraticModel parse_lp_model(std::string_view text);
void export_quadratic_model(const QuadraticModel &model, const std::string &path);

/// Best-of-restarts steepest-descent single-flip local search, run on the
/// instance for the minimum and on its negation for the maximum. exact = false.
EnergyBounds local_search_bound(const IsingInstance &instance, int restarts, std::uint64_t seed);

}  // namespace hhqaoa

#endif
