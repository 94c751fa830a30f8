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

#include "hhqaoa/solve.h"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <utility>

#include "hhqaoa/errors.h"
#include "hhqaoa/parallel.h"
#include "hhqaoa/rng.h"

namespace hhqaoa {

namespace {

struct Extrema {
    int min = std::numeric_limits<int>::max();
    int max = std::numeric_limits<int>::min();
    std::uint64_t argmin = std::numeric_limits<std::uint64_t>::max();
};

// Accumulates x_a x_b style products into a canonical (i < j) map.
class ModelBuilder {
   public:
    explicit ModelBuilder(std::vector<std::string> names) {
        model_.names = std::move(names);
        model_.linear.assign(model_.names.size(), 0);
    }
    void constant(std::int64_t c) { model_.offset += c; }
    void linear(int i, std::int64_t c) { model_.linear[i] += c; }
    void quadratic(int i, int j, std::int64_t c) {
        if (i == j) {
            linear(i, c);  // binaries: v^2 = v
            return;
        }
        quad_[{std::min(i, j), std::max(i, j)}] += c;
    }
    QuadraticModel finish() {
        for (const auto &[key, c] : quad_) {
            if (c != 0) {
                model_.quadratic.push_back({key.first, key.second, c});
            }
        }
        return std::move(model_);
    }

   private:
    QuadraticModel model_;
    std::map<std::pair<int, int>, std::int64_t> quad_;
};

}  // namespace

EnergyBounds brute_force_extrema(const IsingInstance &instance, int cap) {
    const int n = instance.num_qubits();
    if (n > cap) {
        throw CapacityError("exact enumeration of " + std::to_string(n) +
                            " spins exceeds cap " + std::to_string(cap));
    }
    const std::uint64_t total = std::uint64_t{1} << n;
    const std::size_t chunks = n >= 16 ? 64 : 1;
    std::vector<Extrema> partial(chunks);
    parallel_for(chunks, [&](std::size_t c) {
        const std::uint64_t begin = total / chunks * c;
        const std::uint64_t end = c + 1 == chunks ? total : total / chunks * (c + 1);
        Extrema &e = partial[c];
        for_each_gray_cost(instance, begin, end, [&](std::uint64_t index, int cost) {
            if (cost < e.min || (cost == e.min && index < e.argmin)) {
                e.min = cost;
                e.argmin = index;
            }
            e.max = std::max(e.max, cost);
        });
    });
    Extrema all;
    for (const Extrema &e : partial) {
        if (e.min < all.min || (e.min == all.min && e.argmin < all.argmin)) {
            all.min = e.min;
            all.argmin = e.argmin;
        }
        all.max = std::max(all.max, e.max);
    }
    EnergyBounds bounds;
    bounds.min_energy = all.min;
    bounds.max_energy = all.max;
    bounds.argmin = spins_from_index(all.argmin, n);
    bounds.exact = true;
    return bounds;
}

std::int64_t QuadraticModel::evaluate(std::span<const std::uint8_t> v) const {
    if (static_cast<int>(v.size()) != num_vars()) {
        throw ValidationError("assignment length does not match the model");
    }
    std::int64_t total = offset;
    for (int i = 0; i < num_vars(); ++i) {
        if (v[i]) {
            total += linear[i];
        }
    }
    for (const QuadraticTerm &t : quadratic) {
        if (v[t.i] && v[t.j]) {
            total += t.coeff;
        }
    }
    return total;
}

ReducedModel reduce_order(const IsingInstance &instance, std::optional<std::int64_t> penalty) {
    const HeavyHexGraph &graph = instance.graph();
    const int n = instance.num_qubits();
    std::int64_t p = 1;
    for (const Term &t : instance.terms()) {
        p += std::abs(t.coeff);
    }
    if (penalty) {
        if (*penalty <= 0) {
            throw ValidationError("penalty must be positive");
        }
        p = *penalty;
    }

    std::vector<std::string> names;
    for (int q = 0; q < n; ++q) {
        names.push_back("x" + std::to_string(q));
    }
    for (std::size_t k = 0; k < graph.w_set().size(); ++k) {
        names.push_back("y" + std::to_string(k));
    }
    ModelBuilder b(std::move(names));

    // d z = d - 2 d x.
    for (int q = 0; q < n; ++q) {
        const std::int64_t d = instance.linear()[q];
        b.constant(d);
        b.linear(q, -2 * d);
    }
    // d z_i z_j = d - 2 d x_i - 2 d x_j + 4 d x_i x_j.
    for (std::size_t e = 0; e < graph.edges().size(); ++e) {
        const std::int64_t d = instance.quadratic()[e];
        const Edge &edge = graph.edges()[e];
        b.constant(d);
        b.linear(edge.u, -2 * d);
        b.linear(edge.v, -2 * d);
        b.quadratic(edge.u, edge.v, 4 * d);
    }
    // d z_l z_a z_b = d (1 - 2x_l - 2x_a - 2x_b + 4x_l x_a + 4x_l x_b + 4x_a x_b
    //                    - 8 x_l x_a x_b), with x_a x_b -> y.
    for (std::size_t k = 0; k < graph.w_set().size(); ++k) {
        const std::int64_t d = instance.cubic()[k];
        const CubicSite &w = graph.w_set()[k];
        const int y = n + static_cast<int>(k);
        b.constant(d);
        b.linear(w.l, -2 * d);
        b.linear(w.n1, -2 * d);
        b.linear(w.n2, -2 * d);
        b.quadratic(w.l, w.n1, 4 * d);
        b.quadratic(w.l, w.n2, 4 * d);
        b.linear(y, 4 * d);
        b.quadratic(w.l, y, -8 * d);
        b.quadratic(w.n1, w.n2, p);
        b.quadratic(w.n1, y, -2 * p);
        b.quadratic(w.n2, y, -2 * p);
        b.linear(y, 3 * p);
    }

    ReducedModel reduced;
    reduced.model = b.finish();
    reduced.num_original = n;
    reduced.penalty = p;
    return reduced;
}

std::int64_t enumerate_model_minimum(const QuadraticModel &model) {
    const int m = model.num_vars();
    if (m > 30) {
        throw CapacityError("model enumeration limited to 30 variables");
    }
    std::vector<std::uint8_t> v(m, 0);
    std::int64_t best = model.evaluate(v);
    for (std::uint64_t index = 1; index < (std::uint64_t{1} << m); ++index) {
        for (int i = 0; i < m; ++i) {
            v[i] = (index >> i) & 1;
        }
        best = std::min(best, model.evaluate(v));
    }
    return best;
}

EnergyBounds local_search_bound(const IsingInstance &instance, int restarts, std::uint64_t seed) {
    if (restarts < 1) {
        throw ValidationError("restarts must be >= 1");
    }
    const int n = instance.num_qubits();
    auto descend_all = [&](const IsingInstance &inst, std::uint64_t s) {
        Xoshiro256StarStar rng(s);
        IncrementalCost walker(inst);
        int best = std::numeric_limits<int>::max();
        std::vector<Spin> best_z;
        std::vector<Spin> z(n);
        for (int r = 0; r < restarts; ++r) {
            for (auto &spin : z) {
                spin = static_cast<Spin>(rng.coin());
            }
            walker.reset(z);
            while (true) {
                int flip = -1;
                int gain = 0;
                for (int q = 0; q < n; ++q) {
                    int d = walker.flip_delta(q);
                    if (d < gain) {
                        gain = d;
                        flip = q;
                    }
                }
                if (flip < 0) {
                    break;
                }
                walker.flip(flip);
            }
            if (walker.cost() < best) {
                best = walker.cost();
                best_z.assign(walker.spins().begin(), walker.spins().end());
            }
        }
        return std::make_pair(best, best_z);
    };
    auto [lo, argmin] = descend_all(instance, seed);
    auto [neg_lo, unused] = descend_all(instance.negated(), seed ^ 0x9e3779b97f4a7c15ULL);
    EnergyBounds bounds;
    bounds.min_energy = lo;
    bounds.max_energy = -neg_lo;
    bounds.argmin = std::move(argmin);
    bounds.exact = false;
    return bounds;
}

}  // namespace hhqaoa
