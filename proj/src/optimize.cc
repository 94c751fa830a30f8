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

#include "hhqaoa/optimize.h"

#include <cmath>
#include <limits>
#include <memory>
#include <numbers>

#include "hhqaoa/errors.h"
#include "hhqaoa/mps.h"
#include "hhqaoa/parallel.h"
#include "hhqaoa/rng.h"

namespace hhqaoa {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap(double x, double period) {
    double r = x - period * std::floor(x / period);
    return r >= period ? 0.0 : r;
}

QaoaAngles reduce(const QaoaAngles &angles) {
    QaoaAngles out = angles;
    for (double &b : out.beta) {
        b = wrap(b, 2 * kPi);
    }
    for (double &g : out.gamma) {
        g = wrap(g, kPi);
    }
    return out;
}

std::vector<double> pack(const QaoaAngles &angles) {
    std::vector<double> x = angles.beta;
    x.insert(x.end(), angles.gamma.begin(), angles.gamma.end());
    return x;
}

QaoaAngles unpack(const std::vector<double> &x) {
    const std::size_t p = x.size() / 2;
    return {{x.begin(), x.begin() + p}, {x.begin() + p, x.end()}};
}

}  // namespace

Objective statevector_objective(const IsingInstance &instance, int cap) {
    auto table = std::make_shared<const CostTable>(build_cost_table(instance, cap));
    return [table](const QaoaAngles &angles) {
        return expectation(run_qaoa(*table, angles), *table);
    };
}

Objective mps_objective(const IsingInstance &instance, int chi_max) {
    auto shared = std::make_shared<const IsingInstance>(instance);
    return [shared, chi_max](const QaoaAngles &angles) {
        MpsOptions options;
        options.chi_max = chi_max;
        if (angles.p() == 0) {
            return 0.0;
        }
        return mps_expectation(run_qaoa_mps(*shared, angles, options), *shared);
    };
}

QaoaAngles canonicalize_angles(const QaoaAngles &angles) {
    validate_angles(angles);
    QaoaAngles direct = reduce(angles);
    QaoaAngles flipped = angles;
    for (double &b : flipped.beta) {
        b = -b;
    }
    for (double &g : flipped.gamma) {
        g = -g;
    }
    flipped = reduce(flipped);
    for (int i = 0; i < direct.p(); ++i) {
        if (direct.beta[i] != 0.0) {
            return direct.beta[i] <= flipped.beta[i] ? direct : flipped;
        }
    }
    for (int i = 0; i < direct.p(); ++i) {
        if (direct.gamma[i] != 0.0) {
            return direct.gamma[i] <= flipped.gamma[i] ? direct : flipped;
        }
    }
    return direct;
}

std::vector<double> GridAxis::values() const {
    if (count < 1) {
        throw ValidationError("grid axis needs at least one point");
    }
    std::vector<double> v(count);
    for (int i = 0; i < count; ++i) {
        v[i] = min + i * (max - min) / count;
    }
    return v;
}

Landscape grid_search(const GridAxis &beta, const GridAxis &gamma, const Objective &objective) {
    Landscape land;
    land.beta_axis = beta.values();
    land.gamma_axis = gamma.values();
    const std::size_t cols = land.gamma_axis.size();
    land.energy.assign(land.beta_axis.size() * cols, 0.0);
    parallel_for(land.energy.size(), [&](std::size_t k) {
        QaoaAngles a{{land.beta_axis[k / cols]}, {land.gamma_axis[k % cols]}};
        land.energy[k] = objective(a);
    });
    std::size_t best = 0;
    for (std::size_t k = 1; k < land.energy.size(); ++k) {
        if (land.energy[k] < land.energy[best]) {
            best = k;
        }
    }
    land.best_beta = land.beta_axis[best / cols];
    land.best_gamma = land.gamma_axis[best % cols];
    land.best_energy = land.energy[best];
    return land;
}

std::vector<FixingStep> parameter_fixing_search(const CostTable &table, int p_max,
                                                const GridAxis &first_beta, const GridAxis &beta,
                                                const GridAxis &gamma) {
    if (p_max < 1) {
        throw ValidationError("p_max must be >= 1");
    }
    std::vector<FixingStep> steps;
    QaoaAngles fixed;
    StateVector prefix = StateVector::plus_state(table.num_qubits);
    const std::vector<double> gammas = gamma.values();
    for (int round = 1; round <= p_max; ++round) {
        const std::vector<double> betas = round == 1 ? first_beta.values() : beta.values();
        const std::size_t cols = gammas.size();
        std::vector<double> energy(betas.size() * cols);
        parallel_for(energy.size(), [&](std::size_t k) {
            StateVector s = prefix;
            apply_phase(s, table, gammas[k % cols]);
            apply_mixer(s, betas[k / cols]);
            energy[k] = expectation(s, table);
        });
        std::size_t best = 0;
        for (std::size_t k = 1; k < energy.size(); ++k) {
            if (energy[k] < energy[best]) {
                best = k;
            }
        }
        fixed.beta.push_back(betas[best / cols]);
        fixed.gamma.push_back(gammas[best % cols]);
        apply_phase(prefix, table, fixed.gamma.back());
        apply_mixer(prefix, fixed.beta.back());
        steps.push_back({fixed, energy[best]});
    }
    return steps;
}

BasinHoppingResult basin_hopping(const Objective &objective, int p,
                                 const std::optional<QaoaAngles> &init,
                                 const BasinHoppingOptions &options) {
    if (p < 1) {
        throw ValidationError("basin hopping needs p >= 1");
    }
    if (options.iterations < 1) {
        throw ValidationError("basin hopping needs at least one iteration");
    }
    Xoshiro256StarStar rng(options.seed);
    std::vector<double> start;
    if (init) {
        validate_angles(*init);
        if (init->p() != p) {
            throw ValidationError("initializer has the wrong number of rounds");
        }
        start = pack(*init);
    } else {
        start.resize(2 * p);
        for (int i = 0; i < p; ++i) {
            start[i] = rng.uniform(0.0, kPi / 2);
        }
        for (int i = 0; i < p; ++i) {
            start[p + i] = rng.uniform(0.0, kPi);
        }
    }

    BasinHoppingResult result;
    auto f = [&](const std::vector<double> &x) {
        if (options.restrict_last_beta) {
            const double b = x[p - 1];
            if (b < 0.0 || b >= kPi / 2) {
                return std::numeric_limits<double>::infinity();
            }
        }
        return objective(unpack(x));
    };
    auto descend = [&](std::vector<double> x) {
        NelderMeadResult r =
            nelder_mead(f, std::move(x), 0.1, options.local_tolerance, options.local_max_evals);
        result.evaluations += r.evaluations;
        return r;
    };

    std::vector<double> best = start;
    double best_value = f(start);
    ++result.evaluations;
    NelderMeadResult first = descend(start);
    if (first.value < best_value) {
        best = first.x;
        best_value = first.value;
    }
    for (int it = 0; it < options.iterations; ++it) {
        std::vector<double> trial = best;
        for (double &v : trial) {
            v += rng.uniform(-options.perturbation, options.perturbation);
        }
        NelderMeadResult r = descend(std::move(trial));
        if (r.value < best_value - 1e-12) {
            best = r.x;
            best_value = r.value;
            ++result.accepted;
        }
    }
    result.angles = canonicalize_angles(unpack(best));
    result.energy = best_value;
    return result;
}

QaoaAngles extrapolate_angles(const QaoaAngles &angles, ExtrapolationRule rule) {
    validate_angles(angles);
    QaoaAngles out = angles;
    if (rule == ExtrapolationRule::kZero || angles.p() == 0) {
        out.beta.push_back(0.0);
        out.gamma.push_back(0.0);
    } else {
        out.beta.push_back(angles.beta.back());
        out.gamma.push_back(angles.gamma.back());
    }
    return out;
}

std::vector<BasinHoppingResult> train_angle_ladder(const Objective &objective, int p_max,
                                                   const BasinHoppingOptions &options) {
    if (p_max < 1) {
        throw ValidationError("p_max must be >= 1");
    }
    std::vector<BasinHoppingResult> ladder;
    BasinHoppingOptions opts = options;
    ladder.push_back(basin_hopping(objective, 1, std::nullopt, opts));
    for (int p = 2; p <= p_max; ++p) {
        opts.seed = options.seed + static_cast<std::uint64_t>(p);
        const QaoaAngles &prev = ladder.back().angles;
        QaoaAngles copy = extrapolate_angles(prev, ExtrapolationRule::kCopyLast);
        QaoaAngles zero = extrapolate_angles(prev, ExtrapolationRule::kZero);
        QaoaAngles start = objective(copy) <= objective(zero) ? copy : zero;
        BasinHoppingResult r = basin_hopping(objective, p, start, opts);
        r.evaluations += 2;
        if (r.energy > ladder.back().energy) {
            // The zero continuation reproduces the previous optimum exactly.
            r.angles = zero;
            r.energy = objective(zero);
        }
        ladder.push_back(std::move(r));
    }
    return ladder;
}

}  // namespace hhqaoa
