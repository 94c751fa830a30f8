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

#ifndef HHQAOA_OPTIMIZE_H
#define HHQAOA_OPTIMIZE_H

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hhqaoa/angles.h"
#include "hhqaoa/instance.h"
#include "hhqaoa/statevector.h"

namespace hhqaoa {

/// Exact mean energy for a set of angles.
using Objective = std::function<double(const QaoaAngles &)>;

/// Statevector objective sharing one cost table across calls.
Objective statevector_objective(const IsingInstance &instance,
                                int cap = kDefaultStatevectorCap);
/// MPS objective at bond dimension chi.
Objective mps_objective(const IsingInstance &instance, int chi_max);

/// gamma_i mod pi (the fixed cost parity turns gamma -> gamma + pi into a
/// global phase), beta_i mod 2 pi, then the (beta, gamma) -> (-beta, -gamma)
/// image is taken when its first nonzero beta is the smaller one (<= pi).
QaoaAngles canonicalize_angles(const QaoaAngles &angles);

/// Axis values are min + i (max - min) / count, i = 0..count-1.
struct GridAxis {
    double min = 0.0;
    double max = 0.0;
    int count = 1;

    std::vector<double> values() const;
};

struct Landscape {
    std::vector<double> beta_axis;
    std::vector<double> gamma_axis;
    /// Row-major: energy[i * gamma_axis.size() + j] at (beta_i, gamma_j).
    std::vector<double> energy;
    double best_beta = 0.0;
    double best_gamma = 0.0;
    double best_energy = 0.0;

    double at(std::size_t i, std::size_t j) const { return energy[i * gamma_axis.size() + j]; }
};

/// p = 1 grid. Ties resolve to the lowest (i, j) in row-major order.
Landscape grid_search(const GridAxis &beta, const GridAxis &gamma, const Objective &objective);

struct FixingStep {
    QaoaAngles angles;
    double energy = 0.0;
};

/// Round k freezes rounds 1..k-1 and grids (beta_k, gamma_k). `first_beta`
/// is used for round 1, `beta`/`gamma` for every round. The state after the
/// frozen rounds is cached, so each grid point costs one round.
std::vector<FixingStep> parameter_fixing_search(const CostTable &table, int p_max,
                                                const GridAxis &first_beta, const GridAxis &beta,
                                                const GridAxis &gamma);

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int evaluations = 0;
};

/// Downhill simplex. Stops when (f_max - f_min) <= rel_tol * (|f_min| + |f_max|) / 2
/// (plus a tiny absolute floor) or after max_evals evaluations.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double> &)> &f,
                             std::vector<double> x0, double step, double rel_tol, int max_evals);

struct BasinHoppingOptions {
    int iterations = 200;
    std::uint64_t seed = 0;
    double perturbation = 1.0;
    double local_tolerance = 1e-8;
    int local_max_evals = 500;
    /// Optional search box beta_p in [0, pi/2) (enforced by rejecting points).
    bool restrict_last_beta = false;
};

struct BasinHoppingResult {
    QaoaAngles angles;
    double energy = 0.0;
    int evaluations = 0;
    int accepted = 0;
};

/// Local descent from the initializer, then `iterations` cycles of uniform
/// +-perturbation of the incumbent, local descent, accept if strictly better.
/// Without an initializer the start is drawn uniformly from
/// beta in [0, pi/2), gamma in [0, pi). The returned angles are canonical.
BasinHoppingResult basin_hopping(const Objective &objective, int p,
                                 const std::optional<QaoaAngles> &init,
                                 const BasinHoppingOptions &options);

enum class ExtrapolationRule { kCopyLast, kZero };

/// Length p + 1 angles: the first p copied, the new pair set by the rule.
QaoaAngles extrapolate_angles(const QaoaAngles &angles,
                              ExtrapolationRule rule = ExtrapolationRule::kCopyLast);

/// p = 1..p_max: each level starts from both extrapolation rules of the
/// previous optimum and keeps the better basin-hopping result.
std::vector<BasinHoppingResult> train_angle_ladder(const Objective &objective, int p_max,
                                                   const BasinHoppingOptions &options);

}  // namespace hhqaoa

#endif
