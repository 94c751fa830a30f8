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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hhqaoa/errors.h"
#include "hhqaoa/optimize.h"

namespace hhqaoa {

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double> &)> &f,
                             std::vector<double> x0, double step, double rel_tol, int max_evals) {
    const std::size_t dim = x0.size();
    if (dim == 0) {
        throw ValidationError("Nelder-Mead needs at least one coordinate");
    }
    constexpr double kReflect = 1.0;
    constexpr double kExpand = 2.0;
    constexpr double kContract = 0.5;
    constexpr double kShrink = 0.5;

    NelderMeadResult result;
    auto eval = [&](const std::vector<double> &x) {
        ++result.evaluations;
        return f(x);
    };

    std::vector<std::vector<double>> simplex(dim + 1, x0);
    std::vector<double> values(dim + 1);
    values[0] = eval(x0);
    for (std::size_t k = 0; k < dim; ++k) {
        simplex[k + 1][k] += step;
        values[k + 1] = eval(simplex[k + 1]);
    }

    std::vector<std::size_t> order(dim + 1);
    auto point = [&](const std::vector<double> &centroid, const std::vector<double> &worst,
                     double t) {
        std::vector<double> x(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            x[k] = centroid[k] + t * (worst[k] - centroid[k]);
        }
        return x;
    };

    while (true) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        const double lo = values[order.front()];
        const double hi = values[order.back()];
        const double scale = 0.5 * (std::abs(lo) + std::abs(hi));
        if (hi - lo <= rel_tol * scale + 1e-300 || result.evaluations >= max_evals) {
            break;
        }
        const std::size_t worst = order.back();
        std::vector<double> centroid(dim, 0.0);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t k = 0; k < dim; ++k) {
                centroid[k] += simplex[order[i]][k] / static_cast<double>(dim);
            }
        }
        std::vector<double> xr = point(centroid, simplex[worst], -kReflect);
        double fr = eval(xr);
        const double second_worst = values[order[dim - 1]];
        if (fr < lo) {
            std::vector<double> xe = point(centroid, simplex[worst], -kExpand);
            double fe = eval(xe);
            if (fe < fr) {
                simplex[worst] = std::move(xe);
                values[worst] = fe;
            } else {
                simplex[worst] = std::move(xr);
                values[worst] = fr;
            }
            continue;
        }
        if (fr < second_worst) {
            simplex[worst] = std::move(xr);
            values[worst] = fr;
            continue;
        }
        // Outside contraction if the reflected point beats the worst, inside otherwise.
        const bool outside = fr < values[worst];
        std::vector<double> xc =
            point(centroid, outside ? xr : simplex[worst], kContract);
        double fc = eval(xc);
        if (fc < std::min(fr, values[worst])) {
            simplex[worst] = std::move(xc);
            values[worst] = fc;
            continue;
        }
        const std::size_t best = order.front();
        for (std::size_t i = 0; i <= dim; ++i) {
            if (i == best) {
                continue;
            }
            for (std::size_t k = 0; k < dim; ++k) {
                simplex[i][k] = simplex[best][k] + kShrink * (simplex[i][k] - simplex[best][k]);
            }
            values[i] = eval(simplex[i]);
        }
    }
    std::size_t best = static_cast<std::size_t>(
        std::min_element(values.begin(), values.end()) - values.begin());
    result.x = simplex[best];
    result.value = values[best];
    return result;
}

}  // namespace hhqaoa
