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

// Shared fixtures and slow reference implementations for the test suites.
// Nothing here calls into the fast paths it is used to check.

#ifndef HHQAOA_TESTS_TEST_SUPPORT_H
#define HHQAOA_TESTS_TEST_SUPPORT_H

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>
#include <boost/math/distributions/chi_squared.hpp>
#include <complex>
#include <map>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hhqaoa/angles.h"
#include "hhqaoa/graph.h"
#include "hhqaoa/instance.h"
#include "hhqaoa/rng.h"

namespace hhqaoa::testing {

/// Induced subgraph of a built-in map on nodes 0..n-1.
inline HeavyHexGraph prefix_subgraph(const std::string &map, int n) {
    const HeavyHexGraph full = load_coupling_map(map);
    std::vector<std::pair<int, int>> edges;
    for (const Edge &e : full.edges()) {
        if (e.u < n && e.v < n) {
            edges.emplace_back(e.u, e.v);
        }
    }
    return HeavyHexGraph::from_edges(map + "-prefix" + std::to_string(n), n, edges);
}

inline IsingInstance small_instance(int n, std::uint64_t seed) {
    const std::string map = n <= 16 ? "guadalupe-16" : "falcon-27";
    return generate_instance(prefix_subgraph(map, n), seed);
}

inline QaoaAngles random_angles(int p, Xoshiro256StarStar &rng) {
    QaoaAngles a;
    for (int k = 0; k < p; ++k) {
        a.beta.push_back(rng.uniform(-3.5, 3.5));
        a.gamma.push_back(rng.uniform(-3.5, 3.5));
    }
    return a;
}

/// C(z) from the coefficient vectors directly, ignoring the term list.
inline int naive_cost(const IsingInstance &inst, std::uint64_t index) {
    const HeavyHexGraph &g = inst.graph();
    auto z = [&](int q) { return ((index >> q) & 1) ? -1 : 1; };
    int c = 0;
    for (int q = 0; q < inst.num_qubits(); ++q) {
        c += inst.linear()[q] * z(q);
    }
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        c += inst.quadratic()[e] * z(g.edges()[e].u) * z(g.edges()[e].v);
    }
    for (std::size_t k = 0; k < g.w_set().size(); ++k) {
        const CubicSite &w = g.w_set()[k];
        c += inst.cubic()[k] * z(w.l) * z(w.n1) * z(w.n2);
    }
    return c;
}

/// exp(-i beta sum X) exp(-i gamma C) per round on |+>, with the mixer taken
/// as a dense matrix exponential. Small n only.
inline Eigen::VectorXcd dense_qaoa_state(const IsingInstance &inst, const QaoaAngles &angles) {
    using Eigen::MatrixXcd;
    const int n = inst.num_qubits();
    const Eigen::Index dim = Eigen::Index{1} << n;
    MatrixXcd mixer = MatrixXcd::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (int q = 0; q < n; ++q) {
            mixer(i ^ (Eigen::Index{1} << q), i) += 1.0;
        }
    }
    Eigen::VectorXcd psi = Eigen::VectorXcd::Constant(dim, 1.0 / std::sqrt(double(dim)));
    for (int k = 0; k < angles.p(); ++k) {
        for (Eigen::Index i = 0; i < dim; ++i) {
            psi(i) *= std::polar(1.0, -angles.gamma[k] * naive_cost(inst, std::uint64_t(i)));
        }
        const MatrixXcd u = (std::complex<double>(0.0, -angles.beta[k]) * mixer).exp();
        psi = u * psi;
    }
    return psi;
}

inline double dense_expectation(const IsingInstance &inst, const Eigen::VectorXcd &psi) {
    double e = 0.0;
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
        e += std::norm(psi(i)) * naive_cost(inst, std::uint64_t(i));
    }
    return e;
}

/// Pearson goodness-of-fit p-value of observed bitstring counts against
/// exact probabilities (index bit q is qubit q). Bins expecting fewer than 5
/// counts are pooled.
inline double chi_square_pvalue(const std::map<std::string, std::uint64_t> &counts,
                                const std::vector<double> &probabilities, std::uint64_t shots) {
    std::vector<double> observed(probabilities.size(), 0.0);
    for (const auto &[bits, c] : counts) {
        std::uint64_t index = 0;
        for (std::size_t q = 0; q < bits.size(); ++q) {
            if (bits[q] == '1') {
                index |= std::uint64_t{1} << q;
            }
        }
        observed[index] += static_cast<double>(c);
    }
    double stat = 0.0;
    int bins = 0;
    double pooled_obs = 0.0, pooled_exp = 0.0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        const double expected = probabilities[i] * static_cast<double>(shots);
        if (expected < 5.0) {
            pooled_obs += observed[i];
            pooled_exp += expected;
            continue;
        }
        stat += (observed[i] - expected) * (observed[i] - expected) / expected;
        ++bins;
    }
    if (pooled_exp > 0.0) {
        stat += (pooled_obs - pooled_exp) * (pooled_obs - pooled_exp) / pooled_exp;
        ++bins;
    }
    boost::math::chi_squared dist(bins - 1);
    return boost::math::cdf(boost::math::complement(dist, stat));
}

}  // namespace hhqaoa::testing

#endif
