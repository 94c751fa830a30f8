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
#include <bit>
#include <cmath>

#include "hhqaoa/errors.h"
#include "hhqaoa/mps.h"

namespace hhqaoa {

using Eigen::MatrixXcd;

DiagonalGate gate_from_term(const Term &term) {
    DiagonalGate gate;
    gate.sites.assign(term.sites.begin(), term.sites.begin() + term.order);
    gate.energy.resize(std::size_t{1} << term.order);
    for (std::size_t idx = 0; idx < gate.energy.size(); ++idx) {
        gate.energy[idx] = std::popcount(idx) % 2 ? -term.coeff : term.coeff;
    }
    return gate;
}

std::vector<DiagonalGate> phase_gates(const IsingInstance &instance, bool bundle_stars) {
    std::vector<DiagonalGate> gates;
    if (!bundle_stars) {
        for (const Term &t : instance.terms()) {
            if (t.order > 1) {
                gates.push_back(gate_from_term(t));
            }
        }
        return gates;
    }
    const HeavyHexGraph &graph = instance.graph();
    std::vector<int> cubic_of(graph.num_nodes(), -1);
    for (int k = 0; k < static_cast<int>(graph.w_set().size()); ++k) {
        cubic_of[graph.w_set()[k].l] = k;
    }
    for (int l : graph.v2()) {
        const auto &nbrs = graph.neighbors(l);
        if (nbrs.empty()) {
            continue;
        }
        DiagonalGate gate;
        gate.sites = nbrs;
        gate.sites.push_back(l);
        std::sort(gate.sites.begin(), gate.sites.end());
        auto position = [&](int node) {
            return static_cast<int>(std::find(gate.sites.begin(), gate.sites.end(), node) -
                                    gate.sites.begin());
        };
        const int pl = position(l);
        gate.energy.assign(std::size_t{1} << gate.sites.size(), 0.0);
        for (std::size_t idx = 0; idx < gate.energy.size(); ++idx) {
            auto z = [&](int pos) { return (idx >> pos) & 1 ? -1 : 1; };
            double e = 0.0;
            for (int n : nbrs) {
                e += instance.quadratic()[graph.edge_index(l, n)] * z(pl) * z(position(n));
            }
            if (cubic_of[l] >= 0) {
                e += instance.cubic()[cubic_of[l]] * z(0) * z(1) * z(2);
            }
            gate.energy[idx] = e;
        }
        gates.push_back(std::move(gate));
    }
    return gates;
}

int IntervalMpo::max_bond() const {
    int b = 1;
    for (const auto &site : w) {
        b = std::max<int>(b, static_cast<int>(site[0].cols()));
    }
    return b;
}

IntervalMpo phase_gate_mpo(const DiagonalGate &gate, double gamma) {
    const int k = static_cast<int>(gate.sites.size());
    if (k < 1 || k > 3 || gate.energy.size() != (std::size_t{1} << k)) {
        throw ValidationError("diagonal gates act on 1 to 3 sites with 2^k energies");
    }
    if (!std::is_sorted(gate.sites.begin(), gate.sites.end()) ||
        std::adjacent_find(gate.sites.begin(), gate.sites.end()) != gate.sites.end()) {
        throw ValidationError("gate sites must be strictly ascending");
    }

    // rest(r, m): r is the bond to the already-factored sites, bit 0 of m is
    // the next involved site.
    MatrixXcd rest(1, gate.energy.size());
    for (std::size_t idx = 0; idx < gate.energy.size(); ++idx) {
        rest(0, idx) = std::polar(1.0, -gamma * gate.energy[idx]);
    }
    std::vector<SiteTensor> cores(k);
    for (int t = 0; t < k; ++t) {
        const Eigen::Index r = rest.rows();
        const Eigen::Index cols = rest.cols() / 2;
        if (t == k - 1) {
            for (int s = 0; s < 2; ++s) {
                cores[t][s] = rest.col(s);
            }
            break;
        }
        MatrixXcd m(r * 2, cols);
        for (Eigen::Index i = 0; i < r; ++i) {
            for (int s = 0; s < 2; ++s) {
                for (Eigen::Index c = 0; c < cols; ++c) {
                    m(i * 2 + s, c) = rest(i, 2 * c + s);
                }
            }
        }
        Eigen::JacobiSVD<MatrixXcd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const auto &sv = svd.singularValues();
        Eigen::Index q = 1;
        while (q < sv.size() && sv(q) > 1e-14 * sv(0)) {
            ++q;
        }
        for (int s = 0; s < 2; ++s) {
            cores[t][s].resize(r, q);
            for (Eigen::Index i = 0; i < r; ++i) {
                cores[t][s].row(i) = svd.matrixU().row(i * 2 + s).head(q);
            }
        }
        rest = sv.head(q).asDiagonal() * svd.matrixV().leftCols(q).adjoint();
    }

    IntervalMpo mpo;
    mpo.first = gate.first();
    mpo.last = gate.last();
    int t = 0;
    for (int site = mpo.first; site <= mpo.last; ++site) {
        if (site == gate.sites[t]) {
            mpo.w.push_back(cores[t]);
            ++t;
        } else {
            Eigen::Index bond = cores[t - 1][0].cols();
            MatrixXcd id = MatrixXcd::Identity(bond, bond);
            mpo.w.push_back({id, id});
        }
    }
    return mpo;
}

IntervalMpo phase_gate_mpo(const Term &term, double gamma) {
    return phase_gate_mpo(gate_from_term(term), gamma);
}

MatrixXcd mpo_to_dense(const IntervalMpo &mpo) {
    const int span = mpo.last - mpo.first + 1;
    if (span > 14) {
        throw CapacityError("dense MPO reconstruction limited to 14 sites");
    }
    const std::size_t dim = std::size_t{1} << span;
    MatrixXcd dense = MatrixXcd::Zero(dim, dim);
    for (std::size_t idx = 0; idx < dim; ++idx) {
        MatrixXcd acc = mpo.w[0][idx & 1];
        for (int t = 1; t < span; ++t) {
            acc = acc * mpo.w[t][(idx >> t) & 1];
        }
        dense(idx, idx) = acc(0, 0);
    }
    return dense;
}

std::vector<std::vector<std::size_t>> group_gates(std::span<const DiagonalGate> gates) {
    std::vector<std::vector<std::size_t>> groups;
    std::vector<std::vector<bool>> occupied;
    int width = 0;
    for (const auto &g : gates) {
        width = std::max(width, g.last() + 1);
    }
    for (std::size_t k = 0; k < gates.size(); ++k) {
        const int a = gates[k].first();
        const int b = gates[k].last();
        std::size_t target = groups.size();
        for (std::size_t gi = 0; gi < groups.size(); ++gi) {
            bool free = true;
            for (int s = a; s <= b && free; ++s) {
                free = !occupied[gi][s];
            }
            if (free) {
                target = gi;
                break;
            }
        }
        if (target == groups.size()) {
            groups.emplace_back();
            occupied.emplace_back(width, false);
        }
        groups[target].push_back(k);
        for (int s = a; s <= b; ++s) {
            occupied[target][s] = true;
        }
    }
    return groups;
}

}  // namespace hhqaoa
