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

#include "hhqaoa/mps.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "hhqaoa/errors.h"
#include "hhqaoa/rng.h"

namespace hhqaoa {

using Eigen::Index;
using Eigen::MatrixXcd;
using Eigen::VectorXd;

namespace {

// [a0; a1]: (2 Dl) x Dr.
MatrixXcd stack_rows(const SiteTensor &a) {
    MatrixXcd m(2 * a[0].rows(), a[0].cols());
    m.topRows(a[0].rows()) = a[0];
    m.bottomRows(a[1].rows()) = a[1];
    return m;
}

// [a0, a1]: Dl x (2 Dr).
MatrixXcd stack_cols(const SiteTensor &a) {
    MatrixXcd m(a[0].rows(), 2 * a[0].cols());
    m.leftCols(a[0].cols()) = a[0];
    m.rightCols(a[1].cols()) = a[1];
    return m;
}

void split_rows(const MatrixXcd &m, SiteTensor &a) {
    const Index dl = m.rows() / 2;
    a[0] = m.topRows(dl);
    a[1] = m.bottomRows(dl);
}

void split_cols(const MatrixXcd &m, SiteTensor &a) {
    const Index dr = m.cols() / 2;
    a[0] = m.leftCols(dr);
    a[1] = m.rightCols(dr);
}

// Makes site c left-canonical and pushes the remainder into c + 1.
void left_qr(std::vector<SiteTensor> &sites, int c) {
    MatrixXcd m = stack_rows(sites[c]);
    const Index k = std::min(m.rows(), m.cols());
    Eigen::HouseholderQR<MatrixXcd> qr(m);
    MatrixXcd q = qr.householderQ() * MatrixXcd::Identity(m.rows(), k);
    MatrixXcd r = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
    split_rows(q, sites[c]);
    for (auto &a : sites[c + 1]) {
        a = r * a;
    }
}

// Makes site c right-canonical and pushes the remainder into c - 1.
void right_lq(std::vector<SiteTensor> &sites, int c) {
    MatrixXcd m = stack_cols(sites[c]).adjoint();
    const Index k = std::min(m.rows(), m.cols());
    Eigen::HouseholderQR<MatrixXcd> qr(m);
    MatrixXcd q = qr.householderQ() * MatrixXcd::Identity(m.rows(), k);
    MatrixXcd r = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
    split_cols(q.adjoint(), sites[c]);
    MatrixXcd rd = r.adjoint();
    for (auto &a : sites[c - 1]) {
        a = a * rd;
    }
}

struct Truncation {
    Index keep = 0;
    double discarded = 0.0;
    double kept_norm = 0.0;
};

Truncation choose_rank(const VectorXd &s, const MpsOptions &options) {
    Truncation t;
    const double total = s.squaredNorm();
    if (!(total > 0.0) || !std::isfinite(total)) {
        return t;
    }
    const Index cap = std::max(1, options.chi_max);
    Index keep = 1;
    while (keep < s.size() && keep < cap && s(keep) > options.cutoff * s(0)) {
        ++keep;
    }
    t.keep = keep;
    t.kept_norm = s.head(keep).squaredNorm();
    t.discarded = std::max(0.0, (total - t.kept_norm) / total);
    return t;
}

// Eigen's divide-and-conquer SVD occasionally returns inaccurate factors for
// complex input; such results are caught by a residual check and redone with
// the one-sided Jacobi SVD.
struct SvdFactors {
    MatrixXcd u;
    VectorXd s;
    MatrixXcd v;
};

bool accurate(const MatrixXcd &m, const SvdFactors &f) {
    const double scale = std::max(m.norm(), 1e-300);
    const double recon = (f.u * f.s.asDiagonal() * f.v.adjoint() - m).norm() / scale;
    const Index k = f.s.size();
    const double ortho_u = (f.u.adjoint() * f.u - MatrixXcd::Identity(k, k)).norm();
    const double ortho_v = (f.v.adjoint() * f.v - MatrixXcd::Identity(k, k)).norm();
    return recon < 1e-11 && ortho_u < 1e-10 && ortho_v < 1e-10;
}

SvdFactors checked_svd(const MatrixXcd &m, int site) {
    Eigen::BDCSVD<MatrixXcd> fast(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (fast.info() == Eigen::Success) {
        SvdFactors f{fast.matrixU(), fast.singularValues(), fast.matrixV()};
        if (accurate(m, f)) {
            return f;
        }
    }
    Eigen::JacobiSVD<MatrixXcd> slow(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (slow.info() != Eigen::Success) {
        throw SimulationError("SVD failed at site " + std::to_string(site));
    }
    return {slow.matrixU(), slow.singularValues(), slow.matrixV()};
}

// SVD of site c as (2 Dl) x Dr; truncates the bond (c, c + 1), center -> c + 1.
void svd_left(MpsState &mps, int c, const MpsOptions &options) {
    auto &sites = mps.sites();
    const SvdFactors svd = checked_svd(stack_rows(sites[c]), c);
    const VectorXd &s = svd.s;
    Truncation t = choose_rank(s, options);
    if (t.keep == 0) {
        throw SimulationError("degenerate tensor at site " + std::to_string(c));
    }
    VectorXd kept = s.head(t.keep);
    if (options.renormalize) {
        kept /= std::sqrt(t.kept_norm);
    }
    split_rows(svd.u.leftCols(t.keep), sites[c]);
    MatrixXcd sv = kept.asDiagonal() * svd.v.leftCols(t.keep).adjoint();
    for (auto &a : sites[c + 1]) {
        a = sv * a;
    }
    mps.add_truncation(t.discarded);
}

// SVD of site c as Dl x (2 Dr); truncates the bond (c - 1, c), center -> c - 1.
void svd_right(MpsState &mps, int c, const MpsOptions &options) {
    auto &sites = mps.sites();
    const SvdFactors svd = checked_svd(stack_cols(sites[c]), c);
    const VectorXd &s = svd.s;
    Truncation t = choose_rank(s, options);
    if (t.keep == 0) {
        throw SimulationError("degenerate tensor at site " + std::to_string(c));
    }
    VectorXd kept = s.head(t.keep);
    if (options.renormalize) {
        kept /= std::sqrt(t.kept_norm);
    }
    split_cols(svd.v.leftCols(t.keep).adjoint(), sites[c]);
    MatrixXcd us = svd.u.leftCols(t.keep) * kept.asDiagonal();
    for (auto &a : sites[c - 1]) {
        a = a * us;
    }
    mps.add_truncation(t.discarded);
}

// a'[sigma] = kron(w[sigma], a[sigma]); combined bond index = mpo * D + state.
void apply_mpo_site(SiteTensor &a, const SiteTensor &w) {
    for (int s = 0; s < 2; ++s) {
        const Index dl = a[s].rows();
        const Index dr = a[s].cols();
        MatrixXcd out(w[s].rows() * dl, w[s].cols() * dr);
        for (Index i = 0; i < w[s].rows(); ++i) {
            for (Index j = 0; j < w[s].cols(); ++j) {
                out.block(i * dl, j * dr, dl, dr) = w[s](i, j) * a[s];
            }
        }
        a[s] = std::move(out);
    }
}

int sign_at(const std::vector<int> &support, int site, int sigma) {
    if (sigma == 0) {
        return 1;
    }
    return std::find(support.begin(), support.end(), site) != support.end() ? -1 : 1;
}

}  // namespace

MpsState::MpsState(std::vector<SiteTensor> sites, int chi_max)
    : sites_(std::move(sites)), chi_max_(chi_max) {
    if (sites_.empty()) {
        throw ValidationError("an MPS needs at least one site");
    }
    for (std::size_t s = 0; s < sites_.size(); ++s) {
        const auto &a = sites_[s];
        if (a[0].rows() != a[1].rows() || a[0].cols() != a[1].cols()) {
            throw ValidationError("site tensor blocks disagree in shape");
        }
        if (s > 0 && sites_[s - 1][0].cols() != a[0].rows()) {
            throw ValidationError("bond dimensions of neighboring sites differ");
        }
    }
    if (sites_.front()[0].rows() != 1 || sites_.back()[0].cols() != 1) {
        throw ValidationError("boundary bonds must have dimension 1");
    }
}

std::vector<int> MpsState::bond_dims() const {
    std::vector<int> dims;
    dims.reserve(sites_.size() + 1);
    dims.push_back(static_cast<int>(sites_.front()[0].rows()));
    for (const auto &a : sites_) {
        dims.push_back(static_cast<int>(a[0].cols()));
    }
    return dims;
}

int MpsState::max_bond() const {
    auto dims = bond_dims();
    return *std::max_element(dims.begin(), dims.end());
}

double MpsState::norm_squared() const {
    MatrixXcd env = MatrixXcd::Ones(1, 1);
    for (const auto &a : sites_) {
        env = a[0].adjoint() * env * a[0] + a[1].adjoint() * env * a[1];
    }
    return env(0, 0).real();
}

MpsState mps_from_plus_state(int num_sites, int chi_max) {
    if (num_sites < 1) {
        throw ValidationError("an MPS needs at least one site");
    }
    const double r = 1.0 / std::sqrt(2.0);
    std::vector<SiteTensor> sites(num_sites);
    for (auto &a : sites) {
        a[0] = MatrixXcd::Constant(1, 1, r);
        a[1] = MatrixXcd::Constant(1, 1, r);
    }
    MpsState mps(std::move(sites), chi_max);
    mps.set_center(0);
    return mps;
}

MpsState mps_from_spins(std::span<const Spin> z, int chi_max) {
    std::vector<SiteTensor> sites(z.size());
    for (std::size_t q = 0; q < z.size(); ++q) {
        sites[q][0] = MatrixXcd::Constant(1, 1, z[q] == 1 ? 1.0 : 0.0);
        sites[q][1] = MatrixXcd::Constant(1, 1, z[q] == 1 ? 0.0 : 1.0);
    }
    MpsState mps(std::move(sites), chi_max);
    mps.set_center(0);
    return mps;
}

StateVector mps_to_statevector(const MpsState &mps) {
    const int n = mps.num_sites();
    if (n > 24) {
        throw CapacityError("dense MPS contraction limited to 24 sites");
    }
    MatrixXcd acc = MatrixXcd::Ones(1, 1);
    for (const auto &a : mps.sites()) {
        MatrixXcd next(acc.rows() * 2, a[0].cols());
        next.topRows(acc.rows()) = acc * a[0];
        next.bottomRows(acc.rows()) = acc * a[1];
        acc = std::move(next);
    }
    std::vector<Complex> amp(acc.data(), acc.data() + acc.size());
    return StateVector(n, std::move(amp));
}

void move_center(MpsState &mps, int site) {
    const int n = mps.num_sites();
    if (site < 0 || site >= n) {
        throw ValidationError("center site out of range");
    }
    auto &sites = mps.sites();
    if (mps.center() < 0) {
        for (int c = n - 1; c > 0; --c) {
            right_lq(sites, c);
        }
        mps.set_center(0);
    }
    int c = mps.center();
    for (; c < site; ++c) {
        left_qr(sites, c);
    }
    for (; c > site; --c) {
        right_lq(sites, c);
    }
    mps.set_center(site);
}

void apply_local_phase(MpsState &mps, int site, double phase_arg) {
    // exp(-i phase_arg z): z = +1 on sigma 0, -1 on sigma 1.
    auto &a = mps.sites().at(site);
    a[0] *= std::polar(1.0, -phase_arg);
    a[1] *= std::polar(1.0, phase_arg);
}

void apply_group_and_compress(MpsState &mps, std::span<const DiagonalGate> group, double gamma,
                              const MpsOptions &options, bool left_to_right) {
    std::vector<const DiagonalGate *> order;
    for (const auto &g : group) {
        order.push_back(&g);
    }
    std::sort(order.begin(), order.end(),
              [](const DiagonalGate *x, const DiagonalGate *y) { return x->first() < y->first(); });
    for (std::size_t k = 1; k < order.size(); ++k) {
        if (order[k]->first() <= order[k - 1]->last()) {
            throw ValidationError("gates in one group must have disjoint spans");
        }
    }
    if (!left_to_right) {
        std::reverse(order.begin(), order.end());
    }
    auto &sites = mps.sites();
    for (const DiagonalGate *g : order) {
        const int a = g->first();
        const int b = g->last();
        if (b >= mps.num_sites()) {
            throw ValidationError("gate span exceeds the number of sites");
        }
        IntervalMpo mpo = phase_gate_mpo(*g, gamma);
        if (a == b) {
            sites[a][0] = mpo.w[0][0](0, 0) * sites[a][0];
            sites[a][1] = mpo.w[0][1](0, 0) * sites[a][1];
            continue;
        }
        if (left_to_right) {
            move_center(mps, a);
            for (int s = a; s <= b; ++s) {
                apply_mpo_site(sites[s], mpo.w[s - a]);
            }
            for (int s = b; s > a; --s) {
                right_lq(sites, s);
            }
            for (int s = a; s < b; ++s) {
                svd_left(mps, s, options);
            }
            mps.set_center(b);
        } else {
            move_center(mps, b);
            for (int s = a; s <= b; ++s) {
                apply_mpo_site(sites[s], mpo.w[s - a]);
            }
            for (int s = a; s < b; ++s) {
                left_qr(sites, s);
            }
            for (int s = b; s > a; --s) {
                svd_right(mps, s, options);
            }
            mps.set_center(a);
        }
    }
}

void apply_mixer(MpsState &mps, double beta) {
    const double c = std::cos(beta);
    const Complex s(0.0, -std::sin(beta));
    for (auto &a : mps.sites()) {
        MatrixXcd a0 = c * a[0] + s * a[1];
        a[1] = s * a[0] + c * a[1];
        a[0] = std::move(a0);
    }
}

MpsState run_qaoa_mps(const IsingInstance &instance, const QaoaAngles &angles,
                      const MpsOptions &options) {
    validate_angles(angles);
    if (options.chi_max < 1) {
        throw ValidationError("chi_max must be >= 1");
    }
    MpsState mps = mps_from_plus_state(instance.num_qubits(), options.chi_max);
    const std::vector<DiagonalGate> gates = phase_gates(instance, options.bundle_stars);
    const auto groups = group_gates(gates);
    std::vector<std::vector<DiagonalGate>> grouped;
    for (const auto &idx : groups) {
        auto &g = grouped.emplace_back();
        for (std::size_t k : idx) {
            g.push_back(gates[k]);
        }
    }
    bool forward = true;
    for (int round = 0; round < angles.p(); ++round) {
        const double gamma = angles.gamma[round];
        const double before = mps.truncation_weight();
        for (int q = 0; q < instance.num_qubits(); ++q) {
            if (instance.linear()[q] != 0) {
                apply_local_phase(mps, q, gamma * instance.linear()[q]);
            }
        }
        for (const auto &g : grouped) {
            apply_group_and_compress(mps, g, gamma, options, forward);
            forward = !forward;
        }
        mps.record_layer(mps.truncation_weight() - before);
        apply_mixer(mps, angles.beta[round]);
    }
    return mps;
}

double mps_expectation(const MpsState &state, const IsingInstance &instance) {
    if (state.num_sites() != instance.num_qubits()) {
        throw ValidationError("MPS and instance sizes differ");
    }
    const int n = state.num_sites();
    MpsState mps = state;
    move_center(mps, 0);
    auto &sites = mps.sites();
    const double norm = sites[0][0].squaredNorm() + sites[0][1].squaredNorm();

    std::vector<std::vector<const Term *>> by_first(n);
    for (const Term &t : instance.terms()) {
        by_first[t.first()].push_back(&t);
    }
    double total = 0.0;
    for (int c = 0; c < n; ++c) {
        const SiteTensor &a = sites[c];
        for (const Term *t : by_first[c]) {
            if (t->order == 1) {
                total += t->coeff * (a[0].squaredNorm() - a[1].squaredNorm());
                continue;
            }
            std::vector<int> support(t->sites.begin(), t->sites.begin() + t->order);
            MatrixXcd env = a[0].adjoint() * a[0] - a[1].adjoint() * a[1];
            const int last = t->last();
            for (int s = c + 1; s < last; ++s) {
                const SiteTensor &b = sites[s];
                MatrixXcd next = b[0].adjoint() * (env * b[0]);
                next += static_cast<double>(sign_at(support, s, 1)) * (b[1].adjoint() * (env * b[1]));
                env = std::move(next);
            }
            const SiteTensor &b = sites[last];
            double v = 0.0;
            for (int sigma = 0; sigma < 2; ++sigma) {
                MatrixXcd eb = env * b[sigma];
                v += (sigma ? -1.0 : 1.0) * (b[sigma].conjugate().cwiseProduct(eb)).sum().real();
            }
            total += t->coeff * v;
        }
        if (c + 1 < n) {
            left_qr(sites, c);
        }
    }
    return total / norm;
}

SampleSet mps_sample(const MpsState &state, const IsingInstance &instance, std::uint64_t shots,
                     std::uint64_t seed) {
    if (shots == 0) {
        throw ValidationError("shots must be >= 1");
    }
    if (state.num_sites() != instance.num_qubits()) {
        throw ValidationError("MPS and instance sizes differ");
    }
    const int n = state.num_sites();
    MpsState mps = state;
    move_center(mps, 0);
    const auto &sites = mps.sites();

    Xoshiro256StarStar rng(seed);
    std::map<std::string, std::uint64_t> counts;
    constexpr std::uint64_t kBlock = 2048;
    for (std::uint64_t done = 0; done < shots; done += kBlock) {
        const Index rows = static_cast<Index>(std::min(kBlock, shots - done));
        std::vector<std::string> bits(rows, std::string(n, '0'));
        MatrixXcd env = MatrixXcd::Ones(rows, 1);
        for (int s = 0; s < n; ++s) {
            MatrixXcd w0 = env * sites[s][0];
            MatrixXcd w1 = env * sites[s][1];
            VectorXd p0 = w0.rowwise().squaredNorm();
            VectorXd p1 = w1.rowwise().squaredNorm();
            env.resize(rows, w0.cols());
            for (Index r = 0; r < rows; ++r) {
                const double total = p0(r) + p1(r);
                const bool one = rng.uniform01() * total >= p0(r);
                if (one) {
                    bits[r][s] = '1';
                    env.row(r) = w1.row(r) / std::sqrt(p1(r));
                } else {
                    env.row(r) = w0.row(r) / std::sqrt(p0(r));
                }
            }
        }
        for (auto &b : bits) {
            ++counts[b];
        }
    }
    return make_sample_set(instance, std::move(counts));
}

std::vector<BondScanRow> bond_dimension_error_scan(const IsingInstance &instance,
                                                   const QaoaAngles &angles,
                                                   std::span<const int> chi_list, int chi_ref,
                                                   const MpsOptions &options) {
    if (chi_list.empty()) {
        throw ValidationError("empty bond dimension list");
    }
    if (*std::max_element(chi_list.begin(), chi_list.end()) > chi_ref) {
        throw ValidationError("reference bond dimension must be >= every scanned value");
    }
    MpsOptions opts = options;
    opts.chi_max = chi_ref;
    const MpsState ref_state = run_qaoa_mps(instance, angles, opts);
    const double reference = mps_expectation(ref_state, instance);
    std::vector<BondScanRow> rows;
    for (int chi : chi_list) {
        BondScanRow row;
        row.chi = chi;
        if (chi == chi_ref) {
            row.energy = reference;
            row.truncation_weight = ref_state.truncation_weight();
        } else {
            opts.chi_max = chi;
            MpsState mps = run_qaoa_mps(instance, angles, opts);
            row.energy = mps_expectation(mps, instance);
            row.truncation_weight = mps.truncation_weight();
        }
        row.delta_e = std::abs(row.energy - reference);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace hhqaoa
