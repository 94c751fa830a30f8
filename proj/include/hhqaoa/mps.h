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

#ifndef HHQAOA_MPS_H
#define HHQAOA_MPS_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "hhqaoa/angles.h"
#include "hhqaoa/instance.h"
#include "hhqaoa/samples.h"
#include "hhqaoa/statevector.h"

namespace hhqaoa {

/// One site tensor as two (left bond x right bond) matrices, one per physical
/// index value sigma (0 <-> z = +1).
using SiteTensor = std::array<Eigen::MatrixXcd, 2>;

struct MpsOptions {
    int chi_max = 64;
    /// Singular values below cutoff * s_max are always dropped.
    double cutoff = 1e-13;
    /// Fold the quadratic and cubic terms around each V2 node into a single
    /// three-body gate (the same diagonal unitary, fewer compressions).
    bool bundle_stars = true;
    bool renormalize = true;
};

class MpsState {
   public:
    MpsState() = default;
    MpsState(std::vector<SiteTensor> sites, int chi_max);

    int num_sites() const { return static_cast<int>(sites_.size()); }
    const std::vector<SiteTensor> &sites() const { return sites_; }
    std::vector<SiteTensor> &sites() { return sites_; }

    int chi_max() const { return chi_max_; }
    void set_chi_max(int chi) { chi_max_ = chi; }

    /// Sum of discarded squared singular values (relative to the state norm
    /// at the time of each cut).
    double truncation_weight() const { return truncation_weight_; }
    void add_truncation(double w) { truncation_weight_ += w; }
    const std::vector<double> &layer_truncation() const { return layer_truncation_; }
    void record_layer(double w) { layer_truncation_.push_back(w); }

    /// Orthogonality center, or -1 when the canonical form is unknown.
    int center() const { return center_; }
    void set_center(int c) { center_ = c; }

    /// num_sites() + 1 entries; both ends are 1.
    std::vector<int> bond_dims() const;
    int max_bond() const;

    /// <psi|psi> by full contraction.
    double norm_squared() const;

   private:
    std::vector<SiteTensor> sites_;
    int chi_max_ = 0;
    double truncation_weight_ = 0.0;
    std::vector<double> layer_truncation_;
    int center_ = -1;
};

MpsState mps_from_plus_state(int num_sites, int chi_max = 64);
MpsState mps_from_spins(std::span<const Spin> z, int chi_max = 64);

/// Dense contraction; index bit q is site q. n <= 24.
StateVector mps_to_statevector(const MpsState &mps);

/// Moves the orthogonality center with QR steps; a state with unknown form is
/// first brought to right-canonical form.
void move_center(MpsState &mps, int site);

/// Diagonal gate on up to three sites: the unitary is
/// exp(-i gamma energy[idx]) where bit t of idx is sigma on sites[t].
struct DiagonalGate {
    std::vector<int> sites;
    std::vector<double> energy;

    int first() const { return sites.front(); }
    int last() const { return sites.back(); }
};

DiagonalGate gate_from_term(const Term &term);

/// Multi-site phase gates for H_C (linear terms are excluded; they are local).
/// With bundling, one gate per V2 node of degree >= 1 over {l} u N(l).
std::vector<DiagonalGate> phase_gates(const IsingInstance &instance, bool bundle_stars);

/// Diagonal operator over the contiguous span [first, last]; w[t][sigma] is the
/// (left bond x right bond) matrix on site first + t.
struct IntervalMpo {
    int first = 0;
    int last = 0;
    std::vector<SiteTensor> w;

    int max_bond() const;
};

/// Successive SVDs of the coefficient tensor of the involved sites, with
/// identity bonds threaded through the padded sites in between.
IntervalMpo phase_gate_mpo(const DiagonalGate &gate, double gamma);
IntervalMpo phase_gate_mpo(const Term &term, double gamma);

/// 2^span x 2^span dense operator; index bit t is site first + t.
Eigen::MatrixXcd mpo_to_dense(const IntervalMpo &mpo);

/// Greedy first-fit: gate k joins the first group whose spans are disjoint
/// from [first_k, last_k]. Returns indices into `gates`.
std::vector<std::vector<std::size_t>> group_gates(std::span<const DiagonalGate> gates);

/// Applies every gate of the group exactly and compresses each grown span
/// with an SVD sweep in mixed canonical form. `left_to_right` picks the
/// sweep direction (alternated between groups to keep the center nearby).
void apply_group_and_compress(MpsState &mps, std::span<const DiagonalGate> group, double gamma,
                              const MpsOptions &options, bool left_to_right = true);

/// Local exp(-i gamma d z) on one site; keeps the canonical form.
void apply_local_phase(MpsState &mps, int site, double phase_arg);

/// RX(2 beta) on every site.
void apply_mixer(MpsState &mps, double beta);

MpsState run_qaoa_mps(const IsingInstance &instance, const QaoaAngles &angles,
                      const MpsOptions &options);

/// Exact <psi|H_C|psi> / <psi|psi> of the stored MPS.
double mps_expectation(const MpsState &mps, const IsingInstance &instance);

/// Perfect sampling: sequential conditional draws from a right-canonical copy.
SampleSet mps_sample(const MpsState &mps, const IsingInstance &instance, std::uint64_t shots,
                     std::uint64_t seed);

struct BondScanRow {
    int chi = 0;
    double energy = 0.0;
    double delta_e = 0.0;
    double truncation_weight = 0.0;
};

/// delta_e = |E_chi - E_chi_ref|. chi_ref must be >= every entry of chi_list.
std::vector<BondScanRow> bond_dimension_error_scan(const IsingInstance &instance,
                                                   const QaoaAngles &angles,
                                                   std::span<const int> chi_list, int chi_ref,
                                                   const MpsOptions &options = {});

}  // namespace hhqaoa

#endif
