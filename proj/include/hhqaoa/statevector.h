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

#ifndef HHQAOA_STATEVECTOR_H
#define HHQAOA_STATEVECTOR_H

#include <complex>
#include <cstdint>
#include <vector>

#include "hhqaoa/angles.h"
#include "hhqaoa/instance.h"
#include "hhqaoa/samples.h"

namespace hhqaoa {

using Complex = std::complex<double>;

/// 2^27 amplitudes is 2 GiB.
constexpr int kDefaultStatevectorCap = 27;

/// Dense state. Amplitude index bit q is qubit q; bit value 0 is z = +1.
class StateVector {
   public:
    StateVector() = default;
    StateVector(int num_qubits, std::vector<Complex> amplitudes);

    static StateVector plus_state(int num_qubits);
    static StateVector basis_state(int num_qubits, std::uint64_t index);

    int num_qubits() const { return num_qubits_; }
    std::size_t size() const { return amplitudes_.size(); }
    const std::vector<Complex> &amplitudes() const { return amplitudes_; }
    std::vector<Complex> &amplitudes() { return amplitudes_; }
    const Complex &operator[](std::size_t i) const { return amplitudes_[i]; }

    double norm_squared() const;
    std::vector<double> probabilities() const;

   private:
    int num_qubits_ = 0;
    std::vector<Complex> amplitudes_;
};

/// |<a|b>|^2, insensitive to global phase.
double fidelity(const StateVector &a, const StateVector &b);

/// costs[index] = C(z(index)), filled by a Gray-code walk.
struct CostTable {
    int num_qubits = 0;
    std::vector<std::int32_t> costs;
    int min_cost = 0;
    int max_cost = 0;
};

CostTable build_cost_table(const IsingInstance &instance, int cap = kDefaultStatevectorCap);

/// amplitude *= exp(-i gamma C(z)).
void apply_phase(StateVector &state, const CostTable &table, double gamma);
/// exp(-i beta sum_q X_q) = prod_q RX_q(2 beta).
void apply_mixer(StateVector &state, double beta);

// Single gates for gate-level simulation.
void apply_h(StateVector &state, int qubit);
void apply_rx(StateVector &state, int qubit, double theta);
/// RZ(theta) = diag(exp(-i theta / 2), exp(+i theta / 2)).
void apply_rz(StateVector &state, int qubit, double theta);
void apply_cx(StateVector &state, int control, int target);

StateVector run_qaoa(const IsingInstance &instance, const QaoaAngles &angles,
                     int cap = kDefaultStatevectorCap);
StateVector run_qaoa(const CostTable &table, const QaoaAngles &angles);

/// sum_z |psi_z|^2 C(z).
double expectation(const StateVector &state, const CostTable &table);

/// `shots` i.i.d. draws from |psi_z|^2.
SampleSet sample(const StateVector &state, const IsingInstance &instance, std::uint64_t shots,
                 std::uint64_t seed);

}  // namespace hhqaoa

#endif
