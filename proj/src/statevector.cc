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

#include "hhqaoa/statevector.h"

#include <algorithm>
#include <cmath>

#include "hhqaoa/errors.h"
#include "hhqaoa/rng.h"

namespace hhqaoa {

namespace {

void check_qubit(const StateVector &state, int q) {
    if (q < 0 || q >= state.num_qubits()) {
        throw ValidationError("qubit index " + std::to_string(q) + " out of range");
    }
}

// Applies the 2x2 matrix [[a, b], [c, d]] to qubit q.
void apply_1q(StateVector &state, int q, Complex a, Complex b, Complex c, Complex d) {
    check_qubit(state, q);
    auto &amp = state.amplitudes();
    const std::size_t stride = std::size_t{1} << q;
    const std::size_t size = amp.size();
    for (std::size_t base = 0; base < size; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            Complex x0 = amp[i];
            Complex x1 = amp[i + stride];
            amp[i] = a * x0 + b * x1;
            amp[i + stride] = c * x0 + d * x1;
        }
    }
}

}  // namespace

StateVector::StateVector(int num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    if (num_qubits < 0 || num_qubits > 40 ||
        amplitudes_.size() != (std::size_t{1} << num_qubits)) {
        throw ValidationError("amplitude count does not match 2^n");
    }
}

StateVector StateVector::plus_state(int num_qubits) {
    if (num_qubits < 0 || num_qubits > 40) {
        throw CapacityError("qubit count out of range for a dense state");
    }
    std::size_t size = std::size_t{1} << num_qubits;
    return StateVector(num_qubits,
                       std::vector<Complex>(size, Complex(1.0 / std::sqrt(double(size)), 0.0)));
}

StateVector StateVector::basis_state(int num_qubits, std::uint64_t index) {
    std::size_t size = std::size_t{1} << num_qubits;
    if (index >= size) {
        throw ValidationError("basis index out of range");
    }
    std::vector<Complex> amp(size, Complex(0.0, 0.0));
    amp[index] = 1.0;
    return StateVector(num_qubits, std::move(amp));
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const Complex &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amplitudes_.size());
    std::transform(amplitudes_.begin(), amplitudes_.end(), p.begin(),
                   [](const Complex &a) { return std::norm(a); });
    return p;
}

double fidelity(const StateVector &a, const StateVector &b) {
    if (a.size() != b.size()) {
        throw ValidationError("fidelity of states with different dimensions");
    }
    Complex overlap = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        overlap += std::conj(a[i]) * b[i];
    }
    return std::norm(overlap);
}

CostTable build_cost_table(const IsingInstance &instance, int cap) {
    int n = instance.num_qubits();
    if (n > cap) {
        throw CapacityError("cost table for " + std::to_string(n) + " qubits exceeds cap " +
                            std::to_string(cap));
    }
    CostTable table;
    table.num_qubits = n;
    const std::uint64_t size = std::uint64_t{1} << n;
    table.costs.resize(size);
    table.min_cost = instance.num_terms();
    table.max_cost = -instance.num_terms();
    for_each_gray_cost(instance, 0, size, [&](std::uint64_t index, int cost) {
        table.costs[index] = cost;
        table.min_cost = std::min(table.min_cost, cost);
        table.max_cost = std::max(table.max_cost, cost);
    });
    return table;
}

void apply_phase(StateVector &state, const CostTable &table, double gamma) {
    if (table.costs.size() != state.size()) {
        throw ValidationError("cost table and state dimensions differ");
    }
    const int lo = table.min_cost;
    std::vector<Complex> phases(table.max_cost - lo + 1);
    for (std::size_t k = 0; k < phases.size(); ++k) {
        phases[k] = std::polar(1.0, -gamma * static_cast<double>(lo + static_cast<int>(k)));
    }
    auto &amp = state.amplitudes();
    for (std::size_t i = 0; i < amp.size(); ++i) {
        amp[i] *= phases[table.costs[i] - lo];
    }
}

void apply_mixer(StateVector &state, double beta) {
    const double c = std::cos(beta);
    const Complex s(0.0, -std::sin(beta));
    for (int q = 0; q < state.num_qubits(); ++q) {
        apply_1q(state, q, c, s, s, c);
    }
}

void apply_h(StateVector &state, int qubit) {
    const double r = 1.0 / std::sqrt(2.0);
    apply_1q(state, qubit, r, r, r, -r);
}

void apply_rx(StateVector &state, int qubit, double theta) {
    const double c = std::cos(theta / 2);
    const Complex s(0.0, -std::sin(theta / 2));
    apply_1q(state, qubit, c, s, s, c);
}

void apply_rz(StateVector &state, int qubit, double theta) {
    apply_1q(state, qubit, std::polar(1.0, -theta / 2), 0.0, 0.0, std::polar(1.0, theta / 2));
}

void apply_cx(StateVector &state, int control, int target) {
    check_qubit(state, control);
    check_qubit(state, target);
    if (control == target) {
        throw ValidationError("CNOT control and target coincide");
    }
    auto &amp = state.amplitudes();
    const std::size_t cmask = std::size_t{1} << control;
    const std::size_t tmask = std::size_t{1} << target;
    for (std::size_t i = 0; i < amp.size(); ++i) {
        if ((i & cmask) && !(i & tmask)) {
            std::swap(amp[i], amp[i | tmask]);
        }
    }
}

StateVector run_qaoa(const CostTable &table, const QaoaAngles &angles) {
    validate_angles(angles);
    StateVector state = StateVector::plus_state(table.num_qubits);
    for (int k = 0; k < angles.p(); ++k) {
        apply_phase(state, table, angles.gamma[k]);
        apply_mixer(state, angles.beta[k]);
    }
    return state;
}

StateVector run_qaoa(const IsingInstance &instance, const QaoaAngles &angles, int cap) {
    return run_qaoa(build_cost_table(instance, cap), angles);
}

double expectation(const StateVector &state, const CostTable &table) {
    if (table.costs.size() != state.size()) {
        throw ValidationError("cost table and state dimensions differ");
    }
    double total = 0.0;
    const auto &amp = state.amplitudes();
    for (std::size_t i = 0; i < amp.size(); ++i) {
        total += std::norm(amp[i]) * table.costs[i];
    }
    return total;
}

SampleSet sample(const StateVector &state, const IsingInstance &instance, std::uint64_t shots,
                 std::uint64_t seed) {
    if (shots == 0) {
        throw ValidationError("shots must be >= 1");
    }
    if (state.num_qubits() != instance.num_qubits()) {
        throw ValidationError("state and instance qubit counts differ");
    }
    Xoshiro256StarStar rng(seed);
    const double total = state.norm_squared();
    std::vector<double> draws(shots);
    for (double &u : draws) {
        u = rng.uniform01() * total;
    }
    std::sort(draws.begin(), draws.end());

    // One cumulative sweep assigns every sorted draw to its basis state.
    std::map<std::string, std::uint64_t> counts;
    const auto &amp = state.amplitudes();
    double cumulative = 0.0;
    std::size_t next = 0;
    std::size_t last_nonzero = 0;
    for (std::size_t i = 0; i < amp.size() && next < draws.size(); ++i) {
        double p = std::norm(amp[i]);
        if (p == 0.0) {
            continue;
        }
        last_nonzero = i;
        cumulative += p;
        std::uint64_t hits = 0;
        while (next < draws.size() && draws[next] < cumulative) {
            ++hits;
            ++next;
        }
        if (hits > 0) {
            counts[bits_from_spins(spins_from_index(i, state.num_qubits()))] += hits;
        }
    }
    if (next < draws.size()) {
        // Rounding left a sliver above the final cumulative sum.
        counts[bits_from_spins(spins_from_index(last_nonzero, state.num_qubits()))] +=
            draws.size() - next;
    }
    return make_sample_set(instance, std::move(counts));
}

}  // namespace hhqaoa
