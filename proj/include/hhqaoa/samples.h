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

#ifndef HHQAOA_SAMPLES_H
#define HHQAOA_SAMPLES_H

#include <cstdint>
#include <map>
#include <string>

#include "hhqaoa/instance.h"

namespace hhqaoa {

/// Measured bitstrings with multiplicities and energy statistics. Bitstring
/// character q is qubit q ('1' means z_q = -1).
struct SampleSet {
    int num_qubits = 0;
    std::uint64_t shots = 0;
    std::map<std::string, std::uint64_t> counts;
    std::map<int, std::uint64_t> energy_histogram;
    double mean_energy = 0.0;
    /// Unbiased sample variance of the per-shot energy.
    double energy_variance = 0.0;
    int min_energy = 0;

    double mean_approximation_ratio(const EnergyBounds &bounds) const {
        return approximation_ratio(mean_energy, bounds);
    }
    double best_approximation_ratio(const EnergyBounds &bounds) const {
        return approximation_ratio(min_energy, bounds);
    }
};

/// Fills histogram and statistics from raw counts.
SampleSet make_sample_set(const IsingInstance &instance,
                          std::map<std::string, std::uint64_t> counts);

}  // namespace hhqaoa

#endif
