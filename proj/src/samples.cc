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

#include "hhqaoa/samples.h"

#include <limits>

#include "hhqaoa/errors.h"

namespace hhqaoa {

SampleSet make_sample_set(const IsingInstance &instance,
                          std::map<std::string, std::uint64_t> counts) {
    SampleSet set;
    set.num_qubits = instance.num_qubits();
    set.counts = std::move(counts);
    set.min_energy = std::numeric_limits<int>::max();
    for (const auto &[bits, count] : set.counts) {
        if (static_cast<int>(bits.size()) != set.num_qubits) {
            throw ValidationError("sample bitstring has the wrong length");
        }
        int e = evaluate_cost(instance, spins_from_bits(bits));
        set.energy_histogram[e] += count;
        set.shots += count;
    }
    if (set.shots == 0) {
        throw ValidationError("empty sample set");
    }
    double sum = 0.0;
    for (const auto &[e, count] : set.energy_histogram) {
        sum += static_cast<double>(e) * static_cast<double>(count);
    }
    set.mean_energy = sum / static_cast<double>(set.shots);
    double sq = 0.0;
    for (const auto &[e, count] : set.energy_histogram) {
        double d = e - set.mean_energy;
        sq += d * d * static_cast<double>(count);
    }
    set.energy_variance = set.shots > 1 ? sq / static_cast<double>(set.shots - 1) : 0.0;
    set.min_energy = set.energy_histogram.begin()->first;
    return set;
}

}  // namespace hhqaoa
