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

#ifndef HHQAOA_ANGLES_H
#define HHQAOA_ANGLES_H

#include <string>
#include <string_view>
#include <vector>

namespace hhqaoa {

/// QAOA angles in radians. Round k applies exp(-i gamma[k] H_C) and then
/// exp(-i beta[k] H_M). p = 0 (both empty) denotes the bare |+>^n state.
struct QaoaAngles {
    std::vector<double> beta;
    std::vector<double> gamma;

    int p() const { return static_cast<int>(beta.size()); }
    bool operator==(const QaoaAngles &) const = default;
};

/// Throws ValidationError on length mismatch or non-finite entries.
void validate_angles(const QaoaAngles &angles);

/// Fixed angles trained once on a single 16-qubit instance, p = 1..5. These
/// are the defaults for every parameter-transfer run.
const QaoaAngles &transfer_angles(int p);
constexpr int kMaxTransferP = 5;

/// {"p": ..., "beta": [...], "gamma": [...]}
std::string angles_to_json(const QaoaAngles &angles);
QaoaAngles angles_from_json(std::string_view text);

}  // namespace hhqaoa

#endif
