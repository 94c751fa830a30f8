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

#include "hhqaoa/angles.h"

#include <cmath>

#include "hhqaoa/errors.h"
#include "json.hpp"

namespace hhqaoa {

void validate_angles(const QaoaAngles &angles) {
    if (angles.beta.size() != angles.gamma.size()) {
        throw ValidationError("beta and gamma must have the same length");
    }
    for (size_t k = 0; k < angles.beta.size(); ++k) {
        if (!std::isfinite(angles.beta[k]) || !std::isfinite(angles.gamma[k])) {
            throw ValidationError("angles must be finite");
        }
    }
}

const QaoaAngles &transfer_angles(int p) {
    static const QaoaAngles kTable[kMaxTransferP] = {
        {{0.38919}, {6.04302}},
        {{0.48912, 0.27367}, {6.09758, 5.95396}},
        {{0.50502, 0.35713, 0.19264}, {6.14054, 6.01729, 5.94123}},
        {{0.54321, 0.41806, 0.28615, 0.16041}, {6.16242, 6.05959, 5.98417, 5.9299}},
        {{0.53822, 0.44776, 0.32923, 0.23056, 0.12587},
         {6.16555, 6.08373, 6.01445, 5.9616, 5.93736}},
    };
    if (p < 1 || p > kMaxTransferP) {
        throw ValidationError("built-in transfer angles exist for p = 1..5, not " +
                              std::to_string(p));
    }
    return kTable[p - 1];
}

std::string angles_to_json(const QaoaAngles &angles) {
    nlohmann::ordered_json doc;
    doc["p"] = angles.p();
    doc["beta"] = angles.beta;
    doc["gamma"] = angles.gamma;
    return doc.dump() + "\n";
}

QaoaAngles angles_from_json(std::string_view text) {
    try {
        auto doc = nlohmann::json::parse(text);
        QaoaAngles angles;
        angles.beta = doc.at("beta").get<std::vector<double>>();
        angles.gamma = doc.at("gamma").get<std::vector<double>>();
        if (doc.contains("p") && doc["p"].get<int>() != angles.p()) {
            throw ValidationError("angle file p does not match vector lengths");
        }
        validate_angles(angles);
        return angles;
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError(std::string("malformed angle file: ") + e.what());
    }
}

}  // namespace hhqaoa
