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

#ifndef HHQAOA_ERRORS_H
#define HHQAOA_ERRORS_H

#include <stdexcept>

namespace hhqaoa {

/// Malformed input: bad files, inconsistent graphs, out-of-domain arguments.
class ValidationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A request exceeds a configured size cap (qubit count, grid size, ...).
class CapacityError : public std::length_error {
   public:
    using std::length_error::length_error;
};

/// Numerical failure inside a simulator (e.g. an SVD that did not converge).
class SimulationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace hhqaoa

#endif
