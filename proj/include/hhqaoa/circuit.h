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

#ifndef HHQAOA_CIRCUIT_H
#define HHQAOA_CIRCUIT_H

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hhqaoa/angles.h"
#include "hhqaoa/graph.h"
#include "hhqaoa/instance.h"
#include "hhqaoa/statevector.h"

namespace hhqaoa {

/// color[k] in {0, 1, 2} for graph.edges()[k].
struct EdgeColoring {
    std::vector<int> color;
    int num_colors = 0;
};

/// Greedy BFS edge coloring: nodes are visited breadth-first from the lowest
/// unvisited id, each edge takes the smallest color free at both endpoints.
/// When no common color is free, an alternating a/b path is flipped first
/// (always possible in a bipartite graph of max degree 3).
EdgeColoring three_edge_coloring(const HeavyHexGraph &graph);

bool is_proper_coloring(const HeavyHexGraph &graph, const EdgeColoring &coloring);

enum class GateKind { kH, kCX, kRZ, kRX, kMeasureAll };

struct Gate {
    GateKind kind = GateKind::kH;
    /// Target for 1q gates, control for CX.
    int q0 = -1;
    /// Target for CX.
    int q1 = -1;
    double angle = 0.0;

    bool operator==(const Gate &) const = default;
};

struct QaoaCircuit {
    int num_qubits = 0;
    std::vector<Gate> gates;
    /// Index into `gates` of the first gate of each round.
    std::vector<std::size_t> round_boundaries;

    bool operator==(const QaoaCircuit &) const = default;
};

/// Heavy-hex QAOA circuit. Each round runs the CNOT layers of color classes
/// 0,1,2,0,1,2 with control on the V3 endpoint and target on the V2 endpoint.
/// A V2 target with neighbors in classes a < b therefore holds z_l z_first,
/// then z_l z_n1 z_n2, then z_l z_second, then z_l again; the quadratic and
/// cubic RZ(2 gamma d) rotations are placed at those points. Linear RZ and
/// the RX(2 beta) mixer follow. CNOT depth is 6 per round when a degree-3 node
/// exists, with exactly 2|E| CNOTs per round.
QaoaCircuit build_qaoa_circuit(const IsingInstance &instance, const QaoaAngles &angles);
QaoaCircuit build_qaoa_circuit(const IsingInstance &instance, const QaoaAngles &angles,
                               const EdgeColoring &coloring);

struct CircuitStats {
    std::size_t cnot_count = 0;
    std::size_t cnot_depth = 0;
    std::size_t total_gates = 0;
};

/// cnot_depth comes from as-soon-as-possible layering over qubit dependencies.
CircuitStats circuit_depth_stats(const QaoaCircuit &circuit);

/// OpenQASM 2 subset: h, cx, rz, rx, `barrier q;` before each round and
/// `measure q -> c;`. Angles are written with 17 significant digits.
std::string circuit_to_qasm(const QaoaCircuit &circuit);
QaoaCircuit parse_qasm(std::string_view text);
void export_circuit_text(const QaoaCircuit &circuit, const std::string &path);

/// Dense gate-by-gate simulation from |0...0> (the final measurement is
/// ignored). Intended for n <= ~20.
StateVector simulate_circuit(const QaoaCircuit &circuit);

}  // namespace hhqaoa

#endif
