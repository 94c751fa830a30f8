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

#include "hhqaoa/circuit.h"

#include <algorithm>
#include <array>
#include <queue>
#include <stdexcept>

#include "hhqaoa/errors.h"

namespace hhqaoa {

namespace {

constexpr int kColors = 3;

class ColoringState {
   public:
    explicit ColoringState(const HeavyHexGraph &graph)
        : graph_(graph), color_(graph.edges().size(), -1), at_(graph.num_nodes()) {
        for (auto &slots : at_) {
            slots.fill(-1);
        }
    }

    bool colored(int e) const { return color_[e] >= 0; }

    void color_edge(int e) {
        const Edge &edge = graph_.edges()[e];
        for (int c = 0; c < kColors; ++c) {
            if (at_[edge.u][c] < 0 && at_[edge.v][c] < 0) {
                set(e, c);
                return;
            }
        }
        int a = first_free(edge.u);
        int b = first_free(edge.v);
        if (a < 0 || b < 0) {
            throw SimulationError("edge coloring failed: endpoint has no free color");
        }
        // a is taken at v; flip the a/b path starting at v so that a frees up.
        flip_path(edge.v, a, b);
        if (at_[edge.v][a] >= 0 || at_[edge.u][a] >= 0) {
            throw SimulationError("edge coloring failed: alternating path closed on itself");
        }
        set(e, a);
    }

    EdgeColoring result() const {
        EdgeColoring out;
        out.color = color_;
        for (int c : color_) {
            out.num_colors = std::max(out.num_colors, c + 1);
        }
        return out;
    }

   private:
    int first_free(int node) const {
        for (int c = 0; c < kColors; ++c) {
            if (at_[node][c] < 0) {
                return c;
            }
        }
        return -1;
    }

    void set(int e, int c) {
        const Edge &edge = graph_.edges()[e];
        color_[e] = c;
        at_[edge.u][c] = e;
        at_[edge.v][c] = e;
    }

    void flip_path(int start, int a, int b) {
        std::vector<int> path;
        int node = start;
        int want = a;
        while (at_[node][want] >= 0) {
            int e = at_[node][want];
            path.push_back(e);
            const Edge &edge = graph_.edges()[e];
            node = edge.u == node ? edge.v : edge.u;
            want = want == a ? b : a;
        }
        for (int e : path) {
            const Edge &edge = graph_.edges()[e];
            at_[edge.u][color_[e]] = -1;
            at_[edge.v][color_[e]] = -1;
        }
        for (int e : path) {
            set(e, color_[e] == a ? b : a);
        }
    }

    const HeavyHexGraph &graph_;
    std::vector<int> color_;
    std::vector<std::array<int, kColors>> at_;
};

}  // namespace

EdgeColoring three_edge_coloring(const HeavyHexGraph &graph) {
    ColoringState state(graph);
    std::vector<bool> visited(graph.num_nodes(), false);
    for (int start = 0; start < graph.num_nodes(); ++start) {
        if (visited[start]) {
            continue;
        }
        std::queue<int> frontier;
        frontier.push(start);
        visited[start] = true;
        while (!frontier.empty()) {
            int u = frontier.front();
            frontier.pop();
            for (int w : graph.neighbors(u)) {
                int e = graph.edge_index(u, w);
                if (!state.colored(e)) {
                    state.color_edge(e);
                }
                if (!visited[w]) {
                    visited[w] = true;
                    frontier.push(w);
                }
            }
        }
    }
    EdgeColoring coloring = state.result();
    if (!is_proper_coloring(graph, coloring)) {
        throw SimulationError("edge coloring is not proper");
    }
    return coloring;
}

bool is_proper_coloring(const HeavyHexGraph &graph, const EdgeColoring &coloring) {
    if (coloring.color.size() != graph.edges().size()) {
        return false;
    }
    for (int u = 0; u < graph.num_nodes(); ++u) {
        std::array<bool, kColors> used{};
        for (int w : graph.neighbors(u)) {
            int c = coloring.color[graph.edge_index(u, w)];
            if (c < 0 || c >= kColors || used[c]) {
                return false;
            }
            used[c] = true;
        }
    }
    return true;
}

QaoaCircuit build_qaoa_circuit(const IsingInstance &instance, const QaoaAngles &angles) {
    return build_qaoa_circuit(instance, angles, three_edge_coloring(instance.graph()));
}

QaoaCircuit build_qaoa_circuit(const IsingInstance &instance, const QaoaAngles &angles,
                               const EdgeColoring &coloring) {
    validate_angles(angles);
    if (angles.p() < 1) {
        throw ValidationError("circuits need p >= 1; use the statevector path for p = 0");
    }
    const HeavyHexGraph &graph = instance.graph();
    const int n = graph.num_nodes();
    if (!is_proper_coloring(graph, coloring)) {
        throw ValidationError("edge coloring is not proper for this graph");
    }

    std::array<std::vector<int>, kColors> classes;
    for (int e = 0; e < static_cast<int>(graph.edges().size()); ++e) {
        classes[coloring.color[e]].push_back(e);
    }
    std::vector<int> cubic_index(n, -1);
    for (int k = 0; k < static_cast<int>(graph.w_set().size()); ++k) {
        cubic_index[graph.w_set()[k].l] = k;
    }

    QaoaCircuit circuit;
    circuit.num_qubits = n;
    for (int q = 0; q < n; ++q) {
        circuit.gates.push_back({GateKind::kH, q});
    }

    for (int round = 0; round < angles.p(); ++round) {
        const double gamma = angles.gamma[round];
        circuit.round_boundaries.push_back(circuit.gates.size());

        // held[l] is the set of neighbors whose parity the V2 qubit l carries.
        std::vector<std::vector<int>> held(n);
        std::vector<bool> edge_done(graph.edges().size(), false);
        std::vector<bool> cubic_done(graph.w_set().size(), false);

        for (int layer = 0; layer < 2 * kColors; ++layer) {
            std::vector<int> touched;
            for (int e : classes[layer % kColors]) {
                const Edge &edge = graph.edges()[e];
                int target = graph.in_v2(edge.u) ? edge.u : edge.v;
                int control = target == edge.u ? edge.v : edge.u;
                circuit.gates.push_back({GateKind::kCX, control, target});
                auto &h = held[target];
                auto it = std::find(h.begin(), h.end(), control);
                if (it == h.end()) {
                    h.push_back(control);
                } else {
                    h.erase(it);
                }
                touched.push_back(target);
            }
            for (int l : touched) {
                const auto &h = held[l];
                if (h.size() == 1) {
                    int e = graph.edge_index(l, h[0]);
                    if (!edge_done[e]) {
                        circuit.gates.push_back(
                            {GateKind::kRZ, l, -1, 2.0 * gamma * instance.quadratic()[e]});
                        edge_done[e] = true;
                    }
                } else if (h.size() == 2 && cubic_index[l] >= 0 && !cubic_done[cubic_index[l]]) {
                    int k = cubic_index[l];
                    circuit.gates.push_back(
                        {GateKind::kRZ, l, -1, 2.0 * gamma * instance.cubic()[k]});
                    cubic_done[k] = true;
                }
            }
        }
        if (std::find(edge_done.begin(), edge_done.end(), false) != edge_done.end() ||
            std::find(cubic_done.begin(), cubic_done.end(), false) != cubic_done.end()) {
            throw std::logic_error("phase separator left a term unapplied");
        }
        for (int q = 0; q < n; ++q) {
            circuit.gates.push_back({GateKind::kRZ, q, -1, 2.0 * gamma * instance.linear()[q]});
        }
        for (int q = 0; q < n; ++q) {
            circuit.gates.push_back({GateKind::kRX, q, -1, 2.0 * angles.beta[round]});
        }
    }
    circuit.gates.push_back({GateKind::kMeasureAll});
    return circuit;
}

CircuitStats circuit_depth_stats(const QaoaCircuit &circuit) {
    CircuitStats stats;
    stats.total_gates = circuit.gates.size();
    std::vector<std::size_t> level(circuit.num_qubits, 0);
    for (const Gate &g : circuit.gates) {
        if (g.kind != GateKind::kCX) {
            continue;
        }
        ++stats.cnot_count;
        std::size_t l = std::max(level[g.q0], level[g.q1]) + 1;
        level[g.q0] = level[g.q1] = l;
        stats.cnot_depth = std::max(stats.cnot_depth, l);
    }
    return stats;
}

StateVector simulate_circuit(const QaoaCircuit &circuit) {
    StateVector state = StateVector::basis_state(circuit.num_qubits, 0);
    for (const Gate &g : circuit.gates) {
        switch (g.kind) {
            case GateKind::kH:
                apply_h(state, g.q0);
                break;
            case GateKind::kCX:
                apply_cx(state, g.q0, g.q1);
                break;
            case GateKind::kRZ:
                apply_rz(state, g.q0, g.angle);
                break;
            case GateKind::kRX:
                apply_rx(state, g.q0, g.angle);
                break;
            case GateKind::kMeasureAll:
                break;
        }
    }
    return state;
}

}  // namespace hhqaoa
