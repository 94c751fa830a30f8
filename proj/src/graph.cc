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

#include "hhqaoa/graph.h"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>

#include "hhqaoa/errors.h"
#include "json.hpp"

namespace hhqaoa {

namespace {

std::vector<std::vector<int>> build_adjacency(int num_nodes, std::span<const Edge> edges) {
    std::vector<std::vector<int>> adj(num_nodes);
    for (const Edge &e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto &row : adj) {
        std::sort(row.begin(), row.end());
    }
    return adj;
}

void validate_edges(int num_nodes, std::span<const Edge> edges) {
    if (num_nodes < 0) {
        throw ValidationError("negative node count");
    }
    std::vector<Edge> sorted(edges.begin(), edges.end());
    for (const Edge &e : sorted) {
        if (e.u == e.v) {
            throw ValidationError("self-loop on node " + std::to_string(e.u));
        }
        if (e.u < 0 || e.v < 0 || e.u >= num_nodes || e.v >= num_nodes) {
            throw ValidationError("edge endpoint out of range: " + std::to_string(e.u) + "-" +
                                  std::to_string(e.v));
        }
        if (e.u > e.v) {
            throw ValidationError("edge endpoints must be ordered u < v");
        }
    }
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
        throw ValidationError("duplicate edge " + std::to_string(dup->u) + "-" +
                              std::to_string(dup->v));
    }
}

// side[v] = 2 or 3.
std::vector<int> assign_sides(int num_nodes, const std::vector<std::vector<int>> &adj) {
    std::vector<int> side(num_nodes, 0);
    std::vector<int> parity(num_nodes, -1);
    for (int start = 0; start < num_nodes; ++start) {
        if (parity[start] != -1) {
            continue;
        }
        std::vector<int> component;
        std::queue<int> frontier;
        parity[start] = 0;
        frontier.push(start);
        while (!frontier.empty()) {
            int u = frontier.front();
            frontier.pop();
            component.push_back(u);
            for (int w : adj[u]) {
                if (parity[w] == -1) {
                    parity[w] = 1 - parity[u];
                    frontier.push(w);
                } else if (parity[w] == parity[u]) {
                    throw ValidationError("graph is not bipartite (odd cycle through node " +
                                          std::to_string(w) + ")");
                }
            }
        }
        std::sort(component.begin(), component.end());

        int anchor = -1;
        for (int u : component) {
            if (adj[u].size() == 3) {
                anchor = u;
                break;
            }
        }
        int v3_parity;
        if (anchor >= 0) {
            v3_parity = parity[anchor];
            for (int u : component) {
                if (adj[u].size() == 3 && parity[u] != v3_parity) {
                    throw ValidationError("degree-3 nodes " + std::to_string(anchor) + " and " +
                                          std::to_string(u) +
                                          " fall on opposite sides of the bipartition");
                }
            }
        } else if (component.size() == 1) {
            side[start] = 2;
            continue;
        } else {
            v3_parity = parity[component.front()];
        }
        for (int u : component) {
            side[u] = parity[u] == v3_parity ? 3 : 2;
        }
    }
    return side;
}

}  // namespace

Bipartition derive_structure(int num_nodes, std::span<const Edge> edges) {
    validate_edges(num_nodes, edges);
    auto adj = build_adjacency(num_nodes, edges);
    for (int u = 0; u < num_nodes; ++u) {
        if (adj[u].size() > 3) {
            throw ValidationError("node " + std::to_string(u) + " has degree " +
                                  std::to_string(adj[u].size()) + " > 3");
        }
    }
    auto side = assign_sides(num_nodes, adj);

    Bipartition part;
    for (int u = 0; u < num_nodes; ++u) {
        if (side[u] == 2) {
            part.v2.push_back(u);
            if (adj[u].size() == 2) {
                part.w_set.push_back({u, adj[u][0], adj[u][1]});
            }
        } else {
            part.v3.push_back(u);
        }
    }
    return part;
}

HeavyHexGraph HeavyHexGraph::from_edges(std::string name, int num_nodes,
                                        std::span<const std::pair<int, int>> edges) {
    HeavyHexGraph g;
    g.name_ = std::move(name);
    g.num_nodes_ = num_nodes;
    g.edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        g.edges_.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.part_ = derive_structure(num_nodes, g.edges_);
    g.adjacency_ = build_adjacency(num_nodes, g.edges_);
    g.side_.assign(num_nodes, 3);
    for (int u : g.part_.v2) {
        g.side_[u] = 2;
    }
    return g;
}

int HeavyHexGraph::edge_index(int a, int b) const {
    Edge key{std::min(a, b), std::max(a, b)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) {
        return -1;
    }
    return static_cast<int>(it - edges_.begin());
}

HeavyHexGraph parse_coupling_map_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ValidationError(std::string("coupling map is not valid JSON: ") + e.what());
    }
    try {
        std::string name = doc.value("name", std::string("custom"));
        int n = doc.at("n").get<int>();
        std::vector<std::pair<int, int>> edges;
        for (const auto &pair : doc.at("edges")) {
            if (!pair.is_array() || pair.size() != 2) {
                throw ValidationError("coupling map edges must be [i, j] pairs");
            }
            edges.emplace_back(pair[0].get<int>(), pair[1].get<int>());
        }
        return HeavyHexGraph::from_edges(std::move(name), n, edges);
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError(std::string("malformed coupling map: ") + e.what());
    }
}

std::string coupling_map_to_json(const HeavyHexGraph &graph) {
    nlohmann::ordered_json doc;
    doc["name"] = graph.name();
    doc["n"] = graph.num_nodes();
    auto edges = nlohmann::ordered_json::array();
    for (const Edge &e : graph.edges()) {
        edges.push_back({e.u, e.v});
    }
    doc["edges"] = std::move(edges);
    return doc.dump() + "\n";
}

HeavyHexGraph builtin_coupling_map(std::string_view name);  // coupling_maps.cc

HeavyHexGraph load_coupling_map(std::string_view source) {
    for (const auto &name : builtin_map_names()) {
        if (name == source) {
            return builtin_coupling_map(source);
        }
    }
    std::ifstream in{std::string(source)};
    if (!in) {
        throw ValidationError("unknown map name and unreadable file: " + std::string(source));
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_coupling_map_json(buffer.str());
}

}  // namespace hhqaoa
