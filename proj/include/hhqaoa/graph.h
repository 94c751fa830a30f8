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

#ifndef HHQAOA_GRAPH_H
#define HHQAOA_GRAPH_H

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hhqaoa {

/// Undirected edge with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    auto operator<=>(const Edge &) const = default;
};

/// A node l of V2 with degree exactly 2, together with its neighbors n1 < n2.
/// Each such node hosts one cubic term z_l z_n1 z_n2.
struct CubicSite {
    int l = 0;
    int n1 = 0;
    int n2 = 0;

    auto operator<=>(const CubicSite &) const = default;
};

struct Bipartition {
    std::vector<int> v2;
    std::vector<int> v3;
    std::vector<CubicSite> w_set;
};

/// Derives (V2, V3, W) for a bipartite graph with maximum degree 3.
///
/// Each connected component is two-colored. A component containing a
/// degree-3 node is anchored so that its degree-3 nodes land in V3; if that is
/// impossible (two degree-3 nodes at odd distance) the graph is rejected.
/// Components without a degree-3 node put their lowest node id in V3, except
/// isolated nodes, which go to V2. The result is independent of edge order.
///
/// Throws ValidationError on odd cycles, degree > 3, self-loops, duplicate edges
/// or out-of-range endpoints.
Bipartition derive_structure(int num_nodes, std::span<const Edge> edges);

/// Validated heavy-hex coupling map. Immutable after construction.
class HeavyHexGraph {
   public:
    HeavyHexGraph() = default;

    /// Builds and validates a graph; the bipartition and W set are derived,
    /// never taken from the caller. Pairs may be given in either orientation.
    static HeavyHexGraph from_edges(std::string name, int num_nodes,
                                    std::span<const std::pair<int, int>> edges);

    const std::string &name() const { return name_; }
    int num_nodes() const { return num_nodes_; }
    /// Sorted lexicographically.
    const std::vector<Edge> &edges() const { return edges_; }
    const std::vector<int> &v2() const { return part_.v2; }
    const std::vector<int> &v3() const { return part_.v3; }
    /// Sorted by ascending l.
    const std::vector<CubicSite> &w_set() const { return part_.w_set; }
    /// Ascending neighbor ids.
    const std::vector<int> &neighbors(int node) const { return adjacency_.at(node); }
    int degree(int node) const { return static_cast<int>(adjacency_.at(node).size()); }
    bool in_v2(int node) const { return side_.at(node) == 2; }

    /// Index of edge {a, b} in edges(), or -1.
    int edge_index(int a, int b) const;

   private:
    std::string name_;
    int num_nodes_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<int> side_;
    Bipartition part_;
};

/// Names accepted by load_coupling_map without touching the filesystem.
std::vector<std::string> builtin_map_names();

/// Loads a built-in map (guadalupe-16, falcon-27, eagle-127) or a coupling-map
/// JSON file of the form {"name": ..., "n": ..., "edges": [[i, j], ...]}.
HeavyHexGraph load_coupling_map(std::string_view source);

HeavyHexGraph parse_coupling_map_json(std::string_view text);
std::string coupling_map_to_json(const HeavyHexGraph &graph);

}  // namespace hhqaoa

#endif
