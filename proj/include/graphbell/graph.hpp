// Copyright 2026 The graphbell Authors
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace graphbell {

using Edge = std::pair<std::size_t, std::size_t>;

inline constexpr std::size_t kMaxGraphVertices = 64;
inline constexpr std::size_t kMaxOrbitVertices = 8;

/// Simple undirected graph on vertices 0..n-1 stored as adjacency bitmasks.
class Graph {
   public:
    Graph() = default;
    explicit Graph(std::size_t n);
    Graph(std::size_t n, const std::vector<Edge> &edges);

    std::size_t num_vertices() const {
        return adj_.size();
    }
    std::size_t num_edges() const;
    bool has_edge(std::size_t u, std::size_t v) const;
    void add_edge(std::size_t u, std::size_t v);
    void toggle_edge(std::size_t u, std::size_t v);
    /// Neighborhood of v as a bitmask over vertices.
    std::uint64_t neighbors(std::size_t v) const;
    std::size_t degree(std::size_t v) const;
    /// Sorted list of (u, v) with u < v.
    std::vector<Edge> edges() const;
    bool is_complete() const;

    /// Upper-triangle adjacency bits; an exact key for n <= 11.
    std::uint64_t edge_key() const;

    /// Image under `perm`, where perm[v] is the new label of vertex v.
    Graph permuted(const std::vector<std::size_t> &perm) const;
    /// Subgraph induced by `vertices`, relabelled 0..k-1 in the given order.
    Graph induced(const std::vector<std::size_t> &vertices) const;

    friend bool operator==(const Graph &, const Graph &) = default;

   private:
    void check_vertex(std::size_t v) const;
    std::vector<std::uint64_t> adj_;
};

Graph linear_graph(std::size_t n);
Graph box4_graph();
/// Complete bipartite K_{2,k}: poles 0 and k+1, middles 1..k.
Graph ec_graph(std::size_t k);
Graph complete_graph(std::size_t n);
/// Star with center 0.
Graph star_graph(std::size_t n);
/// Complete graph on {0,1,2,3} plus vertex 4 attached to vertex 0.
Graph ec3_lc_graph();

/// Presets: linear, box4, ec, ghz_complete, ghz_star, ec3_lc, single_vertex.
Graph make_named_graph(std::string_view preset, std::optional<std::size_t> n = std::nullopt);

/// Short names used on the command line: lc4, bc4, ec1, ec3, ec3-lc, ec5,
/// ghzN, linearN, starN, ecK, single.
std::optional<Graph> graph_from_short_name(std::string_view name);

/// Toggles every edge inside the neighborhood of v.
Graph local_complement(const Graph &g, std::size_t v);

struct LcWitness {
    /// Vertices to complement, in order, starting from the first graph.
    std::vector<std::size_t> sequence;
    /// Relabelling applied after the sequence; identity when permutations
    /// were not searched.
    std::vector<std::size_t> permutation;
};

/// Graphs reachable by local complementation, in BFS order from `g`.
struct LcOrbit {
    std::vector<Graph> graphs;
    std::vector<std::ptrdiff_t> parent;
    std::vector<std::size_t> via;

    std::vector<std::size_t> path_to(std::size_t index) const;
};

/// Exhaustive orbit for n <= kMaxOrbitVertices.
LcOrbit lc_orbit(const Graph &g);

/// Vertex map perm with a.permuted(perm) == b, if one exists.
std::optional<std::vector<std::size_t>> find_isomorphism(const Graph &a, const Graph &b);

/// Searches the LC orbit of g1 for g2, optionally up to relabelling.
std::optional<LcWitness> lc_equivalent(const Graph &g1, const Graph &g2, bool search_permutations = false);

bool verify_lc_witness(const Graph &g1, const Graph &g2, const LcWitness &witness);

/// {"n": <int>, "edges": [[u,v], ...]}
Graph parse_graph_json(std::string_view text);
Graph load_graph_json(const std::string &path);
std::string graph_to_json(const Graph &g);

}  // namespace graphbell
