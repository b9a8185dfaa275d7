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

#include "graphbell/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "graphbell/errors.hpp"
#include "json.hpp"

namespace graphbell {

Graph::Graph(std::size_t n) {
    if (n < 1) throw ContractError("graph needs at least one vertex");
    if (n > kMaxGraphVertices) {
        throw CapacityError("graphs are limited to " + std::to_string(kMaxGraphVertices) + " vertices");
    }
    adj_.assign(n, 0);
}

Graph::Graph(std::size_t n, const std::vector<Edge> &edges) : Graph(n) {
    for (auto [u, v] : edges) {
        if (has_edge(u, v)) {
            throw ContractError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        }
        add_edge(u, v);
    }
}

void Graph::check_vertex(std::size_t v) const {
    if (v >= adj_.size()) {
        throw ContractError("vertex " + std::to_string(v) + " out of range for " + std::to_string(adj_.size()) +
                            "-vertex graph");
    }
}

std::size_t Graph::num_edges() const {
    std::size_t twice = 0;
    for (auto row : adj_) twice += static_cast<std::size_t>(std::popcount(row));
    return twice / 2;
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw ContractError("self-loop at vertex " + std::to_string(u));
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
}

void Graph::toggle_edge(std::size_t u, std::size_t v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw ContractError("self-loop at vertex " + std::to_string(u));
    adj_[u] ^= std::uint64_t{1} << v;
    adj_[v] ^= std::uint64_t{1} << u;
}

std::uint64_t Graph::neighbors(std::size_t v) const {
    check_vertex(v);
    return adj_[v];
}

std::size_t Graph::degree(std::size_t v) const {
    return static_cast<std::size_t>(std::popcount(neighbors(v)));
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
        for (std::size_t v = u + 1; v < adj_.size(); ++v) {
            if ((adj_[u] >> v) & 1) out.emplace_back(u, v);
        }
    }
    return out;
}

bool Graph::is_complete() const {
    std::size_t n = adj_.size();
    return num_edges() == n * (n - 1) / 2;
}

std::uint64_t Graph::edge_key() const {
    std::size_t n = adj_.size();
    if (n * (n - 1) / 2 > 64) throw CapacityError("edge key needs n <= 11");
    std::uint64_t key = 0;
    std::size_t bit = 0;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v, ++bit) {
            if ((adj_[u] >> v) & 1) key |= std::uint64_t{1} << bit;
        }
    }
    return key;
}

Graph Graph::permuted(const std::vector<std::size_t> &perm) const {
    std::size_t n = adj_.size();
    if (perm.size() != n) throw DimensionError("permutation size mismatch");
    std::vector<bool> seen(n, false);
    for (auto p : perm) {
        if (p >= n || seen[p]) throw ContractError("not a permutation");
        seen[p] = true;
    }
    Graph out(n);
    for (auto [u, v] : edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

Graph Graph::induced(const std::vector<std::size_t> &vertices) const {
    Graph out(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (has_edge(vertices[i], vertices[j])) out.add_edge(i, j);
        }
    }
    return out;
}

Graph linear_graph(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph box4_graph() {
    return Graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

Graph ec_graph(std::size_t k) {
    if (k < 1) throw ContractError("ec(k) needs k >= 1");
    Graph g(k + 2);
    for (std::size_t m = 1; m <= k; ++m) {
        g.add_edge(0, m);
        g.add_edge(m, k + 1);
    }
    return g;
}

Graph complete_graph(std::size_t n) {
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    return g;
}

Graph star_graph(std::size_t n) {
    Graph g(n);
    for (std::size_t v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

Graph ec3_lc_graph() {
    Graph g(5);
    for (std::size_t u = 0; u < 4; ++u) {
        for (std::size_t v = u + 1; v < 4; ++v) g.add_edge(u, v);
    }
    g.add_edge(0, 4);
    return g;
}

Graph make_named_graph(std::string_view preset, std::optional<std::size_t> n) {
    auto need_n = [&](std::size_t min) {
        if (!n) throw ContractError("preset '" + std::string(preset) + "' needs a size");
        if (*n < min) throw ContractError("preset '" + std::string(preset) + "' size too small");
        return *n;
    };
    if (preset == "linear") return linear_graph(need_n(1));
    if (preset == "box4") return box4_graph();
    if (preset == "ec") return ec_graph(need_n(1));
    if (preset == "ghz_complete") return complete_graph(need_n(1));
    if (preset == "ghz_star") return star_graph(need_n(1));
    if (preset == "ec3_lc") return ec3_lc_graph();
    if (preset == "single_vertex") return Graph(1);
    throw ValidationError("unknown graph preset '" + std::string(preset) + "'");
}

namespace {

std::optional<std::size_t> suffix_number(std::string_view name, std::string_view prefix) {
    if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) return std::nullopt;
    auto digits = name.substr(prefix.size());
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
    return value;
}

}  // namespace

std::optional<Graph> graph_from_short_name(std::string_view name) {
    if (name == "lc4") return linear_graph(4);
    if (name == "bc4") return box4_graph();
    if (name == "ec3-lc") return ec3_lc_graph();
    if (name == "single") return Graph(1);
    if (auto k = suffix_number(name, "ghz")) {
        if (*k < 2) throw ValidationError("ghzN needs N >= 2");
        return complete_graph(*k);
    }
    if (auto k = suffix_number(name, "ec")) return ec_graph(*k);
    if (auto k = suffix_number(name, "linear")) return linear_graph(*k);
    if (auto k = suffix_number(name, "star")) return star_graph(*k);
    return std::nullopt;
}

Graph local_complement(const Graph &g, std::size_t v) {
    auto nb = g.neighbors(v);
    Graph out = g;
    for (std::size_t a = 0; a < g.num_vertices(); ++a) {
        if (!((nb >> a) & 1)) continue;
        for (std::size_t b = a + 1; b < g.num_vertices(); ++b) {
            if ((nb >> b) & 1) out.toggle_edge(a, b);
        }
    }
    return out;
}

std::vector<std::size_t> LcOrbit::path_to(std::size_t index) const {
    std::vector<std::size_t> seq;
    for (auto i = static_cast<std::ptrdiff_t>(index); parent[static_cast<std::size_t>(i)] >= 0;
         i = parent[static_cast<std::size_t>(i)]) {
        seq.push_back(via[static_cast<std::size_t>(i)]);
    }
    std::reverse(seq.begin(), seq.end());
    return seq;
}

LcOrbit lc_orbit(const Graph &g) {
    if (g.num_vertices() > kMaxOrbitVertices) {
        throw CapacityError("LC orbit search is limited to " + std::to_string(kMaxOrbitVertices) + " vertices");
    }
    LcOrbit orbit;
    std::unordered_map<std::uint64_t, std::size_t> index;
    orbit.graphs.push_back(g);
    orbit.parent.push_back(-1);
    orbit.via.push_back(0);
    index.emplace(g.edge_key(), 0);
    for (std::size_t head = 0; head < orbit.graphs.size(); ++head) {
        for (std::size_t v = 0; v < g.num_vertices(); ++v) {
            Graph next = local_complement(orbit.graphs[head], v);
            auto [it, inserted] = index.emplace(next.edge_key(), orbit.graphs.size());
            if (!inserted) continue;
            orbit.graphs.push_back(std::move(next));
            orbit.parent.push_back(static_cast<std::ptrdiff_t>(head));
            orbit.via.push_back(v);
        }
    }
    return orbit;
}

std::optional<std::vector<std::size_t>> find_isomorphism(const Graph &a, const Graph &b) {
    std::size_t n = a.num_vertices();
    if (b.num_vertices() != n || a.num_edges() != b.num_edges()) return std::nullopt;
    {
        std::vector<std::size_t> da(n), db(n);
        for (std::size_t v = 0; v < n; ++v) {
            da[v] = a.degree(v);
            db[v] = b.degree(v);
        }
        std::sort(da.begin(), da.end());
        std::sort(db.begin(), db.end());
        if (da != db) return std::nullopt;
    }
    std::vector<std::size_t> perm(n);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> extend = [&](std::size_t v) -> bool {
        if (v == n) return true;
        for (std::size_t w = 0; w < n; ++w) {
            if (used[w] || a.degree(v) != b.degree(w)) continue;
            bool ok = true;
            for (std::size_t u = 0; u < v && ok; ++u) {
                ok = a.has_edge(u, v) == b.has_edge(perm[u], w);
            }
            if (!ok) continue;
            used[w] = true;
            perm[v] = w;
            if (extend(v + 1)) return true;
            used[w] = false;
        }
        return false;
    };
    if (!extend(0)) return std::nullopt;
    return perm;
}

std::optional<LcWitness> lc_equivalent(const Graph &g1, const Graph &g2, bool search_permutations) {
    if (g1.num_vertices() != g2.num_vertices()) {
        throw DimensionError("LC equivalence needs graphs of equal size");
    }
    std::size_t n = g1.num_vertices();
    std::vector<std::size_t> identity(n);
    for (std::size_t v = 0; v < n; ++v) identity[v] = v;
    if (g1 == g2) return LcWitness{{}, identity};

    LcOrbit orbit = lc_orbit(g1);
    for (std::size_t i = 0; i < orbit.graphs.size(); ++i) {
        if (orbit.graphs[i] == g2) return LcWitness{orbit.path_to(i), identity};
    }
    if (!search_permutations) return std::nullopt;
    for (std::size_t i = 0; i < orbit.graphs.size(); ++i) {
        if (auto perm = find_isomorphism(orbit.graphs[i], g2)) return LcWitness{orbit.path_to(i), *perm};
    }
    return std::nullopt;
}

bool verify_lc_witness(const Graph &g1, const Graph &g2, const LcWitness &witness) {
    if (g1.num_vertices() != g2.num_vertices()) return false;
    Graph h = g1;
    for (auto v : witness.sequence) {
        if (v >= h.num_vertices()) return false;
        h = local_complement(h, v);
    }
    if (witness.permutation.empty()) return h == g2;
    try {
        return h.permuted(witness.permutation) == g2;
    } catch (const Error &) {
        return false;
    }
}

Graph parse_graph_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("graph JSON: ") + e.what(), e.byte);
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
        throw ValidationError("graph JSON needs keys \"n\" and \"edges\"");
    }
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1) {
        throw ValidationError("graph JSON: \"n\" must be a positive integer");
    }
    auto n = j["n"].get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto &e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw ValidationError("graph JSON: each edge must be [u, v]");
        }
        auto u = e[0].get<long long>(), v = e[1].get<long long>();
        if (u < 0 || v < 0) throw ValidationError("graph JSON: negative vertex");
        edges.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    }
    try {
        return Graph(n, edges);
    } catch (const ContractError &e) {
        throw ValidationError(std::string("graph JSON: ") + e.what());
    }
}

Graph load_graph_json(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open graph file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_graph_json(ss.str());
}

std::string graph_to_json(const Graph &g) {
    nlohmann::json j;
    j["n"] = g.num_vertices();
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j.dump();
}

}  // namespace graphbell
