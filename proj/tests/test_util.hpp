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

#include <random>
#include <set>
#include <string>
#include <vector>

#include "graphbell/graph.hpp"
#include "graphbell/pauli.hpp"

namespace testing_util {

inline graphbell::PauliString random_pauli(std::mt19937_64 &rng, std::size_t n, bool hermitian = false) {
    std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::uint8_t phase = static_cast<std::uint8_t>(rng() % 4);
    if (hermitian) phase &= 2;
    return graphbell::PauliString(n, rng() & mask, rng() & mask, phase);
}

inline graphbell::StateVector random_state(std::mt19937_64 &rng, std::size_t n) {
    std::normal_distribution<double> g;
    std::vector<graphbell::cd> amps(std::size_t{1} << n);
    for (auto &a : amps) a = {g(rng), g(rng)};
    return graphbell::StateVector(n, amps, true);
}

/// Ginibre-style mixed state A A^dagger / tr.
inline graphbell::DensityMatrix random_density(std::mt19937_64 &rng, std::size_t n) {
    std::normal_distribution<double> g;
    const Eigen::Index d = Eigen::Index{1} << n;
    Eigen::MatrixXcd a(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) a(r, c) = {g(rng), g(rng)};
    }
    Eigen::MatrixXcd rho = a * a.adjoint();
    rho /= rho.trace().real();
    rho = (rho + rho.adjoint()) / 2.0;
    return graphbell::DensityMatrix(n, rho);
}

inline graphbell::Graph random_graph(std::mt19937_64 &rng, std::size_t n, double density = 0.5) {
    graphbell::Graph g(n);
    std::bernoulli_distribution coin(density);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (coin(rng)) g.add_edge(u, v);
        }
    }
    return g;
}

/// Signed words parsed from text such as "+XZII".
inline std::set<std::string> word_set(const std::vector<std::string> &words) {
    return {words.begin(), words.end()};
}

}  // namespace testing_util
