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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphbell/bell.hpp"
#include "graphbell/fraction.hpp"
#include "graphbell/graph.hpp"

namespace graphbell {

/// Largest number of free +-1 variables lhv_max will enumerate.
inline constexpr std::size_t kMaxLhvFreeVariables = 24;

/// Deterministic local hidden-variable model: one +-1 outcome for each of
/// X, Y, Z on every qubit. Bit j of a mask set means the outcome is -1.
struct LhvAssignment {
    std::size_t n = 0;
    std::uint64_t neg_x = 0;
    std::uint64_t neg_y = 0;
    std::uint64_t neg_z = 0;

    static LhvAssignment all_plus(std::size_t n) {
        return {n, 0, 0, 0};
    }

    /// letter in {'X','Y','Z'}
    int value(std::size_t qubit, char letter) const;
    /// sign(p) times the product of the outcomes of its non-identity letters.
    int evaluate(const PauliString &p) const;
    /// Per-qubit outcomes, e.g. "++- +-+" for X,Y,Z on qubits 0 and 1.
    std::string str() const;

    friend bool operator==(const LhvAssignment &, const LhvAssignment &) = default;
};

enum class LhvRestriction {
    none,
    /// Every Z outcome fixed to +1.
    z_plus_one,
};

enum class BoundKind { exact, upper_bound, analytic };

std::string to_string(BoundKind kind);

struct LhvBound {
    double value = 0;
    /// Exact value when it is rational.
    std::optional<Fraction> fraction;
    BoundKind kind = BoundKind::exact;
    std::optional<LhvAssignment> witness;
    std::string method;
};

double lhv_value(const SignedPauliSum &op, const LhvAssignment &a);

/// Number of +-1 outcomes lhv_max would enumerate for `op`.
std::size_t lhv_free_variables(const SignedPauliSum &op, LhvRestriction restriction = LhvRestriction::none);

/// Exact maximum of |lhv_value| over all assignments, by Gray-code
/// enumeration of the outcomes that actually occur in `op`. Coefficients must
/// be integer multiples of the smallest one. The witness is the
/// lexicographically least maximizer (qubit-major, X < Y < Z, +1 < -1).
LhvBound lhv_max(const SignedPauliSum &op, LhvRestriction restriction = LhvRestriction::none);

/// Exact bound for the complete-graph (GHZ) Bell operator using the
/// Z -> +1 reduction: 1/2 from the even products plus the best odd-product
/// contribution, maximized over the number of X outcomes equal to -1.
/// 2 <= n <= 64.
LhvBound ghz_graph_bound(std::size_t n);

/// 1/2 + 2^-(n/2) for even n (kind analytic). Odd n is rejected: its value is
/// not a multiple of 2^-n, use ghz_graph_bound instead.
LhvBound ghz_formula_bound(std::size_t n);

/// 2^-(n-1)/2
LhvBound mk_bound(std::size_t n);

struct MkBruteForce {
    std::size_t n = 0;
    /// max |B_n| in units of 2^-(n-1)/2
    std::int64_t scaled_max = 0;
    double value = 0;
    /// Lexicographically least maximizer: outcomes of sigma_a and sigma_a'.
    std::vector<int> a_outcomes;
    std::vector<int> a_prime_outcomes;
};

/// Enumerates all 2^(2n) outcome assignments through the MK recursion,
/// n <= 12.
MkBruteForce mk_bound_bruteforce(std::size_t n);

/// Product of the parts' values; the result is an upper bound.
LhvBound product_bound(std::span<const LhvBound> parts);

struct BridgeFactorization {
    /// Local complementations turning the input graph into `factored`.
    std::vector<std::size_t> lc_sequence;
    Graph factored;
    Edge bridge;
    std::vector<std::vector<std::size_t>> part_vertices;
    std::vector<LhvBound> part_bounds;
    LhvBound bound;
};

/// Searches the LC orbit (n <= 8) for a graph with a bridge edge and bounds
/// D by the product of the two sides' bounds. Sides that are a single vertex
/// contribute 1, complete sides use ghz_graph_bound, others exact search.
/// Returns the smallest product found, first in BFS order on ties.
std::optional<BridgeFactorization> bridge_product_bound(const Graph &g);

}  // namespace graphbell
