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

#include "graphbell/lhv.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "graphbell/errors.hpp"
#include "test_util.hpp"

using namespace graphbell;

namespace {

LhvAssignment from_key(std::size_t n, std::uint64_t key) {
    // Bit (3n - 1 - (3q + l)) is letter l of qubit q, so counting up walks
    // assignments in lexicographic order.
    LhvAssignment a = LhvAssignment::all_plus(n);
    for (std::size_t q = 0; q < n; ++q) {
        for (std::size_t l = 0; l < 3; ++l) {
            if (!((key >> (3 * n - 1 - (3 * q + l))) & 1)) continue;
            std::uint64_t b = std::uint64_t{1} << q;
            (l == 0 ? a.neg_x : l == 1 ? a.neg_y : a.neg_z) |= b;
        }
    }
    return a;
}

/// First maximizer of |lhv_value| over all 2^(3n) assignments in
/// lexicographic order, optionally with every Z outcome +1.
std::pair<double, LhvAssignment> naive_max(const SignedPauliSum &op, bool z_plus = false) {
    const std::size_t n = op.num_qubits();
    double best = -1;
    LhvAssignment arg;
    for (std::uint64_t key = 0; key < (std::uint64_t{1} << (3 * n)); ++key) {
        LhvAssignment a = from_key(n, key);
        if (z_plus && a.neg_z) continue;
        double v = std::abs(lhv_value(op, a));
        if (v > best) {
            best = v;
            arg = a;
        }
    }
    return {best, arg};
}

/// Same assignment restricted to the letters `op` uses; others set to +1.
LhvAssignment canonical(const SignedPauliSum &op, LhvAssignment a) {
    std::uint64_t used_x = 0, used_y = 0, used_z = 0;
    for (const auto &t : op.terms()) {
        std::uint64_t x = t.word.x_bits(), z = t.word.z_bits();
        used_x |= x & ~z;
        used_y |= x & z;
        used_z |= ~x & z;
    }
    a.neg_x &= used_x;
    a.neg_y &= used_y;
    a.neg_z &= used_z;
    return a;
}

}  // namespace

TEST(lhv, value_examples) {
    EXPECT_EQ(lhv_value(graph_bell_operator(Graph(2)), LhvAssignment::all_plus(2)), 1.0);
    // Two of the sixteen linear-cluster terms are negative.
    EXPECT_EQ(lhv_value(graph_bell_operator(linear_graph(4)), LhvAssignment::all_plus(4)), 12.0 / 16);
    SignedPauliSum id(3, {{0.25, PauliString(3)}, {0.5, PauliString(3)}});
    EXPECT_EQ(lhv_value(id, LhvAssignment{3, 5, 2, 7}), 0.75);
    EXPECT_THROW(lhv_value(id, LhvAssignment::all_plus(2)), DimensionError);
}

TEST(lhv, assignment_evaluation) {
    LhvAssignment a{3, 0b001, 0b010, 0b100};
    EXPECT_EQ(a.value(0, 'X'), -1);
    EXPECT_EQ(a.value(1, 'Y'), -1);
    EXPECT_EQ(a.value(2, 'Z'), -1);
    EXPECT_EQ(a.value(1, 'X'), 1);
    EXPECT_EQ(a.evaluate(parse_pauli("XYZ", 3)), -1);
    EXPECT_EQ(a.evaluate(parse_pauli("-XYI", 3)), -1);
    EXPECT_EQ(a.str(), "-++ +-+ ++-");
}

TEST(lhv, four_qubit_clusters_are_three_quarters) {
    for (const Graph &g : {linear_graph(4), box4_graph(), ec_graph(1)}) {
        SignedPauliSum op = graph_bell_operator(g);
        LhvBound b = lhv_max(op);
        EXPECT_EQ(b.value, 0.75);
        EXPECT_EQ(*b.fraction, Fraction(3, 4));
        EXPECT_EQ(b.kind, BoundKind::exact);
        ASSERT_TRUE(b.witness.has_value());
        EXPECT_EQ(std::abs(lhv_value(op, *b.witness)), 0.75);
    }
}

TEST(lhv, empty_graph_reaches_one) {
    for (std::size_t n = 1; n <= 8; ++n) {
        LhvBound b = lhv_max(graph_bell_operator(Graph(n)));
        EXPECT_EQ(b.value, 1.0);
        EXPECT_EQ(*b.witness, LhvAssignment::all_plus(n));
    }
}

TEST(lhv, matches_naive_enumeration_with_least_witness) {
    std::mt19937_64 rng(31);
    std::vector<Graph> graphs{linear_graph(4), box4_graph(), ec_graph(1), complete_graph(3), star_graph(4)};
    for (int i = 0; i < 12; ++i) graphs.push_back(testing_util::random_graph(rng, 2 + i % 3));
    for (const Graph &g : graphs) {
        SignedPauliSum op = graph_bell_operator(g);
        auto [value, arg] = naive_max(op);
        LhvBound b = lhv_max(op);
        EXPECT_EQ(b.value, value);
        EXPECT_EQ(*b.witness, canonical(op, arg)) << b.witness->str() << " vs " << arg.str();
    }
}

TEST(lhv, ec3_matches_naive_enumeration) {
    SignedPauliSum op = graph_bell_operator(ec_graph(3));
    auto [value, arg] = naive_max(op);
    LhvBound b = lhv_max(op);
    EXPECT_EQ(b.value, value);
    EXPECT_LE(b.value, 0.75);
    EXPECT_EQ(*b.fraction, Fraction(5, 8));
}

TEST(lhv, soundness_on_random_assignments) {
    std::mt19937_64 rng(37);
    for (const Graph &g : {ec_graph(3), linear_graph(5), box4_graph()}) {
        SignedPauliSum op = graph_bell_operator(g);
        LhvBound b = lhv_max(op);
        const std::uint64_t mask = (std::uint64_t{1} << g.num_vertices()) - 1;
        for (int trial = 0; trial < 10000; ++trial) {
            LhvAssignment a{g.num_vertices(), rng() & mask, rng() & mask, rng() & mask};
            ASSERT_LE(std::abs(lhv_value(op, a)), b.value + 0);
        }
    }
}

TEST(lhv, non_dyadic_weights) {
    SignedPauliSum op(2, {{0.3, parse_pauli("XX", 2)}, {0.6, parse_pauli("ZZ", 2)}, {0.9, parse_pauli("-XZ", 2)}});
    LhvBound b = lhv_max(op);
    EXPECT_NEAR(b.value, 1.8, 1e-12);
    SignedPauliSum bad(1, {{1.0, parse_pauli("X", 1)}, {std::sqrt(2.0), parse_pauli("Z", 1)}});
    EXPECT_THROW(lhv_max(bad), ContractError);
}

TEST(lhv, restriction_is_exact_for_small_complete_graphs) {
    for (std::size_t n = 2; n <= 4; ++n) {
        SignedPauliSum op = graph_bell_operator(complete_graph(n));
        EXPECT_EQ(lhv_max(op).value, lhv_max(op, LhvRestriction::z_plus_one).value) << n;
    }
}

TEST(lhv, restricted_witness_fixes_z) {
    SignedPauliSum op = graph_bell_operator(complete_graph(4));
    auto [value, arg] = naive_max(op, true);
    LhvBound b = lhv_max(op, LhvRestriction::z_plus_one);
    EXPECT_EQ(b.value, value);
    EXPECT_EQ(b.witness->neg_z, 0u);
    EXPECT_EQ(b.method, "brute(Z->+1)");
}

TEST(lhv, capacity_names_the_restriction) {
    SignedPauliSum op = graph_bell_operator(complete_graph(9));
    EXPECT_EQ(lhv_free_variables(op), 27u);
    try {
        lhv_max(op);
        FAIL() << "expected CapacityError";
    } catch (const CapacityError &e) {
        EXPECT_NE(std::string(e.what()).find("restrict"), std::string::npos);
    }
    EXPECT_EQ(lhv_free_variables(op, LhvRestriction::z_plus_one), 18u);
}

TEST(lhv, ghz_bound_values) {
    EXPECT_EQ(*ghz_graph_bound(12).fraction, Fraction(33, 64));
    EXPECT_EQ(*ghz_graph_bound(14).fraction, Fraction(65, 128));
    for (std::size_t n = 4; n <= 14; n += 2) {
        Fraction expect = Fraction::dyadic((std::int64_t{1} << (n / 2 - 1)) + 1, static_cast<int>(n / 2));
        EXPECT_EQ(*ghz_graph_bound(n).fraction, expect) << n;
        EXPECT_EQ(*ghz_formula_bound(n).fraction, expect) << n;
    }
    EXPECT_EQ(*ghz_graph_bound(2).fraction, Fraction(1));
    EXPECT_EQ(*ghz_graph_bound(3).fraction, Fraction(3, 4));
    EXPECT_THROW(ghz_formula_bound(5), ContractError);
    EXPECT_THROW(ghz_graph_bound(1), ContractError);
    EXPECT_THROW(ghz_graph_bound(65), ContractError);
}

TEST(lhv, ghz_bound_floor_and_granularity) {
    for (std::size_t n = 2; n <= 64; ++n) {
        LhvBound b = ghz_graph_bound(n);
        EXPECT_GE(b.value, 0.5);
        // A multiple of 2^-n.
        EXPECT_EQ(std::ldexp(b.value, static_cast<int>(n)), std::round(std::ldexp(b.value, static_cast<int>(n))));
    }
}

TEST(lhv, ghz_bound_agrees_with_restricted_search) {
    for (std::size_t n = 2; n <= 6; ++n) {
        SignedPauliSum op = graph_bell_operator(complete_graph(n));
        LhvBound fast = ghz_graph_bound(n);
        LhvBound slow = lhv_max(op, LhvRestriction::z_plus_one);
        EXPECT_EQ(*fast.fraction, *slow.fraction) << n;
        EXPECT_EQ(lhv_value(op, *fast.witness), fast.value) << n;
    }
    SignedPauliSum op3 = graph_bell_operator(complete_graph(3));
    EXPECT_EQ(ghz_graph_bound(3).value, lhv_max(op3).value);
}

TEST(lhv, ghz_witness_achieves_bound_up_to_eight) {
    for (std::size_t n = 7; n <= 8; ++n) {
        LhvBound b = ghz_graph_bound(n);
        EXPECT_EQ(lhv_value(graph_bell_operator(complete_graph(n)), *b.witness), b.value);
    }
}

TEST(lhv, mk_bound) {
    EXPECT_EQ(mk_bound(1).value, 1.0);
    EXPECT_NEAR(mk_bound(14).value, 0.011049, 1e-6);
    EXPECT_EQ(mk_bound(5).fraction, Fraction(1, 4));
    EXPECT_EQ(mk_bound(4).kind, BoundKind::analytic);
    for (std::size_t n = 1; n <= 8; ++n) {
        auto bf = mk_bound_bruteforce(n);
        EXPECT_EQ(bf.scaled_max, 1);
        EXPECT_EQ(bf.value, mk_bound(n).value);
    }
    auto bf4 = mk_bound_bruteforce(4);
    EXPECT_EQ(bf4.a_outcomes, (std::vector<int>{1, 1, 1, 1}));
    EXPECT_EQ(bf4.a_prime_outcomes.size(), 4u);
    EXPECT_THROW(mk_bound_bruteforce(13), CapacityError);
}

TEST(lhv, product_bound) {
    LhvBound one{1, Fraction(1), BoundKind::exact, std::nullopt, "G1"};
    LhvBound p = product_bound(std::vector<LhvBound>{one, ghz_graph_bound(4)});
    EXPECT_EQ(*p.fraction, Fraction(3, 4));
    EXPECT_EQ(p.kind, BoundKind::upper_bound);
    EXPECT_EQ(*product_bound(std::vector<LhvBound>{one, ghz_graph_bound(6)}).fraction, Fraction(5, 8));
    EXPECT_EQ(product_bound(std::vector<LhvBound>{ghz_graph_bound(4)}).value, 0.75);
    EXPECT_THROW(product_bound(std::vector<LhvBound>{}), ContractError);
}

TEST(lhv, bridge_factorizations) {
    auto f3 = bridge_product_bound(ec_graph(3));
    ASSERT_TRUE(f3.has_value());
    EXPECT_EQ(*f3->bound.fraction, Fraction(3, 4));
    auto f5 = bridge_product_bound(ec_graph(5));
    ASSERT_TRUE(f5.has_value());
    EXPECT_EQ(*f5->bound.fraction, Fraction(5, 8));
    // Upper bounds never undercut the exact value.
    EXPECT_GE(f3->bound.value, lhv_max(graph_bell_operator(ec_graph(3))).value);
    EXPECT_GE(f5->bound.value, lhv_max(graph_bell_operator(ec_graph(5))).value);
    // The reported factorization replays.
    Graph g = ec_graph(3);
    for (auto v : f3->lc_sequence) g = local_complement(g, v);
    EXPECT_EQ(g, f3->factored);
    EXPECT_TRUE(g.has_edge(f3->bridge.first, f3->bridge.second));
    // K4 reaches a star, whose every edge is a bridge.
    auto f4 = bridge_product_bound(complete_graph(4));
    ASSERT_TRUE(f4.has_value());
    EXPECT_GE(f4->bound.value, ghz_graph_bound(4).value);
    if (auto fb = bridge_product_bound(box4_graph())) {
        EXPECT_GE(fb->bound.value, lhv_max(graph_bell_operator(box4_graph())).value);
    }
}

TEST(lhv, lc_invariance) {
    EXPECT_EQ(lhv_max(graph_bell_operator(ec_graph(3))).value, lhv_max(graph_bell_operator(ec3_lc_graph())).value);
}
