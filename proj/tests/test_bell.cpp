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

#include "graphbell/bell.hpp"

#include <cmath>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "graphbell/errors.hpp"
#include "graphbell/stabilizer.hpp"
#include "test_util.hpp"

using namespace graphbell;

namespace {

std::set<std::string> signed_words(const SignedPauliSum &op) {
    std::set<std::string> out;
    for (const auto &t : op.terms()) out.insert(t.word.str());
    return out;
}

SignedPauliSum sum_from(std::size_t n, double coeff, const std::vector<std::string> &words) {
    std::vector<PauliTerm> terms;
    for (const auto &w : words) terms.push_back({coeff, parse_pauli(w, n)});
    return SignedPauliSum(n, terms);
}

double max_eigenvalue(const Eigen::MatrixXcd &m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    return es.eigenvalues().maxCoeff();
}

Eigen::Vector3d random_unit(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Eigen::Vector3d v(g(rng), g(rng), g(rng));
    return v.normalized();
}

}  // namespace

TEST(bell, linear_cluster_expansion) {
    SignedPauliSum op = graph_bell_operator(linear_graph(4));
    std::set<std::string> expect{"+IIII", "+XZII", "+ZXZI", "+IZXZ", "+IIZX", "+YYZI", "+XIXZ", "+XZZX",
                                 "+ZYYZ", "+ZXIX", "+IZYY", "-ZYXY", "+XIYY", "+YYIX", "-YXYZ", "+YXXY"};
    EXPECT_EQ(signed_words(op), expect);
    for (const auto &t : op.terms()) EXPECT_EQ(t.coeff, 1.0 / 16);
}

TEST(bell, box_cluster_expansion) {
    SignedPauliSum op = graph_bell_operator(box4_graph());
    std::set<std::string> expect{"+IIII", "+XZZI", "+ZXIZ", "+ZIXZ", "+IZZX", "+YYZZ", "+YZYZ", "+XIIX",
                                 "+IXXI", "+ZYZY", "+ZZYY", "-IYYX", "-YIXY", "-YXIY", "-XYYI", "+XXXX"};
    EXPECT_EQ(signed_words(op), expect);
    for (const auto &t : op.terms()) EXPECT_EQ(t.coeff, 1.0 / 16);
}

TEST(bell, prepared_box_cluster_expansion) {
    auto words = corrected_stabilizer_words(box4_graph(), bc4_hat_corrections());
    SignedPauliSum op = bell_operator_from_stabilizers(4, words);
    std::set<std::string> expect{"+IIII", "+IYYZ", "-IXXZ", "+IZZI", "+YIZY", "+YYXX", "+YXYX", "+YZIY",
                                 "-XIZX", "+XYXY", "+XXYY", "-XZIX", "+ZIIZ", "+ZYYI", "-ZXXI", "+ZZZZ"};
    EXPECT_EQ(signed_words(op), expect);
    Eigen::MatrixXcd proj = op.to_dense();
    StateVector s = bc4_hat_state();
    Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(s.amplitudes().data(), 16);
    EXPECT_LT((proj - v * v.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(bell, operator_is_the_graph_state_projector) {
    for (const Graph &g : {linear_graph(4), box4_graph(), ec_graph(1), ec_graph(3), complete_graph(5), star_graph(6)}) {
        Eigen::MatrixXcd b = graph_bell_operator(g).to_dense();
        StateVector s = graph_state_vector(g);
        Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(s.amplitudes().data(), s.dim());
        EXPECT_LT((b - v * v.adjoint()).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(bell, expectation_is_the_fidelity) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t n = 2 + trial % 3;
        Graph g = testing_util::random_graph(rng, n);
        DensityMatrix rho = testing_util::random_density(rng, n);
        EXPECT_NEAR(operator_expectation(graph_bell_operator(g), rho), rho.overlap(graph_state_vector(g)), 1e-10);
    }
    EXPECT_NEAR(operator_expectation(graph_bell_operator(linear_graph(4)), DensityMatrix::maximally_mixed(4)),
                1.0 / 16, 1e-15);
    EXPECT_NEAR(operator_expectation(graph_bell_operator(ec_graph(5)), graph_state_vector(ec_graph(5))), 1.0, 1e-12);
}

TEST(bell, sum_merges_and_cancels) {
    SignedPauliSum s(2, {{0.5, parse_pauli("XX", 2)}, {0.25, parse_pauli("XX", 2)}, {-0.5, parse_pauli("ZZ", 2)},
                         {0.5, parse_pauli("-ZZ", 2)}, {1.0, parse_pauli("YY", 2)}, {-1.0, parse_pauli("YY", 2)}});
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(s.signed_coefficient(parse_pauli("XX", 2)), 0.75);
    EXPECT_EQ(s.signed_coefficient(parse_pauli("ZZ", 2)), -1.0);
    EXPECT_EQ(s.signed_coefficient(parse_pauli("YY", 2)), 0.0);
}

TEST(bell, decomposition_round_trip) {
    SignedPauliSum op = graph_bell_operator(box4_graph());
    EXPECT_TRUE(approx_equal(pauli_decompose(op.to_dense()), op));
}

TEST(bell, duplicate_stabilizers_rejected) {
    std::vector<PauliString> words(4, PauliString::from_letters("XX"));
    EXPECT_THROW(bell_operator_from_stabilizers(2, words), ContractError);
}

TEST(bell, mk_single_qubit) {
    MkOperator op = mk_recursive(1, MeasurementSetting::xy(1));
    ASSERT_TRUE(op.pauli.has_value());
    EXPECT_EQ(op.pauli->str(), "1 +X\n");
}

TEST(bell, mk_two_qubits) {
    MkOperator op = mk_recursive(2, MeasurementSetting::xy(2));
    SignedPauliSum expect = sum_from(2, 1 / (2 * std::sqrt(2.0)), {"XX", "XY", "YX", "-YY"});
    EXPECT_TRUE(approx_equal(*op.pauli, expect, 1e-15));
    EXPECT_NEAR(max_eigenvalue(*op.dense), 1.0, 1e-12);
}

TEST(bell, mk_four_qubit_expansion) {
    MkOperator op = mk_recursive(4, MeasurementSetting::xy(4));
    ASSERT_TRUE(op.pauli.has_value());
    EXPECT_EQ(op.pauli->size(), 16u);
    for (const auto &t : op.pauli->terms()) EXPECT_NEAR(t.coeff, 1 / (8 * std::sqrt(2.0)), 1e-15);
    EXPECT_LT((op.pauli->to_dense() - *op.dense).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(bell, mk_rotated_first_qubit_gives_eight_term_form) {
    // Rotating the first qubit's pair by -3pi/4 about z cancels the phase
    // e^{i beta_4}, leaving |1111><0000| + h.c.
    const double r = 1 / std::sqrt(2.0);
    std::vector<Eigen::Vector3d> a(4, Eigen::Vector3d::UnitX()), ap(4, Eigen::Vector3d::UnitY());
    a[0] = Eigen::Vector3d(-r, -r, 0);
    ap[0] = Eigen::Vector3d(r, -r, 0);
    MkOperator op = mk_recursive(4, MeasurementSetting(a, ap));
    ASSERT_FALSE(op.pauli.has_value());
    SignedPauliSum expect =
        sum_from(4, 1.0 / 8, {"-YXXY", "-YXYX", "-YYXX", "+YYYY", "-XYYX", "-XYXY", "-XXYY", "+XXXX"});
    EXPECT_TRUE(approx_equal(pauli_decompose(*op.dense), expect, 1e-12));
}

TEST(bell, mk_recursion_equals_closed_form) {
    for (std::size_t n = 1; n <= 8; ++n) {
        MkOperator op = mk_recursive(n, MeasurementSetting::xy(n));
        Eigen::MatrixXcd closed = mk_closed_form(n).to_dense();
        EXPECT_LT((*op.dense - closed).cwiseAbs().maxCoeff(), 1e-12) << n;
    }
    EXPECT_DOUBLE_EQ(mk_phase(4), 3 * M_PI / 4);
}

TEST(bell, mk_spectral_bound_for_random_settings) {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 1 + trial % 6;
        std::vector<Eigen::Vector3d> a, ap;
        for (std::size_t k = 0; k < n; ++k) {
            a.push_back(random_unit(rng));
            ap.push_back(random_unit(rng));
        }
        MkOperator op = mk_recursive(n, MeasurementSetting(a, ap));
        EXPECT_LE(max_eigenvalue(*op.dense), 1 + 1e-10);
    }
    for (std::size_t n = 1; n <= 6; ++n) {
        EXPECT_NEAR(max_eigenvalue(*mk_recursive(n, MeasurementSetting::xy(n)).dense), 1.0, 1e-10);
    }
}

TEST(bell, mk_settings_validation) {
    std::vector<Eigen::Vector3d> a{Eigen::Vector3d(1, 1, 0)}, ap{Eigen::Vector3d::UnitY()};
    EXPECT_THROW(MeasurementSetting(a, ap), ContractError);
    EXPECT_TRUE(MeasurementSetting::xy(3).is_pauli_axis());
}

TEST(bell, closed_form_expectation_on_ghz) {
    for (std::size_t n = 1; n <= 14; ++n) {
        std::vector<cd> amps(std::size_t{1} << n, 0.0);
        amps.front() = 1 / std::sqrt(2.0);
        amps.back() = std::polar(1 / std::sqrt(2.0), mk_phase(n));
        EXPECT_NEAR(operator_expectation(mk_closed_form(n), StateVector(n, amps)), 1.0, 1e-12);
    }
}

TEST(bell, pairwise_sum_is_exact_on_dyadics) {
    std::vector<double> v(1000, 1.0 / 1024);
    EXPECT_EQ(pairwise_sum(v), 1000.0 / 1024);
}
