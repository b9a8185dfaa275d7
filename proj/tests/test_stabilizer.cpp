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

#include "graphbell/stabilizer.hpp"

#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "graphbell/errors.hpp"
#include "test_util.hpp"

using namespace graphbell;

namespace {

std::vector<std::string> strs(const std::vector<PauliString> &words) {
    std::vector<std::string> out;
    for (const auto &w : words) out.push_back(w.str());
    return out;
}

std::vector<Graph> small_presets() {
    return {linear_graph(4), box4_graph(), ec_graph(1), ec_graph(3), ec3_lc_graph(), complete_graph(4),
            star_graph(5), Graph(3)};
}

}  // namespace

TEST(stabilizer, linear_generators) {
    EXPECT_EQ(strs(graph_generators(linear_graph(4))),
              (std::vector<std::string>{"+XZII", "+ZXZI", "+IZXZ", "+IIZX"}));
}

TEST(stabilizer, group_indexing_and_closure) {
    for (const Graph &g : small_presets()) {
        auto group = stabilizer_group(g);
        auto gens = graph_generators(g);
        ASSERT_EQ(group.size(), std::size_t{1} << g.num_vertices());
        EXPECT_TRUE(group.front().word.is_identity());
        std::set<std::pair<std::uint64_t, std::uint64_t>> keys;
        for (const auto &e : group) {
            EXPECT_TRUE(e.word.is_hermitian());
            keys.insert({e.word.x_bits(), e.word.z_bits()});
            PauliString expect(g.num_vertices());
            for (std::size_t j = 0; j < gens.size(); ++j) {
                if ((e.subset >> j) & 1) expect = expect * gens[j];
            }
            EXPECT_EQ(expect, e.word);
        }
        EXPECT_EQ(keys.size(), group.size());
        for (const auto &a : group) {
            for (const auto &b : group) {
                ASSERT_TRUE(pauli_commutes(a.word, b.word));
                ASSERT_EQ(a.word * b.word, group[a.subset ^ b.subset].word);
            }
        }
    }
}

TEST(stabilizer, elements_fix_the_graph_state) {
    for (const Graph &g : small_presets()) {
        StateVector s = graph_state_vector(g);
        for (const auto &w : stabilizer_words(g)) ASSERT_NEAR(pauli_expectation(w, s), 1.0, 1e-12) << w.str();
    }
}

TEST(stabilizer, graph_state_amplitudes) {
    // |G> = 2^-n/2 sum_c (-1)^{edges inside c} |c>
    Graph g = box4_graph();
    StateVector s = graph_state_vector(g);
    for (std::uint64_t c = 0; c < 16; ++c) {
        int parity = 0;
        for (auto [u, v] : g.edges()) parity += ((c >> (3 - u)) & 1) && ((c >> (3 - v)) & 1);
        ASSERT_NEAR(s[c].real(), (parity & 1 ? -0.25 : 0.25), 1e-15);
    }
}

TEST(stabilizer, controlled_phase_from_hamiltonian) {
    Eigen::Matrix4cd a = controlled_phase();
    Eigen::Matrix4cd b = controlled_phase_from_hamiltonian();
    EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(stabilizer, local_words) {
    Eigen::Matrix2cd h = local_word_matrix("H");
    Eigen::Matrix2cd hxz = local_word_matrix("HXZ");
    EXPECT_LT((hxz - h * local_word_matrix("X") * local_word_matrix("Z")).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_EQ(invert_local_word("HXZ"), "ZXH");
    EXPECT_EQ(invert_local_word("SH"), "HSSS");
    Eigen::Matrix2cd prod = local_word_matrix("SH") * local_word_matrix(invert_local_word("SH"));
    EXPECT_LT((prod - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_THROW(local_word_matrix("Q"), ValidationError);
}

TEST(stabilizer, conjugation_matches_matrices) {
    std::mt19937_64 rng(17);
    const char *gates = "HXYZS";
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng() % 3;
        std::vector<std::string> words(n);
        for (auto &w : words) {
            std::size_t len = rng() % 4;
            for (std::size_t k = 0; k < len; ++k) w += gates[rng() % 5];
        }
        auto p = testing_util::random_pauli(rng, n, true);
        Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(1, 1);
        for (const auto &w : words) {
            Eigen::MatrixXcd m = local_word_matrix(w);
            Eigen::MatrixXcd next(u.rows() * 2, u.cols() * 2);
            for (Eigen::Index r = 0; r < u.rows(); ++r) {
                for (Eigen::Index c = 0; c < u.cols(); ++c) next.block(2 * r, 2 * c, 2, 2) = u(r, c) * m;
            }
            u = next;
        }
        Eigen::MatrixXcd expect = u.adjoint() * pauli_to_matrix(p) * u;
        Eigen::MatrixXcd got = pauli_to_matrix(conjugate_by_local(p, words));
        ASSERT_LT((expect - got).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(stabilizer, corrections_map_prepared_state_to_box_cluster) {
    StateVector corrected = apply_local_unitaries(bc4_hat_state(), bc4_hat_corrections());
    EXPECT_NEAR(corrected.fidelity(graph_state_vector(box4_graph())), 1.0, 1e-10);
    std::vector<std::string> inverse;
    for (const auto &w : bc4_hat_corrections()) inverse.push_back(invert_local_word(w));
    StateVector back = apply_local_unitaries(graph_state_vector(box4_graph()), inverse);
    EXPECT_NEAR(back.fidelity(bc4_hat_state()), 1.0, 1e-10);
}

TEST(stabilizer, corrected_words_stabilize_prepared_state) {
    auto words = corrected_stabilizer_words(box4_graph(), bc4_hat_corrections());
    ASSERT_EQ(words.size(), 16u);
    StateVector s = bc4_hat_state();
    std::set<std::string> text;
    for (const auto &w : words) {
        EXPECT_NEAR(pauli_expectation(w, s), 1.0, 1e-12) << w.str();
        text.insert(w.str());
    }
    EXPECT_TRUE(text.count("+ZZZZ"));
    EXPECT_TRUE(text.count("-IXXZ"));
    EXPECT_TRUE(text.count("-ZXXI"));
    EXPECT_TRUE(text.count("-XIZX"));
    EXPECT_TRUE(text.count("-XZIX"));
}

TEST(stabilizer, printed_prepared_basis_list_is_not_a_group) {
    // The 16 words as printed for the prepared box cluster, with the stray
    // fifth letter of "ZXXIX" dropped. +XZIX makes the set non-closed.
    std::vector<std::string> printed{"+IIII", "+IYYZ", "-IXXZ", "+IZZI", "+YIZY", "+YYXX", "+YXYX", "+YZIY",
                                     "-XIZX", "+XYXY", "+XXYY", "+XZIX", "+ZIIZ", "+ZYYI", "-ZXXI", "+ZZZZ"};
    std::map<std::pair<std::uint64_t, std::uint64_t>, PauliString> by_key;
    for (const auto &t : printed) {
        auto p = parse_pauli(t, 4);
        by_key[{p.x_bits(), p.z_bits()}] = p;
    }
    bool closed = true;
    for (const auto &[ka, a] : by_key) {
        for (const auto &[kb, b] : by_key) {
            auto c = a * b;
            auto it = by_key.find({c.x_bits(), c.z_bits()});
            if (it == by_key.end() || it->second != c) closed = false;
        }
    }
    EXPECT_FALSE(closed);
    auto xzix = parse_pauli("XZIX", 4);
    auto xizx = parse_pauli("-XIZX", 4);
    EXPECT_EQ((xzix * xizx).str(), "-IZZI");
}

TEST(stabilizer, capacity) {
    EXPECT_THROW(stabilizer_group(linear_graph(kMaxGroupQubits + 1)), CapacityError);
    EXPECT_THROW(graph_state_vector(linear_graph(kMaxStateQubits + 1)), CapacityError);
}
