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

#include <bit>
#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "graphbell/errors.hpp"

namespace graphbell {

std::vector<PauliString> graph_generators(const Graph &g) {
    std::size_t n = g.num_vertices();
    std::vector<PauliString> out;
    out.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        out.emplace_back(n, std::uint64_t{1} << j, g.neighbors(j), 0);
    }
    return out;
}

std::vector<StabilizerElement> stabilizer_group(const Graph &g) {
    std::size_t n = g.num_vertices();
    if (n > kMaxGroupQubits) {
        throw CapacityError("stabilizer group enumeration limited to " + std::to_string(kMaxGroupQubits) +
                            " qubits");
    }
    auto gens = graph_generators(g);
    std::size_t count = std::size_t{1} << n;
    std::vector<StabilizerElement> out(count);
    out[0] = {0, PauliString(n)};
    for (std::uint64_t s = 1; s < count; ++s) {
        auto low = static_cast<std::size_t>(std::countr_zero(s));
        out[s] = {s, out[s & (s - 1)].word * gens[low]};
    }
    return out;
}

std::vector<PauliString> stabilizer_words(const Graph &g) {
    auto group = stabilizer_group(g);
    std::vector<PauliString> out;
    out.reserve(group.size());
    for (auto &e : group) out.push_back(std::move(e.word));
    return out;
}

namespace {

void apply_single_qubit(std::vector<cd> &amps, std::size_t n, std::size_t qubit, const Eigen::Matrix2cd &u) {
    std::size_t bit = std::size_t{1} << (n - 1 - qubit);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & bit) continue;
        cd a0 = amps[i], a1 = amps[i | bit];
        amps[i] = u(0, 0) * a0 + u(0, 1) * a1;
        amps[i | bit] = u(1, 0) * a0 + u(1, 1) * a1;
    }
}

void apply_cz(std::vector<cd> &amps, std::size_t n, std::size_t a, std::size_t b) {
    std::size_t mask = (std::size_t{1} << (n - 1 - a)) | (std::size_t{1} << (n - 1 - b));
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & mask) == mask) amps[i] = -amps[i];
    }
}

Eigen::Matrix2cd gate_matrix(char c) {
    const double r = 1.0 / std::sqrt(2.0);
    Eigen::Matrix2cd m;
    switch (c) {
        case 'H':
            m << r, r, r, -r;
            break;
        case 'X':
            m << 0, 1, 1, 0;
            break;
        case 'Y':
            m << 0, cd(0, -1), cd(0, 1), 0;
            break;
        case 'Z':
            m << 1, 0, 0, -1;
            break;
        case 'S':
            m << 1, 0, 0, cd(0, 1);
            break;
        default:
            throw ValidationError(std::string("unknown local gate '") + c + "'");
    }
    return m;
}

// G^dagger L G for a single letter L in {X, Y, Z}; returns the new letter
// and sign.
std::pair<char, int> conjugate_letter(char gate, char letter) {
    switch (gate) {
        case 'H':
            if (letter == 'X') return {'Z', 1};
            if (letter == 'Z') return {'X', 1};
            return {'Y', -1};
        case 'X':
            return {letter, letter == 'X' ? 1 : -1};
        case 'Y':
            return {letter, letter == 'Y' ? 1 : -1};
        case 'Z':
            return {letter, letter == 'Z' ? 1 : -1};
        case 'S':
            if (letter == 'X') return {'Y', -1};
            if (letter == 'Y') return {'X', 1};
            return {'Z', 1};
        default:
            throw ValidationError(std::string("unknown local gate '") + gate + "'");
    }
}

}  // namespace

StateVector graph_state_vector(const Graph &g) {
    std::size_t n = g.num_vertices();
    if (n > kMaxStateQubits) {
        throw CapacityError("graph state vectors limited to " + std::to_string(kMaxStateQubits) + " qubits");
    }
    std::size_t dim = std::size_t{1} << n;
    std::vector<cd> amps(dim, cd(1.0 / std::sqrt(static_cast<double>(dim)), 0));
    for (auto [u, v] : g.edges()) apply_cz(amps, n, u, v);
    return StateVector(n, std::move(amps));
}

Eigen::Matrix4cd controlled_phase() {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
    m(3, 3) = -1;
    return m;
}

Eigen::Matrix4cd controlled_phase_from_hamiltonian() {
    Eigen::Matrix2cd one_minus_z = Eigen::Matrix2cd::Identity() - gate_matrix('Z');
    Eigen::Matrix4cd h = Eigen::kroneckerProduct(one_minus_z, one_minus_z);
    Eigen::Matrix4cd arg = cd(0, -M_PI / 4) * h;
    return arg.exp();
}

Eigen::Matrix2cd local_word_matrix(std::string_view word) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
    for (char c : word) m = m * gate_matrix(c);
    return m;
}

std::string invert_local_word(std::string_view word) {
    std::string out;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        gate_matrix(*it);
        out += *it == 'S' ? "SSS" : std::string(1, *it);
    }
    return out;
}

StateVector apply_local_unitaries(const StateVector &s, const std::vector<std::string> &words) {
    std::size_t n = s.num_qubits();
    if (words.size() != n) {
        throw DimensionError("need one local word per qubit (" + std::to_string(n) + "), got " +
                             std::to_string(words.size()));
    }
    auto amps = s.amplitudes();
    for (std::size_t q = 0; q < n; ++q) {
        if (words[q].empty()) continue;
        apply_single_qubit(amps, n, q, local_word_matrix(words[q]));
    }
    return StateVector(n, std::move(amps), true);
}

PauliString conjugate_by_local(const PauliString &p, const std::vector<std::string> &words) {
    std::size_t n = p.num_qubits();
    if (words.size() != n) throw DimensionError("need one local word per qubit");
    std::string letters = p.letters();
    int sign = 1;
    for (std::size_t q = 0; q < n; ++q) {
        // U^dagger L U with U = G1 G2 ... Gm: conjugate by G1 first.
        for (char gate : words[q]) {
            if (letters[q] == 'I') {
                gate_matrix(gate);
                continue;
            }
            auto [letter, s] = conjugate_letter(gate, letters[q]);
            letters[q] = letter;
            sign *= s;
        }
    }
    PauliString out = parse_pauli(letters, n);
    auto log_i = static_cast<std::uint8_t>(p.log_i() + (sign < 0 ? 2 : 0));
    return PauliString(n, out.x_bits(), out.z_bits(), log_i);
}

std::vector<std::string> bc4_hat_corrections() {
    return {"HXZ", "HX", "HX", "HXZ"};
}

StateVector bc4_hat_state() {
    std::vector<cd> a(16, cd(0, 0));
    a[0b0000] = 0.5;
    a[0b0110] = -0.5;
    a[0b1001] = -0.5;
    a[0b1111] = -0.5;
    return StateVector(4, std::move(a));
}

std::vector<PauliString> corrected_stabilizer_words(const Graph &g, const std::vector<std::string> &corrections) {
    auto words = stabilizer_words(g);
    if (corrections.empty()) return words;
    for (auto &w : words) w = conjugate_by_local(w, corrections);
    return words;
}

}  // namespace graphbell
