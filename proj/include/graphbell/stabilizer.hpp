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
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "graphbell/graph.hpp"
#include "graphbell/pauli.hpp"

namespace graphbell {

inline constexpr std::size_t kMaxGroupQubits = 20;

/// Product of the generators selected by `subset` (bit j selects K_j).
struct StabilizerElement {
    std::uint64_t subset = 0;
    PauliString word;
};

/// K_j = X_j prod_{i in N(j)} Z_i, in vertex order.
std::vector<PauliString> graph_generators(const Graph &g);

/// All 2^n group elements indexed by subset, identity first.
std::vector<StabilizerElement> stabilizer_group(const Graph &g);

/// Words of `stabilizer_group` in subset order.
std::vector<PauliString> stabilizer_words(const Graph &g);

/// CZ along every edge applied to |+>^n.
StateVector graph_state_vector(const Graph &g);

/// diag(1, 1, 1, -1)
Eigen::Matrix4cd controlled_phase();
/// exp(-i H pi/4) with H = (1 - Z) (x) (1 - Z).
Eigen::Matrix4cd controlled_phase_from_hamiltonian();

// Local gate words are strings over {H, X, Y, Z, S}. A word denotes the
// operator product in written order, so "HXZ" is the matrix H*X*Z and Z
// acts on the state first. The empty word is the identity.

Eigen::Matrix2cd local_word_matrix(std::string_view word);

/// Word for the inverse operator: reversed, with S replaced by SSS.
std::string invert_local_word(std::string_view word);

/// Applies one word per qubit.
StateVector apply_local_unitaries(const StateVector &s, const std::vector<std::string> &words);

/// U^dagger p U for U the tensor product of the per-qubit words. If U maps
/// |a> to |b>, this maps stabilizers of |b> to stabilizers of |a>.
PauliString conjugate_by_local(const PauliString &p, const std::vector<std::string> &words);

/// Corrections that map the experimentally prepared box cluster onto the
/// CZ-prepared one: qubit 1 HXZ, qubit 2 HX, qubit 3 HX, qubit 4 HXZ.
std::vector<std::string> bc4_hat_corrections();

/// (|0000> - |0110> - |1001> - |1111>) / 2
StateVector bc4_hat_state();

/// Stabilizer words of the state obtained from |G> by undoing `corrections`,
/// i.e. of U^dagger |G>. Subset order follows the graph generators.
std::vector<PauliString> corrected_stabilizer_words(const Graph &g, const std::vector<std::string> &corrections);

}  // namespace graphbell
