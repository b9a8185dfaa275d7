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

#include <Eigen/Dense>

#include "graphbell/graph.hpp"
#include "graphbell/pauli.hpp"

namespace graphbell {

inline constexpr std::size_t kMaxBellOperatorQubits = 16;

struct PauliTerm {
    /// Always positive; the sign lives in the word.
    double coeff = 0;
    /// Hermitian word with phase +1 or -1.
    PauliString word;
};

/// Real-weighted sum of Hermitian Pauli words.
///
/// Construction merges duplicate letter strings, drops terms that cancel,
/// folds each coefficient's sign into its word and sorts terms by
/// (x_bits, z_bits).
class SignedPauliSum {
   public:
    SignedPauliSum() = default;
    explicit SignedPauliSum(std::size_t n);
    /// Each (coeff, word) contributes coeff * word; coeff may be negative.
    SignedPauliSum(std::size_t n, const std::vector<PauliTerm> &terms);

    std::size_t num_qubits() const {
        return n_;
    }
    std::size_t size() const {
        return terms_.size();
    }
    const std::vector<PauliTerm> &terms() const {
        return terms_;
    }
    /// coeff * sign for the term whose letters match `word`, or 0.
    double signed_coefficient(const PauliString &word) const;

    /// Dense matrix, n <= kMaxDenseQubits.
    Eigen::MatrixXcd to_dense() const;

    /// One "<coeff> <signed word>" line per term.
    std::string str() const;

    friend bool operator==(const SignedPauliSum &, const SignedPauliSum &) = default;

   private:
    std::size_t n_ = 0;
    std::vector<PauliTerm> terms_;
};

/// True when both sums have identical words and signs and coefficients agree
/// within `tol`.
bool approx_equal(const SignedPauliSum &a, const SignedPauliSum &b, double tol = 1e-12);

/// Expands a Hermitian matrix in the Pauli basis, keeping |coeff| > tol.
SignedPauliSum pauli_decompose(const Eigen::MatrixXcd &m, double tol = 1e-12);

/// 2^-n times the sum of all stabilizer elements.
SignedPauliSum graph_bell_operator(const Graph &g);

/// Same normalization over an explicit list of 2^n stabilizer words.
SignedPauliSum bell_operator_from_stabilizers(std::size_t n, std::span<const PauliString> words);

/// Two unit vectors per qubit.
class MeasurementSetting {
   public:
    MeasurementSetting(std::vector<Eigen::Vector3d> a, std::vector<Eigen::Vector3d> a_prime);
    /// The same pair on every qubit.
    static MeasurementSetting uniform(std::size_t n, const Eigen::Vector3d &a, const Eigen::Vector3d &a_prime);
    /// a = x, a' = y on every qubit.
    static MeasurementSetting xy(std::size_t n);

    std::size_t num_qubits() const {
        return a_.size();
    }
    const Eigen::Vector3d &a(std::size_t k) const {
        return a_[k];
    }
    const Eigen::Vector3d &a_prime(std::size_t k) const {
        return a_prime_[k];
    }
    /// Every vector is +-x, +-y or +-z.
    bool is_pauli_axis() const;

   private:
    std::vector<Eigen::Vector3d> a_;
    std::vector<Eigen::Vector3d> a_prime_;
};

struct MkOperator {
    std::size_t n = 0;
    /// Present for n <= kMaxDenseQubits.
    std::optional<Eigen::MatrixXcd> dense;
    /// Present when the setting is Pauli-axis.
    std::optional<SignedPauliSum> pauli;
};

/// Mermin-Klyshko operator from the two-setting recursion, normalized so
/// that the quantum maximum is 1. Pauli-axis settings are expanded with
/// integer arithmetic and scaled once by (2 sqrt 2)^-(n-1).
MkOperator mk_recursive(std::size_t n, const MeasurementSetting &setting);

/// beta_n = (n - 1) pi / 4
double mk_phase(std::size_t n);

struct SparseEntry {
    std::uint64_t row;
    std::uint64_t col;
    cd value;
};

struct SparseOperator {
    std::size_t n = 0;
    std::vector<SparseEntry> entries;

    Eigen::MatrixXcd to_dense() const;
};

/// e^{i beta_n} |1..1><0..0| + e^{-i beta_n} |0..0><1..1|, n <= 62.
SparseOperator mk_closed_form(std::size_t n);

double operator_expectation(const SignedPauliSum &op, const StateVector &s);
double operator_expectation(const SignedPauliSum &op, const DensityMatrix &rho);
double operator_expectation(const SparseOperator &op, const StateVector &s);
double operator_expectation(const SparseOperator &op, const DensityMatrix &rho);
double operator_expectation(const Eigen::MatrixXcd &op, const StateVector &s);
double operator_expectation(const Eigen::MatrixXcd &op, const DensityMatrix &rho);

/// Pairwise (cascade) summation; result does not depend on thread splits.
double pairwise_sum(std::span<const double> values);

}  // namespace graphbell
