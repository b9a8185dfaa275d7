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

#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace graphbell {

using cd = std::complex<double>;

inline constexpr double kEqualityTolerance = 1e-10;
inline constexpr double kResidueTolerance = 1e-8;
inline constexpr std::size_t kMaxPauliQubits = 64;
inline constexpr std::size_t kMaxDenseQubits = 10;
inline constexpr std::size_t kMaxStateQubits = 20;

/// An n-qubit Pauli word `i^log_i * L_0 (x) L_1 (x) ... (x) L_{n-1}`.
///
/// Bit j of `x_bits` / `z_bits` describes qubit j, with (x,z) = (0,0), (1,0),
/// (0,1), (1,1) meaning I, X, Z, Y. The phase multiplies the tensor product
/// of letters, so `Y` has phase +1. Qubit 0 is the leftmost letter and the
/// most significant bit of a computational-basis index.
class PauliString {
   public:
    PauliString() = default;
    /// Identity on `n` qubits.
    explicit PauliString(std::size_t n);
    PauliString(std::size_t n, std::uint64_t x_bits, std::uint64_t z_bits, std::uint8_t log_i = 0);

    /// Letters over {I,X,Y,Z}; `sign` is +1 or -1.
    static PauliString from_letters(std::string_view letters, int sign = +1);

    std::size_t num_qubits() const {
        return n_;
    }
    std::uint64_t x_bits() const {
        return x_;
    }
    std::uint64_t z_bits() const {
        return z_;
    }
    /// Phase exponent: the phase is i^log_i().
    std::uint8_t log_i() const {
        return log_i_;
    }
    cd phase() const;

    bool is_hermitian() const {
        return (log_i_ & 1) == 0;
    }
    /// +1 or -1; throws ContractError for a non-Hermitian word.
    int sign() const;
    bool is_identity() const {
        return x_ == 0 && z_ == 0;
    }
    std::size_t weight() const;
    char letter(std::size_t qubit) const;
    /// Letters only, e.g. "ZXXI".
    std::string letters() const;
    /// Canonical text: sign prefix then letters, e.g. "-ZXXI", "+iY".
    std::string str() const;

    PauliString negated() const;
    /// Same letters with phase +1.
    PauliString unsigned_word() const;

    friend bool operator==(const PauliString &, const PauliString &) = default;
    /// Orders by (x_bits, z_bits, phase).
    friend std::strong_ordering operator<=>(const PauliString &a, const PauliString &b);

   private:
    std::size_t n_ = 0;
    std::uint64_t x_ = 0;
    std::uint64_t z_ = 0;
    std::uint8_t log_i_ = 0;
};

PauliString pauli_multiply(const PauliString &p, const PauliString &q);
inline PauliString operator*(const PauliString &p, const PauliString &q) {
    return pauli_multiply(p, q);
}
bool pauli_commutes(const PauliString &p, const PauliString &q);

/// Parses an optional '+'/'-' followed by `n` letters over IXYZ. Whitespace is
/// ignored. ParseError::position() is the index of the offending letter.
PauliString parse_pauli(std::string_view text, std::size_t n);

/// Dense 2^n x 2^n matrix, n <= kMaxDenseQubits.
Eigen::MatrixXcd pauli_to_matrix(const PauliString &p);

/// Normalized pure state on n <= kMaxStateQubits qubits.
class StateVector {
   public:
    StateVector() = default;
    /// Validates the norm unless `normalize` is set, in which case it rescales.
    StateVector(std::size_t n, std::vector<cd> amplitudes, bool normalize = false);

    static StateVector basis(std::size_t n, std::uint64_t index);

    std::size_t num_qubits() const {
        return n_;
    }
    std::size_t dim() const {
        return amps_.size();
    }
    const std::vector<cd> &amplitudes() const {
        return amps_;
    }
    const cd &operator[](std::size_t i) const {
        return amps_[i];
    }

    cd inner(const StateVector &other) const;
    /// |<this|other>|^2
    double fidelity(const StateVector &other) const;

   private:
    std::size_t n_ = 0;
    std::vector<cd> amps_;
};

/// Density operator on n <= kMaxDenseQubits qubits.
class DensityMatrix {
   public:
    DensityMatrix() = default;
    /// Checks Hermiticity, unit trace and (optionally) positivity.
    DensityMatrix(std::size_t n, Eigen::MatrixXcd entries, bool check_psd = true);

    static DensityMatrix from_state(const StateVector &s);
    static DensityMatrix maximally_mixed(std::size_t n);

    std::size_t num_qubits() const {
        return n_;
    }
    const Eigen::MatrixXcd &matrix() const {
        return m_;
    }
    /// <s|rho|s>
    double overlap(const StateVector &s) const;

   private:
    std::size_t n_ = 0;
    Eigen::MatrixXcd m_;
};

/// Expectation of a Hermitian word. The state-vector path is matrix-free.
double pauli_expectation(const PauliString &p, const StateVector &s);
double pauli_expectation(const PauliString &p, const DensityMatrix &rho);

/// P|in> into out (both of size 2^n), without forming a matrix.
void apply_pauli(const PauliString &p, const std::vector<cd> &in, std::vector<cd> &out);

/// Reverses the low n bits: maps a qubit mask to a basis-index mask.
std::uint64_t qubit_mask_to_index_mask(std::uint64_t mask, std::size_t n);

}  // namespace graphbell
