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

#include "graphbell/pauli.hpp"

#include <bit>
#include <cctype>
#include <cmath>

#include "graphbell/errors.hpp"

namespace graphbell {

namespace {

std::uint64_t low_mask(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void check_same_size(const PauliString &p, const PauliString &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw DimensionError("Pauli size mismatch: " + std::to_string(p.num_qubits()) + " vs " +
                             std::to_string(q.num_qubits()));
    }
}

const cd kPowersOfI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

PauliString::PauliString(std::size_t n) : PauliString(n, 0, 0, 0) {
}

PauliString::PauliString(std::size_t n, std::uint64_t x_bits, std::uint64_t z_bits, std::uint8_t log_i)
    : n_(n), x_(x_bits), z_(z_bits), log_i_(log_i & 3) {
    if (n > kMaxPauliQubits) {
        throw CapacityError("Pauli words are limited to " + std::to_string(kMaxPauliQubits) + " qubits");
    }
    if ((x_bits | z_bits) & ~low_mask(n)) {
        throw ContractError("Pauli masks use bits beyond qubit count " + std::to_string(n));
    }
}

PauliString PauliString::from_letters(std::string_view letters, int sign) {
    if (sign != 1 && sign != -1) {
        throw ContractError("Pauli sign must be +1 or -1");
    }
    std::string text = sign < 0 ? "-" : "+";
    text.append(letters);
    return parse_pauli(text, letters.size());
}

cd PauliString::phase() const {
    return kPowersOfI[log_i_];
}

int PauliString::sign() const {
    if (!is_hermitian()) {
        throw ContractError("Pauli word " + str() + " is not Hermitian");
    }
    return log_i_ == 0 ? 1 : -1;
}

std::size_t PauliString::weight() const {
    return static_cast<std::size_t>(std::popcount(x_ | z_));
}

char PauliString::letter(std::size_t qubit) const {
    bool x = (x_ >> qubit) & 1;
    bool z = (z_ >> qubit) & 1;
    return "IZXY"[(x << 1) | z];
}

std::string PauliString::letters() const {
    std::string out(n_, 'I');
    for (std::size_t q = 0; q < n_; ++q) {
        out[q] = letter(q);
    }
    return out;
}

std::string PauliString::str() const {
    static const char *kPrefix[4] = {"+", "+i", "-", "-i"};
    return kPrefix[log_i_] + letters();
}

PauliString PauliString::negated() const {
    return PauliString(n_, x_, z_, static_cast<std::uint8_t>(log_i_ + 2));
}

PauliString PauliString::unsigned_word() const {
    return PauliString(n_, x_, z_, 0);
}

std::strong_ordering operator<=>(const PauliString &a, const PauliString &b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.x_ <=> b.x_; c != 0) return c;
    if (auto c = a.z_ <=> b.z_; c != 0) return c;
    return a.log_i_ <=> b.log_i_;
}

PauliString pauli_multiply(const PauliString &p, const PauliString &q) {
    check_same_size(p, q);
    // Letter L(x,z) = i^{xz} X^x Z^z; Z^{z1} X^{x2} = (-1)^{z1 x2} X^{x2} Z^{z1}.
    std::uint64_t x = p.x_bits() ^ q.x_bits();
    std::uint64_t z = p.z_bits() ^ q.z_bits();
    int e = p.log_i() + q.log_i();
    e += std::popcount(p.x_bits() & p.z_bits());
    e += std::popcount(q.x_bits() & q.z_bits());
    e += 2 * std::popcount(p.z_bits() & q.x_bits());
    e -= std::popcount(x & z);
    return PauliString(p.num_qubits(), x, z, static_cast<std::uint8_t>(((e % 4) + 4) % 4));
}

bool pauli_commutes(const PauliString &p, const PauliString &q) {
    check_same_size(p, q);
    int s = std::popcount(p.x_bits() & q.z_bits()) + std::popcount(p.z_bits() & q.x_bits());
    return (s & 1) == 0;
}

PauliString parse_pauli(std::string_view text, std::size_t n) {
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_space();
    std::uint8_t log_i = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        log_i = text[pos] == '-' ? 2 : 0;
        ++pos;
    }
    std::uint64_t x = 0, z = 0;
    std::size_t count = 0;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (count >= n) {
            throw ParseError("Pauli text '" + std::string(text) + "' has more than " + std::to_string(n) +
                                 " letters",
                             count);
        }
        switch (c) {
            case 'I':
            case '_':
                break;
            case 'X':
                x |= std::uint64_t{1} << count;
                break;
            case 'Z':
                z |= std::uint64_t{1} << count;
                break;
            case 'Y':
                x |= std::uint64_t{1} << count;
                z |= std::uint64_t{1} << count;
                break;
            default:
                throw ParseError("bad Pauli letter '" + std::string(1, c) + "' at position " +
                                     std::to_string(count),
                                 count);
        }
        ++count;
    }
    if (count != n) {
        throw ParseError("Pauli text '" + std::string(text) + "' has " + std::to_string(count) +
                             " letters, expected " + std::to_string(n),
                         count);
    }
    return PauliString(n, x, z, log_i);
}

std::uint64_t qubit_mask_to_index_mask(std::uint64_t mask, std::size_t n) {
    std::uint64_t out = 0;
    for (std::size_t q = 0; q < n; ++q) {
        if ((mask >> q) & 1) {
            out |= std::uint64_t{1} << (n - 1 - q);
        }
    }
    return out;
}

namespace {

// P|c> = i^{log_i + |x&z|} (-1)^{|zi & c|} |c ^ xi>
struct PauliAction {
    std::uint64_t xi;
    std::uint64_t zi;
    cd scale;

    explicit PauliAction(const PauliString &p) {
        std::size_t n = p.num_qubits();
        xi = qubit_mask_to_index_mask(p.x_bits(), n);
        zi = qubit_mask_to_index_mask(p.z_bits(), n);
        int e = (p.log_i() + std::popcount(p.x_bits() & p.z_bits())) & 3;
        scale = kPowersOfI[e];
    }
    cd coefficient(std::uint64_t c) const {
        return (std::popcount(zi & c) & 1) ? -scale : scale;
    }
};

}  // namespace

void apply_pauli(const PauliString &p, const std::vector<cd> &in, std::vector<cd> &out) {
    std::size_t dim = std::size_t{1} << p.num_qubits();
    if (in.size() != dim) {
        throw DimensionError("state size does not match Pauli word");
    }
    out.assign(dim, cd{0, 0});
    PauliAction act(p);
    for (std::uint64_t c = 0; c < dim; ++c) {
        out[c ^ act.xi] = act.coefficient(c) * in[c];
    }
}

Eigen::MatrixXcd pauli_to_matrix(const PauliString &p) {
    std::size_t n = p.num_qubits();
    if (n > kMaxDenseQubits) {
        throw CapacityError("dense Pauli matrix limited to " + std::to_string(kMaxDenseQubits) + " qubits");
    }
    std::size_t dim = std::size_t{1} << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    PauliAction act(p);
    for (std::uint64_t c = 0; c < dim; ++c) {
        m(c ^ act.xi, c) = act.coefficient(c);
    }
    return m;
}

StateVector::StateVector(std::size_t n, std::vector<cd> amplitudes, bool normalize)
    : n_(n), amps_(std::move(amplitudes)) {
    if (n > kMaxStateQubits) {
        throw CapacityError("state vectors limited to " + std::to_string(kMaxStateQubits) + " qubits");
    }
    if (amps_.size() != (std::size_t{1} << n)) {
        throw DimensionError("expected 2^" + std::to_string(n) + " amplitudes, got " +
                             std::to_string(amps_.size()));
    }
    double norm2 = 0;
    for (const auto &a : amps_) norm2 += std::norm(a);
    if (normalize) {
        if (norm2 == 0) throw ContractError("cannot normalize the zero vector");
        double s = 1.0 / std::sqrt(norm2);
        for (auto &a : amps_) a *= s;
    } else if (std::abs(norm2 - 1.0) > kEqualityTolerance) {
        throw ContractError("state vector is not normalized (norm^2 = " + std::to_string(norm2) + ")");
    }
}

StateVector StateVector::basis(std::size_t n, std::uint64_t index) {
    std::vector<cd> a(std::size_t{1} << n, cd{0, 0});
    if (index >= a.size()) throw ContractError("basis index out of range");
    a[index] = 1;
    return StateVector(n, std::move(a));
}

cd StateVector::inner(const StateVector &other) const {
    if (other.n_ != n_) throw DimensionError("state size mismatch");
    cd acc{0, 0};
    for (std::size_t i = 0; i < amps_.size(); ++i) acc += std::conj(amps_[i]) * other.amps_[i];
    return acc;
}

double StateVector::fidelity(const StateVector &other) const {
    return std::norm(inner(other));
}

DensityMatrix::DensityMatrix(std::size_t n, Eigen::MatrixXcd entries, bool check_psd) : n_(n), m_(std::move(entries)) {
    if (n > kMaxDenseQubits) {
        throw CapacityError("density matrices limited to " + std::to_string(kMaxDenseQubits) + " qubits");
    }
    auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    if (m_.rows() != dim || m_.cols() != dim) {
        throw DimensionError("density matrix must be 2^n x 2^n");
    }
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > kEqualityTolerance) {
        throw ContractError("density matrix is not Hermitian");
    }
    if (std::abs(m_.trace() - cd{1, 0}) > kEqualityTolerance) {
        throw ContractError("density matrix trace is not 1");
    }
    if (check_psd) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -kResidueTolerance) {
            throw ContractError("density matrix is not positive semidefinite");
        }
    }
}

DensityMatrix DensityMatrix::from_state(const StateVector &s) {
    Eigen::Map<const Eigen::VectorXcd> v(s.amplitudes().data(), static_cast<Eigen::Index>(s.dim()));
    return DensityMatrix(s.num_qubits(), v * v.adjoint(), false);
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t n) {
    auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    return DensityMatrix(n, Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim), false);
}

double DensityMatrix::overlap(const StateVector &s) const {
    if (s.num_qubits() != n_) throw DimensionError("state size mismatch");
    Eigen::Map<const Eigen::VectorXcd> v(s.amplitudes().data(), static_cast<Eigen::Index>(s.dim()));
    cd r = v.dot(m_ * v);  // dot conjugates the left operand
    if (std::abs(r.imag()) > kResidueTolerance) throw NumericalError("overlap has imaginary residue");
    return r.real();
}

namespace {

double checked_real(cd v) {
    if (std::abs(v.imag()) > kResidueTolerance) {
        throw NumericalError("Pauli expectation has imaginary residue " + std::to_string(v.imag()));
    }
    return v.real();
}

void require_hermitian(const PauliString &p) {
    if (!p.is_hermitian()) {
        throw ContractError("expectation requires a Hermitian word, got " + p.str());
    }
}

}  // namespace

double pauli_expectation(const PauliString &p, const StateVector &s) {
    require_hermitian(p);
    if (p.num_qubits() != s.num_qubits()) throw DimensionError("Pauli/state size mismatch");
    PauliAction act(p);
    const auto &a = s.amplitudes();
    cd acc{0, 0};
    for (std::uint64_t c = 0; c < a.size(); ++c) {
        acc += std::conj(a[c ^ act.xi]) * act.coefficient(c) * a[c];
    }
    return checked_real(acc);
}

double pauli_expectation(const PauliString &p, const DensityMatrix &rho) {
    require_hermitian(p);
    if (p.num_qubits() != rho.num_qubits()) throw DimensionError("Pauli/state size mismatch");
    PauliAction act(p);
    const auto &m = rho.matrix();
    // Tr(P rho) = sum_c <c^x|P|c> rho(c, c^x)
    cd acc{0, 0};
    for (std::uint64_t c = 0; c < static_cast<std::uint64_t>(m.rows()); ++c) {
        acc += act.coefficient(c) * m(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(c ^ act.xi));
    }
    return checked_real(acc);
}

}  // namespace graphbell
