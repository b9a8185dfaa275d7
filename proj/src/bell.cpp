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

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

#include "graphbell/errors.hpp"
#include "graphbell/format.hpp"
#include "graphbell/stabilizer.hpp"

namespace graphbell {

namespace {

using WordKey = std::pair<std::uint64_t, std::uint64_t>;

WordKey key_of(const PauliString &p) {
    return {p.x_bits(), p.z_bits()};
}

}  // namespace

SignedPauliSum::SignedPauliSum(std::size_t n) : n_(n) {
}

SignedPauliSum::SignedPauliSum(std::size_t n, const std::vector<PauliTerm> &terms) : n_(n) {
    std::map<WordKey, double> merged;
    for (const auto &t : terms) {
        if (t.word.num_qubits() != n) throw DimensionError("term size does not match sum");
        merged[key_of(t.word)] += t.coeff * t.word.sign();
    }
    for (const auto &[key, value] : merged) {
        if (value == 0) continue;
        PauliString w(n, key.first, key.second, value < 0 ? 2 : 0);
        terms_.push_back({std::abs(value), w});
    }
}

double SignedPauliSum::signed_coefficient(const PauliString &word) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key_of(word),
                               [](const PauliTerm &t, const WordKey &k) { return key_of(t.word) < k; });
    if (it == terms_.end() || key_of(it->word) != key_of(word)) return 0;
    return it->coeff * it->word.sign();
}

Eigen::MatrixXcd SignedPauliSum::to_dense() const {
    if (n_ > kMaxDenseQubits) throw CapacityError("dense operator limited to 10 qubits");
    auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &t : terms_) m += t.coeff * pauli_to_matrix(t.word);
    return m;
}

std::string SignedPauliSum::str() const {
    std::ostringstream out;
    for (const auto &t : terms_) out << format_coefficient(t.coeff) << " " << t.word.str() << "\n";
    return out.str();
}

bool approx_equal(const SignedPauliSum &a, const SignedPauliSum &b, double tol) {
    if (a.num_qubits() != b.num_qubits() || a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.terms()[i].word != b.terms()[i].word) return false;
        if (std::abs(a.terms()[i].coeff - b.terms()[i].coeff) > tol) return false;
    }
    return true;
}

SignedPauliSum pauli_decompose(const Eigen::MatrixXcd &m, double tol) {
    auto dim = static_cast<std::size_t>(m.rows());
    if (dim == 0 || !std::has_single_bit(dim) || m.cols() != m.rows()) {
        throw DimensionError("Pauli decomposition needs a 2^n x 2^n matrix");
    }
    auto n = static_cast<std::size_t>(std::countr_zero(dim));
    if (n > 8) throw CapacityError("Pauli decomposition limited to 8 qubits");
    std::vector<PauliTerm> terms;
    for (std::uint64_t x = 0; x < dim; ++x) {
        for (std::uint64_t z = 0; z < dim; ++z) {
            PauliString p(n, x, z, 0);
            auto pm = pauli_to_matrix(p);
            cd c = (pm.adjoint() * m).trace() / static_cast<double>(dim);
            if (std::abs(c.imag()) > kResidueTolerance) {
                throw NumericalError("matrix is not Hermitian: complex Pauli coefficient");
            }
            if (std::abs(c.real()) > tol) terms.push_back({c.real(), p});
        }
    }
    return SignedPauliSum(n, terms);
}

SignedPauliSum bell_operator_from_stabilizers(std::size_t n, std::span<const PauliString> words) {
    if (words.size() != (std::size_t{1} << n)) {
        throw DimensionError("expected 2^n stabilizer words");
    }
    double c = std::ldexp(1.0, -static_cast<int>(n));
    std::vector<PauliTerm> terms;
    terms.reserve(words.size());
    for (const auto &w : words) terms.push_back({c, w});
    SignedPauliSum out(n, terms);
    if (out.size() != words.size()) throw ContractError("stabilizer words are not distinct");
    return out;
}

SignedPauliSum graph_bell_operator(const Graph &g) {
    if (g.num_vertices() > kMaxBellOperatorQubits) {
        throw CapacityError("graph Bell operators limited to " + std::to_string(kMaxBellOperatorQubits) +
                            " qubits");
    }
    auto words = stabilizer_words(g);
    return bell_operator_from_stabilizers(g.num_vertices(), words);
}

MeasurementSetting::MeasurementSetting(std::vector<Eigen::Vector3d> a, std::vector<Eigen::Vector3d> a_prime)
    : a_(std::move(a)), a_prime_(std::move(a_prime)) {
    if (a_.size() != a_prime_.size() || a_.empty()) {
        throw DimensionError("measurement setting needs two vectors for each of n >= 1 qubits");
    }
    for (std::size_t k = 0; k < a_.size(); ++k) {
        if (std::abs(a_[k].norm() - 1) > 1e-12 || std::abs(a_prime_[k].norm() - 1) > 1e-12) {
            throw ContractError("measurement direction for qubit " + std::to_string(k) + " is not a unit vector");
        }
    }
}

MeasurementSetting MeasurementSetting::uniform(std::size_t n, const Eigen::Vector3d &a, const Eigen::Vector3d &a_prime) {
    return MeasurementSetting(std::vector<Eigen::Vector3d>(n, a), std::vector<Eigen::Vector3d>(n, a_prime));
}

MeasurementSetting MeasurementSetting::xy(std::size_t n) {
    return uniform(n, Eigen::Vector3d::UnitX(), Eigen::Vector3d::UnitY());
}

namespace {

// (letter index 0..2 for x,y,z; sign) when v is a signed axis.
std::optional<std::pair<int, int>> as_axis(const Eigen::Vector3d &v) {
    for (int i = 0; i < 3; ++i) {
        if (std::abs(std::abs(v[i]) - 1) < 1e-12 && std::abs(v[(i + 1) % 3]) < 1e-12 &&
            std::abs(v[(i + 2) % 3]) < 1e-12) {
            return std::make_pair(i, v[i] > 0 ? 1 : -1);
        }
    }
    return std::nullopt;
}

Eigen::Matrix2cd sigma_dot(const Eigen::Vector3d &v) {
    Eigen::Matrix2cd m;
    m << cd(v[2], 0), cd(v[0], -v[1]), cd(v[0], v[1]), cd(-v[2], 0);
    return m;
}

using IntSum = std::map<WordKey, std::int64_t>;

// sum_{terms} t (x) (s1 L1 + s2 L2) on the next qubit.
void accumulate_tensor(IntSum &out, const IntSum &in, std::size_t qubit, std::pair<int, int> l1, int s1,
                       std::pair<int, int> l2, int s2) {
    auto letter_bits = [&](int axis) -> WordKey {
        std::uint64_t b = std::uint64_t{1} << qubit;
        if (axis == 0) return {b, 0};
        if (axis == 1) return {b, b};
        return {0, b};
    };
    for (const auto &[key, c] : in) {
        for (auto [axis_sign, s] : {std::make_pair(l1, s1), std::make_pair(l2, s2)}) {
            auto [axis, sign] = axis_sign;
            auto lb = letter_bits(axis);
            out[{key.first | lb.first, key.second | lb.second}] += c * sign * s;
        }
    }
}

SignedPauliSum mk_symbolic(std::size_t n, const MeasurementSetting &setting) {
    auto axis0 = *as_axis(setting.a(0));
    auto axis0p = *as_axis(setting.a_prime(0));
    auto letter_key = [](std::pair<int, int> ax) -> WordKey {
        if (ax.first == 0) return {1, 0};
        if (ax.first == 1) return {1, 1};
        return {0, 1};
    };
    IntSum b, bp;
    b[letter_key(axis0)] += axis0.second;
    bp[letter_key(axis0p)] += axis0p.second;
    for (std::size_t k = 1; k < n; ++k) {
        auto a = *as_axis(setting.a(k));
        auto ap = *as_axis(setting.a_prime(k));
        IntSum nb, nbp;
        // B_k  = B (x) (a + a') + B' (x) (a - a')
        // B'_k = B' (x) (a' + a) + B (x) (a' - a)
        accumulate_tensor(nb, b, k, a, 1, ap, 1);
        accumulate_tensor(nb, bp, k, a, 1, ap, -1);
        accumulate_tensor(nbp, bp, k, ap, 1, a, 1);
        accumulate_tensor(nbp, b, k, ap, 1, a, -1);
        std::erase_if(nb, [](const auto &kv) { return kv.second == 0; });
        std::erase_if(nbp, [](const auto &kv) { return kv.second == 0; });
        b = std::move(nb);
        bp = std::move(nbp);
    }
    double scale = std::pow(2.0 * std::sqrt(2.0), -static_cast<double>(n - 1));
    std::vector<PauliTerm> terms;
    for (const auto &[key, c] : b) {
        terms.push_back({static_cast<double>(c) * scale, PauliString(n, key.first, key.second, 0)});
    }
    return SignedPauliSum(n, terms);
}

Eigen::MatrixXcd mk_dense(std::size_t n, const MeasurementSetting &setting) {
    const double c = 1.0 / (2.0 * std::sqrt(2.0));
    Eigen::MatrixXcd b = sigma_dot(setting.a(0));
    Eigen::MatrixXcd bp = sigma_dot(setting.a_prime(0));
    for (std::size_t k = 1; k < n; ++k) {
        Eigen::Matrix2cd sa = sigma_dot(setting.a(k));
        Eigen::Matrix2cd sap = sigma_dot(setting.a_prime(k));
        Eigen::Matrix2cd plus = sa + sap;
        Eigen::Matrix2cd minus = sa - sap;
        Eigen::MatrixXcd nb = c * (Eigen::MatrixXcd(Eigen::kroneckerProduct(b, plus)) +
                                   Eigen::MatrixXcd(Eigen::kroneckerProduct(bp, minus)));
        Eigen::MatrixXcd nbp = c * (Eigen::MatrixXcd(Eigen::kroneckerProduct(bp, plus)) -
                                    Eigen::MatrixXcd(Eigen::kroneckerProduct(b, minus)));
        b = std::move(nb);
        bp = std::move(nbp);
    }
    return b;
}

}  // namespace

bool MeasurementSetting::is_pauli_axis() const {
    for (std::size_t k = 0; k < a_.size(); ++k) {
        if (!as_axis(a_[k]) || !as_axis(a_prime_[k])) return false;
    }
    return true;
}

MkOperator mk_recursive(std::size_t n, const MeasurementSetting &setting) {
    if (n < 1) throw ContractError("MK operator needs n >= 1");
    if (setting.num_qubits() != n) throw DimensionError("setting size does not match n");
    MkOperator out;
    out.n = n;
    bool symbolic = setting.is_pauli_axis();
    if (!symbolic && n > kMaxDenseQubits) {
        throw CapacityError("non-axis MK settings need the dense path, limited to 10 qubits");
    }
    if (symbolic) {
        if (n > kMaxStateQubits) throw CapacityError("symbolic MK expansion limited to 20 qubits");
        out.pauli = mk_symbolic(n, setting);
    }
    if (n <= kMaxDenseQubits) out.dense = mk_dense(n, setting);
    return out;
}

double mk_phase(std::size_t n) {
    return static_cast<double>(n - 1) * M_PI / 4.0;
}

Eigen::MatrixXcd SparseOperator::to_dense() const {
    if (n > kMaxDenseQubits) throw CapacityError("dense operator limited to 10 qubits");
    auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &e : entries) m(static_cast<Eigen::Index>(e.row), static_cast<Eigen::Index>(e.col)) += e.value;
    return m;
}

SparseOperator mk_closed_form(std::size_t n) {
    if (n < 1 || n > 62) throw ContractError("closed-form MK operator needs 1 <= n <= 62");
    std::uint64_t ones = (std::uint64_t{1} << n) - 1;
    double beta = mk_phase(n);
    cd e = std::polar(1.0, beta);
    return SparseOperator{n, {{ones, 0, e}, {0, ones, std::conj(e)}}};
}

double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 8) {
        double s = 0;
        for (double v : values) s += v;
        return s;
    }
    auto half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

namespace {

double real_or_throw(cd v) {
    if (std::abs(v.imag()) > kResidueTolerance) throw NumericalError("operator expectation is not real");
    return v.real();
}

template <typename State>
double sum_expectation(const SignedPauliSum &op, const State &s) {
    if (op.num_qubits() != s.num_qubits()) throw DimensionError("operator/state size mismatch");
    std::vector<double> parts;
    parts.reserve(op.size());
    for (const auto &t : op.terms()) parts.push_back(t.coeff * pauli_expectation(t.word, s));
    return pairwise_sum(parts);
}

}  // namespace

double operator_expectation(const SignedPauliSum &op, const StateVector &s) {
    return sum_expectation(op, s);
}

double operator_expectation(const SignedPauliSum &op, const DensityMatrix &rho) {
    return sum_expectation(op, rho);
}

double operator_expectation(const SparseOperator &op, const StateVector &s) {
    if (op.n != s.num_qubits()) throw DimensionError("operator/state size mismatch");
    cd acc{0, 0};
    for (const auto &e : op.entries) acc += std::conj(s[e.row]) * e.value * s[e.col];
    return real_or_throw(acc);
}

double operator_expectation(const SparseOperator &op, const DensityMatrix &rho) {
    if (op.n != rho.num_qubits()) throw DimensionError("operator/state size mismatch");
    cd acc{0, 0};
    for (const auto &e : op.entries) {
        acc += e.value * rho.matrix()(static_cast<Eigen::Index>(e.col), static_cast<Eigen::Index>(e.row));
    }
    return real_or_throw(acc);
}

double operator_expectation(const Eigen::MatrixXcd &op, const StateVector &s) {
    if (op.rows() != static_cast<Eigen::Index>(s.dim())) throw DimensionError("operator/state size mismatch");
    Eigen::Map<const Eigen::VectorXcd> v(s.amplitudes().data(), static_cast<Eigen::Index>(s.dim()));
    return real_or_throw(v.dot(op * v));
}

double operator_expectation(const Eigen::MatrixXcd &op, const DensityMatrix &rho) {
    if (op.rows() != rho.matrix().rows()) throw DimensionError("operator/state size mismatch");
    return real_or_throw((op * rho.matrix()).trace());
}

}  // namespace graphbell
