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

#include "graphbell/noise.hpp"

#include <cmath>
#include <random>

#include "graphbell/bell.hpp"
#include "graphbell/errors.hpp"

namespace graphbell {

NoiseSpec::NoiseSpec(double p) : p_(p) {
    if (!(p >= 0.0 && p <= 1.0)) throw ContractError("noise retention p must lie in [0, 1]");
}

DensityMatrix depolarize_qubit(const DensityMatrix &rho, std::size_t qubit, const NoiseSpec &spec) {
    const std::size_t n = rho.num_qubits();
    if (n > kMaxNoiseQubits) throw CapacityError("dense depolarizing channel limited to 8 qubits");
    if (qubit >= n) throw DimensionError("qubit index out of range");
    const auto &m = rho.matrix();
    const Eigen::Index dim = m.rows();
    const Eigen::Index b = Eigen::Index{1} << (n - 1 - qubit);

    // Sum of s_k rho s_k for k = I, X, Y, Z, written entrywise.
    Eigen::MatrixXcd twirl(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            bool same = ((r & b) != 0) == ((c & b) != 0);
            cd diag = m(r, c);
            cd flip = m(r ^ b, c ^ b);
            cd x_term = flip;
            cd y_term = same ? flip : -flip;
            cd z_term = same ? diag : -diag;
            twirl(r, c) = diag + x_term + y_term + z_term;
        }
    }
    Eigen::MatrixXcd out = spec.p() * m + (1.0 - spec.p()) / 4.0 * twirl;
    return DensityMatrix(n, std::move(out), false);
}

DensityMatrix depolarize_all(const DensityMatrix &rho, const NoiseSpec &spec) {
    DensityMatrix out = rho;
    for (std::size_t q = 0; q < rho.num_qubits(); ++q) out = depolarize_qubit(out, q, spec);
    return out;
}

StateVector ghz_state(std::size_t n, double beta) {
    if (n < 1 || n > kMaxStateQubits) throw CapacityError("ghz_state needs 1 <= n <= 20");
    std::vector<cd> amps(std::size_t{1} << n, 0.0);
    amps.front() = 1.0 / std::sqrt(2.0);
    amps.back() = std::polar(1.0 / std::sqrt(2.0), beta);
    return StateVector(n, std::move(amps));
}

double noisy_ghz_mk_numeric(std::size_t n, const NoiseSpec &spec) {
    if (n < 1 || n > kMaxNoiseQubits) throw CapacityError("dense noisy GHZ simulation limited to 8 qubits");
    DensityMatrix rho = depolarize_all(DensityMatrix::from_state(ghz_state(n, mk_phase(n))), spec);
    return operator_expectation(mk_closed_form(n), rho);
}

NoisyMk noisy_ghz_mk(std::size_t n, const NoiseSpec &spec) {
    if (n < 1) throw ContractError("noisy_ghz_mk needs n >= 1");
    NoisyMk out;
    const double nn = static_cast<double>(n);
    out.mk_value = std::pow(spec.p(), nn);
    out.relative_violation = std::pow(std::sqrt(2.0) * spec.p(), nn) / std::sqrt(2.0);
    if (n <= 6) {
        out.numeric_value = noisy_ghz_mk_numeric(n, spec);
        if (std::abs(*out.numeric_value - out.mk_value) > 1e-10) {
            throw NumericalError("dense noisy GHZ value disagrees with p^n");
        }
    }
    return out;
}

std::optional<std::size_t> mk_violation_onset(const NoiseSpec &spec, std::size_t n_max) {
    for (std::size_t n = 1; n <= n_max; ++n) {
        double r = std::pow(std::sqrt(2.0) * spec.p(), static_cast<double>(n)) / std::sqrt(2.0);
        if (r > 1.0 + kViolationTolerance) return n;
    }
    return std::nullopt;
}

double depolarized_stabilizer_expectation(const PauliString &word, const NoiseSpec &spec) {
    return std::pow(spec.p(), static_cast<double>(word.weight()));
}

ShotEstimate sample_expectation(double true_value, std::int64_t shots, std::uint64_t seed) {
    if (shots < 2) throw ContractError("sample_expectation needs at least 2 shots");
    if (!(true_value >= -1.0 && true_value <= 1.0)) throw ContractError("true value must lie in [-1, 1]");
    std::mt19937_64 rng(seed);
    const double p_plus = (1.0 + true_value) / 2.0;
    std::int64_t plus = 0;
    for (std::int64_t s = 0; s < shots; ++s) {
        // 53-bit uniform in [0, 1), identical on every platform.
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < p_plus) ++plus;
    }
    ShotEstimate out;
    out.shots = shots;
    out.value = static_cast<double>(2 * plus - shots) / static_cast<double>(shots);
    out.std_error = std::sqrt(std::max(0.0, 1.0 - out.value * out.value) / static_cast<double>(shots));
    return out;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    // splitmix64 finalizer over the pair.
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace graphbell
