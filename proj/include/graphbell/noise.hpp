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
#include <vector>

#include "graphbell/pauli.hpp"

namespace graphbell {

/// Largest register the dense channel accepts.
inline constexpr std::size_t kMaxNoiseQubits = 8;

/// Per-qubit retention probability of the depolarizing channel.
class NoiseSpec {
   public:
    explicit NoiseSpec(double p);
    double p() const {
        return p_;
    }

   private:
    double p_;
};

struct ShotEstimate {
    double value = 0;
    double std_error = 0;
    std::int64_t shots = 0;
};

/// p rho + (1 - p)/4 sum_{k=0..3} s_k rho s_k on one qubit.
DensityMatrix depolarize_qubit(const DensityMatrix &rho, std::size_t qubit, const NoiseSpec &spec);
DensityMatrix depolarize_all(const DensityMatrix &rho, const NoiseSpec &spec);

/// (|0..0> + e^{i beta} |1..1>) / sqrt 2
StateVector ghz_state(std::size_t n, double beta);

struct NoisyMk {
    /// p^n
    double mk_value = 0;
    /// (sqrt2 p)^n / sqrt 2
    double relative_violation = 0;
    /// Dense-channel value for n <= 6.
    std::optional<double> numeric_value;
};

/// Analytic MK value and relative violation of the depolarized GHZ state
/// with matched phase. For n <= 6 the channel is also simulated densely and
/// must agree within 1e-10.
NoisyMk noisy_ghz_mk(std::size_t n, const NoiseSpec &spec);

/// MK value of the depolarized GHZ state from dense simulation, n <= kMaxNoiseQubits.
double noisy_ghz_mk_numeric(std::size_t n, const NoiseSpec &spec);

/// Tolerance used when comparing a relative violation with 1.
inline constexpr double kViolationTolerance = 1e-12;

/// Smallest n <= n_max whose relative violation exceeds 1, if any.
std::optional<std::size_t> mk_violation_onset(const NoiseSpec &spec, std::size_t n_max = 1000);

/// Expectation of a stabilizer word of a pure stabilizer state after
/// depolarizing every qubit: p^weight.
double depolarized_stabilizer_expectation(const PauliString &word, const NoiseSpec &spec);

/// Draws `shots` +-1 outcomes with P(+1) = (1 + e)/2 from mt19937_64 seeded
/// with `seed`. value is the mean, stderr sqrt((1 - value^2)/shots).
ShotEstimate sample_expectation(double true_value, std::int64_t shots, std::uint64_t seed);

/// Seed for the index-th independent stream derived from a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace graphbell
