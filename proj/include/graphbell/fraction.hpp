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
#include <numeric>
#include <stdexcept>
#include <string>

namespace graphbell {

/// Reduced rational number with positive denominator. Used for LHV bounds,
/// which are dyadic rationals for every normalized graph Bell operator.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr Fraction() = default;
    constexpr Fraction(std::int64_t numerator, std::int64_t denominator = 1) : num(numerator), den(denominator) {
        if (den == 0) {
            throw std::invalid_argument("Fraction with zero denominator");
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        auto g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    /// value = units / 2^log2_den
    static Fraction dyadic(std::int64_t units, int log2_den) {
        if (log2_den < 0 || log2_den > 62) {
            throw std::out_of_range("dyadic exponent out of range");
        }
        return Fraction(units, std::int64_t{1} << log2_den);
    }

    double to_double() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }

    std::string str() const {
        if (den == 1) {
            return std::to_string(num);
        }
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend Fraction operator*(const Fraction &a, const Fraction &b) {
        // Cross-reduce first to keep intermediates small.
        auto g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
        auto g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
        if (g1 == 0) g1 = 1;
        if (g2 == 0) g2 = 1;
        return Fraction((a.num / g1) * (b.num / g2), (a.den / g2) * (b.den / g1));
    }

    friend bool operator==(const Fraction &a, const Fraction &b) = default;

    friend bool operator<(const Fraction &a, const Fraction &b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator>(const Fraction &a, const Fraction &b) {
        return b < a;
    }
    friend bool operator<=(const Fraction &a, const Fraction &b) {
        return !(b < a);
    }
};

}  // namespace graphbell
