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

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>

#include "graphbell/fraction.hpp"

namespace graphbell {

/// The dyadic rational equal to `v`, if its denominator is at most 2^max_log2.
inline std::optional<Fraction> as_dyadic(double v, int max_log2 = 40) {
    double scaled = v;
    for (int k = 0; k <= max_log2; ++k, scaled *= 2) {
        if (std::abs(scaled) > 9.0e15) break;
        if (scaled == std::nearbyint(scaled)) {
            return Fraction::dyadic(static_cast<std::int64_t>(scaled), k);
        }
    }
    return std::nullopt;
}

/// `significant` digits, %g style.
inline std::string format_decimal(double v, int significant = 6) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant, v);
    return buf;
}

/// Exact fraction when dyadic, else a 12-digit decimal.
inline std::string format_coefficient(double v) {
    if (auto f = as_dyadic(v, 30)) return f->str();
    return format_decimal(v, 12);
}

}  // namespace graphbell
