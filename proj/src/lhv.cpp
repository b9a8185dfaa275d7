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

#include "graphbell/lhv.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>

#include "graphbell/errors.hpp"
#include "graphbell/format.hpp"

namespace graphbell {

int LhvAssignment::value(std::size_t qubit, char letter) const {
    if (qubit >= n) throw DimensionError("qubit out of range for assignment");
    std::uint64_t mask = letter == 'X' ? neg_x : letter == 'Y' ? neg_y : letter == 'Z' ? neg_z : 0;
    if (letter != 'X' && letter != 'Y' && letter != 'Z') throw ContractError("letter must be X, Y or Z");
    return ((mask >> qubit) & 1) ? -1 : 1;
}

int LhvAssignment::evaluate(const PauliString &p) const {
    if (p.num_qubits() != n) throw DimensionError("assignment/word size mismatch");
    std::uint64_t x = p.x_bits(), z = p.z_bits();
    int parity = std::popcount((x & ~z) & neg_x) + std::popcount((x & z) & neg_y) + std::popcount((~x & z) & neg_z);
    return (parity & 1) ? -p.sign() : p.sign();
}

std::string LhvAssignment::str() const {
    std::string out;
    for (std::size_t q = 0; q < n; ++q) {
        if (q) out += ' ';
        for (char l : {'X', 'Y', 'Z'}) out += value(q, l) > 0 ? '+' : '-';
    }
    return out;
}

std::string to_string(BoundKind kind) {
    switch (kind) {
        case BoundKind::exact:
            return "exact";
        case BoundKind::upper_bound:
            return "upper_bound";
        case BoundKind::analytic:
            return "analytic";
    }
    return "?";
}

double lhv_value(const SignedPauliSum &op, const LhvAssignment &a) {
    if (op.num_qubits() != a.n) throw DimensionError("assignment/operator size mismatch");
    std::vector<double> parts;
    parts.reserve(op.size());
    for (const auto &t : op.terms()) parts.push_back(t.coeff * a.evaluate(t.word));
    return pairwise_sum(parts);
}

namespace {

struct Variable {
    std::size_t qubit;
    char letter;
};

using Bits = std::vector<std::uint64_t>;

std::vector<Variable> free_variables(const SignedPauliSum &op, LhvRestriction restriction) {
    std::vector<Variable> vars;
    const auto &terms = op.terms();
    for (std::size_t q = 0; q < op.num_qubits(); ++q) {
        for (char l : {'X', 'Y', 'Z'}) {
            if (l == 'Z' && restriction == LhvRestriction::z_plus_one) continue;
            bool present = std::any_of(terms.begin(), terms.end(), [&](const PauliTerm &t) { return t.word.letter(q) == l; });
            if (present) vars.push_back({q, l});
        }
    }
    return vars;
}

std::int64_t popcount_and(const Bits &a, const Bits &b) {
    std::int64_t c = 0;
    for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

}  // namespace

std::size_t lhv_free_variables(const SignedPauliSum &op, LhvRestriction restriction) {
    return free_variables(op, restriction).size();
}

LhvBound lhv_max(const SignedPauliSum &op, LhvRestriction restriction) {
    const std::size_t n = op.num_qubits();
    const auto &terms = op.terms();
    if (terms.empty()) {
        return {0, Fraction(0), BoundKind::exact, LhvAssignment::all_plus(n), "brute"};
    }

    // Integer weights in units of the smallest coefficient.
    double unit = terms.front().coeff;
    for (const auto &t : terms) unit = std::min(unit, t.coeff);
    std::vector<std::int64_t> weight(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
        double r = terms[i].coeff / unit;
        weight[i] = std::llround(r);
        if (std::abs(r - static_cast<double>(weight[i])) > 1e-9 * r) {
            throw ContractError("lhv_max needs coefficients that are integer multiples of the smallest one");
        }
    }

    std::vector<Variable> vars = free_variables(op, restriction);
    if (vars.size() > kMaxLhvFreeVariables) {
        std::string hint = restriction == LhvRestriction::none ? "; try the Z->+1 restriction (--restrict-z)" : "";
        throw CapacityError("LHV search needs " + std::to_string(vars.size()) + " free outcomes, limit is " +
                            std::to_string(kMaxLhvFreeVariables) + hint);
    }
    const std::size_t k = vars.size();
    const std::size_t words = (terms.size() + 63) / 64;

    std::vector<Bits> var_mask(k, Bits(words, 0));
    Bits negative(words, 0);
    std::map<std::int64_t, Bits> classes;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        std::uint64_t bit = std::uint64_t{1} << (i % 64);
        if (terms[i].word.sign() < 0) negative[i / 64] |= bit;
        auto &cls = classes[weight[i]];
        cls.resize(words, 0);
        cls[i / 64] |= bit;
        for (std::size_t v = 0; v < k; ++v) {
            if (terms[i].word.letter(vars[v].qubit) == vars[v].letter) var_mask[v][i / 64] |= bit;
        }
    }
    std::vector<std::pair<std::int64_t, Bits>> class_list(classes.begin(), classes.end());
    std::vector<std::int64_t> class_size;
    for (const auto &[w, mask] : class_list) class_size.push_back(popcount_and(mask, mask));

    auto value_of = [&](const Bits &neg) {
        std::int64_t total = 0;
        for (std::size_t c = 0; c < class_list.size(); ++c) {
            total += class_list[c].first * (class_size[c] - 2 * popcount_and(neg, class_list[c].second));
        }
        return total;
    };

    // key bit (k-1-v) holds variable v, so the numerically least key is the
    // lexicographically least assignment.
    std::uint64_t key = 0;
    std::int64_t best = std::abs(value_of(negative));
    std::uint64_t best_key = 0;
    const std::uint64_t steps = std::uint64_t{1} << k;
    for (std::uint64_t i = 1; i < steps; ++i) {
        auto v = static_cast<std::size_t>(std::countr_zero(i));
        for (std::size_t w = 0; w < words; ++w) negative[w] ^= var_mask[v][w];
        key ^= std::uint64_t{1} << (k - 1 - v);
        std::int64_t val = std::abs(value_of(negative));
        if (val > best || (val == best && key < best_key)) {
            best = val;
            best_key = key;
        }
    }

    LhvAssignment witness = LhvAssignment::all_plus(n);
    for (std::size_t v = 0; v < k; ++v) {
        if (!((best_key >> (k - 1 - v)) & 1)) continue;
        std::uint64_t b = std::uint64_t{1} << vars[v].qubit;
        if (vars[v].letter == 'X') witness.neg_x |= b;
        if (vars[v].letter == 'Y') witness.neg_y |= b;
        if (vars[v].letter == 'Z') witness.neg_z |= b;
    }

    LhvBound out;
    out.value = static_cast<double>(best) * unit;
    if (auto u = as_dyadic(unit, 62)) out.fraction = Fraction(best) * *u;
    out.kind = BoundKind::exact;
    out.witness = witness;
    out.method = restriction == LhvRestriction::none ? "brute" : "brute(Z->+1)";
    return out;
}

namespace {

__int128 binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    __int128 r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<__int128>(n - k + i) / static_cast<__int128>(i);
    return r;
}

}  // namespace

LhvBound ghz_graph_bound(std::size_t n) {
    if (n < 2 || n > 64) throw ContractError("ghz_graph_bound needs 2 <= n <= 64");
    // Odd products of j generators reduce to (-1)^((j-1)/2) X^{(x) j} once Z -> +1;
    // with m of the X outcomes equal to -1 their sum depends only on m.
    __int128 best = -1;
    std::size_t best_m = 0;
    for (std::size_t m = 0; m <= n; ++m) {
        __int128 s = 0;
        for (std::size_t j = 1; j <= n; j += 2) {
            __int128 inner = 0;
            for (std::size_t t = 0; t <= std::min(j, m); ++t) {
                __int128 term = binomial(m, t) * binomial(n - m, j - t);
                inner += (t & 1) ? -term : term;
            }
            s += (((j - 1) / 2) & 1) ? -inner : inner;
        }
        if (s > best) {
            best = s;
            best_m = m;
        }
    }
    // D = (2^(n-1) + best) / 2^n
    __int128 num = (static_cast<__int128>(1) << (n - 1)) + best;
    int log2_den = static_cast<int>(n);
    while (log2_den > 0 && (num & 1) == 0) {
        num >>= 1;
        --log2_den;
    }
    if (log2_den > 62 || num > static_cast<__int128>(INT64_MAX)) {
        throw CapacityError("GHZ bound does not fit a 64-bit fraction");
    }
    LhvBound out;
    out.fraction = Fraction::dyadic(static_cast<std::int64_t>(num), log2_den);
    out.value = out.fraction->to_double();
    out.kind = BoundKind::exact;
    LhvAssignment w = LhvAssignment::all_plus(n);
    for (std::size_t q = n - best_m; q < n; ++q) w.neg_x |= std::uint64_t{1} << q;
    out.witness = w;
    out.method = "ghz";
    return out;
}

LhvBound ghz_formula_bound(std::size_t n) {
    if (n < 2 || n > 64 || n % 2 != 0) {
        throw ContractError("the closed form 1/2 + 2^-(n/2) applies to even n in [2, 64] only; use the ghz method");
    }
    LhvBound out;
    out.fraction = Fraction::dyadic((std::int64_t{1} << (n / 2 - 1)) + 1, static_cast<int>(n / 2));
    out.value = out.fraction->to_double();
    out.kind = BoundKind::analytic;
    out.method = "formula";
    return out;
}

LhvBound mk_bound(std::size_t n) {
    if (n < 1) throw ContractError("mk_bound needs n >= 1");
    LhvBound out;
    out.value = std::pow(2.0, -static_cast<double>(n - 1) / 2.0);
    if ((n - 1) % 2 == 0 && (n - 1) / 2 <= 62) out.fraction = Fraction::dyadic(1, static_cast<int>((n - 1) / 2));
    out.kind = BoundKind::analytic;
    out.method = "mk";
    return out;
}

MkBruteForce mk_bound_bruteforce(std::size_t n) {
    if (n < 1 || n > 12) throw CapacityError("MK brute force limited to 1 <= n <= 12");
    MkBruteForce out;
    out.n = n;
    out.scaled_max = -1;
    const std::uint64_t total = std::uint64_t{1} << (2 * n);
    // Key bits from the most significant end: a_1, a'_1, a_2, a'_2, ...
    auto outcome = [&](std::uint64_t key, std::size_t index) -> std::int64_t {
        return ((key >> (2 * n - 1 - index)) & 1) ? -1 : 1;
    };
    for (std::uint64_t key = 0; key < total; ++key) {
        std::int64_t b = outcome(key, 0), bp = outcome(key, 1);
        for (std::size_t q = 1; q < n; ++q) {
            std::int64_t a = outcome(key, 2 * q), ap = outcome(key, 2 * q + 1);
            // Scaled by sqrt(2)^(k-1): B_k = (B (a + a') + B' (a - a')) / 2.
            std::int64_t nb = (b * (a + ap) + bp * (a - ap)) / 2;
            std::int64_t nbp = (bp * (ap + a) + b * (ap - a)) / 2;
            b = nb;
            bp = nbp;
        }
        if (std::abs(b) > out.scaled_max) {
            out.scaled_max = std::abs(b);
            out.a_outcomes.assign(n, 0);
            out.a_prime_outcomes.assign(n, 0);
            for (std::size_t q = 0; q < n; ++q) {
                out.a_outcomes[q] = static_cast<int>(outcome(key, 2 * q));
                out.a_prime_outcomes[q] = static_cast<int>(outcome(key, 2 * q + 1));
            }
        }
    }
    out.value = static_cast<double>(out.scaled_max) * std::pow(2.0, -static_cast<double>(n - 1) / 2.0);
    return out;
}

LhvBound product_bound(std::span<const LhvBound> parts) {
    if (parts.empty()) throw ContractError("product_bound needs at least one part");
    LhvBound out;
    out.value = 1;
    out.fraction = Fraction(1);
    out.kind = BoundKind::upper_bound;
    out.method = "product(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out.value *= parts[i].value;
        if (out.fraction && parts[i].fraction) {
            out.fraction = *out.fraction * *parts[i].fraction;
        } else {
            out.fraction.reset();
        }
        if (i) out.method += " x ";
        out.method += parts[i].method + "=" + (parts[i].fraction ? parts[i].fraction->str() : format_decimal(parts[i].value));
    }
    out.method += ")";
    return out;
}

namespace {

std::vector<std::size_t> component_of(const Graph &g, std::size_t start) {
    std::vector<std::size_t> out{start};
    std::uint64_t seen = std::uint64_t{1} << start;
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint64_t nb = g.neighbors(out[i]) & ~seen;
        while (nb) {
            auto v = static_cast<std::size_t>(std::countr_zero(nb));
            nb &= nb - 1;
            seen |= std::uint64_t{1} << v;
            out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

LhvBound side_bound(const Graph &side, std::map<std::pair<std::size_t, std::uint64_t>, LhvBound> &cache) {
    auto key = std::make_pair(side.num_vertices(), side.edge_key());
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    LhvBound b;
    if (side.num_vertices() == 1) {
        // (1 + X)/2 reaches 1 with X -> +1.
        b = {1, Fraction(1), BoundKind::exact, LhvAssignment::all_plus(1), "G1"};
    } else if (side.is_complete()) {
        b = ghz_graph_bound(side.num_vertices());
        b.method = "GHZ" + std::to_string(side.num_vertices());
    } else {
        b = lhv_max(graph_bell_operator(side));
    }
    cache.emplace(key, b);
    return b;
}

}  // namespace

std::optional<BridgeFactorization> bridge_product_bound(const Graph &g) {
    LcOrbit orbit = lc_orbit(g);
    std::map<std::pair<std::size_t, std::uint64_t>, LhvBound> cache;
    std::optional<BridgeFactorization> best;
    for (std::size_t i = 0; i < orbit.graphs.size(); ++i) {
        const Graph &h = orbit.graphs[i];
        for (auto e : h.edges()) {
            Graph cut = h;
            cut.toggle_edge(e.first, e.second);
            auto side_a = component_of(cut, e.first);
            if (std::binary_search(side_a.begin(), side_a.end(), e.second)) continue;
            auto side_b = component_of(cut, e.second);
            if (side_a.size() + side_b.size() != h.num_vertices()) continue;
            std::vector<LhvBound> parts{side_bound(h.induced(side_a), cache), side_bound(h.induced(side_b), cache)};
            LhvBound prod = product_bound(parts);
            bool better = !best || (prod.fraction && best->bound.fraction ? *prod.fraction < *best->bound.fraction
                                                                         : prod.value < best->bound.value - 1e-15);
            if (better) {
                best = BridgeFactorization{orbit.path_to(i), h, e, {side_a, side_b}, parts, prod};
            }
        }
    }
    return best;
}

}  // namespace graphbell
