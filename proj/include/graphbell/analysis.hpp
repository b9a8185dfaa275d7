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
#include <string_view>
#include <vector>

#include "graphbell/bell.hpp"
#include "graphbell/graph.hpp"
#include "graphbell/lhv.hpp"
#include "graphbell/noise.hpp"
#include "graphbell/pauli.hpp"
#include "json.hpp"

namespace graphbell {

struct MeasurementRecord {
    /// Observable with its sign.
    PauliString word;
    double value = 0;
    double std_error = 0;
    std::optional<std::int64_t> shots;
};

inline constexpr std::string_view kMeasurementCsvHeader = "pauli,sign,value,stderr,shots";
inline constexpr std::string_view kGhzSummaryCsvHeader = "n,p0,p1,coherence,phase,p0_err,p1_err,coh_err";

/// CSV with the header above. Blank lines and lines starting with '#' are
/// skipped. ParseError::position() is the 1-based line number.
std::vector<MeasurementRecord> parse_measurements_csv(std::string_view text, std::size_t n);
/// JSON array of objects with keys pauli, sign, value, stderr and optional shots.
std::vector<MeasurementRecord> parse_measurements_json(std::string_view text, std::size_t n);
/// Picks JSON when the first non-blank character is '[', CSV otherwise.
std::vector<MeasurementRecord> load_measurements(const std::string &path, std::size_t n);
std::string measurements_to_csv(std::span<const MeasurementRecord> records, std::span<const std::string> comments = {});

struct BellEstimate {
    double value = 0;
    double std_error = 0;
    /// value - 1 for every stabilizer element, in stabilizer order.
    std::vector<std::pair<PauliString, double>> residuals;
};

/// Fidelity estimate 2^-n sum(value) with stderr 2^-n sqrt(sum stderr^2).
/// The records must cover every element of `stabilizers` with matching
/// signs. A missing identity row counts as (1, 0).
BellEstimate bell_value_from_records(std::span<const MeasurementRecord> records, std::span<const PauliString> stabilizers);
BellEstimate bell_value_from_records(std::span<const MeasurementRecord> records, const Graph &g);

struct ViolationReport {
    std::string label;
    double bell_value = 0;
    double std_error = 0;
    LhvBound bound;
    double relative_violation = 0;
    double relative_std_error = 0;
    /// (bell_value - bound) / stderr, absent when stderr is 0.
    std::optional<double> sigmas;
    bool verdict = false;
    /// Set when the bound is only an upper bound on D, so R is a lower bound.
    bool relative_is_lower_bound = false;
};

ViolationReport make_violation_report(std::string label, double bell_value, double std_error, const LhvBound &bound);

nlohmann::json bound_to_json(const LhvBound &b);
nlohmann::json report_to_json(const ViolationReport &r);
/// Fixed-point text rounded half away from zero, tolerant of values that
/// sit a few ulps below a tie.
std::string round_for_display(double v, int digits);

/// Multi-line human-readable report.
std::string report_to_text(const ViolationReport &r);

struct GhzSummary {
    std::size_t n = 0;
    double p0 = 0;
    double p1 = 0;
    double coherence = 0;
    std::optional<double> phase;
    double p0_err = 0;
    double p1_err = 0;
    double coh_err = 0;

    /// Throws ValidationError for populations outside [0, 1] or a coherence
    /// above sqrt(p0 p1) + 1e-9.
    void validate() const;
};

std::vector<GhzSummary> parse_ghz_summaries(std::string_view text);
std::vector<GhzSummary> load_ghz_summaries(const std::string &path);

struct GhzMetrics {
    double fidelity = 0;
    double fidelity_err = 0;
    double mk_value = 0;
    double mk_err = 0;
    ViolationReport graph;
    ViolationReport mk;
};

/// F = (p0 + p1)/2 + coherence against the graph bound and 2 coherence
/// against the MK bound.
GhzMetrics ghz_summary_metrics(const GhzSummary &s, const LhvBound &graph_bound, const LhvBound &mk_bound);

/// Summary of the depolarized GHZ state: populations ((1+p)^n + (1-p)^n)/2^(n+1)
/// each and coherence p^n/2.
GhzSummary noisy_ghz_summary(std::size_t n, const NoiseSpec &spec);

struct ScalingRow {
    std::size_t n = 0;
    LhvBound graph_bound;
    LhvBound mk_bound;
    double fidelity = 0;
    double mk_value = 0;
    double graph_r = 0;
    double mk_r = 0;
};

/// Exact GHZ bounds are used for 2 <= n <= 64.
std::vector<ScalingRow> scaling_ideal(std::size_t n_min, std::size_t n_max);
std::vector<ScalingRow> scaling_noise(std::size_t n_min, std::size_t n_max, const NoiseSpec &spec);
std::vector<ScalingRow> scaling_from_summaries(std::span<const GhzSummary> rows);
std::string scaling_to_csv(std::span<const ScalingRow> rows);
nlohmann::json scaling_to_json(std::span<const ScalingRow> rows);

/// A graph state, possibly measured in a locally rotated basis.
struct BellTarget {
    std::string name;
    Graph graph;
    /// The 2^n signed observables whose average is the fidelity.
    std::vector<PauliString> stabilizers;
    /// Local corrections mapping the prepared state to the graph state, if any.
    std::vector<std::string> corrections;

    SignedPauliSum bell_operator() const;
};

/// Preset name (lc4, bc4, bc4-hat, ec1, ec3, ec3-lc, ec5, ghzN, ...) or a
/// path to a graph JSON file.
BellTarget resolve_target(std::string_view name);

}  // namespace graphbell
