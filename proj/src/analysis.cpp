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

#include "graphbell/analysis.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "graphbell/errors.hpp"
#include "graphbell/format.hpp"
#include "graphbell/stabilizer.hpp"

namespace graphbell {

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

/// Non-blank, non-comment lines with their 1-based line numbers.
std::vector<std::pair<std::size_t, std::string_view>> content_lines(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string_view>> out;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto pos = text.find('\n', start);
        auto line = text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
        ++line_no;
        line = trim(line);
        if (!line.empty() && line.front() != '#') out.emplace_back(line_no, line);
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

[[noreturn]] void fail_at(std::size_t line, const std::string &message) {
    throw ParseError("line " + std::to_string(line) + ": " + message, line);
}

double parse_double(std::string_view field, std::size_t line, const char *name) {
    double v = 0;
    const char *begin = field.data();
    if (!field.empty() && field.front() == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, field.data() + field.size(), v);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(v)) {
        fail_at(line, std::string("bad ") + name + " '" + std::string(field) + "'");
    }
    return v;
}

int parse_sign(std::string_view field, std::size_t line) {
    if (field == "+1" || field == "1" || field == "+") return 1;
    if (field == "-1" || field == "-") return -1;
    fail_at(line, "sign must be +1 or -1, got '" + std::string(field) + "'");
}

PauliString parse_letters(std::string_view field, std::size_t n, int sign, std::size_t line) {
    if (field.size() != n) {
        fail_at(line, "observable '" + std::string(field) + "' must have " + std::to_string(n) + " letters");
    }
    for (char c : field) {
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            fail_at(line, "observable '" + std::string(field) + "' has a letter outside IXYZ");
        }
    }
    return PauliString::from_letters(field, sign);
}

void check_record(const MeasurementRecord &r, std::size_t line) {
    if (std::abs(r.value) > 1.0) fail_at(line, "value " + format_decimal(r.value) + " outside [-1, 1]");
    if (!(r.std_error >= 0.0)) fail_at(line, "stderr must be non-negative");
    if (r.shots && *r.shots <= 0) fail_at(line, "shots must be positive");
}

void check_duplicates(const std::vector<MeasurementRecord> &records, const std::vector<std::size_t> &lines) {
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::size_t> seen;
    for (std::size_t i = 0; i < records.size(); ++i) {
        auto key = std::make_pair(records[i].word.x_bits(), records[i].word.z_bits());
        auto [it, fresh] = seen.emplace(key, lines[i]);
        if (!fresh) {
            fail_at(lines[i], "duplicate observable " + records[i].word.letters() + " (first seen on line " +
                                  std::to_string(it->second) + ")");
        }
    }
}

}  // namespace

std::vector<MeasurementRecord> parse_measurements_csv(std::string_view text, std::size_t n) {
    auto lines = content_lines(text);
    if (lines.empty()) throw ValidationError("no records");
    auto header = lines.front();
    std::string compact;
    for (char c : header.second) {
        if (c != ' ' && c != '\t') compact += c;
    }
    if (compact != kMeasurementCsvHeader) {
        fail_at(header.first, "expected header '" + std::string(kMeasurementCsvHeader) + "'");
    }
    std::vector<MeasurementRecord> out;
    std::vector<std::size_t> line_numbers;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto [line, content] = lines[i];
        auto fields = split(content, ',');
        if (fields.size() != 5) fail_at(line, "expected 5 fields, got " + std::to_string(fields.size()));
        MeasurementRecord r;
        int sign = parse_sign(fields[1], line);
        r.word = parse_letters(fields[0], n, sign, line);
        r.value = parse_double(fields[2], line, "value");
        r.std_error = parse_double(fields[3], line, "stderr");
        if (!fields[4].empty()) {
            std::int64_t shots = 0;
            auto [ptr, ec] = std::from_chars(fields[4].data(), fields[4].data() + fields[4].size(), shots);
            if (ec != std::errc() || ptr != fields[4].data() + fields[4].size()) {
                fail_at(line, "bad shots '" + std::string(fields[4]) + "'");
            }
            r.shots = shots;
        }
        check_record(r, line);
        out.push_back(r);
        line_numbers.push_back(line);
    }
    if (out.empty()) throw ValidationError("no records");
    check_duplicates(out, line_numbers);
    return out;
}

std::vector<MeasurementRecord> parse_measurements_json(std::string_view text, std::size_t n) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    if (!doc.is_array()) throw ValidationError("measurement JSON must be an array");
    std::vector<MeasurementRecord> out;
    std::vector<std::size_t> index;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto &e = doc[i];
        const std::size_t pos = i + 1;
        try {
            MeasurementRecord r;
            int sign = 1;
            const auto &s = e.at("sign");
            if (s.is_number_integer()) {
                int v = s.get<int>();
                if (v != 1 && v != -1) fail_at(pos, "sign must be +1 or -1");
                sign = v;
            } else {
                sign = parse_sign(s.get<std::string>(), pos);
            }
            r.word = parse_letters(e.at("pauli").get<std::string>(), n, sign, pos);
            r.value = e.at("value").get<double>();
            r.std_error = e.at("stderr").get<double>();
            if (e.contains("shots") && !e.at("shots").is_null()) r.shots = e.at("shots").get<std::int64_t>();
            check_record(r, pos);
            out.push_back(r);
            index.push_back(pos);
        } catch (const nlohmann::json::exception &ex) {
            throw ParseError("record " + std::to_string(pos) + ": " + ex.what(), pos);
        }
    }
    if (out.empty()) throw ValidationError("no records");
    check_duplicates(out, index);
    return out;
}

std::vector<MeasurementRecord> load_measurements(const std::string &path, std::size_t n) {
    std::string text = read_file(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') return parse_measurements_json(text, n);
    return parse_measurements_csv(text, n);
}

std::string measurements_to_csv(std::span<const MeasurementRecord> records, std::span<const std::string> comments) {
    std::ostringstream out;
    for (const auto &c : comments) out << "# " << c << '\n';
    out << kMeasurementCsvHeader << '\n';
    for (const auto &r : records) {
        out << r.word.letters() << ',' << (r.word.sign() < 0 ? "-1" : "+1") << ',' << format_decimal(r.value, 17) << ','
            << format_decimal(r.std_error, 17) << ',';
        if (r.shots) out << *r.shots;
        out << '\n';
    }
    return out.str();
}

BellEstimate bell_value_from_records(std::span<const MeasurementRecord> records, std::span<const PauliString> stabilizers) {
    if (stabilizers.empty()) throw ContractError("empty stabilizer list");
    const std::size_t n = stabilizers.front().num_qubits();
    std::map<std::pair<std::uint64_t, std::uint64_t>, const MeasurementRecord *> by_word;
    for (const auto &r : records) {
        if (r.word.num_qubits() != n) throw DimensionError("record " + r.word.str() + " has the wrong qubit count");
        by_word[{r.word.x_bits(), r.word.z_bits()}] = &r;
    }
    std::vector<double> values, squares;
    std::vector<std::string> missing, mismatched;
    BellEstimate out;
    std::size_t used = 0;
    for (const auto &s : stabilizers) {
        auto it = by_word.find({s.x_bits(), s.z_bits()});
        if (it == by_word.end()) {
            if (s.is_identity()) {
                values.push_back(1.0);
                squares.push_back(0.0);
                out.residuals.emplace_back(s, 0.0);
            } else {
                missing.push_back(s.str());
            }
            continue;
        }
        ++used;
        const auto &r = *it->second;
        if (r.word.sign() != s.sign()) {
            mismatched.push_back(r.word.str() + " (expected " + s.str() + ")");
            continue;
        }
        values.push_back(r.value);
        squares.push_back(r.std_error * r.std_error);
        out.residuals.emplace_back(s, r.value - 1.0);
    }
    auto join = [](const std::vector<std::string> &v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
        return s;
    };
    if (!missing.empty()) throw ValidationError("missing observables: " + join(missing));
    if (!mismatched.empty()) throw ValidationError("sign mismatch against the stabilizer group: " + join(mismatched));
    if (used != records.size()) {
        std::vector<std::string> extra;
        std::map<std::pair<std::uint64_t, std::uint64_t>, bool> known;
        for (const auto &s : stabilizers) known[{s.x_bits(), s.z_bits()}] = true;
        for (const auto &r : records) {
            if (!known.count({r.word.x_bits(), r.word.z_bits()})) extra.push_back(r.word.str());
        }
        throw ValidationError("observables outside the stabilizer group: " + join(extra));
    }
    const int n_int = static_cast<int>(n);
    out.value = std::ldexp(pairwise_sum(values), -n_int);
    out.std_error = std::ldexp(std::sqrt(pairwise_sum(squares)), -n_int);
    return out;
}

BellEstimate bell_value_from_records(std::span<const MeasurementRecord> records, const Graph &g) {
    auto words = stabilizer_words(g);
    return bell_value_from_records(records, words);
}

ViolationReport make_violation_report(std::string label, double bell_value, double std_error, const LhvBound &bound) {
    if (!(bound.value > 0)) throw ContractError("bound must be positive");
    if (!(std_error >= 0)) throw ContractError("stderr must be non-negative");
    ViolationReport r;
    r.label = std::move(label);
    r.bell_value = bell_value;
    r.std_error = std_error;
    r.bound = bound;
    r.relative_violation = bell_value / bound.value;
    r.relative_std_error = std_error / bound.value;
    if (std_error > 0) r.sigmas = (bell_value - bound.value) / std_error;
    r.verdict = bell_value > bound.value;
    r.relative_is_lower_bound = bound.kind == BoundKind::upper_bound;
    return r;
}

nlohmann::json bound_to_json(const LhvBound &b) {
    nlohmann::json j;
    j["value"] = b.value;
    j["kind"] = to_string(b.kind);
    j["method"] = b.method;
    j["fraction"] = b.fraction ? nlohmann::json(b.fraction->str()) : nlohmann::json(nullptr);
    j["witness"] = b.witness ? nlohmann::json(b.witness->str()) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json report_to_json(const ViolationReport &r) {
    nlohmann::json j;
    j["graph"] = r.label;
    j["bell_value"] = r.bell_value;
    j["stderr"] = r.std_error;
    j["bound"] = bound_to_json(r.bound);
    j["relative_violation"] = r.relative_violation;
    j["relative_violation_stderr"] = r.relative_std_error;
    j["relative_is_lower_bound"] = r.relative_is_lower_bound;
    j["sigmas"] = r.sigmas ? nlohmann::json(*r.sigmas) : nlohmann::json(nullptr);
    j["verdict"] = r.verdict;
    return j;
}

namespace {

/// Rounds half away from zero at `digits` decimals. The nudge keeps values
/// such as 0.855, stored just below the tie, rounding the way they read.
std::string fixed(double v, int digits) {
    double scale = std::pow(10.0, digits);
    double scaled = v * scale;
    double rounded = std::round(scaled + std::copysign(1e-9 * std::max(1.0, std::abs(scaled)), scaled)) / scale;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, rounded);
    return buf;
}

}  // namespace

std::string round_for_display(double v, int digits) {
    return fixed(v, digits);
}

std::string report_to_text(const ViolationReport &r) {
    std::ostringstream out;
    const std::string ge = r.relative_is_lower_bound ? ">= " : "";
    out << "target: " << r.label << '\n';
    out << "bell value: " << format_decimal(r.bell_value) << " +- " << format_decimal(r.std_error) << "  (rounded "
        << fixed(r.bell_value, 2) << "+-" << fixed(r.std_error, 2) << ")\n";
    out << "bound: ";
    if (r.bound.fraction) out << r.bound.fraction->str() << " = ";
    out << format_decimal(r.bound.value) << " (" << to_string(r.bound.kind) << ", " << r.bound.method << ")\n";
    out << "relative violation: " << ge << format_decimal(r.relative_violation) << " +- "
        << format_decimal(r.relative_std_error) << "  (rounded " << ge << fixed(r.relative_violation, 2) << "+-"
        << fixed(r.relative_std_error, 2) << ")\n";
    out << "sigmas: " << (r.sigmas ? format_decimal(*r.sigmas, 4) : std::string("n/a")) << '\n';
    out << "verdict: " << (r.verdict ? "VIOLATED" : "NOT VIOLATED") << '\n';
    return out.str();
}

void GhzSummary::validate() const {
    auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (n < 1) throw ValidationError("summary needs n >= 1");
    if (!in_unit(p0) || !in_unit(p1) || !(p0 + p1 <= 1.0 + 1e-9)) {
        throw ValidationError("unphysical summary: populations must satisfy 0 <= p0, p1 and p0 + p1 <= 1");
    }
    if (!(coherence >= 0.0) || coherence > std::sqrt(p0 * p1) + 1e-9) {
        throw ValidationError("unphysical summary: coherence exceeds sqrt(p0 p1)");
    }
    if (!(p0_err >= 0 && p1_err >= 0 && coh_err >= 0)) throw ValidationError("summary errors must be non-negative");
}

std::vector<GhzSummary> parse_ghz_summaries(std::string_view text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw ValidationError("no records");
    std::string compact;
    for (char c : lines.front().second) {
        if (c != ' ' && c != '\t') compact += c;
    }
    if (compact != kGhzSummaryCsvHeader) {
        fail_at(lines.front().first, "expected header '" + std::string(kGhzSummaryCsvHeader) + "'");
    }
    std::vector<GhzSummary> out;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto [line, content] = lines[i];
        auto f = split(content, ',');
        if (f.size() != 8) fail_at(line, "expected 8 fields, got " + std::to_string(f.size()));
        GhzSummary s;
        std::size_t n = 0;
        auto [ptr, ec] = std::from_chars(f[0].data(), f[0].data() + f[0].size(), n);
        if (ec != std::errc() || ptr != f[0].data() + f[0].size()) fail_at(line, "bad n '" + std::string(f[0]) + "'");
        s.n = n;
        s.p0 = parse_double(f[1], line, "p0");
        s.p1 = parse_double(f[2], line, "p1");
        s.coherence = parse_double(f[3], line, "coherence");
        if (!f[4].empty()) s.phase = parse_double(f[4], line, "phase");
        s.p0_err = parse_double(f[5], line, "p0_err");
        s.p1_err = parse_double(f[6], line, "p1_err");
        s.coh_err = parse_double(f[7], line, "coh_err");
        try {
            s.validate();
        } catch (const ValidationError &e) {
            fail_at(line, e.what());
        }
        out.push_back(s);
    }
    if (out.empty()) throw ValidationError("no records");
    return out;
}

std::vector<GhzSummary> load_ghz_summaries(const std::string &path) {
    return parse_ghz_summaries(read_file(path));
}

GhzMetrics ghz_summary_metrics(const GhzSummary &s, const LhvBound &graph_bound, const LhvBound &mk_bound) {
    s.validate();
    GhzMetrics m;
    m.fidelity = (s.p0 + s.p1) / 2.0 + s.coherence;
    m.fidelity_err = std::sqrt(std::pow(s.p0_err / 2.0, 2) + std::pow(s.p1_err / 2.0, 2) + s.coh_err * s.coh_err);
    m.mk_value = 2.0 * s.coherence;
    m.mk_err = 2.0 * s.coh_err;
    const std::string base = "GHZ" + std::to_string(s.n);
    m.graph = make_violation_report(base + " graph", m.fidelity, m.fidelity_err, graph_bound);
    m.mk = make_violation_report(base + " MK", m.mk_value, m.mk_err, mk_bound);
    return m;
}

GhzSummary noisy_ghz_summary(std::size_t n, const NoiseSpec &spec) {
    const double nn = static_cast<double>(n);
    const double p = spec.p();
    GhzSummary s;
    s.n = n;
    s.p0 = (std::pow((1 + p) / 2, nn) + std::pow((1 - p) / 2, nn)) / 2;
    s.p1 = s.p0;
    s.coherence = std::pow(p, nn) / 2;
    s.phase = mk_phase(n);
    return s;
}

namespace {

void check_range(std::size_t n_min, std::size_t n_max) {
    if (n_min < 2 || n_max > 64 || n_min > n_max) throw ValidationError("n range must satisfy 2 <= n_min <= n_max <= 64");
}

ScalingRow row_from_summary(const GhzSummary &s) {
    if (s.n < 2 || s.n > 64) throw ValidationError("summary n must lie in [2, 64]");
    ScalingRow row;
    row.n = s.n;
    row.graph_bound = ghz_graph_bound(s.n);
    row.mk_bound = mk_bound(s.n);
    auto m = ghz_summary_metrics(s, row.graph_bound, row.mk_bound);
    row.fidelity = m.fidelity;
    row.mk_value = m.mk_value;
    row.graph_r = m.graph.relative_violation;
    row.mk_r = m.mk.relative_violation;
    return row;
}

}  // namespace

std::vector<ScalingRow> scaling_ideal(std::size_t n_min, std::size_t n_max) {
    check_range(n_min, n_max);
    std::vector<ScalingRow> rows;
    for (std::size_t n = n_min; n <= n_max; ++n) {
        ScalingRow row;
        row.n = n;
        row.graph_bound = ghz_graph_bound(n);
        row.mk_bound = mk_bound(n);
        row.fidelity = 1;
        row.mk_value = 1;
        // 1/D from the exact fraction; 2^((n-1)/2) directly.
        const Fraction &d = *row.graph_bound.fraction;
        row.graph_r = static_cast<double>(d.den) / static_cast<double>(d.num);
        row.mk_r = std::pow(2.0, static_cast<double>(n - 1) / 2.0);
        rows.push_back(row);
    }
    return rows;
}

std::vector<ScalingRow> scaling_noise(std::size_t n_min, std::size_t n_max, const NoiseSpec &spec) {
    check_range(n_min, n_max);
    std::vector<ScalingRow> rows;
    for (std::size_t n = n_min; n <= n_max; ++n) {
        ScalingRow row = row_from_summary(noisy_ghz_summary(n, spec));
        row.mk_r = noisy_ghz_mk(n, spec).relative_violation;
        rows.push_back(row);
    }
    return rows;
}

std::vector<ScalingRow> scaling_from_summaries(std::span<const GhzSummary> summaries) {
    std::vector<ScalingRow> rows;
    for (const auto &s : summaries) rows.push_back(row_from_summary(s));
    return rows;
}

std::string scaling_to_csv(std::span<const ScalingRow> rows) {
    std::ostringstream out;
    out << "n,graph_bound,fidelity,graph_R,mk_bound,mk_value,mk_R\n";
    for (const auto &r : rows) {
        out << r.n << ',' << format_decimal(r.graph_bound.value, 15) << ',' << format_decimal(r.fidelity, 15) << ','
            << format_decimal(r.graph_r, 15) << ',' << format_decimal(r.mk_bound.value, 15) << ','
            << format_decimal(r.mk_value, 15) << ',' << format_decimal(r.mk_r, 15) << '\n';
    }
    return out.str();
}

nlohmann::json scaling_to_json(std::span<const ScalingRow> rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &r : rows) {
        arr.push_back({{"n", r.n},
                       {"graph_bound", bound_to_json(r.graph_bound)},
                       {"fidelity", r.fidelity},
                       {"graph_R", r.graph_r},
                       {"mk_bound", bound_to_json(r.mk_bound)},
                       {"mk_value", r.mk_value},
                       {"mk_R", r.mk_r}});
    }
    return arr;
}

SignedPauliSum BellTarget::bell_operator() const {
    return bell_operator_from_stabilizers(graph.num_vertices(), stabilizers);
}

BellTarget resolve_target(std::string_view name) {
    BellTarget t;
    t.name = std::string(name);
    if (name == "bc4-hat") {
        t.graph = box4_graph();
        t.corrections = bc4_hat_corrections();
        t.stabilizers = corrected_stabilizer_words(t.graph, t.corrections);
        return t;
    }
    if (auto g = graph_from_short_name(name)) {
        t.graph = *g;
    } else if (std::filesystem::exists(std::string(name))) {
        t.graph = load_graph_json(std::string(name));
    } else {
        throw ValidationError("unknown graph '" + std::string(name) +
                              "' (presets: lc4, bc4, bc4-hat, ec1, ec3, ec3-lc, ec5, ghzN, linearN, starN, ecK, "
                              "single, or a graph JSON path)");
    }
    t.stabilizers = stabilizer_words(t.graph);
    return t;
}

}  // namespace graphbell
