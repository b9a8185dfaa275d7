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

#include "graphbell/cli.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "graphbell/analysis.hpp"
#include "graphbell/bell.hpp"
#include "graphbell/errors.hpp"
#include "graphbell/format.hpp"
#include "graphbell/lhv.hpp"
#include "graphbell/noise.hpp"
#include "graphbell/stabilizer.hpp"

namespace graphbell {

namespace {

using nlohmann::json;

/// Largest free-variable count for which `analyze --method auto` runs the
/// exact search before trying a bridge factorization.
constexpr std::size_t kAutoExactFreeVariables = 12;

struct Options {
    std::string graph;
    std::string format = "text";
    std::string method;
    bool restrict_z = false;
    bool mk = false;
    std::size_t n = 0;
    std::string measurements;
    std::string summary;
    std::optional<double> noise;
    std::int64_t shots = 1000;
    std::uint64_t seed = 1;
    std::string out_path;
    std::string source = "ideal";
    std::size_t n_min = 2;
    std::size_t n_max = 14;
};

std::string value_text(const LhvBound &b) {
    std::string s;
    if (b.fraction) s = b.fraction->str() + " = ";
    return s + format_decimal(b.value);
}

bool ghz_like(const Graph &g) {
    if (g.is_complete()) return true;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        if (local_complement(g, v).is_complete()) return true;
    }
    return false;
}

struct BoundResult {
    LhvBound bound;
    std::optional<BridgeFactorization> factorization;
};

BoundResult compute_graph_bound(const BellTarget &t, const std::string &method, bool restrict_z) {
    const auto restriction = restrict_z ? LhvRestriction::z_plus_one : LhvRestriction::none;
    const std::size_t n = t.graph.num_vertices();
    if (method == "brute") return {lhv_max(t.bell_operator(), restriction), std::nullopt};
    if (method == "ghz" || method == "formula") {
        if (!ghz_like(t.graph)) {
            throw ValidationError("method '" + method + "' needs a GHZ-type graph (complete or star), got " + t.name);
        }
        return {method == "ghz" ? ghz_graph_bound(n) : ghz_formula_bound(n), std::nullopt};
    }
    if (method == "product") {
        auto f = bridge_product_bound(t.graph);
        if (!f) throw ValidationError("no graph in the LC orbit of " + t.name + " has a bridge edge");
        LhvBound b = f->bound;
        return {b, f};
    }
    if (method == "auto") {
        auto op = t.bell_operator();
        if (lhv_free_variables(op, restriction) <= kAutoExactFreeVariables) return {lhv_max(op, restriction), std::nullopt};
        if (n <= kMaxOrbitVertices) {
            if (auto f = bridge_product_bound(t.graph)) return {f->bound, f};
        }
        return {lhv_max(op, restriction), std::nullopt};
    }
    throw ValidationError("unknown method '" + method + "'");
}

json factorization_json(const BridgeFactorization &f) {
    json parts = json::array();
    for (std::size_t i = 0; i < f.part_vertices.size(); ++i) {
        parts.push_back({{"vertices", f.part_vertices[i]}, {"bound", bound_to_json(f.part_bounds[i])}});
    }
    return {{"lc_sequence", f.lc_sequence},
            {"bridge", {f.bridge.first, f.bridge.second}},
            {"factored_edges", f.factored.edges()},
            {"parts", parts}};
}

std::string factorization_text(const BridgeFactorization &f) {
    std::ostringstream out;
    out << "lc sequence:";
    if (f.lc_sequence.empty()) out << " (none)";
    for (auto v : f.lc_sequence) out << ' ' << v;
    out << "\nbridge: " << f.bridge.first << '-' << f.bridge.second << '\n';
    for (std::size_t i = 0; i < f.part_vertices.size(); ++i) {
        out << "part " << i << ": {";
        for (std::size_t k = 0; k < f.part_vertices[i].size(); ++k) out << (k ? "," : "") << f.part_vertices[i][k];
        out << "} D <= " << value_text(f.part_bounds[i]) << " (" << f.part_bounds[i].method << ")\n";
    }
    return out.str();
}

void emit(std::ostream &out, const Options &o, const json &j, const std::string &text) {
    if (o.format == "json") {
        out << j.dump(2) << '\n';
    } else {
        out << text;
    }
}

int cmd_stabilizers(const Options &o, std::ostream &out) {
    BellTarget t = resolve_target(o.graph);
    json words = json::array();
    std::ostringstream text;
    text << "# " << t.name << " n=" << t.graph.num_vertices() << " elements=" << t.stabilizers.size() << '\n';
    for (const auto &w : t.stabilizers) {
        words.push_back(w.str());
        text << w.str() << '\n';
    }
    json gens = json::array();
    for (const auto &g : graph_generators(t.graph)) gens.push_back(g.str());
    emit(out, o, {{"graph", t.name}, {"n", t.graph.num_vertices()}, {"generators", gens}, {"stabilizers", words}},
         text.str());
    return kExitOk;
}

json sum_json(const SignedPauliSum &op) {
    json terms = json::array();
    for (const auto &term : op.terms()) {
        terms.push_back({{"coeff", format_coefficient(term.coeff)}, {"value", term.coeff}, {"word", term.word.str()}});
    }
    return terms;
}

int cmd_bellop(const Options &o, std::ostream &out) {
    if (o.mk) {
        if (o.n < 1) throw ValidationError("--mk needs --n >= 1");
        MkOperator op = mk_recursive(o.n, MeasurementSetting::xy(o.n));
        emit(out, o, {{"operator", "mk"}, {"n", o.n}, {"settings", "x,y"}, {"terms", sum_json(*op.pauli)}},
             "# MK n=" + std::to_string(o.n) + " settings a=x a'=y\n" + op.pauli->str());
        return kExitOk;
    }
    if (o.graph.empty()) throw ValidationError("bellop needs --graph or --mk --n");
    BellTarget t = resolve_target(o.graph);
    SignedPauliSum op = t.bell_operator();
    emit(out, o, {{"graph", t.name}, {"n", t.graph.num_vertices()}, {"terms", sum_json(op)}},
         "# " + t.name + " n=" + std::to_string(t.graph.num_vertices()) + '\n' + op.str());
    return kExitOk;
}

int cmd_bound(const Options &o, std::ostream &out) {
    if (o.mk) {
        if (o.n < 1) throw ValidationError("--mk needs --n >= 1");
        const std::string method = o.method.empty() ? "formula" : o.method;
        LhvBound b = mk_bound(o.n);
        json j = {{"operator", "mk"}, {"n", o.n}, {"bound", bound_to_json(b)}};
        std::ostringstream text;
        text << "operator: mk n=" << o.n << "\nvalue: " << value_text(b) << "\nkind: " << to_string(b.kind)
             << "\nmethod: " << b.method << '\n';
        if (method == "brute") {
            auto bf = mk_bound_bruteforce(o.n);
            j["bruteforce"] = {{"value", bf.value}, {"a", bf.a_outcomes}, {"a_prime", bf.a_prime_outcomes}};
            text << "brute force: " << format_decimal(bf.value) << " witness a=";
            for (int v : bf.a_outcomes) text << (v > 0 ? '+' : '-');
            text << " a'=";
            for (int v : bf.a_prime_outcomes) text << (v > 0 ? '+' : '-');
            text << '\n';
        } else if (method != "formula") {
            throw ValidationError("MK bounds support --method formula or brute");
        }
        emit(out, o, j, text.str());
        return kExitOk;
    }
    if (o.graph.empty()) throw ValidationError("bound needs --graph or --mk --n");
    BellTarget t = resolve_target(o.graph);
    BoundResult r = compute_graph_bound(t, o.method.empty() ? "brute" : o.method, o.restrict_z);
    json j = {{"graph", t.name}, {"n", t.graph.num_vertices()}, {"bound", bound_to_json(r.bound)}};
    std::ostringstream text;
    text << "graph: " << t.name << "\nvalue: " << value_text(r.bound) << "\nkind: " << to_string(r.bound.kind)
         << "\nmethod: " << r.bound.method << '\n';
    if (r.bound.witness) text << "witness (XYZ per qubit): " << r.bound.witness->str() << '\n';
    if (r.factorization) {
        j["factorization"] = factorization_json(*r.factorization);
        text << factorization_text(*r.factorization);
    }
    emit(out, o, j, text.str());
    return kExitOk;
}

int cmd_analyze(const Options &o, std::ostream &out) {
    if (!o.summary.empty()) {
        auto rows = load_ghz_summaries(o.summary);
        json arr = json::array();
        std::ostringstream text;
        for (const auto &s : rows) {
            if (s.n < 2 || s.n > 64) throw ValidationError("summary n must lie in [2, 64]");
            auto m = ghz_summary_metrics(s, ghz_graph_bound(s.n), mk_bound(s.n));
            arr.push_back({{"n", s.n},
                           {"fidelity", m.fidelity},
                           {"graph_report", report_to_json(m.graph)},
                           {"mk_report", report_to_json(m.mk)}});
            text << report_to_text(m.graph) << report_to_text(m.mk) << '\n';
        }
        emit(out, o, arr, text.str());
        return kExitOk;
    }
    if (o.graph.empty() || o.measurements.empty()) {
        throw ValidationError("analyze needs --graph with --measurements, or --summary");
    }
    BellTarget t = resolve_target(o.graph);
    auto records = load_measurements(o.measurements, t.graph.num_vertices());
    BellEstimate est = bell_value_from_records(records, t.stabilizers);
    BoundResult b = compute_graph_bound(t, o.method.empty() ? "auto" : o.method, o.restrict_z);
    ViolationReport rep = make_violation_report(t.name, est.value, est.std_error, b.bound);
    json j = report_to_json(rep);
    j["records"] = records.size();
    std::string text = report_to_text(rep);
    if (b.factorization) {
        j["factorization"] = factorization_json(*b.factorization);
        text += factorization_text(*b.factorization);
    }
    emit(out, o, j, text);
    return kExitOk;
}

int cmd_mk(const Options &o, std::ostream &out) {
    if (o.n < 1) throw ValidationError("mk needs --n >= 1");
    const std::size_t n = o.n;
    LhvBound b = mk_bound(n);
    json j = {{"n", n}, {"beta", mk_phase(n)}, {"bound", bound_to_json(b)}};
    std::ostringstream text;
    text << "n: " << n << "\nbeta: " << format_decimal(mk_phase(n)) << "\nbound: " << format_decimal(b.value) << '\n';
    if (n <= kMaxStateQubits) {
        double ideal = operator_expectation(mk_closed_form(n), ghz_state(n, mk_phase(n)));
        j["ideal_value"] = ideal;
        j["ideal_R"] = ideal / b.value;
        text << "ideal value: " << format_decimal(ideal, 12) << "\nideal R: " << format_decimal(ideal / b.value) << '\n';
    }
    if (o.noise) {
        NoiseSpec spec(*o.noise);
        NoisyMk nm = noisy_ghz_mk(n, spec);
        auto onset = mk_violation_onset(spec);
        j["noise"] = {{"p", spec.p()},
                      {"mk_value", nm.mk_value},
                      {"R", nm.relative_violation},
                      {"numeric_value", nm.numeric_value ? json(*nm.numeric_value) : json(nullptr)},
                      {"violation_onset_n", onset ? json(*onset) : json(nullptr)}};
        text << "noise p: " << format_decimal(spec.p()) << "\nnoisy value: " << format_decimal(nm.mk_value, 12);
        if (nm.numeric_value) text << " (dense " << format_decimal(*nm.numeric_value, 12) << ")";
        text << "\nnoisy R: " << format_decimal(nm.relative_violation) << "\nviolation onset n: "
             << (onset ? std::to_string(*onset) : std::string("never")) << '\n';
    }
    emit(out, o, j, text.str());
    return kExitOk;
}

int cmd_simulate(const Options &o, std::ostream &out) {
    if (!o.noise) throw ValidationError("simulate needs --noise");
    BellTarget t = resolve_target(o.graph);
    NoiseSpec spec(*o.noise);
    std::vector<MeasurementRecord> records;
    for (std::size_t i = 0; i < t.stabilizers.size(); ++i) {
        const auto &w = t.stabilizers[i];
        MeasurementRecord r;
        r.word = w;
        r.shots = o.shots;
        if (w.is_identity()) {
            r.value = 1;
            r.std_error = 0;
        } else {
            auto est = sample_expectation(depolarized_stabilizer_expectation(w, spec), o.shots, derive_seed(o.seed, i));
            r.value = est.value;
            r.std_error = est.std_error;
        }
        records.push_back(r);
    }
    std::vector<std::string> comments{
        "graph " + t.name,
        "noise p=" + format_decimal(spec.p(), 17) + " shots=" + std::to_string(o.shots) + " seed=" + std::to_string(o.seed),
        "generator mt19937_64, observable i seeded by splitmix64(seed, i)"};
    std::string csv = measurements_to_csv(records, comments);
    if (o.out_path.empty()) {
        out << csv;
    } else {
        std::ofstream f(o.out_path, std::ios::binary);
        if (!f) throw ValidationError("cannot write '" + o.out_path + "'");
        f << csv;
        out << "wrote " << records.size() << " records to " << o.out_path << '\n';
    }
    return kExitOk;
}

int cmd_scaling(const Options &o, std::ostream &out) {
    std::vector<ScalingRow> rows;
    if (o.source == "ideal") {
        rows = scaling_ideal(o.n_min, o.n_max);
    } else if (o.source == "noise") {
        if (!o.noise) throw ValidationError("--source noise needs --noise p");
        rows = scaling_noise(o.n_min, o.n_max, NoiseSpec(*o.noise));
    } else {
        if (o.summary.empty()) throw ValidationError("--source file needs --summary path");
        auto summaries = load_ghz_summaries(o.summary);
        rows = scaling_from_summaries(summaries);
    }
    if (o.format == "json") {
        out << scaling_to_json(rows).dump(2) << '\n';
    } else if (o.format == "csv") {
        out << scaling_to_csv(rows);
    } else {
        out << "n  D(GHZ_n)  graph_R  mk_R\n";
        for (const auto &r : rows) {
            out << r.n << "  " << value_text(r.graph_bound) << "  " << format_decimal(r.graph_r) << "  "
                << format_decimal(r.mk_r) << '\n';
        }
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Graph-state Bell inequalities: stabilizers, operators, LHV bounds, noise and analysis", "graphbell"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::string> text_json{"text", "json"};

    auto *stab = app.add_subcommand("stabilizers", "List the 2^n signed stabilizer elements");
    stab->add_option("--graph", o.graph, "Preset or graph JSON path")->required();
    stab->add_option("--format", o.format)->check(CLI::IsMember(text_json));

    auto *bellop = app.add_subcommand("bellop", "Pauli expansion of a graph or MK Bell operator");
    bellop->add_option("--graph", o.graph, "Preset or graph JSON path");
    bellop->add_flag("--mk", o.mk, "Mermin-Klyshko operator with x/y settings");
    bellop->add_option("--n", o.n, "Qubit count for --mk");
    bellop->add_option("--format", o.format)->check(CLI::IsMember(text_json));

    auto *bound = app.add_subcommand("bound", "Local hidden-variable bound D");
    bound->add_option("--graph", o.graph, "Preset or graph JSON path");
    bound->add_flag("--mk", o.mk, "MK bound instead of a graph bound");
    bound->add_option("--n", o.n, "Qubit count for --mk");
    bound->add_option("--method", o.method, "brute (default), ghz, formula, product, auto")
        ->check(CLI::IsMember({"brute", "ghz", "formula", "product", "auto"}));
    bound->add_flag("--restrict-z", o.restrict_z, "Fix every Z outcome to +1");
    bound->add_option("--format", o.format)->check(CLI::IsMember(text_json));

    auto *analyze = app.add_subcommand("analyze", "Bell value and violation verdict from measurements");
    analyze->add_option("--graph", o.graph, "Preset or graph JSON path");
    analyze->add_option("--measurements", o.measurements, "Measurement CSV or JSON");
    analyze->add_option("--summary", o.summary, "GHZ summary CSV");
    analyze->add_option("--method", o.method, "auto (default), brute, ghz, formula, product")
        ->check(CLI::IsMember({"brute", "ghz", "formula", "product", "auto"}));
    analyze->add_flag("--restrict-z", o.restrict_z, "Fix every Z outcome to +1");
    analyze->add_option("--format", o.format)->check(CLI::IsMember(text_json));

    auto *mk = app.add_subcommand("mk", "MK operator facts for the GHZ state");
    mk->add_option("--n", o.n, "Qubit count")->required();
    mk->add_option("--noise", o.noise, "Depolarizing retention p");
    mk->add_option("--format", o.format)->check(CLI::IsMember(text_json));

    auto *simulate = app.add_subcommand("simulate", "Sample stabilizer measurements of a depolarized graph state");
    simulate->add_option("--graph", o.graph, "Preset or graph JSON path")->required();
    simulate->add_option("--noise", o.noise, "Depolarizing retention p")->required();
    simulate->add_option("--shots", o.shots, "Shots per observable")->check(CLI::Range(std::int64_t{2}, INT64_MAX));
    simulate->add_option("--seed", o.seed, "Master seed");
    simulate->add_option("--out", o.out_path, "Output CSV (stdout if omitted)");

    auto *scaling = app.add_subcommand("scaling", "Relative violations of GHZ states against n");
    scaling->add_option("--source", o.source, "ideal, noise or file")->check(CLI::IsMember({"ideal", "noise", "file"}));
    scaling->add_option("--noise", o.noise, "Retention p for --source noise");
    scaling->add_option("--summary", o.summary, "GHZ summary CSV for --source file");
    scaling->add_option("--n-min", o.n_min);
    scaling->add_option("--n-max", o.n_max);
    scaling->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "csv"}));

    std::vector<std::string> argv_store{"graphbell"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    if (scaling->parsed() && o.format == "text" && scaling->count("--format") == 0) o.format = "csv";

    try {
        if (stab->parsed()) return cmd_stabilizers(o, out);
        if (bellop->parsed()) return cmd_bellop(o, out);
        if (bound->parsed()) return cmd_bound(o, out);
        if (analyze->parsed()) return cmd_analyze(o, out);
        if (mk->parsed()) return cmd_mk(o, out);
        if (simulate->parsed()) return cmd_simulate(o, out);
        if (scaling->parsed()) return cmd_scaling(o, out);
    } catch (const CapacityError &e) {
        err << "error: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const ValidationError &e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const ContractError &e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const DimensionError &e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitFailure;
}

}  // namespace graphbell
