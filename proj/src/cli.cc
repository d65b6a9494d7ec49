// Copyright 2026 The stabent Authors
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

#include "stabent/cli.h"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "stabent/closed_forms.h"
#include "stabent/mc_engine.h"
#include "stabent/verify.h"

namespace stabent {

namespace {

using json = nlohmann::json;

constexpr double kLambdaTolerance = 1e-9;

std::string fmt(double v) {
    if (std::isnan(v)) {
        return "";
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json num(double v) {
    return std::isfinite(v) ? json(v) : json(nullptr);
}

Shape resolve_shape(RunConfig &cfg, bool da_set, bool n_set, bool na_set) {
    if (da_set && n_set) {
        throw UsageError("Use either --da/--db or --n/--na, not both");
    }
    if (n_set) {
        if (cfg.n < 1 || cfg.n > 30) {
            throw UsageError("--n must be between 1 and 30");
        }
        if (!na_set) {
            cfg.n_a = cfg.n / 2;
        }
        if (cfg.n_a > cfg.n) {
            throw UsageError("--na must not exceed --n");
        }
        cfg.d_a = std::int64_t{1} << cfg.n_a;
        cfg.d_b = std::int64_t{1} << (cfg.n - cfg.n_a);
    }
    if (cfg.d_a < 1 || cfg.d_b < 1 || !is_power_of_two(static_cast<std::size_t>(cfg.d_a)) ||
        !is_power_of_two(static_cast<std::size_t>(cfg.d_b))) {
        throw UsageError("Invalid bipartition: d_A and d_B must be powers of two so that d_A d_B = 2^n");
    }
    Shape s{static_cast<std::size_t>(cfg.d_a), static_cast<std::size_t>(cfg.d_b)};
    cfg.n = s.qubits();
    cfg.n_a = s.qubits_a();
    return s;
}

std::uint64_t require_seed(const RunConfig &cfg) {
    if (!cfg.seed) {
        throw UsageError("--seed is required for sampling commands");
    }
    return *cfg.seed;
}

SamplerOptions sampler(const RunConfig &cfg) {
    SamplerOptions o;
    o.chunks.workers = cfg.workers;
    o.kernel.qubit_cap = cfg.qubit_cap;
    return o;
}

json provenance(const RunConfig &cfg) {
    json p = {{"tool", "stabent"}, {"version", version()}, {"config", cfg.to_json()}};
    if (!cfg.deterministic) {
        std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        char buf[32];
        std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        p["timestamp"] = buf;
    }
    return p;
}

// Writes `text` to cfg.out, or to the stream when no path is given.
void emit(const std::string &path, const std::string &text, std::ostream &fallback) {
    if (path.empty() || path == "-") {
        fallback << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("Cannot open output file " + path);
    }
    f << text;
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;  // numbers, strings or null
};

std::string csv_cell(const json &v) {
    if (v.is_null()) {
        return "";
    }
    if (v.is_number_float()) {
        return fmt(v.get<double>());
    }
    if (v.is_string()) {
        return v.get<std::string>();
    }
    return v.dump();
}

// Emits the table in the selected format. CSV gets a JSON sidecar with the summary; JSON embeds it.
void write_output(const RunConfig &cfg, const Table &table, const json &summary, std::ostream &out) {
    json prov = provenance(cfg);
    if (cfg.format == "json") {
        json records = json::array();
        for (const auto &row : table.rows) {
            json r = json::object();
            for (std::size_t i = 0; i < table.columns.size(); i++) {
                r[table.columns[i]] = row[i];
            }
            records.push_back(r);
        }
        json doc = {{"provenance", prov}, {"records", records}, {"summary", summary}};
        emit(cfg.out, doc.dump(2) + "\n", out);
        return;
    }
    std::ostringstream csv;
    csv << "# " << prov.dump() << "\n";
    for (std::size_t i = 0; i < table.columns.size(); i++) {
        csv << (i ? "," : "") << table.columns[i];
    }
    csv << "\n";
    for (const auto &row : table.rows) {
        for (std::size_t i = 0; i < row.size(); i++) {
            csv << (i ? "," : "") << csv_cell(row[i]);
        }
        csv << "\n";
    }
    emit(cfg.out, csv.str(), out);
    if (!cfg.out.empty() && cfg.out != "-") {
        json side = {{"provenance", prov}, {"summary", summary}};
        emit(cfg.out + ".json", side.dump(2) + "\n", out);
    }
}

json summary_json(const EstimatorSummary &s) {
    return {{"count", s.count},         {"mean_e", num(s.mean_e)},       {"mean_m", num(s.mean_m)},
            {"var_e", num(s.var_e)},     {"var_m", num(s.var_m)},         {"cov", num(s.cov)},
            {"se_mean_e", num(s.se_mean_e)}, {"se_mean_m", num(s.se_mean_m)}, {"se_var_e", num(s.se_var_e)},
            {"se_var_m", num(s.se_var_m)}, {"se_cov", num(s.se_cov)}};
}

EstimatorSummary summarize(const std::vector<JointSample> &samples) {
    MomentAccumulator acc(samples.size());
    for (std::size_t i = 0; i < samples.size(); i++) {
        acc.add(i, samples[i].e, samples[i].m);
    }
    return EstimatorSummary::from(acc);
}

double z_score(double value, double reference, double se) {
    return se > 0 ? (value - reference) / se : std::numeric_limits<double>::quiet_NaN();
}

int cmd_sample(RunConfig &cfg, Shape shape, std::ostream &out) {
    std::uint64_t seed = require_seed(cfg);
    if (cfg.samples < 2) {
        throw UsageError("--samples must be at least 2");
    }
    auto samples = sample_haar(shape, cfg.samples, seed, sampler(cfg));
    Table t{{"sample_index", "e_lin", "m_lin"}, {}};
    for (std::size_t i = 0; i < samples.size(); i++) {
        t.rows.push_back({static_cast<std::uint64_t>(i), samples[i].e, samples[i].m});
    }
    EstimatorSummary s = summarize(samples);
    double mean_e = to_double(mean_e_lin(cfg.d_a, cfg.d_b));
    double mean_m = to_double(mean_m_lin(cfg.d_a * cfg.d_b));
    json summary = summary_json(s);
    summary["reference"] = {{"mean_e", mean_e},
                            {"var_e", to_double(var_e_lin(cfg.d_a, cfg.d_b))},
                            {"mean_m", mean_m},
                            {"var_m", to_double(var_m_lin(cfg.d_a * cfg.d_b))},
                            {"cov", 0.0}};
    summary["z"] = {{"mean_e", num(z_score(s.mean_e, mean_e, s.se_mean_e))},
                    {"mean_m", num(z_score(s.mean_m, mean_m, s.se_mean_m))},
                    {"cov", num(z_score(s.cov, 0.0, s.se_cov))}};
    write_output(cfg, t, summary, out);
    return 0;
}

int cmd_orbit(RunConfig &cfg, Shape shape, const std::string &lambda_text, std::ostream &out) {
    std::uint64_t seed = require_seed(cfg);
    if (lambda_text.empty()) {
        throw UsageError("orbit needs --lambda");
    }
    if (cfg.samples < 2) {
        throw UsageError("--samples must be at least 2");
    }
    cfg.lambda = parse_lambda(lambda_text, std::min(shape.d_a, shape.d_b));
    SchmidtSpectrum lam(cfg.lambda);
    auto samples = sample_orbit(lam, shape, cfg.samples, seed, sampler(cfg));
    Table t{{"sample_index", "m_lin"}, {}};
    for (std::size_t i = 0; i < samples.size(); i++) {
        t.rows.push_back({static_cast<std::uint64_t>(i), samples[i].m});
    }
    EstimatorSummary s = summarize(samples);
    double ref = mbar(lam, cfg.d_a, cfg.d_b);
    json summary = summary_json(s);
    summary["e_lin"] = lam.e_lin();
    summary["mbar"] = ref;
    summary["z"] = num(z_score(s.mean_m, ref, s.se_mean_m));
    summary["bhatia_davis_bound"] = bhatia_davis(ref);
    write_output(cfg, t, summary, out);
    return 0;
}

int cmd_conditional(RunConfig &cfg, Shape shape, std::ostream &out) {
    std::uint64_t seed = require_seed(cfg);
    if (cfg.bins < 1) {
        throw UsageError("--bins must be positive");
    }
    BinnedCurve c = conditional_curve(shape, cfg.samples, cfg.bins, seed, sampler(cfg));
    bool has_formula = std::min(shape.d_a, shape.d_b) == 2;
    std::int64_t d_big = static_cast<std::int64_t>(std::max(shape.d_a, shape.d_b));
    Table t{{"e_center", "cond_mean_m", "cond_se", "count", "closed_form_m"}, {}};
    double weighted = 0;
    std::uint64_t used = 0;
    for (std::size_t i = 0; i < c.bin_counts.size(); i++) {
        json closed = nullptr;
        if (has_formula) {
            closed = num(mtilde_bin_average_2xdB(c.e_bin_edges[i], c.e_bin_edges[i + 1], d_big));
        }
        t.rows.push_back({c.e_bin_centers[i], num(c.conditional_means[i]), num(c.conditional_se[i]), c.bin_counts[i],
                          closed});
        if (c.occupied(i)) {
            weighted += c.conditional_means[i] * static_cast<double>(c.bin_counts[i]);
            used += c.bin_counts[i];
        }
    }
    json summary = {{"bins", cfg.bins},
                    {"occupied_bins", c.occupied_count()},
                    {"min_occupancy", c.min_occupancy},
                    {"occupied_weighted_mean_m", used ? json(weighted / static_cast<double>(used)) : json(nullptr)},
                    {"closed_form_mean_m", to_double(mean_m_lin(cfg.d_a * cfg.d_b))}};
    write_output(cfg, t, summary, out);
    return 0;
}

int cmd_hist2d(RunConfig &cfg, Shape shape, std::ostream &out) {
    std::uint64_t seed = require_seed(cfg);
    Histogram2D h = joint_histogram(shape, cfg.samples, cfg.bins, cfg.bins, seed, sampler(cfg));
    GaussianReference ref = gaussian_reference(h, shape);
    std::vector<double> mass = h.mass();
    Table t{{"e_center", "m_center", "count", "mass", "gauss_mass"}, {}};
    double mean_e = 0;
    double mean_m = 0;
    for (int i = 0; i < h.bins_e; i++) {
        for (int j = 0; j < h.bins_m; j++) {
            std::size_t k = static_cast<std::size_t>(i) * h.bins_m + j;
            t.rows.push_back({h.e_center(i), h.m_center(j), h.counts[k], mass[k], ref.grid_mass[k]});
            mean_e += mass[k] * h.e_center(i);
            mean_m += mass[k] * h.m_center(j);
        }
    }
    json summary = {{"total", h.total},
                    {"e_range", {h.e_lo, h.e_hi}},
                    {"m_range", {h.m_lo, h.m_hi}},
                    {"binned_mean_e", mean_e},
                    {"binned_mean_m", mean_m},
                    {"closed_form_mean_e", to_double(mean_e_lin(cfg.d_a, cfg.d_b))},
                    {"closed_form_mean_m", to_double(mean_m_lin(cfg.d_a * cfg.d_b))},
                    {"kl", kl_divergence_log(mass, ref.support_log_mass)},
                    {"l1", l1_distance(mass, ref.grid_mass)}};
    write_output(cfg, t, summary, out);
    return 0;
}

int cmd_closed_form(RunConfig &cfg, const std::string &lambda_text, std::ostream &out) {
    std::int64_t da = cfg.d_a;
    std::int64_t db = cfg.d_b;
    std::int64_t d = da * db;
    Table t{{"quantity", "exact", "value"}, {}};
    auto rational_row = [&](const std::string &name, const Rational &v) {
        t.rows.push_back({name, to_string(v), to_double(v)});
    };
    auto real_row = [&](const std::string &name, double v) { t.rows.push_back({name, nullptr, num(v)}); };
    rational_row("mean_e_lin", mean_e_lin(da, db));
    rational_row("var_e_lin", var_e_lin(da, db));
    rational_row("mean_m_lin", mean_m_lin(d));
    rational_row("var_m_lin", var_m_lin(d));
    rational_row("cov_e_m", covariance_e_m());
    double base = cfg.natural_log ? 1.0 : std::log(2.0);
    real_row(cfg.natural_log ? "log_mean_sp_nats" : "log_mean_sp_bits", -std::log(1.0 - to_double(mean_m_lin(d))) / base);
    std::int64_t small = std::min(da, db);
    std::int64_t big = std::max(da, db);
    if (small >= 2) {
        rational_row("mbar_separable", mbar_separable(small, big));
        rational_row("mbar_maxent", mbar_maxent(small, big));
    }
    if (small == 2) {
        real_row("haar_consistency_2xdB", haar_consistency_2xdB(big));
        real_row("marginal_mass_2xdB", marginal_mass_2xdB(0.0, 0.5, big));
    }
    if (!lambda_text.empty()) {
        cfg.lambda = parse_lambda(lambda_text, static_cast<std::size_t>(small));
        SchmidtSpectrum lam(cfg.lambda);
        double mb = mbar(lam, small, big);
        real_row("e_lin", lam.e_lin());
        real_row("mbar", mb);
        AntiflatDecomposition dec = mbar_antiflat_decomposition(lam, small, big);
        real_row("mbar_delta_times_antiflatness", dec.delta_times_f);
        real_row("mbar_g_of_e", dec.g_of_e);
        real_row("mbar_quartic_residual", dec.residual);
        real_row("bhatia_davis_bound", bhatia_davis(mb));
    }
    write_output(cfg, t, json{{"d_a", da}, {"d_b", db}}, out);
    return 0;
}

int cmd_gauss_check(RunConfig &cfg, std::ostream &out) {
    std::uint64_t seed = require_seed(cfg);
    if (cfg.n_min < 2 || cfg.n_max < cfg.n_min) {
        throw UsageError("Need 2 <= --n-min <= --n-max");
    }
    if (cfg.n_max > cfg.qubit_cap) {
        throw UsageError("--n-max exceeds the qubit cap; pass --cap-override to raise it");
    }
    Table t{{"n", "kl", "l1"}, {}};
    std::vector<GaussianDiagnostic> rows;
    json warnings = json::object();
    for (unsigned n = cfg.n_min; n <= cfg.n_max; n++) {
        rows.push_back(gaussian_diagnostic(n, cfg.samples, cfg.bins, seed, sampler(cfg)));
        t.rows.push_back({n, rows.back().kl, rows.back().l1});
        if (!rows.back().warning.empty()) {
            warnings[std::to_string(n)] = rows.back().warning;
        }
    }
    json summary = {{"samples", cfg.samples}, {"bins", cfg.bins}, {"warnings", warnings}};
    if (rows.size() > 1) {
        bool kl_dec = true;
        bool l1_dec = true;
        for (std::size_t i = 1; i < rows.size(); i++) {
            kl_dec = kl_dec && rows[i].kl < rows[i - 1].kl;
            l1_dec = l1_dec && rows[i].l1 < rows[i - 1].l1;
        }
        summary["kl_strictly_decreasing"] = kl_dec;
        summary["l1_strictly_decreasing"] = l1_dec;
    }
    write_output(cfg, t, summary, out);
    return 0;
}

int cmd_verify(RunConfig &cfg, std::ostream &out, std::ostream &err) {
    const auto &suites = verify_suites();
    if (cfg.suite != "all" && std::find(suites.begin(), suites.end(), cfg.suite) == suites.end()) {
        throw UsageError("Unknown verify suite '" + cfg.suite + "'");
    }
    VerifyOptions o;
    if (cfg.seed) {
        o.seed = *cfg.seed;
    }
    if (cfg.samples > 0) {
        o.gauss_samples = cfg.samples;
    }
    o.workers = cfg.workers;
    VerifyReport report = run_verify(cfg.suite, o);
    json doc = report.to_json();
    doc["provenance"] = provenance(cfg);
    emit(cfg.out, doc.dump(2) + "\n", out);
    err << "verify " << cfg.suite << ": " << report.checks.size() - report.failures() << "/" << report.checks.size()
        << " checks passed\n";
    return report.all_passed() ? 0 : 1;
}

}  // namespace

const char *version() {
    return STABENT_VERSION;
}

nlohmann::json RunConfig::to_json() const {
    json j = {{"command", command}, {"format", format}, {"deterministic", deterministic}, {"qubit_cap", qubit_cap}};
    if (d_a > 0) {
        j["d_a"] = d_a;
        j["d_b"] = d_b;
        j["n"] = n;
        j["n_a"] = n_a;
    }
    if (!lambda.empty()) {
        j["lambda"] = lambda;
    }
    if (samples > 0) {
        j["samples"] = samples;
    }
    j["seed"] = seed ? json(*seed) : json(nullptr);
    bool binned = command == "conditional" || command == "hist2d" || command == "gauss-check";
    if (binned) {
        j["bins"] = bins;
    }
    if (!suite.empty()) {
        j["suite"] = suite;
    }
    if (command == "gauss-check") {
        j["n_min"] = n_min;
        j["n_max"] = n_max;
    }
    if (natural_log) {
        j["natural_log"] = true;
    }
    // Worker count and output path do not affect file contents, so they are left out.
    return j;
}

std::vector<double> parse_lambda(const std::string &text, std::size_t expected_length) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception &) {
            throw UsageError("Cannot parse Schmidt coefficient '" + item + "'");
        }
    }
    if (values.size() != expected_length) {
        throw UsageError("--lambda needs " + std::to_string(expected_length) + " entries, got " +
                         std::to_string(values.size()));
    }
    try {
        return SchmidtSpectrum::normalized(values, kLambdaTolerance).lambdas();
    } catch (const std::exception &ex) {
        throw UsageError(std::string("--lambda is not on the probability simplex: ") + ex.what());
    }
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Stabilizer entropy and entanglement toolkit", "stabent"};
    app.set_version_flag("--version", std::string(version()));
    app.require_subcommand(1);

    RunConfig cfg;
    std::string lambda_text;
    std::uint64_t seed_value = 0;
    unsigned cap_override = 0;

    struct Flags {
        CLI::Option *da = nullptr;
        CLI::Option *n = nullptr;
        CLI::Option *na = nullptr;
        CLI::Option *seed = nullptr;
    };
    std::map<std::string, Flags> flags;
    std::map<std::string, std::uint64_t> samples;

    auto add_common = [&](CLI::App *sub, bool shape, bool sampling, std::uint64_t default_samples, int default_bins) {
        Flags f;
        if (shape) {
            f.da = sub->add_option("--da", cfg.d_a, "Dimension of subsystem A (power of two)");
            auto db = sub->add_option("--db", cfg.d_b, "Dimension of subsystem B (power of two)");
            f.da->needs(db);
            db->needs(f.da);
            f.n = sub->add_option("--n", cfg.n, "Total number of qubits");
            f.na = sub->add_option("--na", cfg.n_a, "Qubits in subsystem A (default n/2)");
            f.na->needs(f.n);
        }
        if (sampling) {
            samples[sub->get_name()] = default_samples;
            auto *n_opt = sub->add_option("--samples", samples[sub->get_name()], "Number of samples");
            if (default_samples > 0) {
                n_opt->capture_default_str();
            }
            f.seed = sub->add_option("--seed", seed_value, "Master seed (required)");
            sub->add_option("--workers", cfg.workers, "Worker threads (default: hardware concurrency)");
            sub->add_option("--cap-override", cap_override, "Raise the exact stabilizer-purity qubit cap");
        }
        if (default_bins > 0) {
            sub->add_option("--bins", cfg.bins, "Number of bins (default " + std::to_string(default_bins) + ")");
        }
        sub->add_option("--out", cfg.out, "Output path (default: stdout)");
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
        sub->add_flag("--deterministic", cfg.deterministic, "Omit the timestamp from provenance");
        flags[sub->get_name()] = f;
    };

    auto *sample = app.add_subcommand("sample", "Haar-random states: per-sample E_lin and M_lin");
    add_common(sample, true, true, 10000, 0);
    auto *orbit = app.add_subcommand("orbit", "Local-unitary orbit of a fixed Schmidt spectrum");
    add_common(orbit, true, true, 10000, 0);
    orbit->add_option("--lambda", lambda_text, "Comma-separated Schmidt coefficients");
    auto *conditional = app.add_subcommand("conditional", "Binned conditional mean of M_lin given E_lin");
    add_common(conditional, true, true, 100000, 40);
    auto *hist2d = app.add_subcommand("hist2d", "Joint histogram of (E_lin, M_lin) with Gaussian reference");
    add_common(hist2d, true, true, 100000, 60);
    auto *closed = app.add_subcommand("closed-form", "Evaluate exact moments and orbit averages");
    add_common(closed, true, false, 0, 0);
    closed->add_option("--lambda", lambda_text, "Comma-separated Schmidt coefficients");
    closed->add_flag("--natural-log", cfg.natural_log, "Report logarithms in nats instead of bits");
    auto *verify = app.add_subcommand("verify", "Run an exact verification suite");
    add_common(verify, false, true, 0, 0);
    verify->add_option("suite", cfg.suite, "Suite name or 'all'")->required();
    verify->get_option("--samples")->description("Samples per n for the gauss suite (default 100000)");
    verify->get_option("--seed")->description("Seed for the sampled suites (default 2024)");
    auto *gauss = app.add_subcommand("gauss-check", "KL and L1 of the Gaussian approximation versus n");
    add_common(gauss, false, true, 100000, 60);
    cfg.n_min = 4;
    cfg.n_max = 8;
    gauss->add_option("--n-min", cfg.n_min, "Smallest qubit count")->capture_default_str();
    gauss->add_option("--n-max", cfg.n_max, "Largest qubit count")->capture_default_str();

    cfg.bins = 0;
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion &e) {
        out << version() << "\n";
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        CLI::App *sub = app.get_subcommands().front();
        cfg.command = sub->get_name();
        Flags &f = flags[cfg.command];
        cfg.samples = samples.count(cfg.command) ? samples[cfg.command] : 0;
        if (f.seed && f.seed->count() > 0) {
            cfg.seed = seed_value;
        }
        if (cap_override > 0) {
            cfg.qubit_cap = cap_override;
        }
        if (cfg.bins == 0) {
            cfg.bins = cfg.command == "hist2d" || cfg.command == "gauss-check" ? 60 : 40;
        }
        Shape shape;
        if (f.da) {
            bool da_set = f.da->count() > 0;
            bool n_set = f.n->count() > 0;
            if (!da_set && !n_set) {
                throw UsageError("Specify the bipartition with --da/--db or --n/--na");
            }
            shape = resolve_shape(cfg, da_set, n_set, f.na->count() > 0);
        }
        if (cfg.command == "sample") {
            return cmd_sample(cfg, shape, out);
        }
        if (cfg.command == "orbit") {
            return cmd_orbit(cfg, shape, lambda_text, out);
        }
        if (cfg.command == "conditional") {
            return cmd_conditional(cfg, shape, out);
        }
        if (cfg.command == "hist2d") {
            return cmd_hist2d(cfg, shape, out);
        }
        if (cfg.command == "closed-form") {
            return cmd_closed_form(cfg, lambda_text, out);
        }
        if (cfg.command == "verify") {
            return cmd_verify(cfg, out, err);
        }
        return cmd_gauss_check(cfg, out);
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace stabent
