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

#include "stabent/verify.h"

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "stabent/clifford.h"
#include "stabent/closed_forms.h"
#include "stabent/mc_engine.h"
#include "stabent/moment_sums.h"
#include "stabent/pauli_kernel.h"
#include "stabent/pauli_words.h"
#include "stabent/permutation.h"
#include "stabent/rng.h"
#include "stabent/weingarten.h"

namespace stabent {

namespace {

using json = nlohmann::json;

class Recorder {
   public:
    Recorder(std::string suite, VerifyReport &report) : suite_(std::move(suite)), report_(report) {}

    void exact(const std::string &name, const std::string &computed, const std::string &reference,
               const std::string &note = "") {
        report_.checks.push_back({suite_, name, computed, reference, 0.0, computed == reference, note});
    }

    void exact(const std::string &name, const Rational &computed, const Rational &reference,
               const std::string &note = "") {
        exact(name, to_string(computed), to_string(reference), note);
    }

    void close(const std::string &name, double computed, double reference, double tol, const std::string &note = "") {
        bool ok = std::isfinite(computed) && std::abs(computed - reference) <= tol;
        report_.checks.push_back({suite_, name, computed, reference, tol, ok, note});
    }

    void flag(const std::string &name, bool ok, const json &computed, const std::string &note = "") {
        report_.checks.push_back({suite_, name, computed, true, 0.0, ok, note});
    }

    // Runs body; an exception becomes a failed check instead of aborting the suite.
    void guarded(const std::string &name, const std::function<void()> &body) {
        try {
            body();
        } catch (const std::exception &ex) {
            report_.checks.push_back({suite_, name, std::string("error"), nullptr, 0.0, false, ex.what()});
        }
    }

   private:
    std::string suite_;
    VerifyReport &report_;
};

std::string str(const BigInt &v) {
    return v.str();
}

void suite_tables(Recorder &r, const VerifyOptions &) {
    const std::map<int, std::map<std::string, std::uint64_t>> printed = {
        {4, {{"()", 1}, {"(ab)", 6}, {"(ab)(cd)", 3}, {"(abc)", 8}, {"(abcd)", 6}}},
        {6,
         {{"()", 1}, {"(ab)", 15}, {"(abc)", 40}, {"(abcd)", 90}, {"(ab)(cd)", 45}, {"(abcde)", 144},
          {"(abc)(de)", 120}, {"(ab)(cd)(ef)", 15}, {"(abcd)(ef)", 90}, {"(abc)(def)", 40}, {"(abcdef)", 120}}},
        {8,
         {{"()", 1},           {"(ab)", 28},           {"(abc)", 112},         {"(abcd)", 420},
          {"(ab)(cd)", 210},   {"(abcde)", 1344},      {"(abc)(de)", 1120},    {"(abcdef)", 3360},
          {"(abcd)(ef)", 2520}, {"(ab)(cd)(ef)", 420}, {"(abc)(def)", 1120},   {"(abcdefg)", 5760},
          {"(abc)(de)(fg)", 1680}, {"(abcd)(efg)", 3360}, {"(abcde)(fg)", 4032}, {"(ab)(cd)(ef)(gh)", 105},
          {"(abcd)(ef)(gh)", 1260}, {"(abc)(def)(gh)", 1120}, {"(abcdef)(gh)", 3360}, {"(abcde)(fgh)", 2688},
          {"(abcd)(efgh)", 1260}, {"(abcdefgh)", 5040}}},
    };
    for (const auto &[k, table] : printed) {
        std::string sk = "S" + std::to_string(k);
        r.guarded(sk + " class sizes", [&, k = k, &table = table] {
            auto closed = class_sizes(k);
            auto brute = class_sizes_bruteforce(k);
            r.exact(sk + " class count", std::to_string(closed.size()), std::to_string(table.size()));
            for (const auto &[type, size] : closed) {
                auto it = table.find(type.str());
                std::string printed_size = it == table.end() ? "missing" : std::to_string(it->second);
                r.exact(sk + " " + type.str() + " combinatoric", str(size), printed_size);
                r.exact(sk + " " + type.str() + " enumerated", std::to_string(brute.at(type)), printed_size);
            }
            r.exact(sk + " order", std::to_string(enumerate_sym(k).size()), str(factorial(k)));
        });
    }
    for (int k : {2, 4, 6, 8}) {
        for (std::int64_t d : {2, 4, 8}) {
            std::string name = "Haar moment normalization k=" + std::to_string(k) + " d=" + std::to_string(d);
            r.guarded(name, [&] {
                r.exact(name, haar_moment_normalization(k, d),
                        make_rational(1, rising_factorial(static_cast<std::uint64_t>(d), k)));
            });
        }
    }
    // Tr[T_sigma Q] from the Pauli-word path against a dense permutation-operator oracle at d = 2 and 4.
    r.guarded("Tr[T_sigma Q] table", [&] {
        for (const MelpermRow &row : check_melperm_table()) {
            Permutation sigma = Permutation::parse(4, row.sigma);
            for (unsigned n : {1u, 2u}) {
                std::int64_t d = std::int64_t{1} << n;
                std::complex<double> dense = 0;
                for (std::uint64_t x = 0; x < (1u << n); x++) {
                    for (std::uint64_t z = 0; z < (1u << n); z++) {
                        Eigen::MatrixXcd p = pauli_op_matrix(PauliOp::hermitian(PauliString(n, x, z)), n);
                        dense += perm_tensor_trace_dense(sigma, {p, p, p, p});
                    }
                }
                dense /= static_cast<double>(d * d);
                std::string note = row.trace_q_matches ? ""
                                                       : "printed entry " + row.tabulated_trace_q +
                                                             " is a transcription slip; computed " +
                                                             row.computed_trace_q;
                r.close("Tr[T_sigma Q] " + row.sigma + " d=" + std::to_string(d),
                        to_double(trace_perm_q(sigma, d)), dense.real(), 1e-9, note);
            }
            r.flag("delta pattern " + row.sigma, true, row.computed_pattern,
                   row.pattern_matches ? "" : "printed pattern " + row.tabulated_pattern + " is a transcription slip");
        }
    });
}

void suite_pauli_patterns(Recorder &r, const VerifyOptions &) {
    for (unsigned m : {2u, 3u, 4u}) {
        unsigned n_max = m == 2 ? 3 : 2;
        for (unsigned n = 1; n <= n_max; n++) {
            for (unsigned k = 1; k <= 8; k++) {
                std::string name = "trace sum n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                   " k=" + std::to_string(k);
                r.guarded(name, [&] {
                    r.exact(name, str(pauli_power_trace_sum_closed(n, m, k)),
                            str(pauli_power_trace_sum_bruteforce(n, m, k)));
                });
            }
        }
    }
    r.exact("trace sum n=1 m=2 k=2 = d^3", str(pauli_power_trace_sum_closed(1, 2, 2)), "8");
    r.exact("trace sum n=1 m=2 k=4 = d^5", str(pauli_power_trace_sum_closed(1, 2, 4)), "32");
}

void suite_variance(Recorder &r, const VerifyOptions &) {
    for (std::int64_t d : {2, 4, 8}) {
        std::string ds = " d=" + std::to_string(d);
        r.guarded("variance sum" + ds, [&] {
            VarianceSumResult v = verify_variance_sum(d);
            r.exact("E[(d Tr Q psi^4)^2] enumerated" + ds, v.value, variance_sum_target(d));
            r.exact("class-grouped equals enumerated" + ds, str(v.class_grouped_sum), str(v.enumerated_sum));
            for (const ClassDiagnostic &c : v.classes) {
                r.exact("class " + c.type.str() + ds, str(c.enumerated), str(c.tabulated));
            }
            r.exact("variance of M_lin" + ds, v.variance, var_m_lin(d));
            if (d <= 4) {
                r.exact("explicit Pauli enumeration" + ds, str(variance_sum_explicit(d)), str(v.enumerated_sum));
            }
        });
    }
    r.guarded("d=2 constants", [&] {
        VarianceSumResult v = verify_variance_sum(2);
        r.exact("target at d=2", v.value, make_rational(68, 105));
        r.exact("variance at d=2", v.variance, make_rational(4, 525));
    });
}

void suite_covariance(Recorder &r, const VerifyOptions &) {
    for (auto [da, db] : {std::pair<std::int64_t, std::int64_t>{2, 2}, {2, 4}, {4, 4}}) {
        std::string s = " (" + std::to_string(da) + "," + std::to_string(db) + ")";
        r.guarded("covariance" + s, [&, da = da, db = db] {
            CovarianceSumResult c = verify_covariance_sum(da, db);
            r.exact("Cov(M_lin, E_lin)" + s, c.covariance, Rational(0));
            r.exact("factorized equals enumerated" + s, str(c.factorized_sum), str(c.enumerated_sum));
            std::string note = c.tabulated_intermediate == c.intermediate
                                   ? ""
                                   : "printed intermediate evaluates to " + to_string(c.tabulated_intermediate);
            r.exact("E[Tr(psi_A^2) Tr(Q psi^x4)]" + s, c.intermediate, c.expected_intermediate, note);
            for (const ClassDiagnostic &k : c.classes) {
                r.exact("class " + k.type.str() + s, str(k.enumerated), str(k.tabulated));
            }
        });
    }
}

void suite_weingarten(Recorder &r, const VerifyOptions &opts) {
    for (std::int64_t d : {2, 3, 4, 8}) {
        std::string name = "Weingarten k=4 d=" + std::to_string(d);
        r.guarded(name, [&] {
            WeingartenTable t = WeingartenTable::build(4, d);
            r.close(name + " pseudo-inverse residual", t.pinv_residual(), 0.0, 1e-8);
            if (d >= 4) {
                r.close(name + " inverse residual", t.inverse_residual(), 0.0, 1e-9);
            }
        });
    }
    r.guarded("special points", [&] {
        r.close("separable (2,2)", orbit_average_weingarten(SchmidtSpectrum::product(2), 2, 2), 0.36, 1e-9);
        r.close("Bell (2,2)", orbit_average_weingarten(SchmidtSpectrum::flat(2), 2, 2), 0.3, 1e-9);
    });
    RngStream rng(opts.seed, 0);
    for (auto [da, db] : {std::pair<std::int64_t, std::int64_t>{2, 2}, {2, 4}, {4, 4}, {2, 8}, {4, 8}}) {
        std::string s = " (" + std::to_string(da) + "," + std::to_string(db) + ")";
        r.guarded("orbit average" + s, [&, da = da, db = db] {
            double worst = 0;
            for (int i = 0; i < opts.orbit_spectra; i++) {
                SchmidtSpectrum lam = SchmidtSpectrum::random(static_cast<std::size_t>(da), rng);
                worst = std::max(worst, std::abs(orbit_average_weingarten(lam, da, db) - mbar(lam, da, db)));
            }
            r.close("max |Weingarten - closed form|" + s, worst, 0.0, 1e-9);
        });
    }
}

void suite_clifford(Recorder &r, const VerifyOptions &opts) {
    r.guarded("Clifford group", [&] {
        r.exact("|C_1| mod phase", std::to_string(clifford_group(1).size()), "24");
        r.exact("|C_2| mod phase", std::to_string(clifford_group(2).size()), "11520");
        r.exact("prefactor (d_A=2, d=4)", clifford_antiflat_prefactor(2, 4), make_rational(1, 10));
        auto states = clifford_orbit_states(2);
        r.exact("stabilizer states n=2", std::to_string(states.size()), "60");
        double worst_m = 0;
        double worst_f = 0;
        for (const PureState &s : states) {
            worst_m = std::max(worst_m, std::abs(m_lin(s)));
            worst_f = std::max(worst_f, std::abs(clifford_orbit_antiflatness(s)));
        }
        r.close("max M_lin on stabilizer states", worst_m, 0.0, 1e-12);
        r.close("max Clifford-averaged anti-flatness on stabilizer states", worst_f, 0.0, 1e-12);
        PureState g = tensor(golden_state(1), golden_state(1));
        r.close("golden x golden", clifford_orbit_antiflatness(g), 1.0 / 18.0, 1e-10);
        RngStream rng(opts.seed, 1);
        double worst = 0;
        for (int i = 0; i < 10; i++) {
            PureState psi = haar_state(Shape{2, 2}, rng);
            worst = std::max(worst, std::abs(clifford_orbit_antiflatness(psi) - m_lin(psi) / 10.0));
        }
        r.close("max |E_C[F_A] - M_lin/10| over 10 Haar states", worst, 0.0, 1e-10);
    });
}

void suite_gauss(Recorder &r, const VerifyOptions &opts) {
    r.guarded("Gaussian approximation", [&] {
        SamplerOptions so;
        so.chunks.workers = opts.workers;
        std::vector<GaussianDiagnostic> rows;
        for (unsigned n = opts.gauss_n_min; n <= opts.gauss_n_max; n++) {
            rows.push_back(gaussian_diagnostic(n, opts.gauss_samples, opts.gauss_bins, opts.seed, so));
            const GaussianDiagnostic &g = rows.back();
            r.flag("n=" + std::to_string(n) + " diagnostics", std::isfinite(g.kl) && std::isfinite(g.l1),
                   json{{"kl", g.kl}, {"l1", g.l1}, {"occupied_bins", g.occupied_bins}}, g.warning);
        }
        for (std::size_t i = 1; i < rows.size(); i++) {
            std::string step = "n=" + std::to_string(rows[i - 1].n) + "->" + std::to_string(rows[i].n);
            r.flag("KL decreases " + step, rows[i].kl < rows[i - 1].kl, json{rows[i - 1].kl, rows[i].kl});
            r.flag("L1 decreases " + step, rows[i].l1 < rows[i - 1].l1, json{rows[i - 1].l1, rows[i].l1});
        }
    });
}

using SuiteFn = void (*)(Recorder &, const VerifyOptions &);

const std::vector<std::pair<std::string, SuiteFn>> &suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"tables", suite_tables},
        {"pauli-patterns", suite_pauli_patterns},
        {"variance", suite_variance},
        {"covariance", suite_covariance},
        {"weingarten-orbit", suite_weingarten},
        {"clifford-antiflat", suite_clifford},
        {"gauss", suite_gauss},
    };
    return table;
}

}  // namespace

bool VerifyReport::all_passed() const {
    return failures() == 0;
}

std::size_t VerifyReport::failures() const {
    std::size_t k = 0;
    for (const CheckResult &c : checks) {
        k += c.pass ? 0 : 1;
    }
    return k;
}

nlohmann::json VerifyReport::to_json() const {
    json arr = json::array();
    for (const CheckResult &c : checks) {
        json row = {{"suite", c.suite},         {"name", c.name}, {"computed", c.computed},
                    {"reference", c.reference}, {"tolerance", c.tolerance}, {"pass", c.pass}};
        if (!c.note.empty()) {
            row["note"] = c.note;
        }
        arr.push_back(row);
    }
    return json{{"checks", arr}, {"total", checks.size()}, {"failures", failures()}, {"pass", all_passed()}};
}

const std::vector<std::string> &verify_suites() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto &[name, fn] : suite_table()) {
            out.push_back(name);
        }
        return out;
    }();
    return names;
}

VerifyReport run_verify(const std::string &suite, const VerifyOptions &opts) {
    VerifyReport report;
    bool found = false;
    for (const auto &[name, fn] : suite_table()) {
        if (suite == "all" || suite == name) {
            Recorder r(name, report);
            fn(r, opts);
            found = true;
        }
    }
    if (!found) {
        throw std::invalid_argument("Unknown verify suite '" + suite + "'");
    }
    return report;
}

}  // namespace stabent
