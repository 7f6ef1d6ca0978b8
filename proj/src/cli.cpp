// Copyright 2026 The mmeslab Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "mmeslab/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mmeslab/decomposition.hpp"
#include "mmeslab/purity.hpp"
#include "mmeslab/report.hpp"
#include "mmeslab/search.hpp"
#include "mmeslab/state_io.hpp"

namespace mmeslab {

namespace {

constexpr double kErrataThreshold = 1e-8;

class UsageError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

struct StateOpts {
    std::string kind;
    int n = 0;
    std::size_t index = 0;
    std::uint64_t seed = 0;
    std::string out;
};

struct InvariantOpts {
    std::string in;
    int max_weight = 0;
    bool with_tangle = true;
    bool with_purity = true;
    bool renormalize = false;
    std::string strategy = "enumeration";
};

struct VerifyOpts {
    int n = 0;
    std::size_t samples = 100;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    bool brief = false;
};

struct FitOpts {
    int n = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::size_t holdout = 100;
    bool no_snap = false;
};

struct SearchOpts {
    int n = 0;
    int restarts = 16;
    int max_iters = 3000;
    std::uint64_t seed = 0;
    std::string objective = "oracle";
    std::string out;
};

struct AuditOpts {
    std::vector<int> ns{2, 4, 6, 8, 10, 12};
};

void emit(std::ostream &out, const Json &report) { out << report.dump(2) << '\n'; }

void save_or_usage_error(const QState &state, const std::string &path) {
    try {
        save_state(state, path);
    } catch (const std::runtime_error &e) {
        throw UsageError(e.what());
    }
}

void require_model_size(int n) {
    if (!has_printed_model(n)) {
        throw UsageError("n must be one of 2, 4, 6, 8, 10, 12 (got " + std::to_string(n) + ")");
    }
}

int cmd_state(const StateOpts &o, const std::vector<std::string> &argv, std::ostream &out,
              std::ostream &err) {
    std::optional<double> raw_norm;
    QState state = [&]() -> QState {
        if (o.kind == "psi_m8") {
            if (o.n != 0 && o.n != 8) {
                throw UsageError("psi_m8 is an 8-qubit state");
            }
            auto psi = make_psi_m8();
            raw_norm = psi.raw_norm;
            return std::move(psi.state);
        }
        if (o.n == 0) {
            throw UsageError("--n is required for kind " + o.kind);
        }
        if (o.kind == "basis") {
            return make_basis_state(o.n, o.index);
        }
        if (o.kind == "ghz") {
            return make_ghz(o.n);
        }
        if (o.kind == "w") {
            return make_w(o.n);
        }
        return random_state(o.n, o.seed);
    }();

    if (raw_norm) {
        err << std::setprecision(17) << "note: printed psi_m8 amplitudes have norm " << *raw_norm
            << "; the written state is normalized\n";
    }
    if (!o.out.empty()) {
        save_or_usage_error(state, o.out);
        Json rep = make_report("state", argv);
        rep["inputs"] = {{"kind", o.kind}, {"n", state.num_qubits()}, {"seed", o.seed},
                         {"index", o.index}};
        rep["results"] = {{"path", o.out}, {"dim", state.dim()}};
        if (raw_norm) {
            rep["results"]["raw_norm"] = *raw_norm;
        }
        emit(out, rep);
    } else {
        out << state_to_json(state).dump(1) << '\n';
    }
    return kExitOk;
}

int cmd_invariants(const InvariantOpts &o, const std::vector<std::string> &argv, bool pretty,
                   std::ostream &out, std::ostream &err) {
    LoadedState loaded = [&] {
        try {
            return load_state(o.in, LoadOptions{o.renormalize});
        } catch (const StateFormatError &e) {
            throw UsageError(e.what());
        }
    }();
    const QState &s = loaded.state;
    const int n = s.num_qubits();
    for (const auto &w : loaded.warnings) {
        err << "warning: " << w << '\n';
    }
    const int max_weight = o.max_weight == 0 ? std::min(n, 4) : o.max_weight;
    if (max_weight < 1 || max_weight > n) {
        throw UsageError("--max-weight must lie in 1..n");
    }
    const auto strategy = o.strategy == "moebius" ? SumStrategy::Moebius : SumStrategy::Enumeration;

    Json rep = make_report("invariants", argv);
    rep["inputs"] = {{"path", o.in},
                     {"n", n},
                     {"max_weight", max_weight},
                     {"strategy", o.strategy},
                     {"with_tangle", o.with_tangle},
                     {"with_purity", o.with_purity},
                     {"warnings", loaded.warnings}};
    auto &res = rep["results"];
    const auto ws = weight_sums(s, max_weight, strategy);
    res["weight_sums"] = to_json(ws);

    std::optional<double> tau;
    if (o.with_tangle) {
        if (n % 2 == 0) {
            tau = n_tangle(s);
            res["tau"] = *tau;
        } else {
            res["tau"] = nullptr;
            res["tau_note"] = "n-tangle is undefined for odd n";
        }
    }
    std::optional<PurityReport> purity;
    if (o.with_purity && n >= 2) {
        purity = average_balanced_purity(s);
        res["purity"] = to_json(*purity);
    }
    if (has_printed_model(n) && tau && purity) {
        const auto model = printed_model(n);
        const auto k = evaluate(model, s, o.in);
        res["printed_model"] = to_json(model);
        res["k_report"] = to_json(k);
        if (std::abs(k.residual) > kErrataThreshold) {
            rep["errata"].push_back({{"kind", "decomposition_residual"},
                                     {"n", n},
                                     {"residual", k.residual},
                                     {"threshold", kErrataThreshold}});
        }
    }
    if (pretty) {
        err << std::setprecision(12);
        for (int k = 1; k <= ws.k_max(); ++k) {
            err << "M_" << k << "\t" << ws.at(k) << '\n';
        }
        if (tau) {
            err << "tau\t" << *tau << '\n';
        }
        if (purity) {
            err << "pi_ME\t" << purity->mean << "\t(min " << purity->min << ", max " << purity->max
                << ")\n";
        }
        if (res.contains("k_report")) {
            err << "K\t" << res["k_report"]["k_model"].get<double>() << "\tresidual\t"
                << res["k_report"]["residual_oracle_minus_model"].get<double>() << '\n';
        }
    }
    emit(out, rep);
    return kExitOk;
}

int cmd_verify(const VerifyOpts &o, const std::vector<std::string> &argv, bool pretty,
               std::ostream &out, std::ostream &err) {
    require_model_size(o.n);
    if (o.samples < 1) {
        throw UsageError("--samples must be at least 1");
    }
    if (!(o.tol > 0.0)) {
        throw UsageError("--tol must be positive");
    }
    const auto model = printed_model(o.n);
    const auto summary = verify_identity(o.n, o.samples, o.seed, o.tol, model);
    Json rep = make_report("verify", argv);
    rep["inputs"] = {{"n", o.n}, {"samples", o.samples}, {"seed", o.seed}, {"tol", o.tol}};
    rep["results"] = {{"model", to_json(model)}, {"summary", to_json(summary, !o.brief)}};
    if (!summary.passed) {
        rep["errata"].push_back({{"kind", "identity_violation"},
                                 {"n", o.n},
                                 {"max_abs_residual", summary.max_abs_residual},
                                 {"tol", o.tol}});
    }
    if (pretty) {
        err << std::setprecision(6) << "n=" << o.n << " states=" << summary.states.size()
            << " max|residual|=" << summary.max_abs_residual << " min K=" << summary.min_k
            << (summary.passed ? "  PASS" : "  FAIL") << '\n';
    }
    emit(out, rep);
    return summary.passed ? kExitOk : kExitVerifyFailed;
}

int cmd_fit(const FitOpts &o, const std::vector<std::string> &argv, bool pretty,
            std::ostream &out, std::ostream &err) {
    require_model_size(o.n);
    const std::size_t min_samples = 4 * static_cast<std::size_t>(o.n / 2 + 2);
    const std::size_t samples = o.samples == 0 ? std::max<std::size_t>(min_samples, 200) : o.samples;
    if (samples < min_samples) {
        throw UsageError("--samples must be at least " + std::to_string(min_samples));
    }
    FitOptions fo;
    fo.snap = !o.no_snap;
    fo.holdout = o.holdout;
    const auto fit = fit_coefficients(o.n, samples, o.seed, fo);
    const auto printed = printed_model(o.n);

    Json rep = make_report("fit", argv);
    rep["inputs"] = {{"n", o.n}, {"samples", samples}, {"seed", o.seed}, {"holdout", o.holdout}};
    rep["results"] = {{"fit", to_json(fit)}, {"printed_model", to_json(printed)}};

    // Coefficient-by-coefficient comparison against the published table.
    auto compare = [&](const std::string &name, const Coefficient &fitted, const Coefficient &pub) {
        const bool same = fitted.exact ? *fitted.exact == *pub.exact
                                       : std::abs(fitted.value - pub.value) <= 1e-9;
        if (!same) {
            rep["errata"].push_back({{"kind", "coefficient_mismatch"},
                                     {"coefficient", name},
                                     {"printed", to_json(pub)},
                                     {"fitted", to_json(fitted)}});
        }
    };
    compare("constant", fit.model.constant, printed.constant);
    for (std::size_t k = 0; k < printed.weight_coeffs.size(); ++k) {
        compare("M_" + std::to_string(k + 1), fit.model.weight_coeffs[k], printed.weight_coeffs[k]);
    }
    compare("tau", fit.model.tau_coeff, printed.tau_coeff);
    compare("tau_offset", fit.model.tau_offset, printed.tau_offset);

    Json canonical = Json::array();
    for (const auto &[label, state] :
         {std::pair<std::string, QState>{"ghz", make_ghz(o.n)}, {"product", make_basis_state(o.n, 0)}}) {
        const auto k = evaluate(fit.model, state, label);
        Json entry = to_json(k);
        std::vector<std::int64_t> m;
        for (const double v : k.m) {
            m.push_back(std::llround(v));
        }
        if (const auto exact = fit.model.exact_k(m, std::llround(k.tau))) {
            entry["k_exact"] = to_string(*exact);
        }
        canonical.push_back(std::move(entry));
    }
    rep["results"]["canonical"] = std::move(canonical);

    if (pretty) {
        err << std::setprecision(12) << "training residual " << fit.training_residual
            << ", held-out " << fit.holdout_residual_snapped << ", rank " << fit.rank << '\n';
        err << "C = " << (fit.model.constant.exact ? to_string(*fit.model.constant.exact)
                                                   : std::to_string(fit.model.constant.value))
            << '\n';
        for (std::size_t k = 0; k < fit.model.weight_coeffs.size(); ++k) {
            const auto &c = fit.model.weight_coeffs[k];
            err << "M_" << k + 1 << "\t" << (c.exact ? to_string(*c.exact) : std::to_string(c.value))
                << '\n';
        }
        const auto &t = fit.model.tau_coeff;
        err << "tau\t" << (t.exact ? to_string(*t.exact) : std::to_string(t.value)) << '\n';
    }
    emit(out, rep);
    return kExitOk;
}

int cmd_search(const SearchOpts &o, const std::vector<std::string> &argv, bool pretty,
               std::ostream &out, std::ostream &err) {
    SearchConfig cfg;
    cfg.n = o.n;
    cfg.restarts = o.restarts;
    cfg.max_iters = o.max_iters;
    cfg.seed = o.seed;
    cfg.objective = o.objective == "model" ? SearchObjective::Model : SearchObjective::Oracle;
    if (cfg.objective == SearchObjective::Model) {
        require_model_size(o.n);
    }
    SearchResult result = [&] {
        try {
            return minimize_average_purity(cfg);
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
    }();
    Json rep = make_report("search", argv);
    rep["inputs"] = {{"n", o.n},
                     {"restarts", o.restarts},
                     {"max_iters", o.max_iters},
                     {"seed", o.seed},
                     {"objective", o.objective}};
    auto &res = rep["results"];
    res["search"] = to_json(result);
    res["best_tau"] = n_tangle(result.best_state);
    res["hard_floor"] = std::ldexp(1.0, -(o.n / 2));
    if (has_printed_model(o.n)) {
        const auto c = printed_model(o.n).constant;
        res["model_floor"] = to_json(c);
        res["gap_to_model_floor"] = result.best_pi_me - c.value;
    }
    if (o.n >= 12) {
        res["note"] = "n=12 search is slow";
    }
    if (!o.out.empty()) {
        save_or_usage_error(result.best_state, o.out);
        res["best_state_path"] = o.out;
    }
    if (pretty) {
        err << std::setprecision(12) << "best pi_ME " << result.best_pi_me << " (restart "
            << result.best_restart << "), tau " << res["best_tau"].get<double>() << ", "
            << result.wall_seconds << " s\n";
    }
    emit(out, rep);
    return kExitOk;
}

int cmd_audit(const AuditOpts &o, const std::vector<std::string> &argv, bool pretty,
              std::ostream &out, std::ostream &err) {
    std::vector<ConjectureRow> rows;
    try {
        rows = conjecture_audit(o.ns);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    Json rep = make_report("audit", argv);
    rep["inputs"] = {{"n", o.ns}};
    auto &res = rep["results"];
    res["conjecture"] = Json::array();
    for (const auto &r : rows) {
        res["conjecture"].push_back(to_json(r));
        if (!r.consistent) {
            rep["errata"].push_back({{"kind", "conjecture_inconsistent"}, {"n", r.n}});
        }
        if (!r.floor_in_bracket) {
            rep["errata"].push_back({{"kind", "floor_outside_bracket"}, {"n", r.n}});
        }
    }
    res["claimed_k"] = Json::array();
    for (const auto &c : claimed_k_audit()) {
        res["claimed_k"].push_back(to_json(c));
        if (!c.claim_matches_oracle) {
            rep["errata"].push_back({{"kind", "claimed_k_mismatch"},
                                     {"n", c.n},
                                     {"state", c.state},
                                     {"claimed_k", to_string(c.claimed_k)},
                                     {"oracle_k", c.oracle_k}});
        }
        if (!c.model_matches_oracle) {
            rep["errata"].push_back({{"kind", "printed_model_residual"},
                                     {"n", c.n},
                                     {"state", c.state},
                                     {"residual", c.oracle_k - c.printed_model_k}});
        }
    }
    res["twelve_qubit_readings"] = Json::array();
    for (const auto &r : twelve_qubit_reading_audit()) {
        res["twelve_qubit_readings"].push_back(to_json(r));
    }
    const auto psi = audit_psi_m8();
    res["psi_m8"] = to_json(psi);
    if (!psi.claim_holds) {
        rep["errata"].push_back({{"kind", "psi_m8_claim"}, {"deviations", psi.deviations}});
    }
    if (pretty) {
        err << "n\tC\trequired tau\tconjecture\n";
        for (const auto &r : rows) {
            err << r.n << '\t' << to_string(r.constant) << '\t' << r.required_tau << '\t'
                << (r.consistent ? "consistent" : "INCONSISTENT") << '\n';
        }
    }
    emit(out, rep);
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Multipartite entanglement invariants of even-n qubit pure states", "mmeslab"};
    app.require_subcommand(1);
    bool pretty = false;
    int threads = 0;
    app.add_flag("--pretty", pretty, "Human-readable tables on standard error");
    app.add_option("--threads", threads, "Worker thread cap (0 = runtime default)")
        ->check(CLI::NonNegativeNumber);

    StateOpts so;
    auto *state = app.add_subcommand("state", "Write a state file");
    state->add_option("--kind", so.kind, "basis | ghz | w | psi_m8 | random")
        ->required()
        ->check(CLI::IsMember({"basis", "ghz", "w", "psi_m8", "random"}));
    state->add_option("--n", so.n, "Qubit count")->check(CLI::Range(1, kMaxQubits));
    state->add_option("--index", so.index, "Basis index for --kind basis");
    state->add_option("--seed", so.seed, "Seed for --kind random");
    state->add_option("--out", so.out, "Output path (standard output if omitted)");

    InvariantOpts io;
    auto *inv = app.add_subcommand("invariants", "Invariant report for a state file");
    inv->add_option("--in", io.in, "State file")->required();
    inv->add_option("--max-weight", io.max_weight, "Largest weight k for M_k (default min(n,4))");
    inv->add_flag("--with-tangle,!--no-tangle", io.with_tangle, "Include tau_n");
    inv->add_flag("--with-purity,!--no-purity", io.with_purity, "Include pi_ME");
    inv->add_flag("--renormalize", io.renormalize, "Rescale states whose norm is off by > 1e-6");
    inv->add_option("--strategy", io.strategy, "enumeration | moebius")
        ->check(CLI::IsMember({"enumeration", "moebius"}));

    VerifyOpts vo;
    auto *ver = app.add_subcommand("verify", "Check the published decomposition against the oracle");
    ver->add_option("--n", vo.n, "Qubit count")->required();
    ver->add_option("--samples", vo.samples, "Random states");
    ver->add_option("--seed", vo.seed, "Seed");
    ver->add_option("--tol", vo.tol, "Residual tolerance");
    ver->add_flag("--brief", vo.brief, "Omit the per-state breakdown");

    FitOpts fo;
    auto *fit = app.add_subcommand("fit", "Least-squares refit of the decomposition");
    fit->add_option("--n", fo.n, "Qubit count")->required();
    fit->add_option("--samples", fo.samples, "Training states (default max(4(n/2+2), 200))");
    fit->add_option("--seed", fo.seed, "Seed");
    fit->add_option("--holdout", fo.holdout, "Held-out Haar states");
    fit->add_flag("--no-snap", fo.no_snap, "Keep floating coefficients");

    SearchOpts sro;
    auto *search = app.add_subcommand("search", "Minimize pi_ME");
    search->add_option("--n", sro.n, "Qubit count")->required();
    search->add_option("--restarts", sro.restarts, "Random restarts");
    search->add_option("--max-iters", sro.max_iters, "Iterations per restart");
    search->add_option("--seed", sro.seed, "Seed");
    search->add_option("--objective", sro.objective, "oracle | model")
        ->check(CLI::IsMember({"oracle", "model"}));
    search->add_option("--out", sro.out, "Also write the best state here");

    AuditOpts ao;
    auto *audit = app.add_subcommand("audit", "Audit the published claims");
    audit->add_option("--n", ao.ns, "Register sizes (default 2 4 6 8 10 12)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

#ifdef _OPENMP
    if (threads > 0) {
        omp_set_num_threads(threads);
    }
#endif

    try {
        if (state->parsed()) {
            return cmd_state(so, args, out, err);
        }
        if (inv->parsed()) {
            return cmd_invariants(io, args, pretty, out, err);
        }
        if (ver->parsed()) {
            return cmd_verify(vo, args, pretty, out, err);
        }
        if (fit->parsed()) {
            return cmd_fit(fo, args, pretty, out, err);
        }
        if (search->parsed()) {
            return cmd_search(sro, args, pretty, out, err);
        }
        return cmd_audit(ao, args, pretty, out, err);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const StateFormatError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

} // namespace mmeslab
