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
#include "mmeslab/report.hpp"

#include "mmeslab/state_io.hpp"

namespace mmeslab {

Json make_report(const std::string &command, const std::vector<std::string> &argv) {
    return Json{{"format", kReportFormat},
                {"command", {{"name", command}, {"argv", argv}}},
                {"inputs", Json::object()},
                {"results", Json::object()},
                {"errata", Json::array()}};
}

std::vector<std::string> report_schema_errors(const Json &doc) {
    std::vector<std::string> errors;
    if (!doc.is_object()) {
        return {"report is not an object"};
    }
    if (!doc.contains("format") || doc["format"] != kReportFormat) {
        errors.emplace_back("format tag missing or wrong");
    }
    if (!doc.contains("command") || !doc["command"].is_object() ||
        !doc["command"].contains("name") || !doc["command"]["name"].is_string() ||
        !doc["command"].contains("argv") || !doc["command"]["argv"].is_array()) {
        errors.emplace_back("command echo missing or malformed");
    }
    for (const char *key : {"inputs", "results"}) {
        if (!doc.contains(key) || !doc[key].is_object()) {
            errors.emplace_back(std::string(key) + " must be an object");
        }
    }
    if (!doc.contains("errata") || !doc["errata"].is_array()) {
        errors.emplace_back("errata must be an array");
    } else {
        for (const auto &e : doc["errata"]) {
            if (!e.is_object() || !e.contains("kind") || !e["kind"].is_string()) {
                errors.emplace_back("errata entries need a string 'kind'");
            }
        }
    }
    return errors;
}

Json rational_json(const Rational &r) {
    return Json{{"exact", to_string(r)}, {"value", to_double(r)}};
}

Json to_json(const Coefficient &c) {
    return Json{{"value", c.value},
                {"exact", c.exact ? Json(to_string(*c.exact)) : Json(nullptr)}};
}

Json to_json(const WeightSums &w) {
    Json sums = Json::array();
    double total = 0.0;
    for (int k = 1; k <= w.k_max(); ++k) {
        sums.push_back({{"k", k}, {"M_k", w.at(k)}});
        total += w.at(k);
    }
    return Json{{"n", w.n}, {"k_max", w.k_max()}, {"sums", std::move(sums)},
                {"total", total}};
}

Json to_json(const PurityReport &p, bool with_values) {
    Json j{{"n", p.n},
           {"part_size", p.part_size},
           {"bipartition_count", p.count()},
           {"pi_me", p.mean},
           {"min_purity", p.min},
           {"max_purity", p.max}};
    if (with_values) {
        Json entries = Json::array();
        for (std::size_t i = 0; i < p.count(); ++i) {
            entries.push_back({{"part", p.parts[i].positions()}, {"purity", p.purities[i]}});
        }
        j["purities"] = std::move(entries);
    }
    return j;
}

Json to_json(const DecompositionModel &m) {
    Json weights = Json::array();
    for (std::size_t k = 0; k < m.weight_coeffs.size(); ++k) {
        Json c = to_json(m.weight_coeffs[k]);
        c["k"] = k + 1;
        weights.push_back(std::move(c));
    }
    return Json{{"n", m.n},
                {"provenance", m.provenance == Provenance::Printed ? "printed" : "fitted"},
                {"constant", to_json(m.constant)},
                {"weight_coeffs", std::move(weights)},
                {"tau_coeff", to_json(m.tau_coeff)},
                {"tau_offset", to_json(m.tau_offset)}};
}

Json to_json(const KReport &k) {
    Json m = Json::array();
    for (std::size_t i = 0; i < k.m.size(); ++i) {
        m.push_back({{"k", i + 1}, {"M_k", k.m[i]}});
    }
    return Json{{"label", k.label},
                {"weight_sums", std::move(m)},
                {"tau", k.tau},
                {"constant", k.constant},
                {"k_model", k.k_model},
                {"pi_me_oracle", k.pi_me_oracle},
                {"residual_oracle_minus_model", k.residual}};
}

Json to_json(const VerifySummary &v, bool with_states) {
    Json j{{"n", v.n},
           {"seed", v.seed},
           {"tol", v.tol},
           {"evaluated", v.states.size()},
           {"max_abs_residual", v.max_abs_residual},
           {"min_k", v.min_k},
           {"passed", v.passed}};
    if (with_states) {
        Json states = Json::array();
        for (const auto &s : v.states) {
            states.push_back(to_json(s));
        }
        j["states"] = std::move(states);
    }
    return j;
}

Json to_json(const FitResult &f) {
    Json raw = Json::array();
    for (std::size_t i = 0; i < f.raw_coefficients.size(); ++i) {
        raw.push_back({{"feature", f.feature_names[i]}, {"value", f.raw_coefficients[i]}});
    }
    return Json{{"model", to_json(f.model)},
                {"raw_coefficients", std::move(raw)},
                {"singular_values", f.singular_values},
                {"rank", f.rank},
                {"null_space_dim", f.null_space_dim},
                {"training_samples", f.training_samples},
                {"training_residual", f.training_residual},
                {"holdout_residual", f.holdout_residual},
                {"holdout_residual_snapped", f.holdout_residual_snapped},
                {"snapped", f.snapped},
                {"exact_identity", f.exact_identity},
                {"notes", f.notes}};
}

Json to_json(const ConjectureRow &row) {
    return Json{{"n", row.n},
                {"constant", rational_json(row.constant)},
                {"tau_coeff", rational_json(row.tau_coeff)},
                {"required_tau", row.required_tau},
                {"conjectured_tau", row.conjectured_tau},
                {"consistent", row.consistent},
                {"pi_me_floor", rational_json(row.constant)},
                {"hard_floor", rational_json(row.hard_floor)},
                {"upper_bracket", rational_json(row.upper_bracket)},
                {"floor_in_bracket", row.floor_in_bracket}};
}

Json to_json(const ClaimCheck &c) {
    return Json{{"n", c.n},
                {"state", c.state},
                {"claimed_k", rational_json(c.claimed_k)},
                {"oracle_k", c.oracle_k},
                {"printed_model_k", c.printed_model_k},
                {"claim_matches_oracle", c.claim_matches_oracle},
                {"model_matches_oracle", c.model_matches_oracle}};
}

std::string to_string(TwelveQubitReading reading) {
    return reading == TwelveQubitReading::FifthGroupIsWeight5 ? "fifth_group_weight5"
                                                              : "fifth_group_repeats_weight4";
}

Json to_json(const ReadingCheck &c) {
    return Json{{"reading", to_string(c.reading)},
                {"residual_ghz", c.residual_ghz},
                {"residual_product", c.residual_product},
                {"survives", c.survives}};
}

Json to_json(const PsiM8Audit &a) {
    Json m = Json::array();
    for (std::size_t i = 0; i < a.m.size(); ++i) {
        m.push_back({{"k", i + 1}, {"M_k", a.m[i]}});
    }
    return Json{{"raw_norm", a.raw_norm},
                {"support_size", a.support_size},
                {"f_single", a.f_single},
                {"weight_sums", std::move(m)},
                {"tau", a.tau},
                {"pi_me", a.pi_me},
                {"printed_model", to_json(a.printed)},
                {"claim", "F_S = 0 for all |S| <= 3 and tau_8 = 0"},
                {"claim_holds", a.claim_holds},
                {"deviations", a.deviations}};
}

Json to_json(const SearchResult &s) {
    Json restarts = Json::array();
    for (const auto &r : s.restarts) {
        restarts.push_back({{"stream", r.stream},
                            {"initial_value", r.initial_value},
                            {"final_value", r.final_value},
                            {"iterations", r.iterations},
                            {"stop_reason", r.stop_reason}});
    }
    return Json{{"best_pi_me", s.best_pi_me},
                {"best_restart", s.best_restart},
                {"restarts", std::move(restarts)},
                {"wall_seconds", s.wall_seconds},
                {"best_state", state_to_json(s.best_state)}};
}

} // namespace mmeslab
