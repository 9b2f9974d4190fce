#pragma once

// JSON serialization for reports and matrices (ordered keys, deterministic
// number formatting, so identical inputs give byte-identical reports).

#include <cstdio>
#include <string>

#include <json.hpp>

#include "bimodal/homology.hpp"

namespace bimodal {

using Json = nlohmann::ordered_json;

inline std::string format_double(double v, int digits = 10) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

inline Json to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(static_cast<long>(m.at(i, j).get_si()));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json to_json(const VerificationReport& r) {
    Json j;
    j["sequence"] = r.sequence;
    j["period"] = r.p;
    Json ids;
    ids["eta_Gamma_zero"] = r.eta_gamma_zero;
    ids["eta_omega_equals_minus_Psi_eta"] = r.eta_omega_commutes;
    ids["eta_gamma_equals_minus_eta"] = r.eta_gamma_minus;
    ids["theta_charpoly_equals_kneading_form"] = r.theta_charpoly_matches;
    ids["theta_charpoly_equals_one_plus_t_times_psi"] = r.theta_psi_charpoly;
    ids["spectral_radius_matches_growth"] = r.growth_skipped ? Json("skipped")
                                                             : Json(r.growth_matches);
    ids["psi_entries_in_01"] = r.psi_entries_01;
    j["identities"] = std::move(ids);
    j["theta_charpoly"] = to_string(r.theta_charpoly);
    j["psi_charpoly"] = to_string(r.psi_charpoly);
    j["kneading_determinant"] = to_string(r.kneading_det);
    j["spectral_radius"] = format_double(r.spectral_radius_value, 12);
    if (r.t0) j["t0"] = format_double(*r.t0, 12);
    j["all_passed"] = r.all_passed();
    if (!r.all_passed()) {
        Json ce;
        ce["sequence"] = r.sequence;
        ce["pi"] = to_json(r.pi);
        ce["psi"] = to_json(r.psi);
        ce["eta"] = to_json(r.eta);
        ce["theta"] = to_json(r.theta);
        j["counterexample"] = std::move(ce);
    }
    return j;
}

// counterexample payload travels with any failed sweep entry
inline Json sweep_to_json(const SweepResult& s) {
    Json j;
    j["checked"] = s.checked;
    j["failures"] = s.failures;
    j["growth_skipped"] = s.growth_skipped;
    Json fails = Json::array();
    for (const auto& rep : s.failed_reports) fails.push_back(to_json(rep));
    j["failed"] = std::move(fails);
    return j;
}

} // namespace bimodal
