// json_io.hpp — JSON bindings for the CLI reports and config files

#pragma once

#include <json.hpp>

#include "rabivar/exact.hpp"
#include "rabivar/model.hpp"
#include "rabivar/variational.hpp"

namespace rabivar {

inline void to_json(nlohmann::json& j, const ModelParams& p) {
    j = nlohmann::json{{"omega", p.omega}, {"Omega", p.Omega}, {"epsilon", p.epsilon}, {"g", p.g}};
}

inline void from_json(const nlohmann::json& j, ModelParams& p) {
    p = ModelParams(j.at("omega").get<double>(), j.at("Omega").get<double>(),
                    j.at("epsilon").get<double>(), j.at("g").get<double>());
}

inline void to_json(nlohmann::json& j, const Observables& o) {
    j = nlohmann::json{{"mean_photon", o.mean_photon},
                       {"sz_correlation", o.sz_correlation},
                       {"sigma_x", o.sigma_x}};
}

inline void to_json(nlohmann::json& j, const RegimeDiagnostic& d) {
    j = nlohmann::json{{"case", regime_label(d.case_label)},
                       {"ratio_Omega_omega", d.ratio_Omega_omega},
                       {"ratio_g_scale", d.ratio_g_scale},
                       {"advisory", d.advisory}};
}

inline nlohmann::json solve_report(const VariationalSolution& sol) {
    nlohmann::json j;
    j["params"] = sol.params;
    j["method"] = method_tag(sol.method);
    j["energy"] = sol.energy;
    j["lambda"] = sol.lambda;
    j["theta"] = sol.theta;
    j["observables"] = sol.observables;
    j["gradient_residual"] = sol.gradient_residual;
    j["regime"] = classify_regime(sol.params);
    return j;
}

inline nlohmann::json solve_report(const ModelParams& p, const ExactSolution& sol) {
    nlohmann::json j;
    j["params"] = p;
    j["method"] = "exact";
    j["energy"] = sol.energy;
    j["observables"] = sol.observables;
    j["n_used"] = sol.n_used;
    j["regime"] = classify_regime(p);
    return j;
}

}  // namespace rabivar
