#include "hybridom/params.hpp"

#include <cmath>
#include <sstream>

namespace hybridom {

namespace {

bool finite(double v) { return std::isfinite(v); }

void err(ValidationReport& r, const std::string& field, const std::string& msg) {
    r.errors.push_back({field, msg});
}

void warn(ValidationReport& r, const std::string& field, const std::string& msg) {
    r.warnings.push_back({field, msg});
}

void check_nonnegative(ValidationReport& r, const std::string& field, double v) {
    if (!finite(v)) {
        err(r, field, field + " is not finite");
    } else if (v < 0.0) {
        err(r, field, field + " must be >= 0");
    }
}

}  // namespace

ValidationReport validate(const SystemParams& p, const DriveConfig& d) {
    ValidationReport r;

    if (!finite(p.kappa) || p.kappa != 1.0) {
        err(r, "kappa", "kappa is the rate unit and must equal 1");
    }
    check_nonnegative(r, "gamma_m", p.gamma_m);
    check_nonnegative(r, "k_d", p.k_d);
    check_nonnegative(r, "omega_m", p.omega_m);
    check_nonnegative(r, "omega_q", p.omega_q);
    check_nonnegative(r, "g0", p.g0);
    check_nonnegative(r, "eps_cL", p.eps_cL);
    check_nonnegative(r, "eps_cR", p.eps_cR);
    if (!finite(p.delta_c)) err(r, "delta_c", "delta_c is not finite");

    if (!finite(p.sigma_z)) {
        err(r, "sigma_z", "sigma_z is not finite");
    } else if (p.sigma_z < -1.0 || p.sigma_z > 1.0) {
        err(r, "sigma_z", "sigma_z out of range [-1, 1]");
    } else if (p.sigma_z > 0.0) {
        warn(r, "sigma_z",
             "sigma_z > 0 (inverted population): response denominators become gain-like");
    }

    check_nonnegative(r, "coupling", p.coupling.value);

    check_nonnegative(r, "eps_L", d.eps_L);
    check_nonnegative(r, "eps_R", d.eps_R);
    check_nonnegative(r, "n", d.n);
    check_nonnegative(r, "G", d.G);
    check_nonnegative(r, "G_N", d.G_N);
    if (!finite(d.theta)) err(r, "theta", "theta is not finite");

    if (finite(p.omega_m) && p.omega_m <= p.kappa) {
        warn(r, "omega_m", "omega_m <= kappa: not in the resolved-sideband regime");
    }

    return r;
}

void require_valid(const SystemParams& p, const DriveConfig& d) {
    const ValidationReport r = validate(p, d);
    if (r.pass()) return;
    std::ostringstream msg;
    msg << "invalid parameters:";
    for (const auto& e : r.errors) msg << " [" << e.message << "]";
    throw std::invalid_argument(msg.str());
}

void to_json(nlohmann::json& j, const QubitCoupling& c) {
    switch (c.kind) {
        case CouplingKind::none:
            j = {{"type", "none"}};
            break;
        case CouplingKind::linear:
            j = {{"type", "linear"}, {"g", c.value}};
            break;
        case CouplingKind::nonlinear:
            j = {{"type", "nonlinear"}, {"g_N", c.value}};
            break;
    }
}

void from_json(const nlohmann::json& j, QubitCoupling& c) {
    const std::string type = j.value("type", "none");
    if (type == "none") {
        c = QubitCoupling::none();
    } else if (type == "linear") {
        c = QubitCoupling::linear(j.value("g", 0.0));
    } else if (type == "nonlinear") {
        c = QubitCoupling::nonlinear(j.value("g_N", 0.0));
    } else {
        throw std::invalid_argument("unknown coupling type '" + type + "'");
    }
}

void to_json(nlohmann::json& j, const SystemParams& p) {
    j = {{"kappa", p.kappa},     {"gamma_m", p.gamma_m}, {"k_d", p.k_d},
         {"omega_m", p.omega_m}, {"omega_q", p.omega_q}, {"delta_c", p.delta_c},
         {"g0", p.g0},           {"coupling", p.coupling}, {"sigma_z", p.sigma_z},
         {"eps_cL", p.eps_cL},   {"eps_cR", p.eps_cR}};
}

void from_json(const nlohmann::json& j, SystemParams& p) {
    SystemParams defaults;
    p.kappa = j.value("kappa", defaults.kappa);
    p.gamma_m = j.value("gamma_m", defaults.gamma_m);
    p.k_d = j.value("k_d", defaults.k_d);
    p.omega_m = j.value("omega_m", defaults.omega_m);
    p.omega_q = j.value("omega_q", defaults.omega_q);
    p.delta_c = j.value("delta_c", defaults.delta_c);
    p.g0 = j.value("g0", defaults.g0);
    p.coupling = j.value("coupling", defaults.coupling);
    p.sigma_z = j.value("sigma_z", defaults.sigma_z);
    p.eps_cL = j.value("eps_cL", defaults.eps_cL);
    p.eps_cR = j.value("eps_cR", defaults.eps_cR);
}

void to_json(nlohmann::json& j, const DriveConfig& d) {
    j = {{"eps_L", d.eps_L}, {"eps_R", d.eps_R}, {"theta", d.theta},
         {"n", d.n},         {"G", d.G},         {"G_N", d.G_N}};
}

void from_json(const nlohmann::json& j, DriveConfig& d) {
    DriveConfig defaults;
    d.eps_L = j.value("eps_L", defaults.eps_L);
    d.eps_R = j.value("eps_R", defaults.eps_R);
    d.theta = j.value("theta", defaults.theta);
    d.n = j.value("n", defaults.n);
    d.G = j.value("G", defaults.G);
    d.G_N = j.value("G_N", defaults.G_N);
}

}  // namespace hybridom
