// oracle.hpp — Time-domain cross-check of the closed-form response.
//
// Integrates the deterministic linearized equations (noise dropped) in the
// rotating frame with the harmonic probe drive, then projects the settled
// trajectory onto e^{-ixt} to extract the + amplitudes. Entirely independent
// of the rational-function evaluation it verifies.

#pragma once

#include <span>
#include <vector>

#include "hybridom/params.hpp"
#include "hybridom/response.hpp"
#include "hybridom/types.hpp"

namespace hybridom {

struct OracleConfig {
    double t_transient{-1.0};  // <0: 20/min(gamma_m, k_d, kappa)
    double t_sample{-1.0};     // <0: 10 * 2pi/max(|x|, kappa)
    double dt{-1.0};           // <0: 0.01/max(kappa, k_d, g_eff, G, ...)
    double tol{1e-4};          // settling drift and step-halving acceptance
};

struct OracleResult {
    double x{};
    cplx db_plus{};
    cplx dc1_plus{};
    cplx dc2_plus{};
    double transient_time{};
    double dt{};
    double rel_error_estimate{};  // Richardson estimate from step halving
};

struct OracleAmplitudes {
    cplx db{}, dsigma{}, dc1{}, dc2{};
};

// One fixed-step integration + projection; no step-halving. Exposed for
// convergence-order checks. Throws NotSettled when the projection drifts
// between the two sampling half-windows by more than settle_tol.
OracleAmplitudes oracle_project_fixed_step(const SystemParams& params,
                                           const DriveConfig& drive, double x,
                                           double t_transient, double t_sample, double dt,
                                           double settle_tol);

// Full extraction with step-halving error estimate. Requires
// gamma_m > 0 and k_d > 0 (a strictly lossless system never settles).
// Throws NotSettled | StepTooLarge.
OracleResult integrate_response(const SystemParams& params, const DriveConfig& drive,
                                double x, const OracleConfig& cfg = {});

struct OracleCheckPoint {
    double x{};
    double rel_err_db{}, rel_err_dc1{}, rel_err_dc2{};
    bool pass{};
};

struct OracleCheck {
    std::vector<OracleCheckPoint> points;
    double max_rel_err{};
    bool pass{};
};

// Compare the oracle against the closed form at each grid point; relative
// error per complex amplitude. Points run in parallel.
OracleCheck oracle_check_grid(const SystemParams& params, const DriveConfig& drive,
                              std::span<const double> xs, double tol,
                              const OracleConfig& cfg = {}, bool parallel = true);

}  // namespace hybridom
