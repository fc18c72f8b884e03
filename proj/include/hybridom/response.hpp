// response.hpp — Closed-form frequency-domain response of the probed system.
//
// Evaluates the upper-sideband fluctuation amplitudes (db+, dc1+, dc2+) of
// the linearized equations at probe detuning x, the output probe fields via
// input-output theory, and the transmission eps_T = 2*kappa*dc1+/eps_L.
// Amplitudes follow the e^{-ixt} convention for the + components.

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hybridom/params.hpp"
#include "hybridom/types.hpp"

namespace hybridom {

struct ResponseSample {
    double x{};
    cplx db_plus{};
    cplx dc1_plus{};
    cplx dc2_plus{};
    cplx eout_L_plus{};  // 2*kappa*dc1+ - eps_L
    cplx eout_R_plus{};  // 2*kappa*dc2+ - eps_R*e^{i theta}
    cplx eps_T{};        // meaningful only when has_eps_T
    bool has_eps_T{false};
    std::optional<double> norm_L;       // |eout_L+/eps_L|^2
    std::optional<double> norm_R_by_L;  // |eout_R+/eps_L|^2
    std::optional<double> norm_R_by_R;  // |eout_R+/eps_R|^2
    bool singular{false};
};

// Squared qubit level shift entering the response denominators:
// g^2*sigma_z (linear), 4*G_N^2*sigma_z (nonlinear), 0 (no qubit).
double qubit_response_shift(const SystemParams& params, const DriveConfig& drive);

// Exact rational response at one detuning. Throws SingularDenominator when
// the denominator falls below 1e-14 of its term-magnitude scale.
ResponseSample response_at(const SystemParams& params, const DriveConfig& drive, double x);

// Transmission eps_T at one detuning; requires eps_L > 0.
cplx transmission_eT(const SystemParams& params, const DriveConfig& drive, double x);

// Reduced transmission for the no-qubit, lossless (gamma_m = k_d = 0) limit;
// regular at x = 0 where the full rational form degenerates.
cplx transmission_eT_reduced(const DriveConfig& drive, double x, double kappa = 1.0);

// Per-point evaluation over a strictly increasing grid. Singular points are
// recorded with the `singular` flag instead of aborting. Points are
// independent; `parallel` splits them across hardware threads with results
// ordered by grid index either way.
std::vector<ResponseSample> sweep(const SystemParams& params, const DriveConfig& drive,
                                  std::span<const double> grid, bool parallel = true);

// Uniform grid helper: `points` samples covering [xmin, xmax].
std::vector<double> linspace(double xmin, double xmax, int points);

}  // namespace hybridom
