#include "hybridom/steady_state.hpp"

#include <algorithm>
#include <cmath>

namespace hybridom {

namespace {

constexpr double kSingularGuard = 1e-14;
constexpr cplx kI{0.0, 1.0};

// Qubit contribution to the mechanical susceptibility denominator:
// g^2 <sigma_z> (linear), 2 G_N^2 <sigma_z> with G_N = g_N |b_s| (nonlinear).
double qubit_shift(const SystemParams& p, const cplx& b) {
    switch (p.coupling.kind) {
        case CouplingKind::linear:
            return p.coupling.value * p.coupling.value * p.sigma_z;
        case CouplingKind::nonlinear: {
            const double gn_abs_b = p.coupling.value * std::abs(b);
            return 2.0 * gn_abs_b * gn_abs_b * p.sigma_z;
        }
        case CouplingKind::none:
            return 0.0;
    }
    return 0.0;
}

cplx qubit_factor(const SystemParams& p) { return p.k_d / 2.0 + kI * p.omega_q; }

// b_s as a function of the current iterate (through the detunings and,
// for the nonlinear variant, through |b_s| itself).
cplx mech_update(const SystemParams& p, const cplx& b, cplx& c1, cplx& c2, double& d1,
                 double& d2, bool sideband_approx) {
    const double shift = 2.0 * p.g0 * b.real();
    d1 = sideband_approx ? p.omega_m : p.delta_c - shift;
    d2 = sideband_approx ? p.omega_m : p.delta_c + shift;

    c1 = p.eps_cL / (p.kappa + kI * d1);
    c2 = p.eps_cR / (p.kappa + kI * d2);

    const cplx chi_q = qubit_factor(p);
    const cplx denom = (p.gamma_m / 2.0 + kI * p.omega_m) * chi_q - qubit_shift(p, b);
    if (std::abs(denom) < kSingularGuard) {
        throw SingularDenominator(0.0, "mechanical steady-state denominator");
    }
    const double photon_imbalance = std::norm(c2) - std::norm(c1);
    return -kI * p.g0 * photon_imbalance * chi_q / denom;
}

cplx coherence_mean(const SystemParams& p, const cplx& b) {
    const cplx chi_q = qubit_factor(p);
    if (std::abs(chi_q) < kSingularGuard) {
        throw SingularDenominator(0.0, "qubit steady-state denominator");
    }
    switch (p.coupling.kind) {
        case CouplingKind::linear:
            return kI * p.coupling.value * b * p.sigma_z / chi_q;
        case CouplingKind::nonlinear:
            return kI * p.coupling.value * b * b * p.sigma_z / chi_q;
        case CouplingKind::none:
            return {};
    }
    return {};
}

}  // namespace

SteadyState solve_steady(const SystemParams& params, const SteadySolveOptions& opts) {
    if (!(opts.tol > 0.0)) throw std::invalid_argument("solve_steady: tol must be > 0");
    require_valid(params, DriveConfig{});

    SteadyState s;
    cplx b{};
    double res = 0.0;
    int iter = 0;
    bool converged = false;
    while (iter < opts.max_iter) {
        ++iter;
        cplx c1, c2;
        double d1, d2;
        const cplx b_next = mech_update(params, b, c1, c2, d1, d2, opts.sideband_approx);
        res = std::abs(b_next - b);
        if (res < opts.tol) {
            converged = true;
            break;
        }
        b += opts.damping * (b_next - b);
    }
    if (!converged) throw NonConvergence(iter, res);

    // Assemble every field coherently from the converged b.
    s.b_s = b;
    s.iterations = iter;
    cplx c1, c2;
    double d1, d2;
    mech_update(params, b, c1, c2, d1, d2, opts.sideband_approx);
    s.c1_s = c1;
    s.c2_s = c2;
    s.delta_1 = d1;
    s.delta_2 = d2;
    s.sigma_minus_s = coherence_mean(params, b);
    s.residual = steady_residual(params, s, opts.sideband_approx);
    return s;
}

double steady_residual(const SystemParams& p, const SteadyState& s, bool sideband_approx) {
    cplx c1, c2;
    double d1, d2;
    const cplx b_rhs = mech_update(p, s.b_s, c1, c2, d1, d2, sideband_approx);
    const double r_b = std::abs(s.b_s - b_rhs);
    const double r_sigma = std::abs(s.sigma_minus_s - coherence_mean(p, s.b_s));
    const double r_c1 = std::abs(s.c1_s - c1);
    const double r_c2 = std::abs(s.c2_s - c2);
    return std::max({r_b, r_sigma, r_c1, r_c2});
}

DriveConfig drive_from_steady(const SystemParams& params, const DriveConfig& probe,
                              const SteadyState& s) {
    const double c1_mag = std::abs(s.c1_s);
    if (c1_mag == 0.0) {
        throw UndefinedNormalization("c1_s = 0: photon-amplitude ratio n is undefined");
    }
    DriveConfig d = probe;
    d.G = params.g0 * c1_mag;
    d.n = std::abs(s.c2_s) / c1_mag;
    d.G_N = params.coupling.kind == CouplingKind::nonlinear
                ? params.coupling.value * std::abs(s.b_s)
                : 0.0;
    return d;
}

}  // namespace hybridom
