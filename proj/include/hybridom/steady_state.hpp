// steady_state.hpp — Mean-value fixed point of the driven system.
//
// The mechanical mean b_s shifts the effective cavity detunings, which feed
// back into b_s through the intracavity amplitudes; solve_steady() resolves
// that loop by damped fixed-point iteration. For the nonlinear coupling the
// same loop also closes the |b_s| dependence hidden in the effective
// qubit-mechanics coupling.

#pragma once

#include "hybridom/params.hpp"
#include "hybridom/types.hpp"

namespace hybridom {

struct SteadyState {
    cplx b_s{};            // mechanical mean
    cplx sigma_minus_s{};  // qubit coherence mean
    cplx c1_s{};           // left cavity mean
    cplx c2_s{};           // right cavity mean
    double delta_1{};      // effective left-cavity detuning
    double delta_2{};      // effective right-cavity detuning
    double residual{};     // max back-substitution residual
    int iterations{};
};

struct SteadySolveOptions {
    double tol{1e-12};
    int max_iter{1000};
    double damping{0.5};
    // Impose delta_1 = delta_2 = omega_m (red-sideband operating point)
    // instead of resolving the detuning shift self-consistently.
    bool sideband_approx{false};
};

// Throws NonConvergence | SingularDenominator.
SteadyState solve_steady(const SystemParams& params, const SteadySolveOptions& opts = {});

// Max-norm residual of the four mean-value equations at the given state.
double steady_residual(const SystemParams& params, const SteadyState& s,
                       bool sideband_approx = false);

// Fill the effective couplings (G, n, G_N) of `probe` from a solved steady
// state. Throws UndefinedNormalization when c1_s = 0.
DriveConfig drive_from_steady(const SystemParams& params, const DriveConfig& probe,
                              const SteadyState& s);

}  // namespace hybridom
