// types.hpp — Shared aliases and the library's error types.

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace hybridom {

using cplx = std::complex<double>;

// Fixed-point solve ended with residual above tolerance.
struct NonConvergence : std::runtime_error {
    int iterations;
    double residual;
    NonConvergence(int iterations_, double residual_)
        : std::runtime_error("steady-state solve did not converge after " +
                             std::to_string(iterations_) +
                             " iterations (residual " + std::to_string(residual_) + ")"),
          iterations(iterations_),
          residual(residual_) {}
};

// A response denominator fell below the singularity guard at detuning x.
struct SingularDenominator : std::runtime_error {
    double x;
    explicit SingularDenominator(double x_, const std::string& context = {})
        : std::runtime_error("singular denominator at x = " + std::to_string(x_) +
                             (context.empty() ? "" : " (" + context + ")")),
          x(x_) {}
};

// A normalized output was requested against a zero probe amplitude.
struct UndefinedNormalization : std::runtime_error {
    explicit UndefinedNormalization(const std::string& what_)
        : std::runtime_error(what_) {}
};

// Time-domain projection still drifting between sampling half-windows.
struct NotSettled : std::runtime_error {
    double drift;
    explicit NotSettled(double drift_)
        : std::runtime_error("projected amplitude not settled (half-window drift " +
                             std::to_string(drift_) + ")"),
          drift(drift_) {}
};

// Step-halving changed the extracted amplitudes beyond tolerance.
struct StepTooLarge : std::runtime_error {
    double estimate;
    explicit StepTooLarge(double estimate_)
        : std::runtime_error("integration step too large (halving estimate " +
                             std::to_string(estimate_) + ")"),
          estimate(estimate_) {}
};

}  // namespace hybridom
