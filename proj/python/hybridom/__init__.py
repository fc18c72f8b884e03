"""Optical response of a double-cavity optomechanical system with an embedded qubit.

Thin python layer over the C++ core: steady-state solves, frequency-domain
output fields, CPT/CPS/OMIA feature reports, and the time-domain integrator
used to cross-check the closed forms.
"""

from ._core import (
    CouplingKind,
    CptPoint,
    CptRoots,
    CpsPoint,
    Curve,
    DriveConfig,
    FeatureReport,
    FeatureTols,
    NonConvergenceError,
    NotSettledError,
    OmiaPeak,
    OracleConfig,
    OracleResult,
    Preset,
    QubitCoupling,
    ResponseSample,
    SingularDenominatorError,
    StepTooLargeError,
    SteadySolveOptions,
    SteadyState,
    SystemParams,
    UndefinedNormalizationError,
    ValidationIssue,
    ValidationReport,
    analyze_features,
    cpt_roots_closed_form,
    drive_from_steady,
    integrate_response,
    linspace,
    preset,
    presets,
    response_at,
    solve_steady,
    steady_residual,
    sweep,
    transmission_eT,
    transmission_eT_reduced,
    validate,
)

__all__ = [
    "CouplingKind",
    "CptPoint",
    "CptRoots",
    "CpsPoint",
    "Curve",
    "DriveConfig",
    "FeatureReport",
    "FeatureTols",
    "NonConvergenceError",
    "NotSettledError",
    "OmiaPeak",
    "OracleConfig",
    "OracleResult",
    "Preset",
    "QubitCoupling",
    "ResponseSample",
    "SingularDenominatorError",
    "StepTooLargeError",
    "SteadySolveOptions",
    "SteadyState",
    "SystemParams",
    "UndefinedNormalizationError",
    "ValidationIssue",
    "ValidationReport",
    "analyze_features",
    "cpt_roots_closed_form",
    "drive_from_steady",
    "integrate_response",
    "linspace",
    "preset",
    "presets",
    "response_at",
    "solve_steady",
    "steady_residual",
    "sweep",
    "transmission_eT",
    "transmission_eT_reduced",
    "validate",
]

__version__ = "0.1.0"
