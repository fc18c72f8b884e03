// features.hpp — Locating and classifying CPT, CPS, and OMIA/OMIT features.
//
// Closed-form transmission roots (lossless limit), numeric dip/peak location
// by grid scan with golden-section refinement, and the OMIA/OMIT classifier
// built on local extrema of Re[eps_T].

#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "hybridom/params.hpp"
#include "hybridom/response.hpp"
#include "hybridom/types.hpp"

namespace hybridom {

struct FeatureTols {
    double cpt_norm{1e-6};   // |eout_L+/eps_L|^2 at a strict CPT point
    double cpt_ratio{1e-3};  // | |eout_R+/eps_L|^2 - 1 | at a strict CPT point
    double cps{1e-3};        // paired-condition tolerance for CPS points
    double refine_dx{1e-8};  // golden-section bracket width
    double root_imag{1e-9};  // closed-form roots above this |Im| are discarded
};

// The four closed-form transmission roots in the lossless limit
// (gamma_m, k_d -> 0, eps_R = 0, n = 1). roots[0], roots[1] are the inner
// pair, roots[2], roots[3] the outer pair; either pair may be complex.
// For the nonlinear variant pass the effective coupling G_N as the value.
struct CptRoots {
    std::array<cplx, 4> roots;
};
CptRoots cpt_roots_closed_form(double G, const QubitCoupling& coupling, double kappa);

struct CptPoint {
    double x{};
    double norm_L{};
    double norm_R_by_L{};
    std::string source{"numeric"};  // "numeric" | "closed_form"
};

struct CpsPoint {
    double x{};
    double norm_L{};
    double norm_R_by_R{};
    std::string side;  // "left_dark" (all output exits right) | "right_dark"
};

struct OmiaPeak {
    double x{};
    double re_eT{};
    std::string kind;  // "maximum" | "minimum"
    double width{};    // full width at half prominence; maxima only
};

enum class OmiaClass { omia, omit, mixed };
const char* to_string(OmiaClass c);

struct CptScan {
    std::vector<CptPoint> points;  // dips meeting both CPT tolerances
    std::vector<CptPoint> dips;    // remaining dips with their achieved norms
    std::vector<std::string> warnings;
};

// Locate CPT points as minima of |eout_L+/eps_L|^2. Requires eps_R = 0 and
// eps_L > 0; grids of >= 2000 points resolve the known dip structures.
CptScan find_cpt_numeric(const SystemParams& params, const DriveConfig& drive,
                         std::span<const double> grid, const FeatureTols& tols = {});

// Locate CPS points for equal probes (eps_L = eps_R > 0) in the lossless
// limit (gamma_m = k_d = 0). Each returned point satisfies its paired
// condition: left_dark -> (norm_L, norm_R_by_R) = (0, 2), right_dark the
// mirror image, both within tols.cps.
std::vector<CpsPoint> find_cps(const SystemParams& params, const DriveConfig& drive,
                               std::span<const double> grid, const FeatureTols& tols = {});

struct OmiaScan {
    std::vector<OmiaPeak> extrema;  // refined extrema of Re[eps_T], by x
    OmiaClass classification{OmiaClass::mixed};
};

// Classify the line-center feature of Re[eps_T]: OMIA when the feature
// nearest x = 0 is a local maximum, OMIT when a local minimum.
OmiaScan classify_omia(const SystemParams& params, const DriveConfig& drive,
                       std::span<const double> grid, const FeatureTols& tols = {});

struct FeatureReport {
    std::vector<CptPoint> cpt_points;
    std::vector<CptPoint> near_cpt_dips;
    std::vector<CpsPoint> cps_points;
    std::vector<OmiaPeak> omia_peaks;
    OmiaClass classification{OmiaClass::mixed};
    std::vector<cplx> discarded_complex_roots;
    std::vector<std::string> warnings;
};

// Run every analysis the drive supports: CPT when eps_R = 0, CPS when the
// probes are equal and the system lossless, OMIA whenever eps_L > 0. The
// closed-form roots are cross-checked against the numeric dips when their
// stated limit (gamma_m = k_d = 0, eps_R = 0, n = 1) applies.
FeatureReport analyze_features(const SystemParams& params, const DriveConfig& drive,
                               std::span<const double> grid, const FeatureTols& tols = {});

}  // namespace hybridom
