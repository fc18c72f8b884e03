// params.hpp — System and drive parameters, validation, JSON (de)serialization.
//
// Every rate in the model is expressed in units of the cavity decay kappa;
// kappa itself is held at 1 so sweep axes and couplings read directly in
// units of kappa. Parameter structs are immutable value types: construct,
// validate once, then share freely across threads.

#pragma once

#include <string>
#include <vector>

#include "hybridom/types.hpp"

#include "json.hpp"

namespace hybridom {

enum class CouplingKind { none, linear, nonlinear };

// Qubit-mechanics coupling variant. `value` is the single-phonon coupling g
// for the linear (Jaynes-Cummings) variant and the two-phonon coupling g_N
// for the nonlinear (charge-qubit) variant; it is ignored for `none`.
struct QubitCoupling {
    CouplingKind kind{CouplingKind::none};
    double value{0.0};

    static QubitCoupling none() { return {CouplingKind::none, 0.0}; }
    static QubitCoupling linear(double g) { return {CouplingKind::linear, g}; }
    static QubitCoupling nonlinear(double g_n) { return {CouplingKind::nonlinear, g_n}; }

    // Zero-strength linear/nonlinear coupling is physically identical to no
    // qubit; canonical() collapses the three spellings onto one value.
    QubitCoupling canonical() const {
        if (value == 0.0) return none();
        return *this;
    }

    bool operator==(const QubitCoupling&) const = default;
};

struct SystemParams {
    double kappa{1.0};     // cavity decay; the unit, must stay 1
    double gamma_m{0.0};   // mechanical decay
    double k_d{0.0};       // qubit decay
    double omega_m{10.0};  // mechanical frequency
    double omega_q{10.0};  // qubit transition frequency
    double delta_c{10.0};  // cavity-control detuning
    double g0{0.1};        // single-photon optomechanical coupling
    QubitCoupling coupling{};
    double sigma_z{-1.0};  // frozen mean qubit inversion, in [-1, 1]
    double eps_cL{0.0};    // left control drive amplitude
    double eps_cR{0.0};    // right control drive amplitude

    bool operator==(const SystemParams&) const = default;
};

// Probe drive plus the effective couplings entering the response formulas.
// G and G_N (and the photon-amplitude ratio n) may be supplied directly, as
// figure-style parameter sets do, or derived from a steady state with
// drive_from_steady().
struct DriveConfig {
    double eps_L{1.0};  // left probe amplitude
    double eps_R{0.0};  // right probe amplitude
    double theta{0.0};  // relative probe phase
    double n{1.0};      // photon-amplitude ratio |c2_s/c1_s|
    double G{0.0};      // effective optomechanical coupling g0*c1_s
    double G_N{0.0};    // effective qubit-mechanics coupling g_N*|b_s|

    bool operator==(const DriveConfig&) const = default;
};

struct ValidationIssue {
    std::string field;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> errors;
    std::vector<ValidationIssue> warnings;
    bool pass() const { return errors.empty(); }
};

ValidationReport validate(const SystemParams& params, const DriveConfig& drive);

// Throws std::invalid_argument listing every violated invariant.
void require_valid(const SystemParams& params, const DriveConfig& drive);

void to_json(nlohmann::json& j, const QubitCoupling& c);
void from_json(const nlohmann::json& j, QubitCoupling& c);
void to_json(nlohmann::json& j, const SystemParams& p);
void from_json(const nlohmann::json& j, SystemParams& p);
void to_json(nlohmann::json& j, const DriveConfig& d);
void from_json(const nlohmann::json& j, DriveConfig& d);

}  // namespace hybridom
