// hybridom — CLI over the double-cavity optomechanics response library.
//
// Exit codes: 0 success, 2 validation failure, 3 numerical failure
// (non-convergence / singularity / integration), 4 oracle mismatch.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hybridom/features.hpp"
#include "hybridom/io.hpp"
#include "hybridom/oracle.hpp"
#include "hybridom/presets.hpp"
#include "hybridom/response.hpp"
#include "hybridom/steady_state.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitOracleMismatch = 4;

struct CaseArgs {
    std::string preset;
    std::string config;
    int curve{-1};
    std::optional<double> xmin, xmax;
    std::optional<int> points;
};

void add_case_options(CLI::App* cmd, CaseArgs& args) {
    cmd->add_option("--preset", args.preset, "built-in preset name (see `presets list`)");
    cmd->add_option("--config", args.config, "JSON config file (docs/config.md)");
    cmd->add_option("--curve", args.curve, "curve index within the preset (default: panel's first)");
    cmd->add_option("--xmin", args.xmin, "sweep lower bound (units of kappa)");
    cmd->add_option("--xmax", args.xmax, "sweep upper bound (units of kappa)");
    cmd->add_option("--points", args.points, "number of grid points");
}

hybridom::ScanCase resolve_case(const CaseArgs& args) {
    if (args.preset.empty() == args.config.empty()) {
        throw CLI::ValidationError("give exactly one of --preset or --config");
    }
    hybridom::ScanCase scan;
    if (!args.preset.empty()) {
        const auto sel = hybridom::find_preset(args.preset);
        if (!sel) throw CLI::ValidationError("unknown preset '" + args.preset + "'");
        const std::size_t curve = args.curve >= 0 ? static_cast<std::size_t>(args.curve)
                                                  : sel->default_curve();
        if (curve >= sel->preset->curves.size()) {
            throw CLI::ValidationError("curve index out of range");
        }
        const hybridom::Curve& c = sel->preset->curves[curve];
        scan.label = c.label;
        scan.system = c.system;
        scan.drive = c.drive;
        scan.xmin = sel->xmin();
        scan.xmax = sel->xmax();
        scan.points = sel->preset->points;
    } else {
        scan = hybridom::load_config(args.config);
    }
    if (args.xmin) scan.xmin = *args.xmin;
    if (args.xmax) scan.xmax = *args.xmax;
    if (args.points) scan.points = *args.points;
    return scan;
}

int check_validation(const hybridom::ScanCase& scan) {
    const auto report = hybridom::validate(scan.system, scan.drive);
    for (const auto& w : report.warnings) {
        std::cerr << "warning: " << w.message << '\n';
    }
    if (!report.pass()) {
        for (const auto& e : report.errors) {
            std::cerr << "error: " << e.message << '\n';
        }
        return kExitValidation;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"optical response of a double-cavity optomechanical system with an embedded qubit"};
    app.require_subcommand(1);

    // steady
    CaseArgs steady_args;
    double steady_tol = 1e-12;
    int steady_max_iter = 1000;
    bool sideband_approx = false;
    auto* steady_cmd = app.add_subcommand("steady", "solve the steady-state mean values");
    add_case_options(steady_cmd, steady_args);
    steady_cmd->add_option("--tol", steady_tol, "fixed-point tolerance");
    steady_cmd->add_option("--max-iter", steady_max_iter, "iteration cap");
    steady_cmd->add_flag("--sideband-approx", sideband_approx,
                         "impose delta_1 = delta_2 = omega_m");

    // sweep
    CaseArgs sweep_args;
    std::string sweep_out = "sweep.csv";
    auto* sweep_cmd = app.add_subcommand("sweep", "evaluate the response over a grid, write CSV");
    add_case_options(sweep_cmd, sweep_args);
    sweep_cmd->add_option("--out", sweep_out, "output CSV path");

    // features
    CaseArgs feat_args;
    std::string feat_report;
    hybridom::FeatureTols tols;
    auto* feat_cmd = app.add_subcommand("features", "locate CPT/CPS points and classify OMIA/OMIT");
    add_case_options(feat_cmd, feat_args);
    feat_cmd->add_option("--report", feat_report, "write the JSON report here (default: stdout)");
    feat_cmd->add_option("--tol-cpt", tols.cpt_norm, "CPT tolerance on |eout_L/eps_L|^2");
    feat_cmd->add_option("--tol-cpt-r", tols.cpt_ratio, "CPT tolerance on | |eout_R/eps_L|^2 - 1 |");
    feat_cmd->add_option("--tol-cps", tols.cps, "CPS paired-condition tolerance");

    // oracle-check
    CaseArgs oracle_args;
    double oracle_tol = 1e-4;
    double min_damping = 1e-3;
    std::string oracle_json;
    auto* oracle_cmd = app.add_subcommand(
        "oracle-check", "compare closed-form response against the time-domain integrator");
    add_case_options(oracle_cmd, oracle_args);
    oracle_cmd->add_option("--tol", oracle_tol, "relative tolerance per amplitude");
    oracle_cmd->add_option("--min-damping", min_damping,
                           "floor applied to gamma_m and k_d (lossless systems never settle)");
    oracle_cmd->add_option("--json", oracle_json, "write a machine-readable diff here");
    oracle_args.points = 20;

    // run
    hybridom::SweepJob job;
    std::string run_preset;
    std::string run_out = ".";
    std::optional<int> run_points;
    int run_curve = -1;
    auto* run_cmd = app.add_subcommand("run", "sweep + features + plot data for a preset");
    run_cmd->add_option("--preset", run_preset, "preset name")->required();
    run_cmd->add_option("--out", run_out, "output directory");
    run_cmd->add_option("--points", run_points, "grid points override");
    run_cmd->add_option("--curve", run_curve, "restrict to one curve index");

    // presets list
    auto* presets_cmd = app.add_subcommand("presets", "preset registry");
    bool presets_json = false;
    auto* list_cmd = presets_cmd->add_subcommand("list", "list built-in presets");
    list_cmd->add_flag("--json", presets_json, "full JSON dump");

    CLI11_PARSE(app, argc, argv);

    try {
        if (steady_cmd->parsed()) {
            const auto scan = resolve_case(steady_args);
            if (const int rc = check_validation(scan); rc != kExitOk) return rc;
            hybridom::SteadySolveOptions opts;
            opts.tol = steady_tol;
            opts.max_iter = steady_max_iter;
            opts.sideband_approx = sideband_approx;
            const auto steady = hybridom::solve_steady(scan.system, opts);
            std::cout << hybridom::steady_to_json(steady).dump(2) << '\n';
            return kExitOk;
        }

        if (sweep_cmd->parsed()) {
            const auto scan = resolve_case(sweep_args);
            if (const int rc = check_validation(scan); rc != kExitOk) return rc;
            const auto grid = hybridom::linspace(scan.xmin, scan.xmax, scan.points);
            const auto samples = hybridom::sweep(scan.system, scan.drive, grid);
            std::ofstream os(sweep_out, std::ios::binary);
            if (!os) {
                std::cerr << "error: cannot write " << sweep_out << '\n';
                return kExitNumerical;
            }
            hybridom::write_sweep_csv(os, samples);
            std::size_t singular = 0;
            for (const auto& s : samples) singular += s.singular ? 1u : 0u;
            std::cerr << "wrote " << samples.size() << " rows (" << singular
                      << " singular) to " << sweep_out << '\n';
            return kExitOk;
        }

        if (feat_cmd->parsed()) {
            const auto scan = resolve_case(feat_args);
            if (const int rc = check_validation(scan); rc != kExitOk) return rc;
            const auto grid = hybridom::linspace(scan.xmin, scan.xmax, scan.points);
            const auto report = hybridom::analyze_features(scan.system, scan.drive, grid, tols);
            auto j = hybridom::feature_report_to_json(report);
            j["schema_version"] = hybridom::kReportSchemaVersion;
            if (feat_report.empty()) {
                std::cout << j.dump(2) << '\n';
            } else {
                std::ofstream os(feat_report, std::ios::binary);
                if (!os) {
                    std::cerr << "error: cannot write " << feat_report << '\n';
                    return kExitNumerical;
                }
                os << j.dump(2) << '\n';
            }
            return kExitOk;
        }

        if (oracle_cmd->parsed()) {
            auto scan = resolve_case(oracle_args);
            // The integrator needs strictly positive damping; compare the
            // closed form at the same floored rates.
            scan.system.gamma_m = std::max(scan.system.gamma_m, min_damping);
            scan.system.k_d = std::max(scan.system.k_d, min_damping);
            if (const int rc = check_validation(scan); rc != kExitOk) return rc;
            const int points = scan.points > 64 ? 20 : scan.points;
            const auto xs = hybridom::linspace(scan.xmin, scan.xmax, points);
            const auto check =
                hybridom::oracle_check_grid(scan.system, scan.drive, xs, oracle_tol);
            for (const auto& pt : check.points) {
                std::cout << (pt.pass ? "ok   " : "FAIL ") << "x = " << pt.x
                          << "  rel_err(db, dc1, dc2) = " << pt.rel_err_db << ", "
                          << pt.rel_err_dc1 << ", " << pt.rel_err_dc2 << '\n';
            }
            std::cout << (check.pass ? "oracle agreement" : "oracle MISMATCH")
                      << "  max rel err " << check.max_rel_err << "  tol " << oracle_tol
                      << '\n';
            if (!oracle_json.empty()) {
                nlohmann::json j;
                j["schema_version"] = hybridom::kReportSchemaVersion;
                j["tol"] = oracle_tol;
                j["pass"] = check.pass;
                j["max_rel_err"] = check.max_rel_err;
                j["points"] = nlohmann::json::array();
                for (const auto& pt : check.points) {
                    j["points"].push_back({{"x", pt.x},
                                           {"rel_err_db", pt.rel_err_db},
                                           {"rel_err_dc1", pt.rel_err_dc1},
                                           {"rel_err_dc2", pt.rel_err_dc2},
                                           {"pass", pt.pass}});
                }
                std::ofstream os(oracle_json, std::ios::binary);
                os << j.dump(2) << '\n';
            }
            return check.pass ? kExitOk : kExitOracleMismatch;
        }

        if (run_cmd->parsed()) {
            job.preset = run_preset;
            job.out_dir = run_out;
            job.points = run_points;
            job.curve = run_curve;
            const auto files = hybridom::run_job(job);
            for (const auto& f : files) std::cout << f.string() << '\n';
            return kExitOk;
        }

        if (list_cmd->parsed()) {
            if (presets_json) {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& p : hybridom::preset_registry()) {
                    j.push_back(hybridom::preset_to_json(p));
                }
                std::cout << j.dump(2) << '\n';
            } else {
                for (const auto& p : hybridom::preset_registry()) {
                    std::string suffixes;
                    for (const auto& panel : p.panels) {
                        suffixes += suffixes.empty() ? p.name + panel.suffix
                                                     : ", " + p.name + panel.suffix;
                    }
                    std::cout << p.name << "  [" << suffixes << "]\n    " << p.title << '\n';
                }
            }
            return kExitOk;
        }

        if (presets_cmd->parsed()) {
            std::cerr << "error: use `presets list`\n";
            return kExitValidation;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const hybridom::NonConvergence& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const hybridom::SingularDenominator& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const hybridom::NotSettled& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const hybridom::StepTooLarge& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitOk;
}
