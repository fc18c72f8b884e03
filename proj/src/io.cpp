#include "hybridom/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <system_error>

#include "hybridom/steady_state.hpp"

namespace hybridom {

namespace {

std::string format_optional(const std::optional<double>& v) {
    return v ? format_sig17(*v) : std::string{};
}

nlohmann::json cplx_to_json(const cplx& z) {
    return {{"re", z.real()}, {"im", z.imag()}};
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
    os << content;
    if (!os) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace

std::string format_sig17(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::scientific, 16);
    if (ec != std::errc{}) return "nan";
    return std::string(buf, ptr);
}

void write_sweep_csv(std::ostream& os, const std::vector<ResponseSample>& samples) {
    os << kSweepCsvHeader << '\n';
    for (const ResponseSample& s : samples) {
        os << format_sig17(s.x) << ',';
        if (s.singular) {
            os << ",,,,,,,,,,,,,,,1\n";
            continue;
        }
        os << format_sig17(s.db_plus.real()) << ',' << format_sig17(s.db_plus.imag()) << ','
           << format_sig17(s.dc1_plus.real()) << ',' << format_sig17(s.dc1_plus.imag())
           << ',' << format_sig17(s.dc2_plus.real()) << ','
           << format_sig17(s.dc2_plus.imag()) << ',' << format_sig17(s.eout_L_plus.real())
           << ',' << format_sig17(s.eout_L_plus.imag()) << ','
           << format_sig17(s.eout_R_plus.real()) << ',' << format_sig17(s.eout_R_plus.imag())
           << ',';
        if (s.has_eps_T) {
            os << format_sig17(s.eps_T.real()) << ',' << format_sig17(s.eps_T.imag());
        } else {
            os << ',';
        }
        os << ',' << format_optional(s.norm_L) << ',' << format_optional(s.norm_R_by_L)
           << ',' << format_optional(s.norm_R_by_R) << ",0\n";
    }
}

double sample_quantity(const ResponseSample& s, const std::string& quantity) {
    if (quantity == "norm_L") return s.norm_L.value();
    if (quantity == "norm_RbyL") return s.norm_R_by_L.value();
    if (quantity == "norm_RbyR") return s.norm_R_by_R.value();
    if (quantity == "re_eT") return s.eps_T.real();
    if (quantity == "im_eT") return s.eps_T.imag();
    throw std::invalid_argument("unknown quantity '" + quantity + "'");
}

nlohmann::json steady_to_json(const SteadyState& s) {
    return {{"b_s", cplx_to_json(s.b_s)},
            {"sigma_minus_s", cplx_to_json(s.sigma_minus_s)},
            {"c1_s", cplx_to_json(s.c1_s)},
            {"c2_s", cplx_to_json(s.c2_s)},
            {"delta_1", s.delta_1},
            {"delta_2", s.delta_2},
            {"residual", s.residual},
            {"iterations", s.iterations}};
}

nlohmann::json feature_report_to_json(const FeatureReport& r) {
    nlohmann::json j;
    j["cpt_points"] = nlohmann::json::array();
    for (const CptPoint& p : r.cpt_points) {
        j["cpt_points"].push_back({{"x", p.x},
                                   {"norm_L", p.norm_L},
                                   {"norm_R_by_L", p.norm_R_by_L},
                                   {"source", p.source}});
    }
    j["near_cpt_dips"] = nlohmann::json::array();
    for (const CptPoint& p : r.near_cpt_dips) {
        j["near_cpt_dips"].push_back({{"x", p.x},
                                      {"norm_L", p.norm_L},
                                      {"norm_R_by_L", p.norm_R_by_L},
                                      {"source", p.source}});
    }
    j["cps_points"] = nlohmann::json::array();
    for (const CpsPoint& p : r.cps_points) {
        j["cps_points"].push_back({{"x", p.x},
                                   {"norm_L", p.norm_L},
                                   {"norm_R_by_R", p.norm_R_by_R},
                                   {"side", p.side}});
    }
    j["omia_peaks"] = nlohmann::json::array();
    for (const OmiaPeak& p : r.omia_peaks) {
        nlohmann::json e = {{"x", p.x}, {"re_eT", p.re_eT}, {"kind", p.kind}};
        if (p.kind == "maximum") e["width"] = p.width;
        j["omia_peaks"].push_back(e);
    }
    j["classification"] = to_string(r.classification);
    j["discarded_complex_roots"] = nlohmann::json::array();
    for (const cplx& z : r.discarded_complex_roots) {
        j["discarded_complex_roots"].push_back(cplx_to_json(z));
    }
    j["warnings"] = r.warnings;
    return j;
}

nlohmann::json validation_to_json(const ValidationReport& r) {
    nlohmann::json j;
    j["pass"] = r.pass();
    j["errors"] = nlohmann::json::array();
    for (const auto& e : r.errors) {
        j["errors"].push_back({{"field", e.field}, {"message", e.message}});
    }
    j["warnings"] = nlohmann::json::array();
    for (const auto& w : r.warnings) {
        j["warnings"].push_back({{"field", w.field}, {"message", w.message}});
    }
    return j;
}

nlohmann::json preset_to_json(const Preset& p) {
    nlohmann::json j;
    j["name"] = p.name;
    j["title"] = p.title;
    j["grid"] = {{"xmin", p.xmin}, {"xmax", p.xmax}, {"points", p.points}};
    j["curves"] = nlohmann::json::array();
    for (const Curve& c : p.curves) {
        j["curves"].push_back({{"label", c.label}, {"system", c.system}, {"drive", c.drive}});
    }
    j["panels"] = nlohmann::json::array();
    for (const Panel& panel : p.panels) {
        j["panels"].push_back({{"suffix", panel.suffix},
                               {"quantity", panel.quantity},
                               {"xmin", panel.xmin},
                               {"xmax", panel.xmax},
                               {"curves", panel.curve_indices}});
    }
    j["stated"] = p.stated;
    j["assumed"] = p.assumed;
    return j;
}

ScanCase load_config(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open config: " + path.string());
    nlohmann::json j;
    is >> j;

    ScanCase scan;
    scan.label = "config";
    scan.system = j.value("system", SystemParams{});
    scan.drive = j.value("drive", DriveConfig{});
    if (j.contains("sweep")) {
        const auto& sw = j["sweep"];
        scan.xmin = sw.value("xmin", scan.xmin);
        scan.xmax = sw.value("xmax", scan.xmax);
        scan.points = sw.value("points", scan.points);
    }
    if (j.contains("drive") && j["drive"].value("from_steady", false)) {
        const SteadyState steady = solve_steady(scan.system);
        scan.drive = drive_from_steady(scan.system, scan.drive, steady);
    }
    return scan;
}

std::vector<std::filesystem::path> run_job(const SweepJob& job) {
    const bool from_preset = !job.preset.empty();
    if (from_preset == !job.config_path.empty()) {
        throw std::invalid_argument("run_job: give exactly one of preset or config");
    }

    std::string stem;
    std::vector<ScanCase> cases;
    std::vector<std::size_t> case_index;  // original curve index per case
    std::vector<Panel> panels;
    if (from_preset) {
        const auto sel = find_preset(job.preset);
        if (!sel) throw std::invalid_argument("unknown preset '" + job.preset + "'");
        const Preset& p = *sel->preset;
        stem = p.name;
        panels = sel->panel ? std::vector<Panel>{*sel->panel} : p.panels;
        for (std::size_t i = 0; i < p.curves.size(); ++i) {
            if (job.curve >= 0 && static_cast<std::size_t>(job.curve) != i) continue;
            ScanCase c;
            c.label = p.curves[i].label;
            c.system = p.curves[i].system;
            c.drive = p.curves[i].drive;
            c.xmin = sel->xmin();
            c.xmax = sel->xmax();
            c.points = p.points;
            cases.push_back(std::move(c));
            case_index.push_back(i);
        }
    } else {
        ScanCase c = load_config(job.config_path);
        stem = job.config_path.stem().string();
        cases.push_back(std::move(c));
        case_index.push_back(0);
    }
    for (ScanCase& c : cases) {
        if (job.xmin) c.xmin = *job.xmin;
        if (job.xmax) c.xmax = *job.xmax;
        if (job.points) c.points = *job.points;
    }

    std::filesystem::create_directories(job.out_dir);
    std::vector<std::filesystem::path> written;

    nlohmann::json report;
    report["schema_version"] = kReportSchemaVersion;
    report["source"] = stem;
    report["curves"] = nlohmann::json::array();

    for (std::size_t ci = 0; ci < cases.size(); ++ci) {
        const ScanCase& c = cases[ci];
        require_valid(c.system, c.drive);
        const std::vector<double> grid = linspace(c.xmin, c.xmax, c.points);
        const auto samples = sweep(c.system, c.drive, grid);

        std::ostringstream csv;
        write_sweep_csv(csv, samples);
        const auto csv_path = job.out_dir / (stem + "_" + c.label + ".csv");
        write_file(csv_path, csv.str());
        written.push_back(csv_path);

        const FeatureReport features = analyze_features(c.system, c.drive, grid, job.tols);
        report["curves"].push_back({{"label", c.label},
                                    {"system", c.system},
                                    {"drive", c.drive},
                                    {"grid", {{"xmin", c.xmin}, {"xmax", c.xmax},
                                              {"points", c.points}}},
                                    {"features", feature_report_to_json(features)}});

        // Two-column plot data per panel; singular rows are dropped.
        for (const Panel& panel : panels) {
            const auto& pc = panel.curve_indices;
            if (!pc.empty() && std::find(pc.begin(), pc.end(), case_index[ci]) == pc.end()) {
                continue;
            }
            std::ostringstream dat;
            dat << "# x_over_k " << panel.quantity << '\n';
            for (const ResponseSample& s : samples) {
                if (s.singular) continue;
                dat << format_sig17(s.x) << ' '
                    << format_sig17(sample_quantity(s, panel.quantity)) << '\n';
            }
            const auto dat_path =
                job.out_dir / (stem + panel.suffix + "_" + c.label + ".dat");
            write_file(dat_path, dat.str());
            written.push_back(dat_path);
        }
    }

    const auto report_path = job.out_dir / (stem + "_features.json");
    write_file(report_path, report.dump(2) + "\n");
    written.push_back(report_path);
    return written;
}

}  // namespace hybridom
