// io.hpp — CSV/JSON emission, config loading, and the sweep-job driver.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hybridom/features.hpp"
#include "hybridom/params.hpp"
#include "hybridom/presets.hpp"
#include "hybridom/response.hpp"
#include "hybridom/steady_state.hpp"

#include "json.hpp"

namespace hybridom {

inline constexpr int kReportSchemaVersion = 1;

inline constexpr const char* kSweepCsvHeader =
    "x_over_k,re_db,im_db,re_dc1,im_dc1,re_dc2,im_dc2,re_eoutL,im_eoutL,"
    "re_eoutR,im_eoutR,re_eT,im_eT,norm_L,norm_RbyL,norm_RbyR,singular";

// 17 significant digits, locale-independent.
std::string format_sig17(double v);

void write_sweep_csv(std::ostream& os, const std::vector<ResponseSample>& samples);

double sample_quantity(const ResponseSample& s, const std::string& quantity);

nlohmann::json steady_to_json(const SteadyState& s);
nlohmann::json feature_report_to_json(const FeatureReport& r);
nlohmann::json validation_to_json(const ValidationReport& r);
nlohmann::json preset_to_json(const Preset& p);

// One resolved scan input: parameters, drive, and grid bounds.
struct ScanCase {
    std::string label;
    SystemParams system;
    DriveConfig drive;
    double xmin{-6.0};
    double xmax{6.0};
    int points{4001};
};

// Config file schema (JSON, documented in docs/config.md):
// top-level keys `system`, `drive`, `sweep`; `drive.from_steady` derives the
// effective couplings from the solved steady state.
ScanCase load_config(const std::filesystem::path& path);

struct SweepJob {
    std::string preset;                 // preset (or panel) name, or
    std::filesystem::path config_path;  // config file; exactly one of the two
    std::filesystem::path out_dir{"."};
    std::optional<double> xmin, xmax;
    std::optional<int> points;
    int curve{-1};  // restrict to one curve; -1 = all
    FeatureTols tols{};
};

// Writes per-curve sweep CSVs, a feature-report JSON, and per-panel
// two-column plot data. Deterministic: identical inputs give identical bytes.
std::vector<std::filesystem::path> run_job(const SweepJob& job);

}  // namespace hybridom
