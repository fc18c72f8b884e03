// presets.hpp — Built-in parameter sets for the bundled reference scans.
//
// Preset names fig2 … fig13 reproduce the reference spectra this library
// ships with; panel suffixes ("fig3a", "fig3b") select a plotted quantity,
// x-range, or curve subset. Each preset records which values its source
// fixes and which this registry had to assume.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hybridom/params.hpp"

namespace hybridom {

struct Curve {
    std::string label;
    SystemParams system;
    DriveConfig drive;
};

struct Panel {
    std::string suffix;    // "a", "b"
    std::string quantity;  // CSV column: norm_L | norm_RbyL | norm_RbyR | re_eT | im_eT
    double xmin{};
    double xmax{};
    std::vector<std::size_t> curve_indices;
};

struct Preset {
    std::string name;
    std::string title;
    std::vector<Curve> curves;
    std::vector<Panel> panels;
    double xmin{-6.0};
    double xmax{6.0};
    int points{4001};
    std::vector<std::string> stated;   // values fixed by the reference scan
    std::vector<std::string> assumed;  // values the reference leaves unstated
};

const std::vector<Preset>& preset_registry();

struct PresetSelection {
    const Preset* preset{nullptr};
    const Panel* panel{nullptr};  // null when the bare preset name was given

    double xmin() const { return panel ? panel->xmin : preset->xmin; }
    double xmax() const { return panel ? panel->xmax : preset->xmax; }
    std::size_t default_curve() const {
        return panel && !panel->curve_indices.empty() ? panel->curve_indices.front() : 0;
    }
};

// Resolve "fig7" or "fig7a"; nullopt when unknown.
std::optional<PresetSelection> find_preset(std::string_view name);

}  // namespace hybridom
