#include "hybridom/features.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

namespace hybridom {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

using Metric = std::function<double(double)>;

// Golden-section minimization followed by a three-point parabolic polish.
// The metric returns +inf where the response is singular, so the search
// slides off removable singularities instead of aborting.
double refine_minimum(const Metric& f, double a, double b, double dx) {
    constexpr double phi = 0.6180339887498949;
    double c = b - phi * (b - a);
    double d = a + phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > dx) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = f(d);
        }
    }
    double xm = (fc <= fd) ? c : d;
    double fm = std::min(fc, fd);

    const double h = std::max(dx, std::abs(xm) * 1e-12);
    const double f0 = f(xm - h);
    const double f2 = f(xm + h);
    if (std::isfinite(f0) && std::isfinite(fm) && std::isfinite(f2)) {
        const double curvature = f0 - 2.0 * fm + f2;
        if (curvature > 0.0) {
            const double offset = 0.5 * h * (f0 - f2) / curvature;
            if (std::abs(offset) <= h) {
                const double xv = xm + offset;
                const double fv = f(xv);
                if (std::isfinite(fv) && fv <= fm) return xv;
            }
        }
    }
    return xm;
}

struct Dip {
    double x;
    double value;
};

// Local minima of the sampled metric, refined. NaN entries mark singular
// grid points; a NaN flanked by finite values is itself a dip candidate
// (the minimum may sit at a removable singularity). Plateaus resolve to
// their leftmost point. Refined positions closer than a few refinement
// widths are duplicates of one basin and merge silently; separations below
// one grid step but above that are genuinely unresolved and warn.
std::vector<Dip> refined_minima(std::span<const double> xs, std::span<const double> vs,
                                const Metric& f, double refine_dx,
                                std::vector<std::string>* warnings) {
    const std::size_t m = xs.size();
    std::vector<std::pair<double, double>> brackets;
    auto lo = [&](std::size_t i) { return std::isnan(vs[i]) ? kInf : vs[i]; };
    for (std::size_t i = 1; i + 1 < m; ++i) {
        if (std::isnan(vs[i])) {
            if (!std::isnan(vs[i - 1]) && !std::isnan(vs[i + 1])) {
                brackets.emplace_back(xs[i - 1], xs[i + 1]);
            }
            continue;
        }
        if (lo(i - 1) > vs[i] && vs[i] <= lo(i + 1)) {
            brackets.emplace_back(xs[i - 1], xs[i + 1]);
        }
    }

    std::vector<Dip> dips;
    for (const auto& [a, b] : brackets) {
        const double x = refine_minimum(f, a, b, refine_dx);
        const double v = f(x);
        if (!std::isfinite(v)) continue;
        // Reject bracket-edge artifacts: a refined point must actually be a
        // local minimum of the metric, not a slide toward the bracket rim.
        // The probe offset stays well above evaluation noise so minima at
        // removable singularities survive.
        const double h = std::max(32.0 * refine_dx, 1e-5 * (1.0 + std::abs(x)));
        const double slack = 1e-9 * (1.0 + std::abs(v));
        if (f(x - h) < v - slack || f(x + h) < v - slack) continue;
        dips.push_back({x, v});
    }
    std::sort(dips.begin(), dips.end(), [](const Dip& p, const Dip& q) { return p.x < q.x; });

    const double spacing = m > 1 ? (xs.back() - xs.front()) / static_cast<double>(m - 1) : 0.0;
    const double duplicate_radius = 64.0 * refine_dx;
    std::vector<Dip> merged;
    for (const Dip& d : dips) {
        if (!merged.empty() && d.x - merged.back().x < duplicate_radius) {
            if (d.value < merged.back().value) merged.back() = d;
        } else if (!merged.empty() && d.x - merged.back().x < spacing) {
            if (warnings) {
                std::ostringstream w;
                w << "grid too coarse: adjacent minima unresolved near x = " << d.x;
                warnings->push_back(w.str());
            }
            if (d.value < merged.back().value) merged.back() = d;
        } else {
            merged.push_back(d);
        }
    }
    return merged;
}

// Evaluate a per-sample metric over the grid; singular points become NaN.
std::vector<double> grid_metric(const SystemParams& p, const DriveConfig& d,
                                std::span<const double> grid,
                                const std::function<double(const ResponseSample&)>& pick) {
    std::vector<double> vs(grid.size(), kNan);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        try {
            vs[i] = pick(response_at(p, d, grid[i]));
        } catch (const SingularDenominator&) {
        }
    }
    return vs;
}

Metric point_metric(const SystemParams& p, const DriveConfig& d,
                    std::function<double(const ResponseSample&)> pick) {
    return [&p, &d, pick = std::move(pick)](double x) -> double {
        try {
            return pick(response_at(p, d, x));
        } catch (const SingularDenominator&) {
            return kInf;
        }
    };
}

// Sample the response at x, nudging off a removable singularity if the
// refined point landed exactly on one.
ResponseSample sample_near(const SystemParams& p, const DriveConfig& d, double x,
                           double nudge) {
    for (int attempt = 0; attempt < 3; ++attempt) {
        try {
            return response_at(p, d, x);
        } catch (const SingularDenominator&) {
            x += (attempt % 2 == 0 ? 1.0 : -2.0) * nudge;
        }
    }
    return response_at(p, d, x);
}

void check_grid(std::span<const double> grid) {
    if (grid.size() < 3) throw std::invalid_argument("feature scan: grid too small");
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) {
            throw std::invalid_argument("feature scan: grid must be strictly increasing");
        }
    }
}

}  // namespace

const char* to_string(OmiaClass c) {
    switch (c) {
        case OmiaClass::omia: return "OMIA";
        case OmiaClass::omit: return "OMIT";
        case OmiaClass::mixed: return "mixed";
    }
    return "mixed";
}

CptRoots cpt_roots_closed_form(double G, const QubitCoupling& coupling, double kappa) {
    double q_sq = 0.0;  // squared effective qubit coupling in the root polynomial
    switch (coupling.kind) {
        case CouplingKind::linear:
            q_sq = coupling.value * coupling.value;
            break;
        case CouplingKind::nonlinear:
            q_sq = 4.0 * coupling.value * coupling.value;
            break;
        case CouplingKind::none:
            break;
    }
    const double a = 2.0 * G * G + q_sq - kappa * kappa;
    const double disc = std::sqrt(4.0 * q_sq * kappa * kappa + a * a);
    const cplx inner = std::sqrt(cplx{(a - disc) / 2.0, 0.0});
    const cplx outer = std::sqrt(cplx{(a + disc) / 2.0, 0.0});
    return {{-inner, inner, -outer, outer}};
}

CptScan find_cpt_numeric(const SystemParams& params, const DriveConfig& drive,
                         std::span<const double> grid, const FeatureTols& tols) {
    if (drive.eps_R != 0.0 || !(drive.eps_L > 0.0)) {
        throw std::invalid_argument("find_cpt_numeric requires eps_R = 0 and eps_L > 0");
    }
    check_grid(grid);
    require_valid(params, drive);

    const auto pick = [](const ResponseSample& s) { return s.norm_L.value(); };
    const auto vs = grid_metric(params, drive, grid, pick);
    const Metric f = point_metric(params, drive, pick);

    CptScan scan;
    const auto dips = refined_minima(grid, vs, f, tols.refine_dx, &scan.warnings);
    for (const Dip& dip : dips) {
        const ResponseSample s = sample_near(params, drive, dip.x, 4.0 * tols.refine_dx);
        CptPoint point{dip.x, s.norm_L.value(), s.norm_R_by_L.value(), "numeric"};
        const bool strict = point.norm_L <= tols.cpt_norm &&
                            std::abs(point.norm_R_by_L - 1.0) <= tols.cpt_ratio;
        (strict ? scan.points : scan.dips).push_back(point);
    }
    return scan;
}

std::vector<CpsPoint> find_cps(const SystemParams& params, const DriveConfig& drive,
                               std::span<const double> grid, const FeatureTols& tols) {
    if (!(drive.eps_L > 0.0) || drive.eps_L != drive.eps_R) {
        throw std::invalid_argument("find_cps requires eps_L = eps_R > 0");
    }
    if (params.gamma_m != 0.0 || params.k_d != 0.0) {
        throw std::invalid_argument("find_cps requires gamma_m = k_d = 0");
    }
    check_grid(grid);
    require_valid(params, drive);

    std::vector<CpsPoint> points;
    const auto scan_side = [&](auto pick, const char* side, auto dark_norm, auto bright_norm) {
        const auto vs = grid_metric(params, drive, grid, pick);
        const Metric f = point_metric(params, drive, pick);
        for (const Dip& dip : refined_minima(grid, vs, f, tols.refine_dx, nullptr)) {
            const ResponseSample s = sample_near(params, drive, dip.x, 4.0 * tols.refine_dx);
            if (dark_norm(s) <= tols.cps && std::abs(bright_norm(s) - 2.0) <= tols.cps) {
                points.push_back({dip.x, s.norm_L.value(), s.norm_R_by_R.value(), side});
            }
        }
    };
    scan_side([](const ResponseSample& s) { return s.norm_L.value(); }, "left_dark",
              [](const ResponseSample& s) { return s.norm_L.value(); },
              [](const ResponseSample& s) { return s.norm_R_by_R.value(); });
    scan_side([](const ResponseSample& s) { return s.norm_R_by_R.value(); }, "right_dark",
              [](const ResponseSample& s) { return s.norm_R_by_R.value(); },
              [](const ResponseSample& s) { return s.norm_L.value(); });

    std::sort(points.begin(), points.end(),
              [](const CpsPoint& p, const CpsPoint& q) { return p.x < q.x; });
    return points;
}

OmiaScan classify_omia(const SystemParams& params, const DriveConfig& drive,
                       std::span<const double> grid, const FeatureTols& tols) {
    if (!(drive.eps_L > 0.0)) throw std::invalid_argument("classify_omia requires eps_L > 0");
    check_grid(grid);
    require_valid(params, drive);

    const auto pick = [](const ResponseSample& s) { return s.eps_T.real(); };
    const auto vs = grid_metric(params, drive, grid, pick);
    const Metric f_min = point_metric(params, drive, pick);
    const Metric f_max = [&f_min](double x) {
        const double v = f_min(x);
        return std::isfinite(v) ? -v : v;
    };
    std::vector<double> neg(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) neg[i] = -vs[i];

    const auto minima = refined_minima(grid, vs, f_min, tols.refine_dx, nullptr);
    const auto maxima = refined_minima(grid, neg, f_max, tols.refine_dx, nullptr);

    OmiaScan scan;
    for (const Dip& d : minima) scan.extrema.push_back({d.x, d.value, "minimum", 0.0});
    for (const Dip& d : maxima) scan.extrema.push_back({d.x, -d.value, "maximum", 0.0});
    std::sort(scan.extrema.begin(), scan.extrema.end(),
              [](const OmiaPeak& p, const OmiaPeak& q) { return p.x < q.x; });

    // Full width at half prominence for each maximum: prominence against the
    // higher of the two flanking valleys, crossings interpolated on the grid.
    for (OmiaPeak& peak : scan.extrema) {
        if (peak.kind != "maximum") continue;
        double left_valley = vs.front();
        double right_valley = vs.back();
        for (const Dip& d : minima) {
            if (d.x < peak.x) left_valley = d.value;
            if (d.x > peak.x) {
                right_valley = d.value;
                break;
            }
        }
        if (!std::isfinite(left_valley)) left_valley = peak.re_eT;
        if (!std::isfinite(right_valley)) right_valley = peak.re_eT;
        const double prominence = peak.re_eT - std::max(left_valley, right_valley);
        if (!(prominence > 0.0)) continue;
        const double level = peak.re_eT - prominence / 2.0;

        const auto idx = static_cast<std::size_t>(
            std::lower_bound(grid.begin(), grid.end(), peak.x) - grid.begin());
        double xl = grid.front();
        for (std::size_t i = std::min(idx, vs.size() - 1); i-- > 0;) {
            if (std::isnan(vs[i])) continue;
            if (vs[i] < level) {
                const double x1 = grid[i + 1];
                const double v1 = std::isnan(vs[i + 1]) ? level : vs[i + 1];
                const double t = (level - vs[i]) / (v1 - vs[i]);
                xl = grid[i] + t * (x1 - grid[i]);
                break;
            }
        }
        double xr = grid.back();
        for (std::size_t i = idx; i < vs.size(); ++i) {
            if (std::isnan(vs[i])) continue;
            if (vs[i] < level) {
                const double x0 = grid[i - 1];
                const double v0 = std::isnan(vs[i - 1]) ? level : vs[i - 1];
                const double t = (level - v0) / (vs[i] - v0);
                xr = x0 + t * (grid[i] - x0);
                break;
            }
        }
        peak.width = xr - xl;
    }

    // Classify by the extremum nearest line center.
    const double window = 0.05 * (grid.back() - grid.front());
    const OmiaPeak* nearest = nullptr;
    for (const OmiaPeak& p : scan.extrema) {
        if (!nearest || std::abs(p.x) < std::abs(nearest->x)) nearest = &p;
    }
    if (nearest && std::abs(nearest->x) <= window) {
        scan.classification =
            nearest->kind == "maximum" ? OmiaClass::omia : OmiaClass::omit;
    } else {
        scan.classification = OmiaClass::mixed;
    }
    return scan;
}

FeatureReport analyze_features(const SystemParams& params, const DriveConfig& drive,
                               std::span<const double> grid, const FeatureTols& tols) {
    require_valid(params, drive);
    FeatureReport report;

    const bool lossless = params.gamma_m == 0.0 && params.k_d == 0.0;
    if (drive.eps_R == 0.0 && drive.eps_L > 0.0) {
        CptScan scan = find_cpt_numeric(params, drive, grid, tols);
        report.cpt_points = std::move(scan.points);
        report.near_cpt_dips = std::move(scan.dips);
        report.warnings = std::move(scan.warnings);

        // Cross-check the closed-form roots where their stated limit applies.
        if (lossless && drive.n == 1.0) {
            QubitCoupling effective = params.coupling;
            if (effective.kind == CouplingKind::nonlinear) effective.value = drive.G_N;
            const CptRoots roots = cpt_roots_closed_form(drive.G, effective, params.kappa);
            for (const cplx& root : roots.roots) {
                if (std::abs(root.imag()) > tols.root_imag) {
                    report.discarded_complex_roots.push_back(root);
                    continue;
                }
                for (CptPoint& p : report.cpt_points) {
                    if (std::abs(p.x - root.real()) < 1e-3 * params.kappa) {
                        p.source = "closed_form";
                    }
                }
            }
        }
    }

    if (lossless && drive.eps_L > 0.0 && drive.eps_L == drive.eps_R) {
        report.cps_points = find_cps(params, drive, grid, tols);
    }

    if (drive.eps_L > 0.0) {
        OmiaScan scan = classify_omia(params, drive, grid, tols);
        report.omia_peaks = std::move(scan.extrema);
        report.classification = scan.classification;
    }
    return report;
}

}  // namespace hybridom
