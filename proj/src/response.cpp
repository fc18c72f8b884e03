#include "hybridom/response.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

namespace hybridom {

namespace {

constexpr double kSingularGuard = 1e-14;
constexpr cplx kI{0.0, 1.0};

struct ResponseParts {
    cplx chi_q;     // -ix + k_d/2
    cplx chi_c;     // -ix + kappa
    cplx mech;      // (-ix + gamma_m/2)(-ix + k_d/2) - qubit shift
    cplx denom_b;   // chi_c*mech + chi_q*G^2*(n^2+1)
    cplx denom_c;   // denom_b*chi_c
    cplx eps_R_ph;  // eps_R*e^{i theta}
};

ResponseParts response_parts(const SystemParams& p, const DriveConfig& d, double x) {
    ResponseParts r;
    r.chi_q = -kI * x + p.k_d / 2.0;
    r.chi_c = -kI * x + p.kappa;
    const cplx chi_m = -kI * x + p.gamma_m / 2.0;
    const double shift = qubit_response_shift(p, d);
    r.mech = chi_m * r.chi_q - shift;
    const double coupling_sq = d.G * d.G * (d.n * d.n + 1.0);
    r.denom_b = r.chi_c * r.mech + r.chi_q * coupling_sq;

    // Guard relative to the scale of the denominator's own terms so the sweep
    // flags genuine degeneracies, not merely small values.
    const double scale = std::abs(r.chi_c) * (std::abs(chi_m) * std::abs(r.chi_q) +
                                              std::abs(shift)) +
                         std::abs(r.chi_q) * coupling_sq;
    if (std::abs(r.denom_b) <= kSingularGuard * scale) throw SingularDenominator(x);

    r.denom_c = r.denom_b * r.chi_c;
    r.eps_R_ph = d.eps_R * std::polar(1.0, d.theta);
    return r;
}

}  // namespace

double qubit_response_shift(const SystemParams& params, const DriveConfig& drive) {
    switch (params.coupling.kind) {
        case CouplingKind::linear:
            return params.coupling.value * params.coupling.value * params.sigma_z;
        case CouplingKind::nonlinear:
            return 4.0 * drive.G_N * drive.G_N * params.sigma_z;
        case CouplingKind::none:
            return 0.0;
    }
    return 0.0;
}

ResponseSample response_at(const SystemParams& p, const DriveConfig& d, double x) {
    const ResponseParts r = response_parts(p, d, x);
    const double G2 = d.G * d.G;

    ResponseSample s;
    s.x = x;
    s.db_plus = -kI * d.G * r.chi_q * (d.n * r.eps_R_ph - d.eps_L) / r.denom_b;
    s.dc1_plus = (G2 * r.chi_q * (d.n * r.eps_R_ph + d.n * d.n * d.eps_L) +
                  d.eps_L * r.chi_c * r.mech) /
                 r.denom_c;
    s.dc2_plus = (G2 * r.chi_q * (d.n * d.eps_L + r.eps_R_ph) +
                  r.eps_R_ph * r.chi_c * r.mech) /
                 r.denom_c;

    const double two_k = 2.0 * p.kappa;
    s.eout_L_plus = two_k * s.dc1_plus - d.eps_L;
    s.eout_R_plus = two_k * s.dc2_plus - r.eps_R_ph;

    if (d.eps_L > 0.0) {
        s.eps_T = two_k * s.dc1_plus / d.eps_L;
        s.has_eps_T = true;
        s.norm_L = std::norm(s.eout_L_plus / d.eps_L);
        s.norm_R_by_L = std::norm(s.eout_R_plus / d.eps_L);
    }
    if (d.eps_R > 0.0) {
        s.norm_R_by_R = std::norm(s.eout_R_plus / d.eps_R);
    }
    return s;
}

cplx transmission_eT(const SystemParams& p, const DriveConfig& d, double x) {
    if (!(d.eps_L > 0.0)) {
        throw UndefinedNormalization("eps_T requires eps_L > 0");
    }
    const ResponseParts r = response_parts(p, d, x);
    const double G2 = d.G * d.G;
    const double two_k = 2.0 * p.kappa;
    const cplx numerator = G2 * two_k * r.chi_q * (d.n * r.eps_R_ph + d.n * d.n * d.eps_L) +
                           two_k * d.eps_L * r.chi_c * r.mech;
    return numerator / (d.eps_L * r.denom_c);
}

cplx transmission_eT_reduced(const DriveConfig& d, double x, double kappa) {
    if (!(d.eps_L > 0.0)) {
        throw UndefinedNormalization("eps_T requires eps_L > 0");
    }
    const double G2 = d.G * d.G;
    const cplx ratio = d.eps_R * std::polar(1.0, d.theta) / d.eps_L;
    const double two_k = 2.0 * kappa;
    const cplx numerator = G2 * two_k * (d.n * ratio + d.n * d.n) -
                           two_k * x * (x + kI * kappa);
    const cplx denominator = (kappa - kI * x) * (G2 * (d.n * d.n + 1.0) -
                                                 x * (x + kI * kappa));
    if (std::abs(denominator) <= kSingularGuard * (1.0 + std::abs(x))) {
        throw SingularDenominator(x, "reduced transmission");
    }
    return numerator / denominator;
}

std::vector<ResponseSample> sweep(const SystemParams& p, const DriveConfig& d,
                                  std::span<const double> grid, bool parallel) {
    if (grid.empty()) throw std::invalid_argument("sweep: grid is empty");
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) {
            throw std::invalid_argument("sweep: grid must be strictly increasing");
        }
    }
    require_valid(p, d);

    std::vector<ResponseSample> out(grid.size());
    const auto eval_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            try {
                out[i] = response_at(p, d, grid[i]);
            } catch (const SingularDenominator&) {
                out[i] = ResponseSample{};
                out[i].x = grid[i];
                out[i].singular = true;
            }
        }
    };

    const unsigned n_workers =
        parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
    if (n_workers <= 1 || grid.size() < 64) {
        eval_range(0, grid.size());
        return out;
    }
    std::vector<std::future<void>> tasks;
    const std::size_t chunk = (grid.size() + n_workers - 1) / n_workers;
    for (unsigned w = 0; w < n_workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(grid.size(), begin + chunk);
        if (begin >= end) break;
        tasks.push_back(std::async(std::launch::async, eval_range, begin, end));
    }
    for (auto& t : tasks) t.get();
    return out;
}

std::vector<double> linspace(double xmin, double xmax, int points) {
    if (points < 2) throw std::invalid_argument("linspace: points must be >= 2");
    if (!(xmin < xmax)) throw std::invalid_argument("linspace: xmin must be < xmax");
    std::vector<double> xs(static_cast<std::size_t>(points));
    const double step = (xmax - xmin) / (points - 1);
    for (int i = 0; i < points; ++i) xs[static_cast<std::size_t>(i)] = xmin + i * step;
    xs.back() = xmax;
    return xs;
}

}  // namespace hybridom
