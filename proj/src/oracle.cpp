#include "hybridom/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <numbers>
#include <thread>

namespace hybridom {

namespace {

constexpr cplx kI{0.0, 1.0};

struct Model {
    double gamma_m, k_d, kappa, G, n, sigma_z, g_eff;
    cplx drive_L, drive_R;
};

// Effective qubit-mechanics rate entering the fluctuation equations:
// g (linear), 2*G_N (nonlinear; the steady phase of b_s is a gauge on
// dsigma and drops out of the field amplitudes), 0 (no qubit).
double effective_qubit_rate(const SystemParams& p, const DriveConfig& d) {
    switch (p.coupling.kind) {
        case CouplingKind::linear: return p.coupling.value;
        case CouplingKind::nonlinear: return 2.0 * d.G_N;
        case CouplingKind::none: return 0.0;
    }
    return 0.0;
}

Model build_model(const SystemParams& p, const DriveConfig& d) {
    Model m{};
    m.gamma_m = p.gamma_m;
    m.k_d = p.k_d;
    m.kappa = p.kappa;
    m.G = d.G;
    m.n = d.n;
    m.sigma_z = p.sigma_z;
    m.g_eff = effective_qubit_rate(p, d);
    m.drive_L = d.eps_L;
    m.drive_R = d.eps_R * std::polar(1.0, d.theta);
    return m;
}

using State = std::array<cplx, 4>;  // (db, dsigma, dc1, dc2)

inline void deriv(const Model& m, const State& y, const cplx& e_drive, State& dy) {
    dy[0] = -kI * (m.n * m.G * y[3] - m.G * y[2]) - kI * m.g_eff * y[1] -
            0.5 * m.gamma_m * y[0];
    dy[1] = kI * m.g_eff * m.sigma_z * y[0] - 0.5 * m.k_d * y[1];
    dy[2] = -m.kappa * y[2] + kI * m.G * y[0] + m.drive_L * e_drive;
    dy[3] = -m.kappa * y[3] - kI * m.n * m.G * y[0] + m.drive_R * e_drive;
}

// Classical one-step 4th-order advance. When `proj` is given, the projection
// integrals z' = y e^{+ixt} advance through the same stages, keeping the
// quadrature at the integrator's order.
inline void rk4_step(const Model& m, State& y, State* proj, const cplx& e0, const cplx& eh,
                     const cplx& e1, double dt) {
    State k1, k2, k3, k4, tmp;
    deriv(m, y, e0, k1);
    for (int i = 0; i < 4; ++i) tmp[i] = y[i] + 0.5 * dt * k1[i];
    deriv(m, tmp, eh, k2);
    if (proj) {
        const cplx c0 = std::conj(e0), ch = std::conj(eh);
        for (int i = 0; i < 4; ++i) {
            (*proj)[i] += (dt / 6.0) * (y[i] * c0 + 2.0 * tmp[i] * ch);
        }
    }
    for (int i = 0; i < 4; ++i) tmp[i] = y[i] + 0.5 * dt * k2[i];
    deriv(m, tmp, eh, k3);
    if (proj) {
        const cplx ch = std::conj(eh);
        for (int i = 0; i < 4; ++i) (*proj)[i] += (dt / 6.0) * 2.0 * tmp[i] * ch;
    }
    for (int i = 0; i < 4; ++i) tmp[i] = y[i] + dt * k3[i];
    deriv(m, tmp, e1, k4);
    if (proj) {
        const cplx c1 = std::conj(e1);
        for (int i = 0; i < 4; ++i) (*proj)[i] += (dt / 6.0) * tmp[i] * c1;
    }
    for (int i = 0; i < 4; ++i) {
        y[i] += (dt / 6.0) * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
    }
}

// Drive phase e^{-ixt} tracked by incremental half-step rotation,
// resynchronized against std::polar periodically to stop roundoff drift.
struct DrivePhase {
    double x, half_dt;
    long half_steps{0};
    cplx value{1.0, 0.0};
    cplx rot_half;
    explicit DrivePhase(double x_, double dt_)
        : x(x_), half_dt(dt_ / 2.0), rot_half(std::polar(1.0, -x_ * dt_ / 2.0)) {}
    void advance() {
        ++half_steps;
        if (half_steps % 8192 == 0) {
            value = std::polar(1.0, -x * (static_cast<double>(half_steps) * half_dt));
        } else {
            value *= rot_half;
        }
    }
};

double amplitude_scale(const OracleAmplitudes& a) {
    return std::max({std::abs(a.db), std::abs(a.dsigma), std::abs(a.dc1), std::abs(a.dc2)});
}

}  // namespace

OracleAmplitudes oracle_project_fixed_step(const SystemParams& params,
                                           const DriveConfig& drive, double x,
                                           double t_transient, double t_sample, double dt,
                                           double settle_tol) {
    if (!(dt > 0.0) || !(t_transient >= 0.0) || !(t_sample > 0.0)) {
        throw std::invalid_argument("oracle: need dt > 0, t_transient >= 0, t_sample > 0");
    }
    const Model m = build_model(params, drive);

    // Half-window rounded up to whole drive periods (x != 0), then whole steps.
    double half = t_sample / 2.0;
    if (x != 0.0) {
        const double period = 2.0 * std::numbers::pi / std::abs(x);
        half = std::ceil(half / period) * period;
    }
    const long n_transient = static_cast<long>(std::ceil(t_transient / dt));
    const long n_half = std::max<long>(1, static_cast<long>(std::ceil(half / dt)));
    const double window_half = static_cast<double>(n_half) * dt;

    State y{};
    DrivePhase phase(x, dt);
    for (long s = 0; s < n_transient; ++s) {
        const cplx e0 = phase.value;
        phase.advance();
        const cplx eh = phase.value;
        phase.advance();
        rk4_step(m, y, nullptr, e0, eh, phase.value, dt);
    }

    std::array<State, 2> halves{};
    for (int h = 0; h < 2; ++h) {
        for (long s = 0; s < n_half; ++s) {
            const cplx e0 = phase.value;
            phase.advance();
            const cplx eh = phase.value;
            phase.advance();
            rk4_step(m, y, &halves[static_cast<std::size_t>(h)], e0, eh, phase.value, dt);
        }
    }

    OracleAmplitudes first{halves[0][0] / window_half, halves[0][1] / window_half,
                           halves[0][2] / window_half, halves[0][3] / window_half};
    OracleAmplitudes second{halves[1][0] / window_half, halves[1][1] / window_half,
                            halves[1][2] / window_half, halves[1][3] / window_half};

    const double scale = std::max({amplitude_scale(first), amplitude_scale(second), 1e-300});
    const double drift = std::max({std::abs(first.db - second.db),
                                   std::abs(first.dsigma - second.dsigma),
                                   std::abs(first.dc1 - second.dc1),
                                   std::abs(first.dc2 - second.dc2)}) /
                         scale;
    if (drift > settle_tol) throw NotSettled(drift);

    return {(halves[0][0] + halves[1][0]) / (2.0 * window_half),
            (halves[0][1] + halves[1][1]) / (2.0 * window_half),
            (halves[0][2] + halves[1][2]) / (2.0 * window_half),
            (halves[0][3] + halves[1][3]) / (2.0 * window_half)};
}

OracleResult integrate_response(const SystemParams& params, const DriveConfig& drive,
                                double x, const OracleConfig& cfg) {
    require_valid(params, drive);
    if (!(params.gamma_m > 0.0) || !(params.k_d > 0.0)) {
        throw std::invalid_argument(
            "integrate_response requires gamma_m > 0 and k_d > 0; a lossless system "
            "never settles");
    }
    const Model m = build_model(params, drive);

    double dt = cfg.dt;
    if (dt <= 0.0) {
        dt = 0.01 / std::max({params.kappa, params.k_d, m.g_eff, drive.G});
    }
    double t_transient = cfg.t_transient;
    if (t_transient < 0.0) {
        t_transient = 20.0 / std::min({params.gamma_m, params.k_d, params.kappa});
    }
    double t_sample = cfg.t_sample;
    if (t_sample <= 0.0) {
        t_sample = 10.0 * 2.0 * std::numbers::pi / std::max(std::abs(x), params.kappa);
    }

    const OracleAmplitudes coarse =
        oracle_project_fixed_step(params, drive, x, t_transient, t_sample, dt, cfg.tol);
    const OracleAmplitudes fine =
        oracle_project_fixed_step(params, drive, x, t_transient, t_sample, dt / 2.0, cfg.tol);

    const double scale = std::max(amplitude_scale(fine), 1e-300);
    const double estimate = std::max({std::abs(coarse.db - fine.db),
                                      std::abs(coarse.dsigma - fine.dsigma),
                                      std::abs(coarse.dc1 - fine.dc1),
                                      std::abs(coarse.dc2 - fine.dc2)}) /
                            scale;
    if (estimate > cfg.tol) throw StepTooLarge(estimate);

    OracleResult r;
    r.x = x;
    r.db_plus = fine.db;
    r.dc1_plus = fine.dc1;
    r.dc2_plus = fine.dc2;
    r.transient_time = t_transient;
    r.dt = dt;
    r.rel_error_estimate = estimate;
    return r;
}

OracleCheck oracle_check_grid(const SystemParams& params, const DriveConfig& drive,
                              std::span<const double> xs, double tol,
                              const OracleConfig& cfg, bool parallel) {
    OracleCheck check;
    check.points.resize(xs.size());

    const auto eval_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const double x = xs[i];
            const OracleResult oracle = integrate_response(params, drive, x, cfg);
            const ResponseSample closed = response_at(params, drive, x);
            const double ref = std::max({std::abs(closed.db_plus), std::abs(closed.dc1_plus),
                                         std::abs(closed.dc2_plus), 1e-300});
            const auto rel = [ref](const cplx& got, const cplx& want) {
                return std::abs(got - want) / std::max(std::abs(want), 1e-9 * ref);
            };
            OracleCheckPoint pt;
            pt.x = x;
            pt.rel_err_db = rel(oracle.db_plus, closed.db_plus);
            pt.rel_err_dc1 = rel(oracle.dc1_plus, closed.dc1_plus);
            pt.rel_err_dc2 = rel(oracle.dc2_plus, closed.dc2_plus);
            pt.pass = pt.rel_err_db <= tol && pt.rel_err_dc1 <= tol && pt.rel_err_dc2 <= tol;
            check.points[i] = pt;
        }
    };

    const unsigned n_workers =
        parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
    if (n_workers <= 1 || xs.size() < 2) {
        eval_range(0, xs.size());
    } else {
        std::vector<std::future<void>> tasks;
        const std::size_t chunk = (xs.size() + n_workers - 1) / n_workers;
        for (unsigned w = 0; w < n_workers; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(xs.size(), begin + chunk);
            if (begin >= end) break;
            tasks.push_back(std::async(std::launch::async, eval_range, begin, end));
        }
        for (auto& t : tasks) t.get();
    }

    check.pass = true;
    for (const auto& pt : check.points) {
        check.max_rel_err = std::max({check.max_rel_err, pt.rel_err_db, pt.rel_err_dc1,
                                      pt.rel_err_dc2});
        check.pass = check.pass && pt.pass;
    }
    return check;
}

}  // namespace hybridom
