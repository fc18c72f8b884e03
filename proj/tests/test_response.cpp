#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "hybridom/response.hpp"

using namespace hybridom;
using cd = std::complex<double>;

namespace {

constexpr cd I{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

struct Draw {
    SystemParams p;
    DriveConfig d;
};

Draw random_case(std::mt19937& rng, CouplingKind kind) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Draw c;
    c.p.gamma_m = unit(rng);
    c.p.k_d = unit(rng);
    c.p.sigma_z = 2.0 * unit(rng) - 1.0;
    c.d.eps_L = 0.2 + 1.8 * unit(rng);
    c.d.eps_R = 2.0 * unit(rng);
    c.d.theta = 12.0 * unit(rng) - 6.0;
    c.d.n = 2.0 * unit(rng);
    c.d.G = 4.0 * unit(rng);
    switch (kind) {
        case CouplingKind::none: c.p.coupling = QubitCoupling::none(); break;
        case CouplingKind::linear:
            c.p.coupling = QubitCoupling::linear(2.0 * unit(rng));
            break;
        case CouplingKind::nonlinear:
            c.p.coupling = QubitCoupling::nonlinear(unit(rng));
            c.d.G_N = unit(rng);
            break;
    }
    return c;
}

}  // namespace

TEST_CASE("zero optomechanical coupling decouples everything") {
    SystemParams p;
    p.coupling = QubitCoupling::linear(1.0);
    p.gamma_m = 0.1;
    p.k_d = 0.2;
    DriveConfig d;
    d.eps_L = 1.3;
    d.eps_R = 0.0;
    d.G = 0.0;
    for (double x : {-2.5, -0.4, 0.7, 3.1}) {
        const auto s = response_at(p, d, x);
        CHECK(std::abs(s.db_plus) == 0.0);
        CHECK(std::abs(s.dc1_plus - d.eps_L / (-I * x + 1.0)) < 1e-15);
        CHECK(std::abs(s.dc2_plus) == 0.0);
    }
}

TEST_CASE("lossless qubit at line center reflects the probe completely") {
    // x = 0, k_d = gamma_m = 0, sigma_z = -1, g = kappa, G = 3 kappa, eps_R = 0
    SystemParams p;
    p.gamma_m = 0.0;
    p.k_d = 0.0;
    p.sigma_z = -1.0;
    p.coupling = QubitCoupling::linear(1.0);
    DriveConfig d;
    d.eps_L = 1.0;
    d.eps_R = 0.0;
    d.G = 3.0;
    const auto s = response_at(p, d, 0.0);
    CHECK(std::abs(s.db_plus) == 0.0);
    CHECK(std::abs(s.dc1_plus - 1.0) < 1e-15);
    CHECK(std::abs(s.dc2_plus) == 0.0);
    CHECK(*s.norm_L == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(*s.norm_R_by_L == 0.0);
}

TEST_CASE("linear and nonlinear variants coincide under 4 G_N^2 = g^2") {
    std::mt19937 rng(20260809);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        Draw lin = random_case(rng, CouplingKind::linear);
        Draw non = lin;
        const double g = lin.p.coupling.value;
        non.p.coupling = QubitCoupling::nonlinear(g);  // bare value is not used
        non.d.G_N = g / 2.0;
        const double x = 12.0 * unit(rng) - 6.0;
        const auto a = response_at(lin.p, lin.d, x);
        const auto b = response_at(non.p, non.d, x);
        CHECK(std::abs(a.db_plus - b.db_plus) <= 1e-12 * (1.0 + std::abs(a.db_plus)));
        CHECK(std::abs(a.dc1_plus - b.dc1_plus) <= 1e-12 * (1.0 + std::abs(a.dc1_plus)));
        CHECK(std::abs(a.dc2_plus - b.dc2_plus) <= 1e-12 * (1.0 + std::abs(a.dc2_plus)));
    }
}

TEST_CASE("input-output identities hold exactly for every sample") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const auto kind = static_cast<CouplingKind>(rng() % 3);
        const Draw c = random_case(rng, kind);
        const double x = 12.0 * unit(rng) - 6.0;
        ResponseSample s;
        try {
            s = response_at(c.p, c.d, x);
        } catch (const SingularDenominator&) {
            continue;
        }
        const cd eout_L = 2.0 * c.p.kappa * s.dc1_plus - c.d.eps_L;
        const cd eout_R = 2.0 * c.p.kappa * s.dc2_plus - c.d.eps_R * std::polar(1.0, c.d.theta);
        CHECK(std::abs(s.eout_L_plus - eout_L) <= 1e-15 * (1.0 + std::abs(eout_L)));
        CHECK(std::abs(s.eout_R_plus - eout_R) <= 1e-15 * (1.0 + std::abs(eout_R)));
        // eps_T = eout_L+/eps_L + 1
        const cd eps_T = s.eout_L_plus / c.d.eps_L + 1.0;
        CHECK(std::abs(s.eps_T - eps_T) <= 1e-14 * (1.0 + std::abs(eps_T)));
        CHECK(std::abs(transmission_eT(c.p, c.d, x) - s.eps_T) <=
              1e-14 * (1.0 + std::abs(s.eps_T)));
    }
}

TEST_CASE("conjugation symmetry: one-sided real drive gives even norms") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const auto kind = static_cast<CouplingKind>(rng() % 3);
        Draw c = random_case(rng, kind);
        c.d.eps_R = 0.0;
        c.d.theta = 0.0;
        const double x = 6.0 * unit(rng) + 1e-3;
        ResponseSample plus, minus;
        try {
            plus = response_at(c.p, c.d, x);
            minus = response_at(c.p, c.d, -x);
        } catch (const SingularDenominator&) {
            continue;
        }
        CHECK(*plus.norm_L == doctest::Approx(*minus.norm_L).epsilon(1e-12));
        CHECK(*plus.norm_R_by_L == doctest::Approx(*minus.norm_R_by_L).epsilon(1e-12));
        // every complex field keeps its magnitude under x -> -x
        CHECK(std::abs(minus.db_plus) ==
              doctest::Approx(std::abs(plus.db_plus)).epsilon(1e-12));
        CHECK(std::abs(minus.dc1_plus) ==
              doctest::Approx(std::abs(plus.dc1_plus)).epsilon(1e-12));
        CHECK(std::abs(minus.dc2_plus) ==
              doctest::Approx(std::abs(plus.dc2_plus)).epsilon(1e-12));
    }
}

TEST_CASE("probe rescaling is homogeneous of degree one") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const auto kind = static_cast<CouplingKind>(rng() % 3);
        Draw c = random_case(rng, kind);
        c.d.eps_R = 0.5 + unit(rng);  // keep every norm defined
        const double x = 12.0 * unit(rng) - 6.0;
        const double scale = 0.25 + 4.0 * unit(rng);
        Draw scaled = c;
        scaled.d.eps_L *= scale;
        scaled.d.eps_R *= scale;
        ResponseSample a, b;
        try {
            a = response_at(c.p, c.d, x);
            b = response_at(scaled.p, scaled.d, x);
        } catch (const SingularDenominator&) {
            continue;
        }
        CHECK(std::abs(b.dc1_plus - scale * a.dc1_plus) <=
              1e-12 * (1.0 + std::abs(a.dc1_plus) * scale));
        CHECK(std::abs(b.eout_R_plus - scale * a.eout_R_plus) <=
              1e-12 * (1.0 + std::abs(a.eout_R_plus) * scale));
        CHECK(*b.norm_L == doctest::Approx(*a.norm_L).epsilon(1e-12));
        CHECK(*b.norm_R_by_R == doctest::Approx(*a.norm_R_by_R).epsilon(1e-12));
    }
}

TEST_CASE("reduction chain: nonlinear(0) = linear(0) = no qubit = reduced form") {
    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        Draw base = random_case(rng, CouplingKind::none);
        base.p.gamma_m = 0.0;
        base.p.k_d = 0.0;
        Draw lin = base, non = base;
        lin.p.coupling = QubitCoupling::linear(0.0);
        non.p.coupling = QubitCoupling::nonlinear(0.4);
        non.d.G_N = 0.0;
        const double x = 12.0 * unit(rng) - 6.0;
        cd t_none, t_lin, t_non, t_red;
        try {
            t_none = transmission_eT(base.p, base.d, x);
            t_lin = transmission_eT(lin.p, lin.d, x);
            t_non = transmission_eT(non.p, non.d, x);
            t_red = transmission_eT_reduced(base.d, x);
        } catch (const SingularDenominator&) {
            continue;
        }
        CHECK(std::abs(t_lin - t_none) <= 1e-9 * (1.0 + std::abs(t_none)));
        CHECK(std::abs(t_non - t_none) <= 1e-9 * (1.0 + std::abs(t_none)));
        CHECK(std::abs(t_red - t_none) <= 1e-9 * (1.0 + std::abs(t_none)));
    }
}

TEST_CASE("destructive probe phase makes the reduced transmission vanish at center") {
    // g = 0, gamma_m = k_d = 0, theta = 3 pi, n = 1, eps_R = eps_L, G = kappa
    DriveConfig d;
    d.eps_L = d.eps_R = 1.0;
    d.theta = 3.0 * kPi;
    d.n = 1.0;
    d.G = 1.0;
    const cd at_center = transmission_eT_reduced(d, 0.0);
    CHECK(std::abs(at_center) < 1e-15);

    // the full rational form approaches the same value off the degeneracy
    SystemParams p;
    p.coupling = QubitCoupling::none();
    p.gamma_m = 0.0;
    p.k_d = 0.0;
    CHECK(std::abs(transmission_eT(p, d, 1e-7)) < 1e-6);
}

TEST_CASE("lossless linear qubit doubles the transmission at line center") {
    // g = kappa, sigma_z = -1, k_d = gamma_m = 0, theta = 3 pi, n = 1, G = kappa
    SystemParams p;
    p.coupling = QubitCoupling::linear(1.0);
    p.sigma_z = -1.0;
    p.gamma_m = 0.0;
    p.k_d = 0.0;
    DriveConfig d;
    d.eps_L = d.eps_R = 1.0;
    d.theta = 3.0 * kPi;
    d.n = 1.0;
    d.G = 1.0;
    const cd eT = transmission_eT(p, d, 0.0);
    CHECK(std::abs(eT - 2.0) <= 1e-12);
}

TEST_CASE("empty drive produces identically zero outputs") {
    SystemParams p;
    p.coupling = QubitCoupling::linear(1.0);
    p.gamma_m = 0.1;
    p.k_d = 0.1;
    DriveConfig d;
    d.eps_L = 0.0;
    d.eps_R = 0.0;
    d.G = 2.0;
    const auto grid = linspace(-6.0, 6.0, 101);
    for (const auto& s : sweep(p, d, grid)) {
        REQUIRE_FALSE(s.singular);
        CHECK(std::abs(s.db_plus) == 0.0);
        CHECK(std::abs(s.dc1_plus) == 0.0);
        CHECK(std::abs(s.dc2_plus) == 0.0);
        CHECK_FALSE(s.norm_L.has_value());
        CHECK_FALSE(s.norm_R_by_R.has_value());
        CHECK_FALSE(s.has_eps_T);
    }
}

TEST_CASE("sweep flags removable singular grid points instead of aborting") {
    // no qubit, lossless: the response degenerates exactly at x = 0
    SystemParams p;
    p.coupling = QubitCoupling::none();
    p.gamma_m = 0.0;
    p.k_d = 0.0;
    DriveConfig d;
    d.eps_L = 1.0;
    d.eps_R = 0.0;
    d.G = 3.0;
    std::vector<double> grid = {-1.0, -0.5, 0.0, 0.5, 1.0};
    const auto samples = sweep(p, d, grid);
    CHECK(samples[2].singular);
    CHECK(samples[2].x == 0.0);
    CHECK_FALSE(samples[1].singular);
    CHECK_THROWS_AS(response_at(p, d, 0.0), SingularDenominator);
}

TEST_CASE("parallel and serial sweeps agree sample for sample") {
    SystemParams p;
    p.coupling = QubitCoupling::linear(1.0);
    p.gamma_m = 0.01;
    p.k_d = 0.02;
    DriveConfig d;
    d.eps_L = 1.0;
    d.eps_R = 0.7;
    d.theta = 0.3;
    d.G = 2.0;
    const auto grid = linspace(-6.0, 6.0, 501);
    const auto a = sweep(p, d, grid, true);
    const auto b = sweep(p, d, grid, false);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].dc1_plus == b[i].dc1_plus);
        CHECK(a[i].dc2_plus == b[i].dc2_plus);
    }
}

TEST_CASE("sweep validates its grid") {
    SystemParams p;
    DriveConfig d;
    d.G = 1.0;
    CHECK_THROWS_AS(sweep(p, d, std::vector<double>{}, false), std::invalid_argument);
    CHECK_THROWS_AS(sweep(p, d, std::vector<double>{0.0, 0.0}, false), std::invalid_argument);
    CHECK_THROWS_AS(sweep(p, d, std::vector<double>{1.0, -1.0}, false),
                    std::invalid_argument);
}

TEST_CASE("eps_T requires a left probe") {
    SystemParams p;
    DriveConfig d;
    d.eps_L = 0.0;
    d.eps_R = 1.0;
    d.G = 1.0;
    CHECK_THROWS_AS(transmission_eT(p, d, 0.5), UndefinedNormalization);
    const auto s = response_at(p, d, 0.5);
    CHECK_FALSE(s.has_eps_T);
    CHECK_FALSE(s.norm_L.has_value());
    CHECK(s.norm_R_by_R.has_value());
}
