#include "hybridom/presets.hpp"

#include <numbers>

namespace hybridom {

namespace {

constexpr double kPi = std::numbers::pi;

SystemParams make_system(QubitCoupling coupling, double sigma_z, double gamma_m,
                         double k_d) {
    SystemParams p;
    p.coupling = coupling;
    p.sigma_z = sigma_z;
    p.gamma_m = gamma_m;
    p.k_d = k_d;
    return p;
}

DriveConfig left_probe(double G, double G_N = 0.0) {
    DriveConfig d;
    d.eps_L = 1.0;
    d.eps_R = 0.0;
    d.theta = 0.0;
    d.n = 1.0;
    d.G = G;
    d.G_N = G_N;
    return d;
}

DriveConfig two_probe(double G, double G_N, double theta) {
    DriveConfig d;
    d.eps_L = 1.0;
    d.eps_R = 1.0;
    d.theta = theta;
    d.n = 1.0;
    d.G = G;
    d.G_N = G_N;
    return d;
}

Curve linear_curve(std::string label, double G, double g, double sigma_z, double k_d,
                   DriveConfig drive) {
    drive.G = G;
    drive.G_N = 0.0;
    return {std::move(label), make_system(QubitCoupling::linear(g), sigma_z, 0.0, k_d),
            drive};
}

Curve nonlinear_curve(std::string label, double G, double G_N, double sigma_z, double k_d,
                      DriveConfig drive) {
    drive.G = G;
    drive.G_N = G_N;
    return {std::move(label),
            make_system(QubitCoupling::nonlinear(G_N), sigma_z, 0.0, k_d), drive};
}

std::vector<Preset> build_registry() {
    std::vector<Preset> presets;

    const std::vector<std::string> cpt_stated = {
        "G per curve", "qubit coupling per curve", "eps_R = 0",
        "sigma_z = -1 (qubit in the ground state)"};
    const std::vector<std::string> cpt_assumed = {
        "eps_L = 1 (outputs are normalized, scale-free)",
        "gamma_m = k_d = 0 (lossless limit of the scan)", "n = 1",
        "x-range and zoom window"};

    {
        Preset p;
        p.name = "fig2";
        p.title = "Left output |eout_L+/eps_L|^2 vs x/k; CPT scan, linear coupling";
        p.curves = {linear_curve("G3_g0", 3.0, 0.0, -1.0, 0.0, left_probe(0)),
                    linear_curve("G3_g1", 3.0, 1.0, -1.0, 0.0, left_probe(0))};
        p.panels = {{"a", "norm_L", -6.0, 6.0, {0, 1}},
                    {"b", "norm_L", -0.6, 0.6, {0, 1}}};
        p.stated = cpt_stated;
        p.assumed = cpt_assumed;
        presets.push_back(p);

        Preset q = p;
        q.name = "fig3";
        q.title = "Right output |eout_R+/eps_L|^2 vs x/k; CPT scan, linear coupling";
        q.panels = {{"a", "norm_RbyL", -6.0, 6.0, {0, 1}},
                    {"b", "norm_RbyL", -0.6, 0.6, {0, 1}}};
        presets.push_back(q);
    }
    {
        Preset p;
        p.name = "fig4";
        p.title = "Right output |eout_R+/eps_L|^2 vs x/k; weak vs strong linear coupling";
        p.curves = {linear_curve("G3_g01", 3.0, 0.1, -1.0, 0.0, left_probe(0)),
                    linear_curve("G3_g1", 3.0, 1.0, -1.0, 0.0, left_probe(0))};
        p.panels = {{"a", "norm_RbyL", -6.0, 6.0, {0, 1}},
                    {"b", "norm_RbyL", -0.6, 0.6, {0, 1}}};
        p.stated = cpt_stated;
        p.assumed = cpt_assumed;
        presets.push_back(p);
    }
    {
        Preset p;
        p.name = "fig5";
        p.title = "Left output |eout_L+/eps_L|^2 vs x/k; CPT scan, nonlinear coupling";
        p.curves = {nonlinear_curve("G3_GN01", 3.0, 0.1, -1.0, 0.0, left_probe(0)),
                    nonlinear_curve("G3_GN04", 3.0, 0.4, -1.0, 0.0, left_probe(0))};
        p.panels = {{"a", "norm_L", -6.0, 6.0, {0, 1}},
                    {"b", "norm_L", -0.6, 0.6, {0, 1}}};
        p.stated = cpt_stated;
        p.assumed = cpt_assumed;
        p.assumed.push_back("bare g_N set equal to G_N (unused by the scan)");
        presets.push_back(p);

        Preset q = p;
        q.name = "fig6";
        q.title = "Right output |eout_R+/eps_L|^2 vs x/k; CPT scan, nonlinear coupling";
        q.panels = {{"a", "norm_RbyL", -6.0, 6.0, {0, 1}},
                    {"b", "norm_RbyL", -0.6, 0.6, {0, 1}}};
        presets.push_back(q);
    }

    const std::vector<std::string> cps_stated = {
        "G per curve", "qubit coupling per curve", "eps_L = eps_R != 0",
        "gamma_m -> 0 and k_d -> 0", "sigma_z = -1 (qubit in the ground state)"};
    const std::vector<std::string> cps_assumed = {
        "theta = pi/2 (unstated; synthesis requires |1 + e^{i theta}|^2 = 2)",
        "eps_L = eps_R = 1", "n = 1", "x-range"};

    {
        Preset p;
        p.name = "fig7";
        p.title = "CPS scan, linear coupling: |eout_L+/eps_L|^2 and |eout_R+/eps_R|^2";
        p.curves = {linear_curve("G3_g1", 3.0, 1.0, -1.0, 0.0, two_probe(0, 0, kPi / 2)),
                    linear_curve("G4_g1", 4.0, 1.0, -1.0, 0.0, two_probe(0, 0, kPi / 2))};
        p.xmin = -8.0;
        p.xmax = 8.0;
        p.panels = {{"a", "norm_L", -8.0, 8.0, {0, 1}},
                    {"b", "norm_RbyR", -8.0, 8.0, {0, 1}}};
        p.stated = cps_stated;
        p.assumed = cps_assumed;
        presets.push_back(p);
    }
    {
        Preset p;
        p.name = "fig8";
        p.title = "CPS scan, nonlinear coupling: |eout_L+/eps_L|^2 and |eout_R+/eps_R|^2";
        p.curves = {
            nonlinear_curve("G3_GN01", 3.0, 0.1, -1.0, 0.0, two_probe(0, 0, kPi / 2)),
            nonlinear_curve("G4_GN01", 4.0, 0.1, -1.0, 0.0, two_probe(0, 0, kPi / 2))};
        p.xmin = -8.0;
        p.xmax = 8.0;
        p.panels = {{"a", "norm_L", -8.0, 8.0, {0, 1}},
                    {"b", "norm_RbyR", -8.0, 8.0, {0, 1}}};
        p.stated = cps_stated;
        p.assumed = cps_assumed;
        p.assumed.push_back("bare g_N set equal to G_N (unused by the scan)");
        presets.push_back(p);
    }
    {
        Preset p;
        p.name = "fig9";
        p.title = "CPS scan near line center, linear and nonlinear overlaid";
        p.curves = {
            linear_curve("G3_g1", 3.0, 1.0, -1.0, 0.0, two_probe(0, 0, kPi / 2)),
            linear_curve("G4_g1", 4.0, 1.0, -1.0, 0.0, two_probe(0, 0, kPi / 2)),
            nonlinear_curve("G3_GN01", 3.0, 0.1, -1.0, 0.0, two_probe(0, 0, kPi / 2)),
            nonlinear_curve("G4_GN01", 4.0, 0.1, -1.0, 0.0, two_probe(0, 0, kPi / 2))};
        p.xmin = -0.2;
        p.xmax = 0.2;
        p.panels = {{"a", "norm_L", -0.2, 0.2, {0, 1, 2, 3}},
                    {"b", "norm_RbyR", -0.2, 0.2, {0, 1, 2, 3}}};
        p.stated = cps_stated;
        p.assumed = cps_assumed;
        presets.push_back(p);
    }

    const std::vector<std::string> omia_stated = {
        "G = k", "qubit coupling per curve", "n = 1", "theta = 3*pi",
        "sigma_z and k_d as named per preset"};
    const std::vector<std::string> omia_assumed = {
        "eps_R = eps_L = 1 (ratio unstated; theta = 3*pi is given)",
        "gamma_m = 0", "x-range"};

    {
        Preset p;
        p.name = "fig10";
        p.title = "Transmission eps_T vs x/k; absorption structure, sigma_z = -1";
        p.curves = {
            linear_curve("lin_g1", 1.0, 1.0, -1.0, 0.0, two_probe(0, 0, 3 * kPi)),
            nonlinear_curve("non_GN01", 1.0, 0.1, -1.0, 0.0, two_probe(0, 0, 3 * kPi))};
        p.xmin = -4.0;
        p.xmax = 4.0;
        p.panels = {{"a", "re_eT", -4.0, 4.0, {0, 1}}, {"b", "im_eT", -4.0, 4.0, {0, 1}}};
        p.stated = omia_stated;
        p.assumed = omia_assumed;
        presets.push_back(p);
    }
    {
        Preset p;
        p.name = "fig11";
        p.title = "Re[eps_T] vs x/k; slightly inverted qubit (sigma_z = 0.1), k_d = 0";
        p.curves = {
            linear_curve("lin_g1", 1.0, 1.0, 0.1, 0.0, two_probe(0, 0, 3 * kPi)),
            nonlinear_curve("non_GN01", 1.0, 0.1, 0.1, 0.0, two_probe(0, 0, 3 * kPi))};
        p.xmin = -4.0;
        p.xmax = 4.0;
        p.panels = {{"a", "re_eT", -4.0, 4.0, {0}}, {"b", "re_eT", -4.0, 4.0, {1}}};
        p.stated = omia_stated;
        p.assumed = omia_assumed;
        presets.push_back(p);
    }
    {
        Preset p;
        p.name = "fig12";
        p.title = "Re[eps_T] vs x/k; sigma_z = 0.1 with finite qubit decay";
        p.curves = {
            linear_curve("lin_g1_kd01", 1.0, 1.0, 0.1, 0.1, two_probe(0, 0, 3 * kPi)),
            nonlinear_curve("non_GN01_kd001", 1.0, 0.1, 0.1, 0.01,
                            two_probe(0, 0, 3 * kPi))};
        p.xmin = -4.0;
        p.xmax = 4.0;
        p.panels = {{"a", "re_eT", -4.0, 4.0, {0}}, {"b", "re_eT", -4.0, 4.0, {1}}};
        p.stated = omia_stated;
        p.assumed = omia_assumed;
        presets.push_back(p);
    }
    {
        Preset p;
        p.name = "fig13";
        p.title = "Re[eps_T] vs x/k; sigma_z = -1 with finite qubit decay";
        p.curves = {
            linear_curve("lin_g1_kd01", 1.0, 1.0, -1.0, 0.1, two_probe(0, 0, 3 * kPi)),
            nonlinear_curve("non_GN01_kd001", 1.0, 0.1, -1.0, 0.01,
                            two_probe(0, 0, 3 * kPi))};
        p.xmin = -4.0;
        p.xmax = 4.0;
        p.panels = {{"a", "re_eT", -4.0, 4.0, {0}}, {"b", "re_eT", -4.0, 4.0, {1}}};
        p.stated = omia_stated;
        p.assumed = omia_assumed;
        presets.push_back(p);
    }

    return presets;
}

}  // namespace

const std::vector<Preset>& preset_registry() {
    static const std::vector<Preset> registry = build_registry();
    return registry;
}

std::optional<PresetSelection> find_preset(std::string_view name) {
    for (const Preset& p : preset_registry()) {
        if (name == p.name) return PresetSelection{&p, nullptr};
        for (const Panel& panel : p.panels) {
            if (name == p.name + panel.suffix) return PresetSelection{&p, &panel};
        }
    }
    return std::nullopt;
}

}  // namespace hybridom
