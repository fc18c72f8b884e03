#include "doctest.h"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "hybridom/io.hpp"

using namespace hybridom;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    REQUIRE(is);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

fs::path temp_dir(const char* name) {
    const fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("csv header matches the published schema") {
    CHECK(std::string(kSweepCsvHeader) ==
          "x_over_k,re_db,im_db,re_dc1,im_dc1,re_dc2,im_dc2,re_eoutL,im_eoutL,"
          "re_eoutR,im_eoutR,re_eT,im_eT,norm_L,norm_RbyL,norm_RbyR,singular");
}

TEST_CASE("17-significant-digit formatting round trips doubles") {
    std::mt19937_64 rng(20260809);
    std::uniform_real_distribution<double> mant(-1.0, 1.0);
    std::uniform_int_distribution<int> expo(-30, 30);
    for (int i = 0; i < 200; ++i) {
        const double v = mant(rng) * std::pow(10.0, expo(rng));
        const std::string s = format_sig17(v);
        double back = 0.0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), back);
        REQUIRE(res.ec == std::errc{});
        CHECK(back == v);
        CHECK(s.find(',') == std::string::npos);
    }
}

TEST_CASE("sweep csv writes one row per grid point and flags singular rows") {
    SystemParams p;
    p.coupling = QubitCoupling::none();
    p.gamma_m = 0.0;
    p.k_d = 0.0;
    DriveConfig d;
    d.eps_L = 1.0;
    d.eps_R = 0.0;
    d.G = 3.0;
    const std::vector<double> grid = {-0.5, 0.0, 0.5};
    const auto samples = sweep(p, d, grid);
    std::ostringstream os;
    write_sweep_csv(os, samples);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == kSweepCsvHeader);
    std::getline(is, line);
    CHECK(line.substr(line.size() - 2) == ",0");
    // norm_RbyR column is empty when eps_R = 0
    CHECK(line.find(",,0") != std::string::npos);
    std::getline(is, line);  // x = 0 row is singular
    CHECK(line.substr(line.size() - 2) == ",1");
    std::getline(is, line);
    CHECK(line.substr(line.size() - 2) == ",0");
}

TEST_CASE("config files load, including the steady-state derivation path") {
    const fs::path dir = temp_dir("hybridom_cfg");
    const fs::path cfg = dir / "scan.json";
    {
        std::ofstream os(cfg);
        os << R"({
  "system": {"gamma_m": 1e-3, "k_d": 0.1, "g0": 0.1, "delta_c": 10,
             "coupling": {"type": "linear", "g": 1.0},
             "eps_cL": 2.0, "eps_cR": 1.0},
  "drive": {"eps_L": 1.0, "eps_R": 0.0, "from_steady": true},
  "sweep": {"xmin": -2, "xmax": 2, "points": 11}
})";
    }
    const ScanCase scan = load_config(cfg);
    CHECK(scan.points == 11);
    CHECK(scan.xmin == -2.0);
    const auto steady = solve_steady(scan.system);
    CHECK(scan.drive.G == doctest::Approx(0.1 * std::abs(steady.c1_s)).epsilon(1e-12));
    CHECK(scan.drive.n ==
          doctest::Approx(std::abs(steady.c2_s / steady.c1_s)).epsilon(1e-12));
}

TEST_CASE("run_job emits csv, features json, and plot data deterministically") {
    SweepJob job;
    job.preset = "fig2";
    job.points = 2001;

    const fs::path dir1 = temp_dir("hybridom_run1");
    const fs::path dir2 = temp_dir("hybridom_run2");
    job.out_dir = dir1;
    const auto files1 = run_job(job);
    job.out_dir = dir2;
    const auto files2 = run_job(job);
    REQUIRE(files1.size() == files2.size());
    // csv per curve + 2 panels per curve + report
    CHECK(files1.size() == 2 + 4 + 1);
    for (std::size_t i = 0; i < files1.size(); ++i) {
        CHECK(slurp(files1[i]) == slurp(files2[i]));
    }

    const auto report = nlohmann::json::parse(slurp(dir1 / "fig2_features.json"));
    CHECK(report["schema_version"] == kReportSchemaVersion);
    REQUIRE(report["curves"].size() == 2);
    CHECK(report["curves"][0]["features"]["cpt_points"].size() == 3);
    CHECK(report["curves"][1]["features"]["cpt_points"].size() == 2);

    // plot data: two columns, x then quantity
    std::istringstream dat(slurp(dir1 / "fig2a_G3_g0.dat"));
    std::string header;
    std::getline(dat, header);
    CHECK(header == "# x_over_k norm_L");
    double x = 0, v = 0;
    dat >> x >> v;
    CHECK(x == -6.0);
}

TEST_CASE("run_job on the synthesis preset overlays four curves") {
    SweepJob job;
    job.preset = "fig9";
    job.points = 801;
    job.out_dir = temp_dir("hybridom_run9");
    const auto files = run_job(job);
    // 4 csv + 4 curves x 2 panels + report
    CHECK(files.size() == 4 + 8 + 1);
}

TEST_CASE("the preset registry covers every bundled scan") {
    for (int i = 2; i <= 13; ++i) {
        const std::string name = "fig" + std::to_string(i);
        CAPTURE(name);
        const auto sel = find_preset(name);
        REQUIRE(sel.has_value());
        CHECK_FALSE(sel->preset->curves.empty());
        CHECK_FALSE(sel->preset->stated.empty());
        CHECK_FALSE(sel->preset->assumed.empty());
        const auto panel_a = find_preset(name + "a");
        REQUIRE(panel_a.has_value());
        CHECK(panel_a->panel != nullptr);
    }
    CHECK_FALSE(find_preset("fig1").has_value());
    CHECK_FALSE(find_preset("fig14").has_value());
}

TEST_CASE("steady and validation reports serialize with their fields") {
    SystemParams p;
    p.eps_cL = 1.0;
    p.eps_cR = 1.0;
    const auto steady = solve_steady(p);
    const auto j = steady_to_json(steady);
    CHECK(j.contains("b_s"));
    CHECK(j.contains("delta_1"));
    CHECK(j.contains("residual"));
    CHECK(j.contains("iterations"));

    p.sigma_z = 2.0;
    const auto v = validation_to_json(validate(p, DriveConfig{}));
    CHECK(v["pass"] == false);
    CHECK(v["errors"].size() > 0);
}

TEST_CASE("unknown plot quantities are rejected") {
    ResponseSample s;
    CHECK_THROWS_AS(sample_quantity(s, "bogus"), std::invalid_argument);
}
