#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "spdc/scenario.hpp"

using namespace spdc;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("scenario text parses and unknown keys are rejected") {
    const std::string text = "name = demo\n"
                             "crystal = bbo\n"
                             "family = type-II\n"
                             "pump_nm = 405\n"
                             "theta = beamlike\n"
                             "Lz_mm = 2.5\n"
                             "filter = gaussian-nm 10\n"
                             "observable = hom\n";
    const Scenario s = parse_scenario_text(text);
    CHECK(s.name == "demo");
    CHECK(s.family == PmFamily::type2);
    CHECK(s.theta_mode == ThetaMode::beamlike);
    CHECK(s.Lz_mm == 2.5);
    CHECK(s.filter_kind == "gaussian-nm");
    CHECK(s.filter_param == 10.0);
    CHECK(s.observable == ObservableKind::hom);

    CHECK_THROWS_AS(parse_scenario_text("name = x\nbogus_key = 1\n"), Error);
    CHECK_THROWS_AS(parse_scenario_text("crystal = bbo\n"), Error); // no name
    CHECK_THROWS_AS(parse_scenario_text("name = x\nfamily = type-III\n"), Error);
}

TEST_CASE("overrides win over the file values") {
    Scenario s = parse_scenario_text("name = demo\npump_nm = 351\nobservable = hom\n");
    apply_override(s, "pump_nm", "405");
    apply_override(s, "theta", "collinear");
    CHECK(s.pump_nm == 405.0);
    CHECK(s.theta_mode == ThetaMode::collinear);
}

TEST_CASE("at least ten bundled scenarios, all parseable and resolvable") {
    const auto names = list_scenarios();
    CHECK(names.size() >= 10);
    for (const auto& n : names) {
        const Scenario s = find_bundled_scenario(n);
        CHECK(s.name == n);
        if (s.observable != ObservableKind::aniso_sweep) {
            const auto r = resolve_scenario(s);
            CHECK(r.cut.theta > 0.0);
        }
    }
    CHECK_THROWS_AS(find_bundled_scenario("fig-nope"), Error);
}

TEST_CASE("scenario files on disk are byte-identical to the embedded catalog") {
    const std::string dir = std::string(SPDC_SOURCE_DIR) + "/scenarios/";
    for (const auto& b : bundled_scenarios()) {
        const std::string path = dir + b.name + ".scn";
        CHECK_MESSAGE(slurp(path) == b.text, "out of sync: ", path);
    }
}

TEST_CASE("beamlike theta is rejected for a type I scenario") {
    Scenario s = parse_scenario_text("name = x\nfamily = type-I\ntheta = beamlike\n"
                                     "observable = hom\n");
    CHECK_THROWS_AS(resolve_scenario(s), Error);
}

TEST_CASE("a cheap scenario runs, rewrites identically, and records the solved angle") {
    namespace fs = std::filesystem;
    const std::string dir = "scenario_test_out";
    fs::create_directories(dir);

    Scenario s = find_bundled_scenario("fig-alpha");
    RunOptions opt;
    opt.out_dir = dir;
    const auto r1 = run_scenario(s, opt);
    const std::string first = slurp(r1.csv_path);
    const auto r2 = run_scenario(s, opt);
    CHECK(slurp(r2.csv_path) == first);
    CHECK(r1.headline == r2.headline);
    CHECK(first.find("# columns:") != std::string::npos);
    CHECK(first.rfind("# spdc-sim", 0) == 0);
    // sidecar plot script exists and is not executed by the runner
    CHECK(fs::exists(r1.csv_path + ".gp"));

    // transfer scenario headers carry the solved collinear angle
    Scenario clip = find_bundled_scenario("fig-clip1");
    clip.angle_points = 51; // keep the test quick
    const auto rc = run_scenario(clip, opt);
    CHECK(rc.theta_deg == doctest::Approx(28.8159).epsilon(1e-3));
    const std::string header = slurp(rc.csv_path);
    CHECK(header.find("# theta_mode: solved-collinear") != std::string::npos);
    CHECK(header.find("# theta_deg: 28.81") != std::string::npos);

    fs::remove_all(dir);
}

TEST_CASE("grid scaling is odd-preserving and nested at 2x") {
    Scenario s = find_bundled_scenario("fig-alpha");
    s.theta_points = 91;
    RunOptions opt;
    opt.out_dir = "scenario_test_out2";
    std::filesystem::create_directories(opt.out_dir);
    const auto base = run_scenario(s, opt);
    opt.grid_scale = 2.0;
    const auto fine = run_scenario(s, opt);
    // the sweep peak is a smooth function sampled on nested grids
    CHECK(std::fabs(base.headline - fine.headline) / fine.headline < 0.01);
    std::filesystem::remove_all(opt.out_dir);
}
