#include <doctest.h>

#include <atomic>
#include <cstring>
#include <numbers>
#include <vector>

#include "spdc/observables.hpp"
#include "spdc/parallel.hpp"

using namespace spdc;

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

struct ThreadGuard {
    ~ThreadGuard() { set_max_threads(0); }
};

} // namespace

TEST_CASE("parallel_for visits every index exactly once") {
    ThreadGuard guard;
    std::vector<std::atomic<int>> hits(1000);
    set_max_threads(0);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i].fetch_add(1); });
    for (auto& h : hits) CHECK(h.load() == 1);
}

TEST_CASE("OpenMP and serial reference paths agree bitwise") {
    ThreadGuard guard;
    const double th = solve_collinear_angle(bbo(), 0.351, PmFamily::type2) + 0.5 * kDeg;
    CutConfiguration cut;
    cut.crystal = bbo();
    cut.lambda_p_um = 0.351;
    cut.theta = th;
    cut.Lz_um = 1000.0;
    cut.family = PmFamily::type2;
    const auto d = derived_index_set(cut);
    DetectionSetup setup;
    setup.filter = {FilterShape::rectangular, 0.0, 0.025};

    const Grid1D g(-0.15, 0.15, 41);
    SinglesOptions opt;
    opt.xi2_points = 21;
    opt.nu_points = 5;
    opt.truncation_check = false;

    set_max_threads(1); // serial reference
    const auto serial = singles_map(cut, d, setup, g, g, opt);
    set_max_threads(3);
    const auto par3 = singles_map(cut, d, setup, g, g, opt);
    set_max_threads(0); // all cores
    const auto par = singles_map(cut, d, setup, g, g, opt);

    REQUIRE(serial.map.v.size() == par.map.v.size());
    CHECK(std::memcmp(serial.map.v.data(), par.map.v.data(),
                      serial.map.v.size() * sizeof(double)) == 0);
    CHECK(std::memcmp(serial.map.v.data(), par3.map.v.data(),
                      serial.map.v.size() * sizeof(double)) == 0);

    // same for the HOM curve
    const Angle2 coll = default_collection_angle(cut, d);
    const Grid1D delays(-40.0, 40.0, 101);
    const Grid1D nug(-0.1, 0.1, 801);
    set_max_threads(1);
    const auto h1 = hom_dip(cut, d, setup, coll, coll * -1.0, delays, nug);
    set_max_threads(0);
    const auto h2 = hom_dip(cut, d, setup, coll, coll * -1.0, delays, nug);
    CHECK(std::memcmp(h1.p_c.data(), h2.p_c.data(), h1.p_c.size() * sizeof(double)) == 0);
}
