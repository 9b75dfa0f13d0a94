// Timing comparison of the serial reference loop against the OpenMP path for
// the grid-heavy observables. Build target only; not part of the test suite.
#include <chrono>
#include <cstdio>
#include <numbers>

#include "spdc/observables.hpp"
#include "spdc/parallel.hpp"
#include "spdc/scenario.hpp"

using namespace spdc;

namespace {

template <class F>
double time_ms(F&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main() {
    std::printf("openmp: %s\n", openmp_enabled() ? "yes" : "no");

    CutConfiguration cut;
    cut.crystal = bbo();
    cut.lambda_p_um = 0.407;
    cut.theta = 42.5 * std::numbers::pi / 180.0;
    cut.Lz_um = 1000.0;
    cut.family = PmFamily::type2;
    const DerivedIndexSet d = derived_index_set(cut);
    DetectionSetup setup;
    setup.filter = {FilterShape::rectangular, 0.0, 0.025};

    const Grid1D g(-0.15, 0.15, 81);
    SinglesOptions so;
    so.xi2_points = 31;
    so.nu_points = 7;
    so.truncation_check = false;

    CutConfiguration hom_cut;
    hom_cut.crystal = bbo();
    hom_cut.lambda_p_um = 0.351;
    hom_cut.theta = solve_beamlike_angle(bbo(), 0.351);
    hom_cut.Lz_um = 1000.0;
    hom_cut.family = PmFamily::type2;
    const DerivedIndexSet hd = derived_index_set(hom_cut);
    DetectionSetup hom_setup;
    hom_setup.filter = {FilterShape::gaussian, 0.0, filter_fwhm_from_nm(20.0, 0.702)};
    const Angle2 coll = default_collection_angle(hom_cut, hd);
    const Grid1D delays(-120.0, 120.0, 961);
    const Grid1D nus(-0.145, 0.145, 9601);

    for (int threads : {1, 0}) {
        set_max_threads(threads);
        const char* label = threads == 1 ? "serial " : "openmp ";
        const double t_singles =
            time_ms([&] { (void)singles_map(cut, d, setup, g, g, so); });
        const double t_hom = time_ms(
            [&] { (void)hom_dip(hom_cut, hd, hom_setup, coll, coll * -1.0, delays, nus); });
        const double t_map = time_ms([&] {
            (void)opposite_map(cut, d, setup, Grid1D(-0.15, 0.15, 801),
                               Grid1D(-0.15, 0.15, 801), 0.0, Channel::oe);
        });
        std::printf("%s singles_map %8.1f ms   hom_dip %8.1f ms   opposite_map %8.1f ms\n",
                    label, t_singles, t_hom, t_map);
    }
    set_max_threads(0);
    return 0;
}
