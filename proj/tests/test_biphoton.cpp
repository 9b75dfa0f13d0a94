#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "spdc/biphoton.hpp"
#include "spdc/observables.hpp"

using namespace spdc;

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

CutConfiguration type1_cut(double theta_offset_deg = 0.0, double Lz_um = 1000.0) {
    CutConfiguration cut;
    cut.crystal = bbo();
    cut.lambda_p_um = 0.351;
    cut.theta = solve_collinear_angle(bbo(), 0.351, PmFamily::type1_oo) + theta_offset_deg * kDeg;
    cut.Lz_um = Lz_um;
    cut.family = PmFamily::type1_oo;
    return cut;
}

CutConfiguration type2_cut(bool beamlike = false) {
    CutConfiguration cut;
    cut.crystal = bbo();
    cut.lambda_p_um = 0.351;
    cut.theta = beamlike ? solve_beamlike_angle(bbo(), 0.351)
                         : solve_collinear_angle(bbo(), 0.351, PmFamily::type2);
    cut.Lz_um = 1000.0;
    cut.family = PmFamily::type2;
    return cut;
}

} // namespace

TEST_CASE("filter values") {
    SpectralFilter g{FilterShape::gaussian, 0.0, 0.05};
    CHECK(filter_value(g, 0.0) == 1.0);
    CHECK(filter_value(g, 0.025) == doctest::Approx(0.5).epsilon(1e-12)); // half max at fwhm/2
    SpectralFilter r{FilterShape::rectangular, 0.0, 0.025};
    CHECK(filter_value(r, 0.02) == 0.0);
    CHECK(filter_value(r, 0.012) == 1.0);
    SpectralFilter d = SpectralFilter::delta_at(0.01);
    CHECK(filter_value(d, 0.01) == 1.0);
    CHECK(filter_value(d, 0.0100001) == 0.0);
    // 10 nm at the 814 nm degenerate wavelength maps to ~0.025 in nu
    CHECK(filter_fwhm_from_nm(10.0, 0.814) == doctest::Approx(0.0245700246).epsilon(1e-8));
    CHECK(SpectralFilter::none().is_open_band());
}

TEST_CASE("Gaussian pump spectrum is normalized") {
    PumpSpectrum p = PumpSpectrum::gaussian(25.0);
    const double half = p.support_halfwidth_q();
    const Grid1D g(-half, half, 301);
    KahanSum s;
    const double h = g.spacing();
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j = 0; j < g.n; ++j)
            s.add(trapezoid_weight(i, g.n, h) * trapezoid_weight(j, g.n, h) *
                  std::norm(p.value(g.point(i), g.point(j))));
    CHECK(std::fabs(s.value() - 1.0) < 1e-4);
}

TEST_CASE("tabulated pump spectrum loads, normalizes and interpolates") {
    const std::string path = "test_pump_table.txt";
    {
        std::ofstream out(path);
        out << "# pump angular spectrum, q in 1/um\n";
        out << "# qx qy reE imE\n";
        PumpSpectrum ref = PumpSpectrum::gaussian(25.0);
        const Grid1D g(-0.3, 0.3, 121);
        for (std::size_t i = 0; i < g.n; ++i)
            for (std::size_t j = 0; j < g.n; ++j) {
                const auto v = ref.value(g.point(i), g.point(j));
                out << g.point(i) << " " << g.point(j) << " " << v.real() << " " << v.imag()
                    << "\n";
            }
    }
    PumpSpectrum tab = PumpSpectrum::tabulated(path);
    CHECK(tab.is_tabulated());
    PumpSpectrum ref = PumpSpectrum::gaussian(25.0);
    // node values match the analytic spectrum up to the renormalization
    CHECK(std::fabs(tab.value(0.0, 0.0).real() - ref.value(0.0, 0.0).real()) /
              ref.value(0.0, 0.0).real() <
          1e-3);
    CHECK(std::fabs(tab.value(0.05, -0.1).real() - ref.value(0.05, -0.1).real()) /
              ref.value(0.0, 0.0).real() <
          1e-3);
    CHECK(tab.value(0.5, 0.0) == std::complex<double>(0.0, 0.0)); // outside the table
    std::remove(path.c_str());
}

TEST_CASE("pump argument matches the sum/difference form") {
    const double K = 17.9;
    const Angle2 xi1{0.02, -0.01}, xi2{-0.015, 0.03};
    const Angle2 q0 = pump_argument(K, xi1, xi2, 0.0);
    const Angle2 xs = xi_sum(xi1, xi2);
    CHECK(q0.x == doctest::Approx(K * xs.x).epsilon(1e-15));
    CHECK(q0.y == doctest::Approx(K * xs.y).epsilon(1e-15));
    const double nu = 0.08;
    const Angle2 q = pump_argument(K, xi1, xi2, nu);
    const Angle2 xd = xi_diff(xi1, xi2);
    CHECK(q.x == doctest::Approx(K * xs.x + K * nu * xd.x).epsilon(1e-13));
    CHECK(q.y == doctest::Approx(K * xs.y + K * nu * xd.y).epsilon(1e-13));
}

TEST_CASE("perfect phase matching gives |amplitude| = G(0) E(0)") {
    const auto cut = type1_cut();
    const auto d = derived_index_set(cut);
    DetectionSetup setup;
    setup.filter = SpectralFilter::none();
    const auto amp = amplitude_oo(cut, d, setup, {0, 0}, {0, 0}, 0.0);
    const double expected = std::abs(setup.pump.value(0.0, 0.0));
    CHECK(std::abs(amp) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(amp.imag() == 0.0); // zc = 0, argument 0
}

TEST_CASE("modulus ignores the crystal-center position; the phase tracks it") {
    auto cut = type1_cut(0.3);
    const auto d = derived_index_set(cut);
    DetectionSetup setup;
    const Angle2 xi1{0.02, 0.005}, xi2{-0.03, 0.01};
    const double nu = 0.03;
    cut.zc_um = 0.0;
    const auto a0 = amplitude_oo(cut, d, setup, xi1, xi2, nu);
    cut.zc_um = 750.0;
    const auto a1 = amplitude_oo(cut, d, setup, xi1, xi2, nu);
    CHECK(std::abs(a1) == doctest::Approx(std::abs(a0)).epsilon(1e-13));
    const double f = f_oo(d, xi1, xi2, nu);
    const double dphi = std::arg(a1) - std::arg(a0);
    const double expected = std::remainder(-cut.K() * 750.0 * f, 2 * std::numbers::pi);
    CHECK(std::remainder(dphi - expected, 2 * std::numbers::pi) ==
          doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("opposite-direction modulus peaks on the ring radius") {
    const auto cut = type1_cut(1.0); // mu_oo > 0
    const auto d = derived_index_set(cut);
    DetectionSetup setup;
    const double R = std::sqrt(2.0 * d.n_bar_o * mu_oo(d, 0.0));
    // dense 1-D scan oracle
    const Grid1D t(0.0, 2.0 * R, 4001);
    double best = -1.0, best_t = 0.0;
    for (std::size_t i = 0; i < t.n; ++i) {
        const Angle2 xd{t.point(i), 0.0};
        const double v = std::norm(amplitude_oo(cut, d, setup, xd, xd * -1.0, 0.0));
        if (v > best) {
            best = v;
            best_t = t.point(i);
        }
    }
    CHECK(std::fabs(best_t - R) <= t.spacing());
}

TEST_CASE("channel relabeling symmetry of the type II amplitudes") {
    const auto cut = type2_cut();
    const auto d = derived_index_set(cut);
    DetectionSetup setup; // even pump, filter centered at nu0 = 0
    setup.filter = SpectralFilter::none();
    const Angle2 xi1{0.04, -0.02}, xi2{-0.01, 0.03};
    for (double nu : {-0.06, 0.0, 0.09}) {
        const double a = std::abs(amplitude_oe(cut, d, setup, xi1, xi2, nu));
        const double b = std::abs(amplitude_eo(cut, d, setup, xi2, xi1, -nu));
        CHECK(a == doctest::Approx(b).epsilon(1e-12));
    }
    // same symmetry for oo
    const auto c1 = type1_cut(0.5);
    const auto d1 = derived_index_set(c1);
    for (double nu : {-0.08, 0.05}) {
        const double a = std::abs(amplitude_oo(c1, d1, setup, xi1, xi2, nu));
        const double b = std::abs(amplitude_oo(c1, d1, setup, xi2, xi1, -nu));
        CHECK(a == doctest::Approx(b).epsilon(1e-12));
    }
}

TEST_CASE("beamlike modulus peaks at the emission point, not a ring") {
    const auto cut = type2_cut(true);
    const auto d = derived_index_set(cut);
    DetectionSetup setup;
    const double c_oe = 0.5 * d.n_bar_o * d.alpha_bar;
    // 2-D grid argmax oracle over xi_d
    const Grid1D gx(-0.2, 0.2, 161), gy(-0.2, 0.2, 161);
    double best = -1.0;
    Angle2 best_xd{};
    for (std::size_t i = 0; i < gx.n; ++i)
        for (std::size_t j = 0; j < gy.n; ++j) {
            const Angle2 xd{gx.point(i), gy.point(j)};
            const double v = std::norm(amplitude_oe(cut, d, setup, xd, xd * -1.0, 0.0));
            if (v > best) {
                best = v;
                best_xd = xd;
            }
        }
    CHECK(std::fabs(best_xd.x - c_oe) <= gx.spacing());
    CHECK(std::fabs(best_xd.y) <= gy.spacing());
}

TEST_CASE("amplitudes reject a channel/family mismatch") {
    const auto c1 = type1_cut();
    const auto d1 = derived_index_set(c1);
    DetectionSetup setup;
    CHECK_THROWS_AS(amplitude_oe(c1, d1, setup, {0, 0}, {0, 0}, 0.0), Error);
    const auto c2 = type2_cut();
    const auto d2 = derived_index_set(c2);
    CHECK_THROWS_AS(amplitude_oo(c2, d2, setup, {0, 0}, {0, 0}, 0.0), Error);
}

TEST_CASE("state weights sum to one and respect a delta filter") {
    const auto cut = type1_cut(0.5);
    const auto d = derived_index_set(cut);
    DetectionSetup setup;
    setup.filter = SpectralFilter::none();
    const Grid1D a(-0.06, 0.06, 9);
    const Grid1D nu(-0.1, 0.1, 11);
    const auto sw = state_weights(cut, d, setup, a, a, a, a, nu);
    CHECK(std::fabs(sw.total() - 1.0) < 1e-12);

    DetectionSetup delta = setup;
    delta.filter = SpectralFilter::delta_at(0.0);
    const auto swd = state_weights(cut, d, delta, a, a, a, a, nu);
    CHECK(std::fabs(swd.total() - 1.0) < 1e-12);
    const auto m = swd.marginal_nu();
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (nu.point(k) == 0.0)
            CHECK(m[k] == doctest::Approx(1.0).epsilon(1e-12));
        else
            CHECK(m[k] == 0.0);
    }
}

TEST_CASE("state-weight marginals are grid-converged at default-like resolutions") {
    // short crystal, Gaussian filter and a xi2 range holding the whole pump
    // ridge keep the weight distribution resolvable on a desk-sized 4-D grid
    auto cut = type1_cut(0.0, 200.0);
    const auto d = derived_index_set(cut);
    DetectionSetup setup;
    setup.pump = PumpSpectrum::gaussian(6.0);
    setup.filter = {FilterShape::gaussian, 0.0, 0.03};
    const Grid1D a1(-0.05, 0.05, 13);
    const Grid1D a2(-0.19, 0.19, 33);
    const Grid1D nu(-0.045, 0.045, 21);
    const auto coarse = state_weights(cut, d, setup, a1, a1, a2, a2, nu);
    const auto fine =
        state_weights(cut, d, setup, a1, a1, a2.refined(), a2.refined(), nu.refined());
    const auto mc = coarse.marginal_xi1x();
    const auto mf = fine.marginal_xi1x();
    REQUIRE(mc.size() == mf.size());
    double peak = 0.0;
    for (double v : mf) peak = std::max(peak, v);
    for (std::size_t i = 0; i < mc.size(); ++i)
        CHECK(std::fabs(mc[i] - mf[i]) < 0.005 * std::max(peak, 1e-30));
}

TEST_CASE("two-column radial pump profile loads and normalizes") {
    const std::string path = "test_pump_radial.txt";
    {
        std::ofstream out(path);
        out << "# radial pump profile, |q| in 1/um\n";
        PumpSpectrum ref = PumpSpectrum::gaussian(25.0);
        for (int i = 0; i <= 400; ++i) {
            const double q = i * (0.4 / 400.0);
            out << q << " " << ref.value(q, 0.0).real() << "\n";
        }
    }
    PumpSpectrum tab = PumpSpectrum::tabulated(path);
    CHECK(tab.is_tabulated());
    PumpSpectrum ref = PumpSpectrum::gaussian(25.0);
    CHECK(std::fabs(tab.value(0.03, 0.04).real() - ref.value(0.05, 0.0).real()) /
              ref.value(0.0, 0.0).real() <
          1e-3);
    CHECK(tab.value(0.5, 0.0) == std::complex<double>(0.0, 0.0));
    std::remove(path.c_str());
}
