#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "spdc/anisotropy.hpp"

using namespace spdc;

namespace {

constexpr double kPi = std::numbers::pi;

// test-only oracle: exact k_z from the ray-surface quadratic
double exact_kz(const CrystalDispersion& c, double theta, double lambda_um, double qx,
                double qy) {
    const double no = c.index(Polarization::ordinary, lambda_um);
    const double ne = c.index(Polarization::extraordinary, lambda_um);
    const double no2 = no * no, ne2 = ne * ne;
    const double s = std::sin(theta), ct = std::cos(theta);
    const double k0 = 2.0 * kPi / lambda_um;
    const double A = no2 * s * s + ne2 * ct * ct;
    const double B = 2.0 * (no2 - ne2) * s * ct * qx;
    const double C = (no2 * ct * ct + ne2 * s * s) * qx * qx + no2 * qy * qy -
                     no2 * ne2 * k0 * k0;
    return (-B + std::sqrt(B * B - 4.0 * A * C)) / (2.0 * A);
}

} // namespace

TEST_CASE("limiting angles reproduce the principal indices") {
    for (const CrystalDispersion* c : {&bbo(), &liio3()})
        for (double l : {0.35, 0.702}) {
            const double no = c->index(Polarization::ordinary, l);
            const double ne = c->index(Polarization::extraordinary, l);
            const auto p0 = anisotropy(*c, 0.0, l);
            const auto p90 = anisotropy(*c, kPi / 2, l);
            CHECK(std::fabs(p0.alpha) < 1e-12);
            CHECK(std::fabs(p90.alpha) < 1e-12);
            CHECK(std::fabs(p0.eta - no) / no < 1e-12);
            CHECK(std::fabs(p90.eta - ne) / ne < 1e-12);
            CHECK(std::fabs(p90.gamma - 1.0) < 1e-12);
            CHECK(std::fabs(p0.gamma - no * no / (ne * ne)) / p0.gamma < 1e-12);
            CHECK(std::fabs(p0.beta - (no / ne) * (no / ne)) / p0.beta < 1e-12);
        }
}

TEST_CASE("walk-off is nonnegative, finite and unimodal; eta is bracketed and decreasing") {
    for (const CrystalDispersion* c : {&bbo(), &liio3()})
        for (double l : {0.3, 0.6}) {
            const double no = c->index(Polarization::ordinary, l);
            const double ne = c->index(Polarization::extraordinary, l);
            std::vector<double> alphas;
            double prev_eta = no + 1.0;
            for (int i = 0; i <= 90; ++i) {
                const auto p = anisotropy(*c, i * kPi / 180.0, l);
                CHECK(std::isfinite(p.alpha));
                CHECK(std::isfinite(p.beta));
                CHECK(std::isfinite(p.gamma));
                CHECK(p.alpha >= 0.0);
                CHECK(p.eta <= no + 1e-12);
                CHECK(p.eta >= ne - 1e-12);
                CHECK(p.eta < prev_eta + 1e-15);
                prev_eta = p.eta;
                alphas.push_back(p.alpha);
            }
            // single interior maximum: rises then falls
            std::size_t imax = 0;
            for (std::size_t i = 1; i < alphas.size(); ++i)
                if (alphas[i] > alphas[imax]) imax = i;
            CHECK(imax > 0);
            CHECK(imax < alphas.size() - 1);
            for (std::size_t i = 1; i <= imax; ++i) CHECK(alphas[i] >= alphas[i - 1]);
            for (std::size_t i = imax + 1; i < alphas.size(); ++i)
                CHECK(alphas[i] <= alphas[i - 1]);
            // maximum near 45 degrees
            CHECK(std::fabs(static_cast<double>(imax) - 45.0) < 5.0);
        }
}

TEST_CASE("paraxial kz on axis and at theta = 0") {
    const auto p = anisotropy(bbo(), 0.7, 0.5);
    CHECK(paraxial_kz(p, 0.0, 0.0) == p.kappa());
    const auto p0 = anisotropy(bbo(), 0.0, 0.5);
    const double no = bbo().index(Polarization::ordinary, 0.5);
    const double ne = bbo().index(Polarization::extraordinary, 0.5);
    const double qx = 0.01 * p0.kappa();
    const double expected = p0.kappa() - (no / ne) * (no / ne) * qx * qx / (2.0 * p0.kappa());
    CHECK(std::fabs(paraxial_kz(p0, qx, 0.0) - expected) / expected < 1e-14);
}

TEST_CASE("paraxial kz against the exact ray-surface root") {
    const double theta = 0.62;
    const double l = 0.702;
    const auto p = anisotropy(bbo(), theta, l);
    const double k = p.kappa();
    // |q|/kappa = 0.05 along a generic direction
    const double q = 0.05 * k;
    const double ux = 0.6, uy = 0.8;
    const double approx = paraxial_kz(p, q * ux, q * uy);
    const double exact = exact_kz(bbo(), theta, l, q * ux, q * uy);
    CHECK(std::fabs(approx - exact) / std::fabs(exact) < 1e-3);
    CHECK(is_paraxial(p, q * ux, q * uy));
    CHECK(!is_paraxial(p, 0.3 * k, 0.0));
}

TEST_CASE("paraxial error decays as the fourth power of |q|") {
    // the dropped term is (beta qx^2 + gamma qy^2)^2 / (8 kappa^3), so the
    // log-log slope sits at 4 (the stated second-order accuracy bound)
    const double theta = 0.62;
    const double l = 0.702;
    const auto p = anisotropy(bbo(), theta, l);
    const double k = p.kappa();
    std::vector<double> lt, le;
    for (int j = 0; j < 5; ++j) {
        const double q = 0.08 * k / std::pow(2.0, j);
        const double err =
            std::fabs(paraxial_kz(p, q * 0.6, q * 0.8) - exact_kz(bbo(), theta, l, q * 0.6, q * 0.8));
        lt.push_back(std::log(q));
        le.push_back(std::log(err));
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(lt.size());
    for (std::size_t i = 0; i < lt.size(); ++i) {
        sx += lt[i];
        sy += le[i];
        sxx += lt[i] * lt[i];
        sxy += lt[i] * le[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    CHECK(slope > 3.5);
    CHECK(slope < 4.5);
}

TEST_CASE("angle domain is checked") {
    CHECK_THROWS_AS(anisotropy(bbo(), -0.1, 0.5), Error);
    CHECK_THROWS_AS(anisotropy(bbo(), 2.0, 0.5), Error);
}
