#include "spdc/phase_match.hpp"

#include <cmath>
#include <numbers>

#include "spdc/numerics.hpp"

namespace spdc {

double wavelength_to_detuning(double lambda1_um, double lambda_p_um) {
    if (!(lambda1_um > lambda_p_um))
        fail(Errc::config, "down-converted wavelength must exceed the pump wavelength");
    const double nu = 2.0 * lambda_p_um / lambda1_um - 1.0;
    if (std::fabs(nu) >= kMaxDetuning)
        fail(Errc::out_of_model, "detuning |nu| >= 0.15 lies outside the small-detuning model");
    return nu;
}

double detuning_to_wavelength(double nu, double lambda_p_um) {
    if (std::fabs(nu) >= kMaxDetuning)
        fail(Errc::out_of_model, "detuning |nu| >= 0.15 lies outside the small-detuning model");
    return 2.0 * lambda_p_um / (1.0 + nu);
}

double mu_oo(const DerivedIndexSet& d, double nu) {
    return d.n_bar_o * (1.0 + d.a * nu * nu) - d.eta_p;
}

double mu_oe(const DerivedIndexSet& d, double nu) {
    return 0.5 * (d.n_bar_o + d.eta_bar) - d.eta_p + 0.5 * nu * (d.n_bar_o - d.eta_bar);
}

double mu_eo(const DerivedIndexSet& d, double nu) { return mu_oe(d, -nu); }

double mu_channel(Channel ch, const DerivedIndexSet& d, double nu) {
    switch (ch) {
    case Channel::oo: return mu_oo(d, nu);
    case Channel::oe: return mu_oe(d, nu);
    case Channel::eo: return mu_eo(d, nu);
    }
    return 0.0;
}

double f_oo(const DerivedIndexSet& d, Angle2 xi1, Angle2 xi2, double nu) {
    const double tx = (1.0 + nu) * xi1.x + (1.0 - nu) * xi2.x;
    const double ty = (1.0 + nu) * xi1.y + (1.0 - nu) * xi2.y;
    return mu_oo(d, nu) + 0.5 * d.alpha_p * tx -
           1.0 / (4.0 * d.n_bar_o) *
               ((1.0 + nu) * xi1.norm2() + (1.0 - nu) * xi2.norm2() -
                0.5 * d.b * tx * tx - 0.5 * d.g * ty * ty);
}

double f_oe(const DerivedIndexSet& d, Angle2 xi1, Angle2 xi2, double nu) {
    const double tx = (1.0 + nu) * xi1.x + (1.0 - nu) * xi2.x;
    const double ty = (1.0 + nu) * xi1.y + (1.0 - nu) * xi2.y;
    return mu_oe(d, nu) + 0.5 * d.alpha_p * (1.0 + nu) * xi1.x +
           0.5 * (d.alpha_p - d.alpha_bar) * (1.0 - nu) * xi2.x -
           1.0 / (4.0 * d.n_bar_o) *
               ((1.0 + nu) * xi1.norm2() +
                (1.0 - nu) * (d.b_bar * xi2.x * xi2.x + d.g_bar * xi2.y * xi2.y) -
                0.5 * d.b * tx * tx - 0.5 * d.g * ty * ty);
}

double f_eo(const DerivedIndexSet& d, Angle2 xi1, Angle2 xi2, double nu) {
    const double tx = (1.0 + nu) * xi1.x + (1.0 - nu) * xi2.x;
    const double ty = (1.0 + nu) * xi1.y + (1.0 - nu) * xi2.y;
    return mu_eo(d, nu) + 0.5 * (d.alpha_p - d.alpha_bar) * (1.0 + nu) * xi1.x +
           0.5 * d.alpha_p * (1.0 - nu) * xi2.x -
           1.0 / (4.0 * d.n_bar_o) *
               ((1.0 + nu) * (d.b_bar * xi1.x * xi1.x + d.g_bar * xi1.y * xi1.y) +
                (1.0 - nu) * xi2.norm2() -
                0.5 * d.b * tx * tx - 0.5 * d.g * ty * ty);
}

double f_channel(Channel ch, const DerivedIndexSet& d, Angle2 xi1, Angle2 xi2, double nu) {
    switch (ch) {
    case Channel::oo: return f_oo(d, xi1, xi2, nu);
    case Channel::oe: return f_oe(d, xi1, xi2, nu);
    case Channel::eo: return f_eo(d, xi1, xi2, nu);
    }
    return 0.0;
}

double F_oo_exact(const DerivedIndexSet& d, Angle2 xi_s, Angle2 xi_d, double nu) {
    // term layout mirrors F_oo_simplified so that forcing b = g = 1 here
    // reproduces the simplified form bit for bit
    return mu_oo(d, nu) + d.alpha_p * (xi_s.x + nu * xi_d.x) -
           ((1.0 - d.b) * xi_s.x * xi_s.x + (1.0 - d.g) * xi_s.y * xi_s.y + xi_d.norm2() +
            (2.0 - d.b) * nu * xi_s.x * xi_d.x + (2.0 - d.g) * nu * xi_s.y * xi_d.y) /
               (2.0 * d.n_bar_o);
}

double F_oo_simplified(const DerivedIndexSet& d, Angle2 xi_s, Angle2 xi_d, double nu) {
    return mu_oo(d, nu) + d.alpha_p * (xi_s.x + nu * xi_d.x) -
           (xi_d.norm2() + nu * xi_s.x * xi_d.x + nu * xi_s.y * xi_d.y) / (2.0 * d.n_bar_o);
}

double F_oe_simplified(const DerivedIndexSet& d, Angle2 xi_s, Angle2 xi_d, double nu) {
    return mu_oe(d, nu) + (d.alpha_p - 0.5 * (1.0 + nu) * d.alpha_bar) * xi_s.x +
           (nu * d.alpha_p + 0.5 * (1.0 - nu) * d.alpha_bar) * xi_d.x -
           xi_d.norm2() / (2.0 * d.n_bar_o);
}

double F_eo_simplified(const DerivedIndexSet& d, Angle2 xi_s, Angle2 xi_d, double nu) {
    return mu_eo(d, nu) + (d.alpha_p - 0.5 * (1.0 - nu) * d.alpha_bar) * xi_s.x +
           (nu * d.alpha_p - 0.5 * (1.0 + nu) * d.alpha_bar) * xi_d.x -
           xi_d.norm2() / (2.0 * d.n_bar_o);
}

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

// nu-independent collinear mismatch as a function of the cut angle
double collinear_mismatch(const CrystalDispersion& c, double lambda_p_um, PmFamily family,
                          double nu, double theta) {
    const double ldeg = 2.0 * lambda_p_um;
    const double n_bar_o = c.index(Polarization::ordinary, ldeg);
    const double eta_p = anisotropy(c, theta, lambda_p_um).eta;
    if (family == PmFamily::type1_oo) {
        const double a = dispersion_factor_ordinary(c, ldeg);
        return n_bar_o * (1.0 + a * nu * nu) - eta_p;
    }
    const double eta_bar = anisotropy(c, theta, ldeg).eta;
    return 0.5 * (n_bar_o + eta_bar) - eta_p;
}

} // namespace

double solve_collinear_angle(const CrystalDispersion& c, double lambda_p_um, PmFamily family,
                             double nu) {
    return solve_collinear_angle(c, lambda_p_um, family, nu, 5.0 * kDeg, 85.0 * kDeg);
}

double solve_collinear_angle(const CrystalDispersion& c, double lambda_p_um, PmFamily family,
                             double nu, double bracket_lo, double bracket_hi) {
    auto fn = [&](double th) { return collinear_mismatch(c, lambda_p_um, family, nu, th); };
    return scan_and_find_root(fn, bracket_lo, bracket_hi, 0.5 * kDeg, 1e-13);
}

double beamlike_radius_sq(const CrystalDispersion& c, double lambda_p_um, double theta) {
    const double ldeg = 2.0 * lambda_p_um;
    const double n_bar_o = c.index(Polarization::ordinary, ldeg);
    const double alpha_bar = anisotropy(c, theta, ldeg).alpha;
    const double mu0 = collinear_mismatch(c, lambda_p_um, PmFamily::type2, 0.0, theta);
    return 2.0 * n_bar_o * mu0 + 0.25 * n_bar_o * n_bar_o * alpha_bar * alpha_bar;
}

double solve_beamlike_angle(const CrystalDispersion& c, double lambda_p_um) {
    return solve_beamlike_angle(c, lambda_p_um, 5.0 * kDeg, 85.0 * kDeg);
}

double solve_beamlike_angle(const CrystalDispersion& c, double lambda_p_um, double bracket_lo,
                            double bracket_hi) {
    auto fn = [&](double th) { return beamlike_radius_sq(c, lambda_p_um, th); };
    return scan_and_find_root(fn, bracket_lo, bracket_hi, 0.5 * kDeg, 1e-14);
}

} // namespace spdc
