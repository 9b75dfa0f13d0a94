#include "spdc/cut.hpp"

#include <cmath>
#include <numbers>

namespace spdc {

double CutConfiguration::K() const { return 2.0 * std::numbers::pi / lambda_p_um; }

void CutConfiguration::validate() const {
    if (!(Lz_um > 0.0)) fail(Errc::config, "crystal length must be positive");
    if (!(theta > 0.0 && theta < std::numbers::pi / 2.0))
        fail(Errc::config, "optic-axis angle must lie in (0, pi/2)");
    if (!(lambda_p_um >= crystal.valid_lo_um && 2.0 * lambda_p_um <= crystal.valid_hi_um))
        fail(Errc::config, "pump (and degenerate) wavelength must lie in the crystal's "
                           "validity window");
}

double dispersion_factor_ordinary(const CrystalDispersion& c, double lambda_deg_um) {
    const double n = c.index(Polarization::ordinary, lambda_deg_um);
    const double dn = c.index_derivative(Polarization::ordinary, lambda_deg_um);
    return -(lambda_deg_um / n) * dn;
}

double dispersion_factor_eta(const CrystalDispersion& c, double lambda_deg_um, double theta) {
    const double no = c.index(Polarization::ordinary, lambda_deg_um);
    const double ne = c.index(Polarization::extraordinary, lambda_deg_um);
    const double dno = c.index_derivative(Polarization::ordinary, lambda_deg_um);
    const double dne = c.index_derivative(Polarization::extraordinary, lambda_deg_um);
    const double s = std::sin(theta), ct = std::cos(theta);
    const double den = no * no * s * s + ne * ne * ct * ct;
    const double eta = no * ne / std::sqrt(den);
    // d(eta)/d(n_o) = ne^3 cos^2 / den^(3/2), d(eta)/d(n_e) = no^3 sin^2 / den^(3/2)
    const double deta = (ne * ne * ne * ct * ct * dno + no * no * no * s * s * dne) /
                        (den * std::sqrt(den));
    return -(lambda_deg_um / eta) * deta;
}

DerivedIndexSet derived_index_set(const CutConfiguration& cut) {
    cut.validate();
    const double ldeg = 2.0 * cut.lambda_p_um;
    const AnisotropyParams pump = anisotropy(cut.crystal, cut.theta, cut.lambda_p_um);
    const AnisotropyParams down = anisotropy(cut.crystal, cut.theta, ldeg);

    DerivedIndexSet d;
    d.n_bar_o = cut.crystal.index(Polarization::ordinary, ldeg);
    d.eta_bar = down.eta;
    d.eta_p = pump.eta;
    d.a = dispersion_factor_ordinary(cut.crystal, ldeg);
    d.a_prime = dispersion_factor_eta(cut.crystal, ldeg, cut.theta);
    d.b = pump.beta * d.n_bar_o / d.eta_p;
    d.g = pump.gamma * d.n_bar_o / d.eta_p;
    d.b_bar = down.beta * d.n_bar_o / d.eta_bar;
    d.g_bar = down.gamma * d.n_bar_o / d.eta_bar;
    d.alpha_p = pump.alpha;
    d.alpha_bar = down.alpha;
    return d;
}

} // namespace spdc
