#include "spdc/anisotropy.hpp"

#include <cmath>
#include <numbers>

namespace spdc {

double AnisotropyParams::kappa() const { return eta * 2.0 * std::numbers::pi / lambda_um; }

AnisotropyParams anisotropy(const CrystalDispersion& c, double theta, double lambda_um) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi / 2.0 + 1e-12))
        fail(Errc::out_of_range, "optic-axis angle must lie in [0, pi/2]");
    const double no = c.index(Polarization::ordinary, lambda_um);
    const double ne = c.index(Polarization::extraordinary, lambda_um);
    const double no2 = no * no, ne2 = ne * ne;
    const double s = std::sin(theta), cth = std::cos(theta);
    const double den = no2 * s * s + ne2 * cth * cth;

    AnisotropyParams p;
    p.alpha = (no2 - ne2) * s * cth / den;
    p.beta = (no * ne / den) * (no * ne / den);
    p.gamma = no2 / den;
    p.eta = no * ne / std::sqrt(den);
    p.theta = theta;
    p.lambda_um = lambda_um;
    return p;
}

double paraxial_kz(const AnisotropyParams& p, double qx, double qy) {
    const double k = p.kappa();
    return k - p.alpha * qx - (p.beta * qx * qx + p.gamma * qy * qy) / (2.0 * k);
}

bool is_paraxial(const AnisotropyParams& p, double qx, double qy) {
    return std::hypot(qx, qy) <= 0.2 * p.kappa();
}

} // namespace spdc
