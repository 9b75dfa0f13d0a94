#pragma once

#include "spdc/crystal.hpp"

namespace spdc {

// Paraxial expansion coefficients for an extraordinary plane wave in a
// uniaxial slab whose optic axis lies in the xz plane at angle theta from z:
//   k_z ~ kappa - alpha q_x - (beta q_x^2 + gamma q_y^2) / (2 kappa),
// kappa = eta * omega / c. alpha is the walk-off slope, beta/gamma the x/y
// curvature factors, eta the effective extraordinary index along z.
struct AnisotropyParams {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double eta = 0.0;
    double theta = 0.0;
    double lambda_um = 0.0;

    // kappa in 1/um for this wave's own wavelength
    double kappa() const;
};

AnisotropyParams anisotropy(const CrystalDispersion& c, double theta, double lambda_um);

// q in 1/um; returns k_z in 1/um for the wave described by p.
double paraxial_kz(const AnisotropyParams& p, double qx, double qy);
bool is_paraxial(const AnisotropyParams& p, double qx, double qy);

} // namespace spdc
