#pragma once

#include "spdc/anisotropy.hpp"
#include "spdc/crystal.hpp"

namespace spdc {

enum class PmFamily { type1_oo, type2 };
enum class Channel { oo, oe, eo };

struct CutConfiguration {
    CrystalDispersion crystal;
    double lambda_p_um = 0.351;
    double theta = 0.0; // optic-axis angle, rad
    double Lz_um = 1000.0;
    double zc_um = 0.0;
    PmFamily family = PmFamily::type1_oo;

    // pump wavenumber K = omega_p/c = 2*pi/lambda_p, in 1/um
    double K() const;
    void validate() const;
};

// Dispersion factor a = (omega_p / 2 n) dn/domega at omega_p/2, evaluated
// through the analytic lambda derivative: a = -(l/n) dn/dl at l = 2*lambda_p.
double dispersion_factor_ordinary(const CrystalDispersion& c, double lambda_deg_um);
// same with n_o replaced by eta(theta)
double dispersion_factor_eta(const CrystalDispersion& c, double lambda_deg_um, double theta);

// Constants of the small-detuning model, all evaluated from the cut:
// pump quantities at lambda_p, down-converted ones at 2*lambda_p.
struct DerivedIndexSet {
    double n_bar_o = 0.0;  // ordinary index at omega_p/2
    double eta_bar = 0.0;  // eta at omega_p/2
    double eta_p = 0.0;    // eta at the pump wavelength
    double a = 0.0;        // ordinary dispersion factor
    double a_prime = 0.0;  // extraordinary (eta) dispersion factor
    double b = 0.0;        // beta_p * n_bar_o / eta_p
    double g = 0.0;        // gamma_p * n_bar_o / eta_p
    double b_bar = 0.0;    // beta_bar * n_bar_o / eta_bar
    double g_bar = 0.0;    // gamma_bar * n_bar_o / eta_bar
    double alpha_p = 0.0;  // pump walk-off
    double alpha_bar = 0.0; // down-converted extraordinary walk-off
};

DerivedIndexSet derived_index_set(const CutConfiguration& cut);

} // namespace spdc
