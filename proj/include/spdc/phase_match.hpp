#pragma once

#include "spdc/cut.hpp"

namespace spdc {

// transverse output-angle two-vector, radians
struct Angle2 {
    double x = 0.0;
    double y = 0.0;

    double norm2() const { return x * x + y * y; }
    Angle2 operator+(Angle2 o) const { return {x + o.x, y + o.y}; }
    Angle2 operator-(Angle2 o) const { return {x - o.x, y - o.y}; }
    Angle2 operator*(double s) const { return {x * s, y * s}; }
};

// (xi_s, xi_d) = half-sum / half-difference of the two output angles
inline Angle2 xi_sum(Angle2 xi1, Angle2 xi2) { return (xi1 + xi2) * 0.5; }
inline Angle2 xi_diff(Angle2 xi1, Angle2 xi2) { return (xi1 - xi2) * 0.5; }

constexpr double kMaxDetuning = 0.15;

// nu = 2*lambda_p/lambda1 - 1; inverse lambda1 = 2*lambda_p/(1+nu).
double wavelength_to_detuning(double lambda1_um, double lambda_p_um);
double detuning_to_wavelength(double nu, double lambda_p_um);

// collinear index mismatches
double mu_oo(const DerivedIndexSet& d, double nu);
double mu_oe(const DerivedIndexSet& d, double nu);
double mu_eo(const DerivedIndexSet& d, double nu);
double mu_channel(Channel ch, const DerivedIndexSet& d, double nu);

// Longitudinal mismatch over K in output-angle variables. These are the full
// per-channel expressions; the sinc argument of the amplitude is (K Lz/2) f.
double f_oo(const DerivedIndexSet& d, Angle2 xi1, Angle2 xi2, double nu);
double f_oe(const DerivedIndexSet& d, Angle2 xi1, Angle2 xi2, double nu);
double f_eo(const DerivedIndexSet& d, Angle2 xi1, Angle2 xi2, double nu);
double f_channel(Channel ch, const DerivedIndexSet& d, Angle2 xi1, Angle2 xi2, double nu);

// Sum/difference-coordinate forms. F_oo_exact keeps the b,g anisotropy terms;
// the simplified versions set b = g = 1 (and b_bar = g_bar = 1 for type II).
double F_oo_exact(const DerivedIndexSet& d, Angle2 xi_s, Angle2 xi_d, double nu);
double F_oo_simplified(const DerivedIndexSet& d, Angle2 xi_s, Angle2 xi_d, double nu);
double F_oe_simplified(const DerivedIndexSet& d, Angle2 xi_s, Angle2 xi_d, double nu);
double F_eo_simplified(const DerivedIndexSet& d, Angle2 xi_s, Angle2 xi_d, double nu);

// Collinear phase-matching angle: root of mu_oo(theta) = 0 (type I) or of the
// nu-independent part of mu_oe/mu_eo (type II). Bracketing scan at 0.5 deg
// over (5 deg, 85 deg) followed by hybrid bisection/secant.
double solve_collinear_angle(const CrystalDispersion& c, double lambda_p_um, PmFamily family,
                             double nu = 0.0);
double solve_collinear_angle(const CrystalDispersion& c, double lambda_p_um, PmFamily family,
                             double nu, double bracket_lo, double bracket_hi);

// Beamlike type II angle: root of R_oe^2(theta, nu=0) = 0.
double solve_beamlike_angle(const CrystalDispersion& c, double lambda_p_um);
double solve_beamlike_angle(const CrystalDispersion& c, double lambda_p_um, double bracket_lo,
                            double bracket_hi);

// R_oe^2 at nu = 0 for a given cut angle (used by the beamlike solver).
double beamlike_radius_sq(const CrystalDispersion& c, double lambda_p_um, double theta);

} // namespace spdc
