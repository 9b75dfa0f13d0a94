#pragma once

#include <optional>
#include <vector>

#include "spdc/biphoton.hpp"

namespace spdc {

// ---- closed-form ring geometry (opposite-direction scans, xi_s = 0) ----

struct RingGeometry {
    double radius = 0.0;     // rad
    Angle2 center{};         // rad
    double half_width = 0.0; // rad, peak-to-first-zero
};

// R^2 = 2 n_bar mu + |c|^2 per channel; nullopt when R^2 < 0 (no ring).
// oo: c = 0. oe/eo: c = n_bar alpha_bar [±1/2 + nu(alpha_p/alpha_bar - 1/2)] x.
std::optional<RingGeometry> ring_geometry(const CutConfiguration& cut, const DerivedIndexSet& d,
                                          double nu, Channel ch);

// ---- grid containers ----

struct Map2D {
    Grid1D x{-1.0, 1.0, 2};
    Grid1D y{-1.0, 1.0, 2};
    std::vector<double> v; // row-major, v[i*y.n + j]

    double at(std::size_t i, std::size_t j) const { return v[i * y.n + j]; }
};

struct Profile {
    std::vector<double> t;
    std::vector<double> value;
};

// ---- opposite-direction coincidence scans (xi_s = 0) ----

// |Phi|^2 at xi1 = xi_d, xi2 = -xi_d with xi_d = t * axis, full amplitudes.
struct OppositeScan {
    std::vector<double> t;
    std::vector<double> total;
    std::vector<double> oe, eo; // filled for type II
};

OppositeScan coincidence_opposite(const CutConfiguration& cut, const DerivedIndexSet& d,
                                  const DetectionSetup& setup, Angle2 axis, const Grid1D& t,
                                  double nu);

Map2D opposite_map(const CutConfiguration& cut, const DerivedIndexSet& d,
                   const DetectionSetup& setup, const Grid1D& x, const Grid1D& y, double nu,
                   Channel ch);

// ---- same-direction coincidence scans (angular-spectrum transfer) ----

enum class ScanAxis { x, y };

// Type I is evaluated on-ring (|xi_d| = R) in the monochromatic form
//   |E(K xi_s)|^2 sinc^2(K Lz alpha_p xi_sx / 2);
// type II at xi_d = 0 integrates G^2(nu) [sinc^2 of mu_oe/mu_eo shifted by
// (alpha_p - alpha_bar/2) xi_sx] over the filter band (delta filter:
// evaluated at nu0, which is the displaced-sinc monochromatic curve).
Profile coincidence_same(const CutConfiguration& cut, const DerivedIndexSet& d,
                         const DetectionSetup& setup, ScanAxis axis, const Grid1D& grid,
                         const Grid1D& nu_grid);

// long-crystal analytic limit of the type II transfer,
// |E(K xi_s)|^2 [G^2(-xi_sx/m) + G^2(xi_sx/m)], m = (2 alpha_p - alpha_bar)/(n_bar - eta_bar)
Profile transfer_long_crystal(const CutConfiguration& cut, const DerivedIndexSet& d,
                              const DetectionSetup& setup, ScanAxis axis, const Grid1D& grid);
double transfer_slope_m(const DerivedIndexSet& d);

// ---- singles ----

struct SinglesMap {
    Map2D map;                      // band-integrated intensity over xi1
    bool truncation_warning = false; // > 1% of mass estimated outside xi2 window
    double outside_fraction = 0.0;
};

struct SinglesOptions {
    std::size_t xi2_points = 61;    // x axis of the inner xi2 window
    std::size_t xi2y_points = 0;    // y axis; 0 = same as xi2_points
    std::size_t nu_points = 9;      // band sampling (ignored for delta filter)
    double window_scale = 1.0;      // multiplies the auto-sized xi2 window
    bool truncation_check = true;
};

// S(xi1) = integral of |Phi|^2 d^2xi2 dnu over the filter band; type II sums
// both channels. The xi2 window is auto-centered on the pump-spectrum support.
SinglesMap singles_map(const CutConfiguration& cut, const DerivedIndexSet& d,
                       const DetectionSetup& setup, const Grid1D& x, const Grid1D& y,
                       const SinglesOptions& opt = {});

// wavelength-resolved slice at fixed xi1y: rows S(xi1x; nu) per nu grid point
struct SpectralSlices {
    Grid1D xi1x{-0.1, 0.1, 2};
    Grid1D nu{-0.1, 0.1, 2};
    std::vector<double> v; // v[ix*nu.n + inu]
};

SpectralSlices singles_slices(const CutConfiguration& cut, const DerivedIndexSet& d,
                              const DetectionSetup& setup, const Grid1D& xi1x, double xi1y,
                              const Grid1D& nu, const SinglesOptions& opt = {});

// ---- collinear spectra vs cut-angle deviation ----

struct CollinearSpectrum {
    Grid1D dtheta{-1e-3, 1e-3, 2}; // deviation from the cut angle, rad
    Grid1D nu{-0.1, 0.1, 2};
    // sinc^2 intensity rows per channel, v[it*nu.n + inu]
    std::vector<double> primary;         // oo (type I) or oe (type II)
    std::vector<double> secondary;       // eo (type II only)
    // mu = 0 loci: nu roots per dtheta (NaN when absent)
    std::vector<double> locus_a, locus_b;
};

CollinearSpectrum collinear_spectrum(const CutConfiguration& cut, const Grid1D& dtheta,
                                     const Grid1D& nu);

// ---- Hong-Ou-Mandel ----

struct HomCurve {
    std::vector<double> delay_um; // path-length difference c*dtau
    std::vector<double> p_c;
};

// P_c(dl) = (1/2)[1 - Re A(dl)/A(0)], A(dl) = sum_j w_j S(nu_j) cos(K nu_j dl)
// with S the per-channel-summed spectral density at the fixed collection
// angles (frequency-domain form of the delay autocorrelation).
HomCurve hom_dip(const CutConfiguration& cut, const DerivedIndexSet& d,
                 const DetectionSetup& setup, Angle2 xi1, Angle2 xi2, const Grid1D& delays_um,
                 const Grid1D& nu);

// default collection angle for HOM / beamlike setups: ring point on the +x
// axis at nu = 0 (type I: (R,0); type II: c_oe; origin when collinear)
Angle2 default_collection_angle(const CutConfiguration& cut, const DerivedIndexSet& d);

// ---- small curve-analysis helpers (shared by tests and scenario headlines) ----

// full width at half maximum about the global max, linear interpolation
double curve_fwhm(const std::vector<double>& t, const std::vector<double>& v);
// first local minimum position beyond the global max (parabolic refinement)
double first_minimum_after_peak(const std::vector<double>& t, const std::vector<double>& v);
// intensity-weighted centroid of |t| over the half-line t > 0
double positive_lobe_centroid(const std::vector<double>& t, const std::vector<double>& v);

} // namespace spdc
