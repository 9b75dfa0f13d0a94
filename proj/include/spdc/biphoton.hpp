#pragma once

#include <complex>
#include <string>
#include <vector>

#include "spdc/numerics.hpp"
#include "spdc/phase_match.hpp"

namespace spdc {

// Plane-wave spectrum of the pump, normalized so that the trapezoid estimate
// of integral |E(q)|^2 d^2q equals 1 (q in 1/um). Gaussian by default,
// E(q) = w0/sqrt(2 pi) * exp(-w0^2 |q|^2 / 4); a tabulated spectrum loaded
// from a text file takes over when present.
class PumpSpectrum {
  public:
    static PumpSpectrum gaussian(double waist_um);
    // grid format: rows "qx qy reE imE" (1/um); two-column rows "|q| reE"
    // describe a rotationally symmetric real profile; '#' comments
    static PumpSpectrum tabulated(const std::string& path);

    std::complex<double> value(double qx, double qy) const;
    bool is_tabulated() const { return !table_.empty() || !radial_q_.empty(); }
    double waist_um() const { return waist_um_; }
    // half-width of the support in q, used to size integration windows
    double support_halfwidth_q() const;

  private:
    double waist_um_ = 25.0;
    // tabulated grid data, bilinear interpolation, zero outside the table
    std::vector<double> qx_, qy_;
    std::vector<std::complex<double>> table_;
    // radial two-column data, linear interpolation in |q|
    std::vector<double> radial_q_, radial_e_;
    std::complex<double> interpolate(double qx, double qy) const;
};

enum class FilterShape { gaussian, rectangular, delta };

// Spectral function of the detection filters in the detuning variable nu.
//   gaussian:     exp(-4 ln2 (nu-nu0)^2 / fwhm^2)
//   rectangular:  1 on [nu0 - fwhm/2, nu0 + fwhm/2]
//   delta:        collapses nu integrals onto nu0
struct SpectralFilter {
    FilterShape shape = FilterShape::gaussian;
    double nu0 = 0.0;
    double fwhm = 0.025;

    static SpectralFilter none(); // flat over the whole |nu| < 0.15 model band
    static SpectralFilter delta_at(double nu0);
    bool is_open_band() const;
};

double filter_value(const SpectralFilter& f, double nu);

// fwhm in nu from a filter bandwidth in nm at the degenerate wavelength:
// nu = 2 lambda_p / lambda - 1  =>  dnu = 2 dlambda / lambda_deg
double filter_fwhm_from_nm(double fwhm_nm, double lambda_deg_um);

struct DetectionSetup {
    PumpSpectrum pump = PumpSpectrum::gaussian(25.0);
    SpectralFilter filter;
};

// pump spectrum argument q_1 + q_2 expressed through output angles:
// Q = (K/2)(xi1 + xi2) + (K nu / 2)(xi1 - xi2)
Angle2 pump_argument(double K, Angle2 xi1, Angle2 xi2, double nu);

// Reduced biphoton amplitude up to the overall normalization N:
//   G(nu) E(Q) sinc[(K Lz / 2) f] exp[-i K zc f]
// with f the channel's mismatch function. The channel must belong to the
// cut's phase-matching family.
std::complex<double> biphoton_amplitude(Channel ch, const CutConfiguration& cut,
                                        const DerivedIndexSet& d, const DetectionSetup& setup,
                                        Angle2 xi1, Angle2 xi2, double nu);

std::complex<double> amplitude_oo(const CutConfiguration& cut, const DerivedIndexSet& d,
                                  const DetectionSetup& setup, Angle2 xi1, Angle2 xi2, double nu);
std::complex<double> amplitude_oe(const CutConfiguration& cut, const DerivedIndexSet& d,
                                  const DetectionSetup& setup, Angle2 xi1, Angle2 xi2, double nu);
std::complex<double> amplitude_eo(const CutConfiguration& cut, const DerivedIndexSet& d,
                                  const DetectionSetup& setup, Angle2 xi1, Angle2 xi2, double nu);

// |Phi|^2 summed over the family's channels at one phase-space point
double intensity(const CutConfiguration& cut, const DerivedIndexSet& d,
                 const DetectionSetup& setup, Angle2 xi1, Angle2 xi2, double nu);

// Discretized |Phi|^2 over (xi1x, xi1y, xi2x, xi2y, nu), normalized to sum 1.
// A delta filter puts all weight on the nu plane nearest nu0.
struct StateWeights {
    Grid1D xi1x, xi1y, xi2x, xi2y, nu;
    bool delta_nu = false;
    std::vector<double> w; // index order: ((((i1x*n1y + i1y)*n2x + i2x)*n2y + i2y)*nnu + inu)

    std::size_t size() const { return w.size(); }
    double total() const;
    std::vector<double> marginal_nu() const;
    std::vector<double> marginal_xi1x() const;
};

StateWeights state_weights(const CutConfiguration& cut, const DerivedIndexSet& d,
                           const DetectionSetup& setup, const Grid1D& xi1x, const Grid1D& xi1y,
                           const Grid1D& xi2x, const Grid1D& xi2y, const Grid1D& nu);

} // namespace spdc
