#include "spdc/biphoton.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "spdc/parallel.hpp"

namespace spdc {

PumpSpectrum PumpSpectrum::gaussian(double waist_um) {
    if (!(waist_um > 0.0)) fail(Errc::config, "pump waist must be positive");
    PumpSpectrum p;
    p.waist_um_ = waist_um;
    return p;
}

PumpSpectrum PumpSpectrum::tabulated(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::config, "cannot open pump spectrum '" + path + "'");
    std::vector<double> qx, qy;
    std::vector<std::tuple<double, double, std::complex<double>>> rows;
    std::vector<std::pair<double, double>> radial; // (|q|, Re E) two-column form
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        double x, y, re, im;
        if (ss >> x >> y) {
            if (ss >> re >> im) {
                rows.emplace_back(x, y, std::complex<double>(re, im));
                qx.push_back(x);
                qy.push_back(y);
            } else {
                radial.emplace_back(x, y); // rotationally symmetric E(|q|)
            }
        }
    }
    if (!radial.empty() && rows.empty()) {
        std::sort(radial.begin(), radial.end());
        if (radial.size() < 2 || radial.front().first < 0.0)
            fail(Errc::config, "radial pump profile needs |q| >= 0 samples");
        PumpSpectrum p;
        p.radial_q_.reserve(radial.size());
        p.radial_e_.reserve(radial.size());
        for (const auto& [q, e] : radial) {
            p.radial_q_.push_back(q);
            p.radial_e_.push_back(e);
        }
        // normalize 2 pi integral of |E|^2 q dq to 1
        KahanSum s;
        for (std::size_t i = 0; i + 1 < p.radial_q_.size(); ++i) {
            const double h = p.radial_q_[i + 1] - p.radial_q_[i];
            const double f0 = p.radial_e_[i] * p.radial_e_[i] * p.radial_q_[i];
            const double f1 = p.radial_e_[i + 1] * p.radial_e_[i + 1] * p.radial_q_[i + 1];
            s.add(0.5 * h * (f0 + f1));
        }
        const double power = 2.0 * std::numbers::pi * s.value();
        if (!(power > 0.0)) fail(Errc::config, "radial pump profile has zero power");
        const double scale = 1.0 / std::sqrt(power);
        for (auto& e : p.radial_e_) e *= scale;
        return p;
    }
    if (rows.empty()) fail(Errc::config, "pump spectrum file has no data rows");
    auto uniq = [](std::vector<double>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    uniq(qx);
    uniq(qy);
    if (qx.size() < 2 || qy.size() < 2)
        fail(Errc::config, "pump spectrum table needs a 2-D grid");
    if (rows.size() != qx.size() * qy.size())
        fail(Errc::config, "pump spectrum table is not a complete rectangular grid");

    PumpSpectrum p;
    p.qx_ = qx;
    p.qy_ = qy;
    p.table_.assign(rows.size(), {0.0, 0.0});
    for (const auto& [x, y, v] : rows) {
        auto ix = std::lower_bound(qx.begin(), qx.end(), x) - qx.begin();
        auto iy = std::lower_bound(qy.begin(), qy.end(), y) - qy.begin();
        p.table_[static_cast<std::size_t>(ix) * qy.size() + static_cast<std::size_t>(iy)] = v;
    }
    // normalize integral |E|^2 d^2q to 1 (trapezoid on the table grid)
    KahanSum s;
    for (std::size_t i = 0; i < qx.size(); ++i) {
        double wx = (i == 0) ? (qx[1] - qx[0]) / 2
                  : (i == qx.size() - 1) ? (qx[i] - qx[i - 1]) / 2
                                         : (qx[i + 1] - qx[i - 1]) / 2;
        for (std::size_t j = 0; j < qy.size(); ++j) {
            double wy = (j == 0) ? (qy[1] - qy[0]) / 2
                      : (j == qy.size() - 1) ? (qy[j] - qy[j - 1]) / 2
                                             : (qy[j + 1] - qy[j - 1]) / 2;
            s.add(wx * wy * std::norm(p.table_[i * qy.size() + j]));
        }
    }
    if (!(s.value() > 0.0)) fail(Errc::config, "pump spectrum table has zero power");
    const double scale = 1.0 / std::sqrt(s.value());
    for (auto& v : p.table_) v *= scale;
    return p;
}

std::complex<double> PumpSpectrum::interpolate(double x, double y) const {
    if (x < qx_.front() || x > qx_.back() || y < qy_.front() || y > qy_.back()) return {0.0, 0.0};
    auto ix = std::upper_bound(qx_.begin(), qx_.end(), x) - qx_.begin();
    auto iy = std::upper_bound(qy_.begin(), qy_.end(), y) - qy_.begin();
    std::size_t i = std::min<std::size_t>(std::max<std::ptrdiff_t>(ix - 1, 0), qx_.size() - 2);
    std::size_t j = std::min<std::size_t>(std::max<std::ptrdiff_t>(iy - 1, 0), qy_.size() - 2);
    const double tx = (x - qx_[i]) / (qx_[i + 1] - qx_[i]);
    const double ty = (y - qy_[j]) / (qy_[j + 1] - qy_[j]);
    auto at = [&](std::size_t a, std::size_t B) { return table_[a * qy_.size() + B]; };
    return (1 - tx) * (1 - ty) * at(i, j) + tx * (1 - ty) * at(i + 1, j) +
           (1 - tx) * ty * at(i, j + 1) + tx * ty * at(i + 1, j + 1);
}

std::complex<double> PumpSpectrum::value(double qx, double qy) const {
    if (!radial_q_.empty()) {
        const double q = std::hypot(qx, qy);
        if (q > radial_q_.back()) return {0.0, 0.0};
        auto it = std::upper_bound(radial_q_.begin(), radial_q_.end(), q);
        std::size_t i = std::min<std::size_t>(
            std::max<std::ptrdiff_t>(it - radial_q_.begin() - 1, 0), radial_q_.size() - 2);
        const double t = (q - radial_q_[i]) / (radial_q_[i + 1] - radial_q_[i]);
        return {(1 - t) * radial_e_[i] + t * radial_e_[i + 1], 0.0};
    }
    if (!table_.empty()) return interpolate(qx, qy);
    const double q2 = qx * qx + qy * qy;
    const double amp = waist_um_ / std::sqrt(2.0 * std::numbers::pi);
    return {amp * std::exp(-waist_um_ * waist_um_ * q2 / 4.0), 0.0};
}

double PumpSpectrum::support_halfwidth_q() const {
    if (!radial_q_.empty()) return radial_q_.back();
    if (!table_.empty())
        return std::max(std::max(std::fabs(qx_.front()), std::fabs(qx_.back())),
                        std::max(std::fabs(qy_.front()), std::fabs(qy_.back())));
    // |E|^2 down to exp(-24.5) ~ 2e-11 at q = 7/w0
    return 7.0 / waist_um_;
}

SpectralFilter SpectralFilter::none() { return {FilterShape::rectangular, 0.0, 2.0 * kMaxDetuning}; }

SpectralFilter SpectralFilter::delta_at(double nu0) { return {FilterShape::delta, nu0, 0.0}; }

bool SpectralFilter::is_open_band() const {
    return shape == FilterShape::rectangular && fwhm >= 2.0 * kMaxDetuning;
}

double filter_value(const SpectralFilter& f, double nu) {
    switch (f.shape) {
    case FilterShape::gaussian: {
        const double u = (nu - f.nu0) / f.fwhm;
        return std::exp(-4.0 * std::numbers::ln2 * u * u);
    }
    case FilterShape::rectangular:
        return (std::fabs(nu - f.nu0) <= 0.5 * f.fwhm) ? 1.0 : 0.0;
    case FilterShape::delta:
        return (nu == f.nu0) ? 1.0 : 0.0;
    }
    return 0.0;
}

double filter_fwhm_from_nm(double fwhm_nm, double lambda_deg_um) {
    return 2.0 * (fwhm_nm * 1e-3) / lambda_deg_um;
}

Angle2 pump_argument(double K, Angle2 xi1, Angle2 xi2, double nu) {
    return (xi1 + xi2) * (0.5 * K) + (xi1 - xi2) * (0.5 * K * nu);
}

std::complex<double> biphoton_amplitude(Channel ch, const CutConfiguration& cut,
                                        const DerivedIndexSet& d, const DetectionSetup& setup,
                                        Angle2 xi1, Angle2 xi2, double nu) {
    const double f = f_channel(ch, d, xi1, xi2, nu);
    const double K = cut.K();
    const Angle2 Q = pump_argument(K, xi1, xi2, nu);
    const std::complex<double> E = setup.pump.value(Q.x, Q.y);
    const double G = filter_value(setup.filter, nu);
    const double s = sinc(0.5 * K * cut.Lz_um * f);
    const double phase = -K * cut.zc_um * f;
    return G * s * E * std::complex<double>(std::cos(phase), std::sin(phase));
}

namespace {

void require_family(const CutConfiguration& cut, Channel ch) {
    const bool ok = (ch == Channel::oo) == (cut.family == PmFamily::type1_oo);
    if (!ok) fail(Errc::config, "amplitude channel does not match the cut's phase-matching family");
}

} // namespace

std::complex<double> amplitude_oo(const CutConfiguration& cut, const DerivedIndexSet& d,
                                  const DetectionSetup& setup, Angle2 xi1, Angle2 xi2, double nu) {
    require_family(cut, Channel::oo);
    return biphoton_amplitude(Channel::oo, cut, d, setup, xi1, xi2, nu);
}

std::complex<double> amplitude_oe(const CutConfiguration& cut, const DerivedIndexSet& d,
                                  const DetectionSetup& setup, Angle2 xi1, Angle2 xi2, double nu) {
    require_family(cut, Channel::oe);
    return biphoton_amplitude(Channel::oe, cut, d, setup, xi1, xi2, nu);
}

std::complex<double> amplitude_eo(const CutConfiguration& cut, const DerivedIndexSet& d,
                                  const DetectionSetup& setup, Angle2 xi1, Angle2 xi2, double nu) {
    require_family(cut, Channel::eo);
    return biphoton_amplitude(Channel::eo, cut, d, setup, xi1, xi2, nu);
}

double intensity(const CutConfiguration& cut, const DerivedIndexSet& d,
                 const DetectionSetup& setup, Angle2 xi1, Angle2 xi2, double nu) {
    if (cut.family == PmFamily::type1_oo)
        return std::norm(biphoton_amplitude(Channel::oo, cut, d, setup, xi1, xi2, nu));
    return std::norm(biphoton_amplitude(Channel::oe, cut, d, setup, xi1, xi2, nu)) +
           std::norm(biphoton_amplitude(Channel::eo, cut, d, setup, xi1, xi2, nu));
}

double StateWeights::total() const { return kahan_total(w); }

std::vector<double> StateWeights::marginal_nu() const {
    std::vector<double> m(nu.n, 0.0);
    const std::size_t nnu = nu.n;
    for (std::size_t idx = 0; idx < w.size(); ++idx) m[idx % nnu] += w[idx];
    return m;
}

std::vector<double> StateWeights::marginal_xi1x() const {
    std::vector<double> m(xi1x.n, 0.0);
    const std::size_t block = xi1y.n * xi2x.n * xi2y.n * nu.n;
    for (std::size_t idx = 0; idx < w.size(); ++idx) m[idx / block] += w[idx];
    return m;
}

StateWeights state_weights(const CutConfiguration& cut, const DerivedIndexSet& d,
                           const DetectionSetup& setup, const Grid1D& xi1x, const Grid1D& xi1y,
                           const Grid1D& xi2x, const Grid1D& xi2y, const Grid1D& nu) {
    StateWeights sw;
    sw.xi1x = xi1x;
    sw.xi1y = xi1y;
    sw.xi2x = xi2x;
    sw.xi2y = xi2y;
    sw.nu = nu;
    sw.delta_nu = setup.filter.shape == FilterShape::delta;

    // delta filter: collapse onto the nu plane nearest nu0
    std::size_t delta_plane = 0;
    if (sw.delta_nu) {
        double best = std::numeric_limits<double>::max();
        for (std::size_t k = 0; k < nu.n; ++k) {
            double dist = std::fabs(nu.point(k) - setup.filter.nu0);
            if (dist < best) {
                best = dist;
                delta_plane = k;
            }
        }
    }

    const std::size_t total = xi1x.n * xi1y.n * xi2x.n * xi2y.n * nu.n;
    if (total == 0) fail(Errc::empty_grid, "state_weights: empty grid");
    sw.w.assign(total, 0.0);

    DetectionSetup flat = setup;
    if (sw.delta_nu) flat.filter = SpectralFilter::none(); // weight applied via plane selection

    const std::size_t outer = xi1x.n * xi1y.n;
    parallel_for(outer, [&](std::size_t o) {
        const std::size_t i1x = o / xi1y.n;
        const std::size_t i1y = o % xi1y.n;
        const Angle2 xi1{xi1x.point(i1x), xi1y.point(i1y)};
        std::size_t idx = o * xi2x.n * xi2y.n * nu.n;
        for (std::size_t i2x = 0; i2x < xi2x.n; ++i2x)
            for (std::size_t i2y = 0; i2y < xi2y.n; ++i2y) {
                const Angle2 xi2{xi2x.point(i2x), xi2y.point(i2y)};
                for (std::size_t k = 0; k < nu.n; ++k, ++idx) {
                    if (sw.delta_nu && k != delta_plane) continue;
                    const double nuv = sw.delta_nu ? setup.filter.nu0 : nu.point(k);
                    sw.w[idx] = intensity(cut, d, sw.delta_nu ? flat : setup, xi1, xi2, nuv);
                }
            }
    });

    const double norm = kahan_total(sw.w);
    if (!(norm > 0.0)) fail(Errc::empty_grid, "state_weights: zero total weight on the grid");
    for (auto& v : sw.w) v /= norm;
    return sw;
}

} // namespace spdc
