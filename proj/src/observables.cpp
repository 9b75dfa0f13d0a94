#include "spdc/observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "spdc/parallel.hpp"

namespace spdc {

namespace {

constexpr double kPi = std::numbers::pi;

Angle2 ring_center(const DerivedIndexSet& d, double nu, Channel ch) {
    if (ch == Channel::oo) return {0.0, 0.0};
    const double sign = (ch == Channel::oe) ? 0.5 : -0.5;
    const double cx = d.n_bar_o * d.alpha_bar *
                      (sign + nu * (d.alpha_p / d.alpha_bar - 0.5));
    return {cx, 0.0};
}

} // namespace

std::optional<RingGeometry> ring_geometry(const CutConfiguration& cut, const DerivedIndexSet& d,
                                          double nu, Channel ch) {
    const Angle2 c = ring_center(d, nu, ch);
    double r2 = 2.0 * d.n_bar_o * mu_channel(ch, d, nu) + c.norm2();
    // a cut solved to machine precision can land a hair on the negative side
    if (r2 < 0.0 && r2 > -1e-12) r2 = 0.0;
    if (r2 < 0.0) return std::nullopt;
    RingGeometry rg;
    rg.radius = std::sqrt(r2);
    rg.center = c;
    rg.half_width = std::sqrt(r2 + 4.0 * kPi * d.n_bar_o / (cut.K() * cut.Lz_um)) - rg.radius;
    return rg;
}

OppositeScan coincidence_opposite(const CutConfiguration& cut, const DerivedIndexSet& d,
                                  const DetectionSetup& setup, Angle2 axis, const Grid1D& t,
                                  double nu) {
    const double an = std::sqrt(axis.norm2());
    if (!(an > 0.0)) fail(Errc::config, "opposite scan needs a nonzero axis");
    const Angle2 u{axis.x / an, axis.y / an};

    OppositeScan out;
    out.t = t.points();
    out.total.assign(t.n, 0.0);
    const bool type2 = cut.family == PmFamily::type2;
    if (type2) {
        out.oe.assign(t.n, 0.0);
        out.eo.assign(t.n, 0.0);
    }
    parallel_for(t.n, [&](std::size_t i) {
        const Angle2 xd = u * t.point(i);
        const Angle2 xi1 = xd, xi2 = xd * -1.0;
        if (type2) {
            out.oe[i] = std::norm(biphoton_amplitude(Channel::oe, cut, d, setup, xi1, xi2, nu));
            out.eo[i] = std::norm(biphoton_amplitude(Channel::eo, cut, d, setup, xi1, xi2, nu));
            out.total[i] = out.oe[i] + out.eo[i];
        } else {
            out.total[i] = std::norm(biphoton_amplitude(Channel::oo, cut, d, setup, xi1, xi2, nu));
        }
    });
    return out;
}

Map2D opposite_map(const CutConfiguration& cut, const DerivedIndexSet& d,
                   const DetectionSetup& setup, const Grid1D& x, const Grid1D& y, double nu,
                   Channel ch) {
    Map2D m;
    m.x = x;
    m.y = y;
    m.v.assign(x.n * y.n, 0.0);
    parallel_for(x.n, [&](std::size_t i) {
        for (std::size_t j = 0; j < y.n; ++j) {
            const Angle2 xd{x.point(i), y.point(j)};
            m.v[i * y.n + j] =
                std::norm(biphoton_amplitude(ch, cut, d, setup, xd, xd * -1.0, nu));
        }
    });
    return m;
}

Profile coincidence_same(const CutConfiguration& cut, const DerivedIndexSet& d,
                         const DetectionSetup& setup, ScanAxis axis, const Grid1D& grid,
                         const Grid1D& nu_grid) {
    Profile out;
    out.t = grid.points();
    out.value.assign(grid.n, 0.0);
    const double K = cut.K();
    const double half_arg = 0.5 * K * cut.Lz_um;

    if (cut.family == PmFamily::type1_oo) {
        // on-ring monochromatic transfer curve
        const double g0 = (setup.filter.shape == FilterShape::delta)
                              ? 1.0
                              : filter_value(setup.filter, setup.filter.nu0);
        parallel_for(grid.n, [&](std::size_t i) {
            const Angle2 xs = (axis == ScanAxis::x) ? Angle2{grid.point(i), 0.0}
                                                    : Angle2{0.0, grid.point(i)};
            const double E2 = std::norm(setup.pump.value(K * xs.x, K * xs.y));
            const double s = sinc(half_arg * d.alpha_p * xs.x);
            out.value[i] = g0 * g0 * E2 * s * s;
        });
        return out;
    }

    const double shift = d.alpha_p - 0.5 * d.alpha_bar;
    auto channel_sum = [&](double xsx, double nu) {
        const double soe = sinc(half_arg * (mu_oe(d, nu) + shift * xsx));
        const double seo = sinc(half_arg * (mu_eo(d, nu) + shift * xsx));
        return soe * soe + seo * seo;
    };

    parallel_for(grid.n, [&](std::size_t i) {
        const Angle2 xs = (axis == ScanAxis::x) ? Angle2{grid.point(i), 0.0}
                                                : Angle2{0.0, grid.point(i)};
        const double E2 = std::norm(setup.pump.value(K * xs.x, K * xs.y));
        if (setup.filter.shape == FilterShape::delta) {
            out.value[i] = E2 * channel_sum(xs.x, setup.filter.nu0);
            return;
        }
        const double h = nu_grid.spacing();
        KahanSum s;
        for (std::size_t k = 0; k < nu_grid.n; ++k) {
            const double nu = nu_grid.point(k);
            const double G = filter_value(setup.filter, nu);
            if (G == 0.0) continue;
            s.add(trapezoid_weight(k, nu_grid.n, h) * G * G * channel_sum(xs.x, nu));
        }
        out.value[i] = E2 * s.value();
    });
    return out;
}

double transfer_slope_m(const DerivedIndexSet& d) {
    return (2.0 * d.alpha_p - d.alpha_bar) / (d.n_bar_o - d.eta_bar);
}

Profile transfer_long_crystal(const CutConfiguration& cut, const DerivedIndexSet& d,
                              const DetectionSetup& setup, ScanAxis axis, const Grid1D& grid) {
    if (cut.family != PmFamily::type2)
        fail(Errc::config, "the long-crystal transfer limit applies to type II cuts");
    const double m = transfer_slope_m(d);
    const double K = cut.K();
    Profile out;
    out.t = grid.points();
    out.value.assign(grid.n, 0.0);
    for (std::size_t i = 0; i < grid.n; ++i) {
        const Angle2 xs = (axis == ScanAxis::x) ? Angle2{grid.point(i), 0.0}
                                                : Angle2{0.0, grid.point(i)};
        const double E2 = std::norm(setup.pump.value(K * xs.x, K * xs.y));
        const double gp = filter_value(setup.filter, xs.x / m);
        const double gm = filter_value(setup.filter, -xs.x / m);
        out.value[i] = E2 * (gp * gp + gm * gm);
    }
    return out;
}

namespace {

// integral of |Phi|^2 d^2xi2 at one output angle and detuning; the xi2 window
// is centered where the pump argument vanishes, xi2 = -xi1 (1+nu)/(1-nu)
double singles_xi2_integral(const CutConfiguration& cut, const DerivedIndexSet& d,
                            const DetectionSetup& setup, Angle2 xi1, double nu,
                            std::size_t nx, std::size_t ny, double window_scale) {
    const double K = cut.K();
    const double ratio = (1.0 + nu) / (1.0 - nu);
    const Angle2 center = xi1 * (-ratio);
    const double half =
        window_scale * 2.0 * setup.pump.support_halfwidth_q() / (K * (1.0 - nu));
    const Grid1D gx(center.x - half, center.x + half, nx);
    const Grid1D gy(center.y - half, center.y + half, ny);
    const double hx = gx.spacing(), hy = gy.spacing();
    KahanSum inner;
    for (std::size_t i = 0; i < gx.n; ++i) {
        const double wx = trapezoid_weight(i, gx.n, hx);
        for (std::size_t j = 0; j < gy.n; ++j) {
            const Angle2 xi2{gx.point(i), gy.point(j)};
            inner.add(wx * trapezoid_weight(j, gy.n, hy) *
                      intensity(cut, d, setup, xi1, xi2, nu));
        }
    }
    return inner.value();
}

double singles_point(const CutConfiguration& cut, const DerivedIndexSet& d,
                     const DetectionSetup& setup, Angle2 xi1, const Grid1D& nu_grid,
                     bool delta, std::size_t nx, std::size_t ny, double window_scale) {
    KahanSum acc;
    const std::size_t nnu = delta ? 1 : nu_grid.n;
    for (std::size_t k = 0; k < nnu; ++k) {
        const double nu = delta ? setup.filter.nu0 : nu_grid.point(k);
        double wnu = 1.0;
        if (!delta) {
            wnu = trapezoid_weight(k, nu_grid.n, nu_grid.spacing());
            if (filter_value(setup.filter, nu) == 0.0) continue;
        }
        acc.add(wnu * singles_xi2_integral(cut, d, setup, xi1, nu, nx, ny, window_scale));
    }
    return acc.value();
}

} // namespace

SinglesMap singles_map(const CutConfiguration& cut, const DerivedIndexSet& d,
                       const DetectionSetup& setup, const Grid1D& x, const Grid1D& y,
                       const SinglesOptions& opt) {
    const bool delta = setup.filter.shape == FilterShape::delta;
    Grid1D nu_grid(-0.1, 0.1, 2);
    if (!delta) {
        // sample the filter support with a small margin
        double half;
        if (setup.filter.shape == FilterShape::rectangular)
            half = 0.5 * setup.filter.fwhm;
        else
            half = 1.5 * setup.filter.fwhm;
        half = std::min(half, kMaxDetuning - 1e-3);
        nu_grid = Grid1D(setup.filter.nu0 - half, setup.filter.nu0 + half,
                         std::max<std::size_t>(opt.nu_points, 3));
    }

    const std::size_t nx = opt.xi2_points;
    const std::size_t ny = opt.xi2y_points ? opt.xi2y_points : opt.xi2_points;
    SinglesMap out;
    out.map.x = x;
    out.map.y = y;
    out.map.v.assign(x.n * y.n, 0.0);
    parallel_for(x.n * y.n, [&](std::size_t idx) {
        const Angle2 xi1{x.point(idx / y.n), y.point(idx % y.n)};
        out.map.v[idx] = singles_point(cut, d, setup, xi1, nu_grid, delta, nx, ny,
                                       opt.window_scale);
    });

    if (opt.truncation_check) {
        // compare against a doubled xi2 window at the peak and axis midpoints
        std::size_t imax = 0;
        for (std::size_t i = 1; i < out.map.v.size(); ++i)
            if (out.map.v[i] > out.map.v[imax]) imax = i;
        const std::size_t probes[] = {imax, x.n / 2 * y.n + y.n / 2,
                                      (x.n - 1) * y.n + y.n / 2};
        double worst = 0.0;
        for (std::size_t p : probes) {
            const Angle2 xi1{x.point(p / y.n), y.point(p % y.n)};
            const double wide = singles_point(cut, d, setup, xi1, nu_grid, delta,
                                              2 * nx - 1, 2 * ny - 1, 2.0 * opt.window_scale);
            if (wide > 0.0)
                worst = std::max(worst, std::fabs(wide - out.map.v[p]) / wide);
        }
        out.outside_fraction = worst;
        out.truncation_warning = worst > 0.01;
    }
    return out;
}

SpectralSlices singles_slices(const CutConfiguration& cut, const DerivedIndexSet& d,
                              const DetectionSetup& setup, const Grid1D& xi1x, double xi1y,
                              const Grid1D& nu, const SinglesOptions& opt) {
    SpectralSlices out;
    out.xi1x = xi1x;
    out.nu = nu;
    out.v.assign(xi1x.n * nu.n, 0.0);
    const std::size_t nx = opt.xi2_points;
    const std::size_t ny = opt.xi2y_points ? opt.xi2y_points : opt.xi2_points;
    parallel_for(xi1x.n * nu.n, [&](std::size_t idx) {
        const Angle2 xi1{xi1x.point(idx / nu.n), xi1y};
        const double nuv = nu.point(idx % nu.n);
        out.v[idx] = singles_xi2_integral(cut, d, setup, xi1, nuv, nx, ny, opt.window_scale);
    });
    return out;
}

CollinearSpectrum collinear_spectrum(const CutConfiguration& cut, const Grid1D& dtheta,
                                     const Grid1D& nu) {
    CollinearSpectrum out;
    out.dtheta = dtheta;
    out.nu = nu;
    out.primary.assign(dtheta.n * nu.n, 0.0);
    const bool type2 = cut.family == PmFamily::type2;
    if (type2) out.secondary.assign(dtheta.n * nu.n, 0.0);
    out.locus_a.assign(dtheta.n, std::numeric_limits<double>::quiet_NaN());
    out.locus_b.assign(dtheta.n, std::numeric_limits<double>::quiet_NaN());

    const double half_arg = 0.5 * cut.K() * cut.Lz_um;
    parallel_for(dtheta.n, [&](std::size_t it) {
        CutConfiguration local = cut;
        local.theta = cut.theta + dtheta.point(it);
        const DerivedIndexSet d = derived_index_set(local);
        for (std::size_t k = 0; k < nu.n; ++k) {
            const double nuv = nu.point(k);
            if (type2) {
                const double soe = sinc(half_arg * mu_oe(d, nuv));
                const double seo = sinc(half_arg * mu_eo(d, nuv));
                out.primary[it * nu.n + k] = soe * soe;
                out.secondary[it * nu.n + k] = seo * seo;
            } else {
                const double s = sinc(half_arg * mu_oo(d, nuv));
                out.primary[it * nu.n + k] = s * s;
            }
        }
        if (type2) {
            // mu_oe = 0 and mu_eo = 0 are linear in nu
            const double mu0 = mu_oe(d, 0.0);
            const double slope = 0.5 * (d.n_bar_o - d.eta_bar);
            if (slope != 0.0) {
                out.locus_a[it] = -mu0 / slope;
                out.locus_b[it] = mu0 / slope;
            }
        } else {
            // mu_oo = 0 at nu^2 = (eta_p - n_bar)/(n_bar a), symmetric branches
            const double v2 = (d.eta_p - d.n_bar_o) / (d.n_bar_o * d.a);
            if (v2 >= 0.0) {
                out.locus_a[it] = std::sqrt(v2);
                out.locus_b[it] = -std::sqrt(v2);
            }
        }
    });
    return out;
}

Angle2 default_collection_angle(const CutConfiguration& cut, const DerivedIndexSet& d) {
    const Channel ch = (cut.family == PmFamily::type1_oo) ? Channel::oo : Channel::oe;
    const auto ring = ring_geometry(cut, d, 0.0, ch);
    if (!ring) return {0.0, 0.0};
    if (cut.family == PmFamily::type1_oo) return {ring->radius, 0.0};
    return ring->center; // beamlike/near-beamlike emission point
}

HomCurve hom_dip(const CutConfiguration& cut, const DerivedIndexSet& d,
                 const DetectionSetup& setup, Angle2 xi1, Angle2 xi2, const Grid1D& delays_um,
                 const Grid1D& nu) {
    const double K = cut.K();
    const bool delta = setup.filter.shape == FilterShape::delta;
    if (delta) fail(Errc::config, "HOM needs a finite detection bandwidth, not a delta filter");

    // spectral density at the fixed collection angles
    std::vector<double> S(nu.n), w(nu.n);
    const double h = nu.spacing();
    parallel_for(nu.n, [&](std::size_t k) {
        const double nuv = nu.point(k);
        S[k] = intensity(cut, d, setup, xi1, xi2, nuv);
        w[k] = trapezoid_weight(k, nu.n, h);
    });

    KahanSum a0;
    for (std::size_t k = 0; k < nu.n; ++k) a0.add(w[k] * S[k]);
    if (!(a0.value() > 0.0))
        fail(Errc::empty_grid, "HOM spectral density vanishes on the nu grid");

    HomCurve out;
    out.delay_um = delays_um.points();
    out.p_c.assign(delays_um.n, 0.0);
    parallel_for(delays_um.n, [&](std::size_t i) {
        const double dl = delays_um.point(i);
        KahanSum acc;
        for (std::size_t k = 0; k < nu.n; ++k)
            acc.add(w[k] * S[k] * std::cos(K * nu.point(k) * dl));
        out.p_c[i] = 0.5 * (1.0 - acc.value() / a0.value());
    });
    return out;
}

double curve_fwhm(const std::vector<double>& t, const std::vector<double>& v) {
    if (v.size() < 3 || v.size() != t.size()) return 0.0;
    std::size_t imax = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[imax]) imax = i;
    const double half = 0.5 * v[imax];
    auto cross = [&](int dir) {
        std::size_t i = imax;
        while (true) {
            std::size_t j = (dir > 0) ? i + 1 : i - 1;
            if ((dir > 0 && j >= v.size()) || (dir < 0 && i == 0))
                return (dir > 0) ? t.back() : t.front();
            if (v[j] < half && v[i] >= half) {
                const double f = (half - v[i]) / (v[j] - v[i]);
                return t[i] + f * (t[j] - t[i]);
            }
            i = j;
        }
    };
    return cross(+1) - cross(-1);
}

double first_minimum_after_peak(const std::vector<double>& t, const std::vector<double>& v) {
    std::size_t imax = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[imax]) imax = i;
    for (std::size_t i = imax + 1; i + 1 < v.size(); ++i) {
        if (v[i] <= v[i - 1] && v[i] <= v[i + 1]) {
            // parabolic refinement
            const double d1 = v[i - 1], d2 = v[i], d3 = v[i + 1];
            const double den = d1 - 2.0 * d2 + d3;
            double off = 0.0;
            if (den != 0.0) off = 0.5 * (d1 - d3) / den;
            return t[i] + off * (t[i + 1] - t[i]);
        }
    }
    return t.back();
}

double positive_lobe_centroid(const std::vector<double>& t, const std::vector<double>& v) {
    KahanSum num, den;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] <= 0.0) continue;
        num.add(t[i] * v[i]);
        den.add(v[i]);
    }
    return den.value() > 0.0 ? num.value() / den.value() : 0.0;
}

} // namespace spdc
