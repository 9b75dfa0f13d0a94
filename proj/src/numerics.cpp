#include "spdc/numerics.hpp"

#include <cmath>
#include <cstdlib>

namespace spdc {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::config: return "config";
    case Errc::out_of_range: return "out_of_range";
    case Errc::pole_proximity: return "pole_proximity";
    case Errc::out_of_model: return "out_of_model";
    case Errc::empty_grid: return "empty_grid";
    case Errc::no_root: return "no_root";
    case Errc::no_sign_change: return "no_sign_change";
    case Errc::not_converged: return "not_converged";
    }
    return "unknown";
}

double sinc(double x) {
    double ax = std::fabs(x);
    if (ax >= 1e-4) return std::sin(x) / x;
    double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
}

Grid1D::Grid1D(double lo_, double hi_, std::size_t n_) : lo(lo_), hi(hi_), n(n_) {
    if (n < 2) fail(Errc::config, "Grid1D needs at least 2 points");
    if (!(hi > lo)) fail(Errc::config, "Grid1D needs hi > lo");
}

std::vector<double> Grid1D::points() const {
    std::vector<double> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = point(i);
    return p;
}

double kahan_total(std::span<const double> values) {
    KahanSum s;
    for (double v : values) s.add(v);
    return s.value();
}

double trapezoid(const std::function<double(double)>& fn, const Grid1D& g) {
    const double h = g.spacing();
    KahanSum s;
    for (std::size_t i = 0; i < g.n; ++i) s.add(trapezoid_weight(i, g.n, h) * fn(g.point(i)));
    return s.value();
}

namespace {

bool within(double coarse, double fine, const Tolerance& tol) {
    return std::fabs(fine - coarse) <= tol.abs + tol.rel * std::fabs(fine);
}

} // namespace

IntegrateResult integrate(const std::function<double(double)>& fn, const Grid1D& g,
                          const Tolerance& tol) {
    double coarse = trapezoid(fn, g);
    double fine = trapezoid(fn, g.refined());
    if (!within(coarse, fine, tol))
        fail(Errc::not_converged, "1-D integral changed by more than tol under refinement");
    return {fine, std::fabs(fine - coarse)};
}

IntegrateResult integrate(const std::function<double(double, double)>& fn, const Grid1D& gx,
                          const Grid1D& gy, const Tolerance& tol) {
    auto eval = [&](const Grid1D& ax, const Grid1D& ay) {
        const double hx = ax.spacing(), hy = ay.spacing();
        KahanSum s;
        for (std::size_t i = 0; i < ax.n; ++i) {
            const double wx = trapezoid_weight(i, ax.n, hx);
            const double x = ax.point(i);
            for (std::size_t j = 0; j < ay.n; ++j)
                s.add(wx * trapezoid_weight(j, ay.n, hy) * fn(x, ay.point(j)));
        }
        return s.value();
    };
    double coarse = eval(gx, gy);
    double fine = eval(gx.refined(), gy.refined());
    if (!within(coarse, fine, tol))
        fail(Errc::not_converged, "2-D integral changed by more than tol under refinement");
    return {fine, std::fabs(fine - coarse)};
}

IntegrateResult integrate(const std::function<double(double, double, double)>& fn,
                          const Grid1D& gx, const Grid1D& gy, const Grid1D& gz,
                          const Tolerance& tol) {
    auto eval = [&](const Grid1D& ax, const Grid1D& ay, const Grid1D& az) {
        const double hx = ax.spacing(), hy = ay.spacing(), hz = az.spacing();
        KahanSum s;
        for (std::size_t i = 0; i < ax.n; ++i) {
            const double wx = trapezoid_weight(i, ax.n, hx);
            const double x = ax.point(i);
            for (std::size_t j = 0; j < ay.n; ++j) {
                const double wxy = wx * trapezoid_weight(j, ay.n, hy);
                const double y = ay.point(j);
                for (std::size_t k = 0; k < az.n; ++k)
                    s.add(wxy * trapezoid_weight(k, az.n, hz) * fn(x, y, az.point(k)));
            }
        }
        return s.value();
    };
    double coarse = eval(gx, gy, gz);
    double fine = eval(gx.refined(), gy.refined(), gz.refined());
    if (!within(coarse, fine, tol))
        fail(Errc::not_converged, "3-D integral changed by more than tol under refinement");
    return {fine, std::fabs(fine - coarse)};
}

double find_root(const std::function<double(double)>& fn, double lo, double hi, double tol) {
    double flo = fn(lo);
    double fhi = fn(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        fail(Errc::no_sign_change, "find_root: bracket endpoints have the same sign");

    double mid = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        // secant candidate, fall back to bisection when it leaves the bracket
        double cand = hi - fhi * (hi - lo) / (fhi - flo);
        if (!(cand > lo && cand < hi)) cand = 0.5 * (lo + hi);
        double fc = fn(cand);
        if (fc == 0.0) return cand;
        if ((fc > 0.0) == (flo > 0.0)) {
            lo = cand;
            flo = fc;
        } else {
            hi = cand;
            fhi = fc;
        }
        mid = 0.5 * (lo + hi);
        if (hi - lo <= tol && std::fabs(fc) <= tol) return mid;
    }
    if (hi - lo <= tol) return mid;
    fail(Errc::not_converged, "find_root: iteration cap reached");
}

double scan_and_find_root(const std::function<double(double)>& fn, double lo, double hi,
                          double step, double tol) {
    double x0 = lo;
    double f0 = fn(x0);
    while (x0 < hi) {
        double x1 = std::min(x0 + step, hi);
        double f1 = fn(x1);
        if (f0 == 0.0) return x0;
        if ((f0 > 0.0) != (f1 > 0.0)) return find_root(fn, x0, x1, tol);
        x0 = x1;
        f0 = f1;
        if (x1 >= hi) break;
    }
    fail(Errc::no_root, "no sign change found on the scan range");
}

} // namespace spdc
