#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "spdc/error.hpp"

namespace spdc {

// sin(x)/x with a series guard below |x| = 1e-4 (through x^4).
double sinc(double x);

// Uniform closed grid, lo..hi inclusive with n >= 2 points.
struct Grid1D {
    double lo = 0.0;
    double hi = 1.0;
    std::size_t n = 2;

    Grid1D() = default;
    Grid1D(double lo_, double hi_, std::size_t n_);

    double spacing() const { return (hi - lo) / static_cast<double>(n - 1); }
    double point(std::size_t i) const {
        return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    std::vector<double> points() const;
    // nested refinement: same endpoints, doubled density
    Grid1D refined() const { return Grid1D(lo, hi, 2 * n - 1); }
};

struct Tolerance {
    double abs = 1e-9;
    double rel = 1e-9;
    int max_refinements = 1;
};

// Compensated (Kahan) accumulator; deterministic for a fixed visit order.
class KahanSum {
  public:
    void add(double x) {
        double y = x - c_;
        double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

  private:
    double s_ = 0.0;
    double c_ = 0.0;
};

double kahan_total(std::span<const double> values);

// Composite trapezoid weight for index i of an n-point closed grid.
inline double trapezoid_weight(std::size_t i, std::size_t n, double h) {
    return (i == 0 || i == n - 1) ? 0.5 * h : h;
}

struct IntegrateResult {
    double value = 0.0;
    double est_error = 0.0;
};

// Deterministic composite trapezoid with one nested-refinement error check.
// Throws Errc::not_converged when the refinement shifts the value beyond tol.
IntegrateResult integrate(const std::function<double(double)>& fn, const Grid1D& g,
                          const Tolerance& tol);
IntegrateResult integrate(const std::function<double(double, double)>& fn, const Grid1D& gx,
                          const Grid1D& gy, const Tolerance& tol);
IntegrateResult integrate(const std::function<double(double, double, double)>& fn,
                          const Grid1D& gx, const Grid1D& gy, const Grid1D& gz,
                          const Tolerance& tol);

// Plain trapezoid over one fixed grid (no refinement pass).
double trapezoid(const std::function<double(double)>& fn, const Grid1D& g);

// Bracketed hybrid secant/bisection. Requires fn(lo)*fn(hi) <= 0.
// Stops when both the bracket width and |fn| are below tol; <= 200 iterations.
double find_root(const std::function<double(double)>& fn, double lo, double hi,
                 double tol = 1e-13);

// Scan [lo, hi] at the given step for the first sign change, then polish with
// find_root. Throws Errc::no_root when fn does not change sign on the range.
double scan_and_find_root(const std::function<double(double)>& fn, double lo, double hi,
                          double step, double tol = 1e-13);

} // namespace spdc
