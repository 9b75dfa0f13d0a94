#include <doctest.h>

#include <cmath>
#include <numbers>

#include "spdc/numerics.hpp"

using namespace spdc;

TEST_CASE("sinc values") {
    CHECK(sinc(0.0) == 1.0);
    CHECK(std::fabs(sinc(std::numbers::pi)) < 1e-15);
    // 30-digit reference: sin(1e-5)/1e-5
    CHECK(std::fabs(sinc(1e-5) - 0.999999999983333333333416666667) < 1e-14);
    // continuity across the series/ratio boundary
    CHECK(std::fabs(sinc(1e-4) - 0.999999998333333334166666666468) < 1e-14);
    CHECK(std::fabs(sinc(std::nextafter(1e-4, 1.0)) - sinc(std::nextafter(1e-4, 0.0))) < 1e-12);
    for (double x : {1e-3, 0.1, 1.0, 5.0, 50.0})
        CHECK(std::fabs(sinc(x) - std::sin(x) / x) < 1e-15);
}

TEST_CASE("grid basics") {
    Grid1D g(0.0, 1.0, 5);
    CHECK(g.spacing() == doctest::Approx(0.25));
    CHECK(g.point(0) == 0.0);
    CHECK(g.point(4) == 1.0);
    Grid1D r = g.refined();
    CHECK(r.n == 9);
    CHECK(r.point(0) == 0.0);
    CHECK(r.point(8) == 1.0);
    CHECK_THROWS_AS(Grid1D(0.0, 1.0, 1), Error);
    CHECK_THROWS_AS(Grid1D(1.0, 1.0, 3), Error);
}

TEST_CASE("kahan sum") {
    // 1e8 tiny values next to a large one: naive summation loses them
    std::vector<double> v;
    v.push_back(1e16);
    for (int i = 0; i < 1000; ++i) v.push_back(1.0);
    v.push_back(-1e16);
    CHECK(kahan_total(v) == doctest::Approx(1000.0).epsilon(1e-12));
}

TEST_CASE("trapezoid integrates a line exactly") {
    auto r = integrate([](double x) { return x; }, Grid1D(0.0, 1.0, 401), Tolerance{1e-6, 1e-6, 1});
    CHECK(std::fabs(r.value - 0.5) < 1e-6);
}

TEST_CASE("sinc^2 integral against pi/a") {
    const double a = 3.0;
    auto fn = [a](double x) {
        double s = sinc(a * x);
        return s * s;
    };
    auto r = integrate(fn, Grid1D(-80.0, 80.0, 6401), Tolerance{1e-4, 1e-4, 1});
    // finite window truncates the 1/x^2 tail, keep 0.5%
    CHECK(std::fabs(r.value - std::numbers::pi / a) / (std::numbers::pi / a) < 0.005);
}

TEST_CASE("integration is linear in the integrand") {
    Grid1D g(0.0, 2.0, 257);
    Tolerance tol{1e-3, 1e-3, 1};
    auto f = [](double x) { return std::sin(3.0 * x); };
    auto h = [](double x) { return std::exp(-x); };
    auto both = integrate([&](double x) { return f(x) + h(x); }, g, tol);
    auto fi = integrate(f, g, tol);
    auto hi = integrate(h, g, tol);
    CHECK(std::fabs(both.value - (fi.value + hi.value)) < 1e-12);
}

TEST_CASE("refinement failure reports NotConverged") {
    auto fn = [](double x) { return x * x; };
    CHECK_THROWS_AS(integrate(fn, Grid1D(0.0, 1.0, 3), Tolerance{1e-9, 1e-9, 1}), Error);
    try {
        integrate(fn, Grid1D(0.0, 1.0, 3), Tolerance{1e-9, 1e-9, 1});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_converged);
        CHECK(e.numeric());
    }
}

TEST_CASE("2-D and 3-D tensor integrals") {
    auto r2 = integrate([](double x, double y) { return x + y; }, Grid1D(0, 1, 33),
                        Grid1D(0, 1, 33), Tolerance{1e-9, 1e-9, 1});
    CHECK(r2.value == doctest::Approx(1.0).epsilon(1e-10));
    auto r3 = integrate([](double x, double y, double z) { return x * y * z; }, Grid1D(0, 1, 9),
                        Grid1D(0, 1, 9), Grid1D(0, 1, 9), Tolerance{1e-9, 1e-9, 1});
    CHECK(r3.value == doctest::Approx(0.125).epsilon(1e-10));
}

TEST_CASE("find_root basics") {
    CHECK(std::fabs(find_root([](double x) { return x - 1.0; }, 0.0, 2.0, 1e-12) - 1.0) < 1e-12);
    CHECK(std::fabs(find_root([](double x) { return std::cos(x); }, 1.0, 2.0, 1e-13) -
                    std::numbers::pi / 2) < 1e-12);
    CHECK_THROWS_AS(find_root([](double x) { return x * x + 1.0; }, 0.0, 1.0), Error);
}

TEST_CASE("scan_and_find_root reports NoRoot without a sign change") {
    CHECK_THROWS_AS(scan_and_find_root([](double x) { return 1.0 + x * x; }, 0.0, 1.0, 0.1),
                    Error);
    try {
        scan_and_find_root([](double x) { return 1.0 + x * x; }, 0.0, 1.0, 0.1);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::no_root);
    }
}

TEST_CASE("kernels are pure: repeated calls bitwise identical") {
    const double a = sinc(0.7321);
    const double b = sinc(0.7321);
    CHECK(a == b);
    auto fn = [](double x) { return std::cos(3 * x) + x; };
    CHECK(trapezoid(fn, Grid1D(0, 1, 101)) == trapezoid(fn, Grid1D(0, 1, 101)));
}
