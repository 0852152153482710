/* Accuracy and domain tests for the fractional-order K_nu implementation. */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "vecchia/bessel.hpp"
#include "vecchia/common.hpp"

namespace {

#include "bessel_table.inc"

constexpr double kPi = 3.14159265358979323846;

double rel_err(double got, double want) {
    return std::abs(got - want) / std::abs(want);
}

/* Independent oracle: K_nu(x) = \int_0^inf e^{-x cosh t} cosh(nu t) dt,
 * composite Simpson with panel doubling until self-consistent. */
double bessel_k_quadrature(double nu, double x) {
    // Beyond tmax the integrand has underflowed to zero.
    const double tmax = std::acosh(760.0 / x);
    auto f = [&](double t) { return std::exp(-x * std::cosh(t)) * std::cosh(nu * t); };
    double prev = 0.0;
    for (int panels = 1024; panels <= (1 << 17); panels *= 2) {
        const double h = tmax / panels;
        double sum = f(0.0) + f(tmax);
        for (int i = 1; i < panels; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(i * h);
        const double integral = sum * h / 3.0;
        if (panels > 1024 && rel_err(integral, prev) < 1e-13) return integral;
        prev = integral;
    }
    return prev;
}

double k_half(double x) { return std::sqrt(kPi / (2.0 * x)) * std::exp(-x); }

}  // namespace

TEST_CASE("matches high-precision reference table") {
    for (const KRef& r : k_ref) {
        const double got = vecchia::bessel_k(r.nu, r.x);
        INFO("nu=", r.nu, " x=", r.x);
        CHECK(rel_err(got, r.k) < 1e-12);
    }
}

TEST_CASE("matches integral-representation quadrature") {
    const double nus[] = {0.05, 0.25, 0.49, 0.51, 1.0, 1.37, 2.0, 3.3, 4.99, 5.0};
    const double xs[] = {0.05, 0.5, 1.0, 1.99, 2.01, 5.0, 12.0, 16.99, 17.01, 30.0, 50.0};
    for (double nu : nus) {
        for (double x : xs) {
            const double got = vecchia::bessel_k(nu, x);
            const double want = bessel_k_quadrature(nu, x);
            INFO("nu=", nu, " x=", x);
            CHECK(rel_err(got, want) < 1e-9);
        }
    }
}

TEST_CASE("half-odd-integer orders hit the closed forms") {
    const double xs[] = {1e-6, 0.01, 0.5, 1.0, 2.0, 7.5, 17.5, 50.0, 300.0};
    for (double x : xs) {
        INFO("x=", x);
        CHECK(rel_err(vecchia::bessel_k(0.5, x), k_half(x)) < 1e-14);
        CHECK(rel_err(vecchia::bessel_k(1.5, x), k_half(x) * (1.0 + 1.0 / x)) < 1e-14);
        CHECK(rel_err(vecchia::bessel_k(2.5, x),
                      k_half(x) * (1.0 + 3.0 / x + 3.0 / (x * x))) < 1e-14);
    }
}

TEST_CASE("agrees with std::cyl_bessel_k spot checks") {
    // Loose tolerance: the libstdc++ routine itself is only good to ~1e-10.
    const double pts[][2] = {{0.25, 1.0}, {1.0, 0.3}, {2.3, 4.0}, {0.75, 9.0}};
    for (auto& p : pts) {
        INFO("nu=", p[0], " x=", p[1]);
        CHECK(rel_err(vecchia::bessel_k(p[0], p[1]), std::cyl_bessel_k(p[0], p[1])) < 5e-9);
    }
}

TEST_CASE("symmetric in the order") {
    for (double nu : {0.3, 1.7, 2.5, 4.2})
        CHECK(vecchia::bessel_k(-nu, 1.234) == vecchia::bessel_k(nu, 1.234));
}

TEST_CASE("continuous across algorithm switch points") {
    for (double nu : {0.05, 0.49, 1.9, 3.14, 4.99}) {
        for (double x0 : {2.0, 17.0}) {
            const double lo = vecchia::bessel_k(nu, x0 * (1.0 - 1e-9));
            const double hi = vecchia::bessel_k(nu, x0 * (1.0 + 1e-9));
            INFO("nu=", nu, " x0=", x0);
            CHECK(rel_err(lo, hi) < 1e-7);  // ~1e-9 slope effect + branch mismatch
        }
    }
}

TEST_CASE("scaled large-x path stays accurate, then underflows to zero") {
    // Straddle the internal e^x-scaling switch; closed form is exact here.
    for (double x : {700.5, 701.5, 710.0}) {
        CHECK(rel_err(vecchia::bessel_k(0.5, x), k_half(x)) < 1e-12);
        CHECK(rel_err(vecchia::bessel_k(1.5, x), k_half(x) * (1.0 + 1.0 / x)) < 1e-12);
    }
    CHECK(vecchia::bessel_k(0.5, 739.0) > 0.0);  // kBesselKUnderflowX is honest
    CHECK(vecchia::bessel_k(0.5, 800.0) == 0.0);
    CHECK(vecchia::bessel_k(5.0, 800.0) == 0.0);
}

TEST_CASE("tiny-x growth: leading-order Gamma behaviour") {
    // K_nu(x) ~ Gamma(nu) 2^{nu-1} x^{-nu} as x -> 0 (nu > 0).
    for (double nu : {0.25, 1.0, 2.5, 5.0}) {
        const double x = 1e-6;
        const double lead = 0.5 * std::tgamma(nu) * std::pow(2.0 / x, nu);
        INFO("nu=", nu);
        const double tol = nu < 0.5 ? 1e-2 : 1e-6;  // next term is O(x^{2 nu})
        CHECK(rel_err(vecchia::bessel_k(nu, x), lead) < tol);
    }
}

TEST_CASE("domain and range errors") {
    CHECK_THROWS_AS(vecchia::bessel_k(1.0, 0.0), vecchia::argument_error);
    CHECK_THROWS_AS(vecchia::bessel_k(1.0, -3.0), vecchia::argument_error);
    CHECK_THROWS_AS(vecchia::bessel_k(1.0, std::nan("")), vecchia::argument_error);
    CHECK_THROWS_AS(vecchia::bessel_k(std::nan(""), 1.0), vecchia::argument_error);
    CHECK_THROWS_AS(vecchia::bessel_k(1.0, std::numeric_limits<double>::infinity()),
                    vecchia::argument_error);
    // x so small that K_5 exceeds the double range
    CHECK_THROWS_AS(vecchia::bessel_k(5.0, 1e-61), vecchia::numerical_error);
    CHECK(std::isfinite(vecchia::bessel_k(5.0, 1e-59)));
}
