/* Fractional-order modified Bessel function K_nu.
 *
 * Organization follows the classic SLATEC dbsknu scheme (Temme, J. Comput.
 * Phys. 19 (1975) 324-337): the order is reduced to dnu in [-0.5, 0.5) and
 * the pair (K_dnu, K_{dnu+1}) is built from
 *   - the half-odd-integer closed form when |dnu| = 0.5,
 *   - Temme's power series for x <= 2,
 *   - a Miller-type backward recurrence for 2 < x <= 17,
 *   - the large-x asymptotic expansion for x > 17,
 * then lifted to the requested order by the stable forward recurrence
 * K_{m+1}(x) = (2m/x) K_m(x) + K_{m-1}(x).  For x beyond ~701 everything is
 * carried as e^x K to dodge premature underflow.
 */
#include "vecchia/bessel.hpp"

#include <cmath>
#include <limits>

#include "vecchia/common.hpp"

namespace vecchia {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtHalfPi = 1.25331413731550025;  // sqrt(pi/2)
constexpr double kSeriesEnd = 2.0;                   // Temme series for x <= 2
constexpr double kMillerEnd = 17.0;                  // Miller scheme up to here
constexpr double kScaleX = 701.0;                    // compute e^x K beyond this
constexpr double kTol = 1e-15;

/* Taylor coefficients resolving (1/Gamma(1-mu) - 1/Gamma(1+mu))/(2 mu)
 * near mu = 0 (Temme's f0 indeterminacy). */
constexpr double kG1Coef[8] = {
    0.577215664901533,   -0.0420026350340952, -0.0421977345555443,
    0.007218943246663,   -2.152416741149e-4,  -2.01348547807e-5,
    1.133027232e-6,       6.116095e-9};

struct Pair {
    double lo;  // K_dnu   (times e^x when scaled)
    double hi;  // K_dnu+1 (times e^x when scaled)
};

/* Temme power series, x <= 2, |dnu| < 0.5. */
Pair series_small_x(double x, double dnu) {
    const double dnu2 = std::abs(dnu) >= kTol ? dnu * dnu : 0.0;
    const double t1 = 1.0 / std::tgamma(1.0 - dnu);
    const double t2 = 1.0 / std::tgamma(1.0 + dnu);
    double g1;
    if (std::abs(dnu) > 0.1) {
        g1 = (t1 - t2) / (dnu + dnu);
    } else {
        double s = kG1Coef[0];
        double mu_pow = 1.0;
        for (int k = 1; k < 8; ++k) {
            mu_pow *= dnu2;
            const double term = kG1Coef[k] * mu_pow;
            s += term;
            if (std::abs(term) < kTol) break;
        }
        g1 = -s;
    }
    const double g2 = (t1 + t2) * 0.5;
    const double log_rx = std::log(2.0 / x);
    const double fmu = dnu * log_rx;
    double fc = 1.0;
    double smu = 1.0;
    if (dnu != 0.0) {
        fc = dnu * kPi / std::sin(dnu * kPi);
        if (fmu != 0.0) smu = std::sinh(fmu) / fmu;
    }
    double f = fc * (g1 * std::cosh(fmu) + g2 * log_rx * smu);
    const double efmu = std::exp(fmu);
    double p = 0.5 * efmu / t2;
    double q = 0.5 / (efmu * t1);
    double ak = 1.0;
    double bk = 1.0;
    double ck = 1.0;
    double s1 = f;
    double s2 = p;
    if (x >= kTol) {
        const double cx = 0.25 * x * x;
        double rel;
        do {
            f = (ak * f + p + q) / (bk - dnu2);
            p /= ak - dnu;
            q /= ak + dnu;
            ck *= cx / ak;
            const double inc1 = ck * f;
            const double inc2 = ck * (p - ak * f);
            s1 += inc1;
            s2 += inc2;
            bk += ak + ak + 1.0;
            ak += 1.0;
            rel = std::abs(inc1) / (std::abs(s1) + 1.0) +
                  std::abs(inc2) / (std::abs(s2) + 1.0);
        } while (rel > kTol);
    }
    return {s1, s2 * (2.0 / x)};
}

/* Miller backward recurrence on the confluent hypergeometric
 * representation, 2 < x <= 17, |dnu| < 0.5; coef = sqrt(pi/(2x)) e^{-x}
 * (or its scaled variant). */
Pair miller_mid_x(double x, double dnu, double coef) {
    const double dnu2 = std::abs(dnu) >= kTol ? dnu * dnu : 0.0;
    constexpr int kMaxDepth = 160;
    double a[kMaxDepth];
    double b[kMaxDepth];
    const double etest = std::cos(kPi * dnu) / (kPi * x * kTol);
    double fks = 1.0;
    double fhs = 0.25;
    double fk = 0.0;
    double ck = x + x + 2.0;
    double p1 = 0.0;
    double p2 = 1.0;
    int depth = 0;
    do {
        if (depth >= kMaxDepth)
            throw numerical_error("bessel_k: backward recurrence failed to converge");
        fk += 1.0;
        const double ak = (fhs - dnu2) / (fks + fk);
        const double bk = ck / (fk + 1.0);
        const double pt = p2;
        p2 = bk * p2 - ak * p1;
        p1 = pt;
        a[depth] = ak;
        b[depth] = bk;
        ck += 2.0;
        fks += fk + fk + 1.0;
        fhs += fk + fk;
        ++depth;
    } while (etest > fk * p1);

    double s = 1.0;
    p1 = 0.0;
    p2 = 1.0;
    for (int i = depth - 1; i >= 0; --i) {
        const double pt = p2;
        p2 = (b[i] * p2 - p1) / a[i];
        p1 = pt;
        s += p2;
    }
    const double lo = coef * (p2 / s);
    const double hi = lo * (x + dnu + 0.5 - p1 / p2) / x;
    return {lo, hi};
}

/* Large-x asymptotic expansion, x > 17, |dnu| < 0.5. */
Pair asymptotic_big_x(double x, double dnu, double coef) {
    const double two_dnu = dnu + dnu;
    double fmu = std::abs(two_dnu) >= kTol ? two_dnu * two_dnu : 0.0;
    const double ex = 8.0 * x;
    double lo = 0.0;
    double hi = 0.0;
    for (int member = 0; member < 2; ++member) {
        lo = hi;
        double s = 1.0;
        double ak = 0.0;
        double ck = 1.0;
        double sqk = 1.0;
        double dk = ex;
        for (int j = 0; j < 30; ++j) {
            ck = ck * (fmu - sqk) / dk;
            s += ck;
            dk += ex;
            ak += 8.0;
            sqk += ak;
            if (std::abs(ck) < kTol) break;
        }
        hi = s * coef;
        fmu += 8.0 * dnu + 4.0;  // 4 dnu^2 -> 4 (dnu+1)^2
    }
    return {lo, hi};
}

}  // namespace

double bessel_k(double nu, double x) {
    if (!std::isfinite(x) || !std::isfinite(nu))
        throw argument_error("bessel_k: non-finite input");
    if (x <= 0.0) throw argument_error("bessel_k: requires x > 0");

    const double order = std::abs(nu);  // K_{-nu} = K_nu
    if (order > 1.0 && order * std::log(2.0 / x) > 690.0)
        throw numerical_error("bessel_k: result overflows double range");

    const int inu = static_cast<int>(order + 0.5);
    const double dnu = order - inu;  // in [-0.5, 0.5)
    const bool scaled = x > kScaleX;

    Pair base{};
    if (std::abs(dnu) == 0.5 || x > kSeriesEnd) {
        double coef = kSqrtHalfPi / std::sqrt(x);
        if (!scaled) coef *= std::exp(-x);
        if (std::abs(dnu) == 0.5) {
            base = {coef, coef};  // K_{-1/2} = K_{1/2} = sqrt(pi/(2x)) e^{-x}
        } else if (x > kMillerEnd) {
            base = asymptotic_big_x(x, dnu, coef);
        } else {
            base = miller_mid_x(x, dnu, coef);
        }
    } else {
        base = series_small_x(x, dnu);
    }

    double s1 = base.lo;
    double s2 = base.hi;
    const double rx = 2.0 / x;
    double ck = (dnu + dnu + 2.0) / x;
    for (int i = 0; i < inu; ++i) {
        const double st = s2;
        s2 = ck * s2 + s1;
        s1 = st;
        ck += rx;
    }
    if (!scaled) return s1;
    return std::exp(-x + std::log(s1));  // underflows to 0 for huge x
}

}  // namespace vecchia
