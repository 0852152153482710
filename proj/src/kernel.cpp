/* Matern covariance family. */
#include "vecchia/kernel.hpp"

#include <cmath>

#include "vecchia/bessel.hpp"
#include "vecchia/common.hpp"

namespace vecchia {

namespace {
constexpr double kPi = 3.14159265358979323846;

void check_positive_finite(double v, const char* what) {
    if (!std::isfinite(v) || v <= 0.0) {
        throw argument_error(std::string("KernelParams: ") + what +
                             " must be finite and > 0");
    }
}
}  // namespace

KernelParams::KernelParams(double sigma2_, double phi_, double nu_)
    : sigma2(sigma2_), phi(phi_), nu(nu_) {
    check_positive_finite(sigma2, "sigma2");
    check_positive_finite(phi, "phi");
    check_positive_finite(nu, "nu");
}

double matern_corr(double phi, double nu, double h) {
    if (!std::isfinite(h) || h < 0.0)
        throw argument_error("matern_corr: distance must be finite and >= 0");
    if (h == 0.0) return 1.0;
    const double t = phi * h;
    // K_nu underflows to 0 well before this; the correlation is already ~0.
    if (t > kBesselKUnderflowX) return 0.0;
    const double norm = std::exp((nu - 1.0) * std::log(2.0) + std::lgamma(nu));
    return std::pow(t, nu) * bessel_k(nu, t) / norm;
}

double matern_cov(const KernelParams& params, double h) {
    return params.sigma2 * matern_corr(params.phi, params.nu, h);
}

double spectral_density(const KernelParams& params, double u, int d) {
    if (d != 1 && d != 2) throw argument_error("spectral_density: d must be 1 or 2");
    if (!std::isfinite(u)) throw argument_error("spectral_density: non-finite frequency");
    const double half_d = 0.5 * d;
    const double c = std::tgamma(params.nu + half_d) /
                     (std::tgamma(params.nu) * std::pow(kPi, half_d));
    return c * params.sigma2 * std::pow(params.phi, 2.0 * params.nu) /
           std::pow(params.phi * params.phi + u * u, params.nu + half_d);
}

MicroergodicValue microergodic(const KernelParams& params) {
    return {params.sigma2 * std::pow(params.phi, 2.0 * params.nu)};
}

double equivalent_sigma2(const KernelParams& source, double phi1) {
    if (!std::isfinite(phi1) || phi1 <= 0.0)
        throw argument_error("equivalent_sigma2: phi1 must be finite and > 0");
    return source.sigma2 * std::pow(source.phi / phi1, 2.0 * source.nu);
}

double calibrate_phi(double nu, double distance, double level) {
    if (!std::isfinite(nu) || nu <= 0.0)
        throw argument_error("calibrate_phi: nu must be finite and > 0");
    if (!std::isfinite(distance) || distance <= 0.0)
        throw argument_error("calibrate_phi: distance must be finite and > 0");
    if (!(level > 0.0 && level < 1.0))
        throw argument_error("calibrate_phi: level must be in (0, 1)");
    // matern_corr is strictly decreasing in phi at fixed h > 0, from 1 at
    // phi -> 0 to 0 at phi -> inf; bisect on a bracket grown geometrically.
    double lo = 1e-8, hi = 1.0;
    while (matern_corr(hi, nu, distance) > level) {
        hi *= 2.0;
        if (hi > 1e12) throw numerical_error("calibrate_phi: bracket growth failed");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (matern_corr(mid, nu, distance) > level)
            lo = mid;
        else
            hi = mid;
        if ((hi - lo) <= 1e-10 * hi) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace vecchia
