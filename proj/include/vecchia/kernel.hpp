/* Matern covariance family: covariance, spectral density, microergodic
 * quantities, and the correlation-level calibration solver. */
#pragma once

namespace vecchia {

// The Matern triple (sigma^2, phi, nu).  Construction validates that all
// three are finite and strictly positive.
struct KernelParams {
    double sigma2;
    double phi;
    double nu;
    KernelParams(double sigma2_, double phi_, double nu_);
};

struct MicroergodicValue {
    double value;  // sigma^2 * phi^(2 nu), strictly positive
};

// Matern correlation at distance h >= 0 (the sigma^2 = 1 covariance):
// (phi h)^nu / (Gamma(nu) 2^(nu-1)) K_nu(phi h), with the h = 0 limit 1.
double matern_corr(double phi, double nu, double h);

// Matern covariance sigma^2 * matern_corr(phi, nu, h).
// Throws argument_error for negative or non-finite h.
double matern_cov(const KernelParams& params, double h);

// Spectral density on R^d (d in {1, 2}):
//   f(u) = C sigma^2 phi^(2 nu) / (phi^2 + u^2)^(nu + d/2),
// with C = Gamma(nu + d/2) / (Gamma(nu) pi^(d/2)) so that f integrates to
// sigma^2 over R^d.
double spectral_density(const KernelParams& params, double u, int d);

MicroergodicValue microergodic(const KernelParams& params);

// sigma_0^2 phi_0^(2 nu) / phi_1^(2 nu): the variance that keeps the
// microergodic value unchanged when the decay is moved to phi1.
double equivalent_sigma2(const KernelParams& source, double phi1);

// Solve matern_corr(phi, nu, distance) = level for phi by bracketed
// bisection to 1e-10 relative.  Default level 0.05 is the calibration rule
// used throughout the studies.  Throws argument_error on invalid inputs.
double calibrate_phi(double nu, double distance, double level = 0.05);

}  // namespace vecchia
