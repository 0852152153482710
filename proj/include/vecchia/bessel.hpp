/* Modified Bessel function of the second kind, fractional order. */
#pragma once

namespace vecchia {

// Smallest x at which bessel_k may underflow to exactly 0 for orders in
// (0, 5]; below this every return value is a positive double.  (True
// underflow happens once x - log K_nu(x) exceeds ~745.)
inline constexpr double kBesselKUnderflowX = 740.0;

// K_nu(x) for x > 0, any finite real order (symmetric in nu).  Relative
// accuracy is ~1e-12 or better over nu in [0, 5], x in [1e-6, 50].
// Throws argument_error for x <= 0 or non-finite input, numerical_error
// if the value overflows the double range.
double bessel_k(double nu, double x);

}  // namespace vecchia
