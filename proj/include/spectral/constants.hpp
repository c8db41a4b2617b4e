#pragma once

#include "spectral/numerics.hpp"

namespace spectral::constants {

/// Two-sided numerical enclosure of the remainder constant C(sigma, n).
struct BoundC {
  double sigma = 1.5;
  int dim = 2;
  double lower = 0.0;
  double upper = 0.0;
  double quad_error = 0.0;  // absolute error carried by `lower`
};

/// Semiclassical constant L^cl_{sigma,n} = Gamma(sigma+1) /
/// ((4 pi)^{n/2} Gamma(sigma+1+n/2)).
double lieb_thirring(double sigma, int dim);

/// C_n = 2 Gamma(n/2) / (sqrt(pi) Gamma((n-1)/2)), the reciprocal of
/// int_0^{pi/2} sin^{n-2}.
double angular_normalizer(int dim);

/// I(sigma, n) = int_0^pi (1-s/pi)^{n-1}
///   (1 - C_n int_0^{pi/2} (1 - cos^2(th)/s^2)_+^{sigma+n/2} sin^{n-2} dth) ds.
/// The inner integral is taken in the smooth theta form, split at
/// th = arccos(s) when s < 1; the outer integral has a panel boundary at
/// s = 1.
numerics::QuadratureResult remainder_integral(double sigma, int dim,
                                              const numerics::Tolerance& tol);
numerics::QuadratureResult remainder_integral(double sigma, int dim);

/// Rigorous lower bound (L_{sigma,n} / (2 L_{sigma,n-1})) I(sigma, n).
/// Values are memoised per (sigma, dim) behind a mutex.
double c_lower(double sigma, int dim);

/// Closed-form upper bound sqrt(pi) Gamma(sigma+(n+1)/2) /
/// (4 n Gamma(sigma+1+n/2)).
double c_upper(double sigma, int dim);

BoundC bound_c(double sigma, int dim);

/// The earlier two-dimensional constant 11/(9 pi^2) - 3/(20 pi^4)
/// - (2/(5 pi^2)) ln(4 pi / 3), kept for comparison; about 0.0642.
double glw_reference_constant();

/// Validates a user-supplied override for C(sigma, n): nonnegative, and
/// rejected above c_upper. Returns the value to use (the override, or
/// c_lower when absent).
double resolve_c(double sigma, int dim, const double* override_value);

/// Overrides the tolerance behind c_lower / bound_c (the per-(sigma, n)
/// cache is cleared). The CLI uses this to honor SPECTRAL_BOUNDS_TOL.
void set_quadrature_tolerance(const numerics::Tolerance& tol);

}  // namespace spectral::constants
