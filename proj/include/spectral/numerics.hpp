#pragma once

#include <functional>
#include <span>
#include <vector>

namespace spectral::numerics {

/// Accuracy targets for adaptive quadrature.
struct Tolerance {
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;
  int max_depth = 40;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // absolute, conservative
  long evaluations = 0;
};

/// Gamma function for x > 0, Lanczos approximation (g = 7, 9 coefficients).
/// Relative error below 1e-12 on (0, 60].
double gamma(double x);

/// Bessel function J_m(x) for m in [0, 10], x in [0, 50]. Power series below
/// x = 12, integral representation above. Absolute error below 1e-10.
double bessel_j(double order, double x);

/// First positive zero j_{m,1} of J_m, m in [0, 10]. McMahon initial guess
/// refined by Newton; absolute error below 1e-9.
double bessel_first_zero(double order);

/// Adaptive 15-point Gauss-Legendre on [a, b], bisected until the local
/// refinement difference falls under the tolerance. Interior breakpoints
/// force panel boundaries (use them at kinks of the integrand).
/// Throws std::runtime_error if max_depth is exhausted before the
/// tolerance is met.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, std::span<const double> breakpoints,
                           const Tolerance& tol);

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const Tolerance& tol);

/// Solves f(x) = target for nondecreasing unbounded f with
/// f(bracket_lo) <= target. Bracket doubling followed by bisection;
/// the result satisfies |f(x) - target| <= 1e-9 * max(1, |target|).
double solve_increasing(const std::function<double(double)>& f, double target,
                        double bracket_lo);

namespace detail {

/// J_nu(x) without the public-contract range check. Valid for nu in [0, 60]
/// and x in [0, 80]; used by the spectra enumeration which needs orders
/// beyond the public [0, 10] window.
double bessel_j_raw(double order, double x);

/// The zero of J_nu inside (lo, hi); requires a sign change across the
/// bracket (interlacing supplies such brackets). Bisection plus Newton.
double bessel_zero_in(double order, double lo, double hi);

/// First zero of J_nu strictly above `after` (scan for a sign change, then
/// bessel_zero_in). `after` is typically a previous zero of the same order.
double bessel_next_zero(double order, double after);

/// bessel_first_zero without the order-range check.
double bessel_first_zero_raw(double order);

}  // namespace detail

}  // namespace spectral::numerics
