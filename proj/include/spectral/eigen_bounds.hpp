#pragma once

#include "spectral/geometry.hpp"

namespace spectral::eigen {

/// N(Lambda) <= (A Lambda^{n/2} - B Lambda^{(n-1)/2})_+, the counting bound
/// obtained from the improved trace bound through the tau-shift.
struct CountingPolynomial {
  double leading = 0.0;  // A > 0
  double sub = 0.0;      // B >= 0
  int dim = 2;

  double operator()(double lambda) const;

  /// Positive solution of P(Lambda) = count on the increasing branch
  /// Lambda >= (B/A)^2. count must be positive.
  double invert(double count) const;
};

/// Li-Yau: Gamma(n/2+1)^{2/n} (4 pi n/(n+2)) (k/|Omega|)^{2/n}.
double li_yau(int k, const geometry::DomainMetrics& m);

/// Krahn-Szego derived bound, valid for lambda_k with k >= 2:
/// pi Gamma(n/2+1)^{-2/n} (2/|Omega|)^{2/n} j_{n/2-1,1}^2.
double krahn_szego(const geometry::DomainMetrics& m);

/// Counting bound at sigma = 3/2 with tau = alpha/(1-alpha):
/// A = L_{3/2,n} |Omega| (1+tau)^{(n+3)/2} / tau^{3/2},
/// B = C L_{3/2,n-1} |dOmega| (1+tau)^{1+n/2} / tau^{3/2}.
/// Valid for Lambda >= pi^2/(4 r^2).
CountingPolynomial counting_bound(const geometry::DomainMetrics& m,
                                  double alpha, double c_value);

/// Li-Yau in counting form: A = ((n+2)/(4 pi n))^{n/2} |Omega|/Gamma(n/2+1),
/// B = 0.
CountingPolynomial liyau_counting(const geometry::DomainMetrics& m);

/// lambda_k >= max(P^{-1}(k), pi^2/(4 r^2)). The second term is the
/// validity floor of the counting bound and also a bound in its own right;
/// for small k the result may sit at that floor.
double implicit_bound(int k, const geometry::DomainMetrics& m, double alpha,
                      double c_value);

/// n = 2 closed form of the same bound (quadratic root of P(Lambda) = k),
/// clamped at the same floor; agrees with implicit_bound to 1e-9 relative.
double explicit_2d(int k, const geometry::DomainMetrics& m, double alpha,
                   double c_value);

/// The crossing point P(Lambda*) = P_LY(Lambda*); scales with
/// (|dOmega|/|Omega|)^2. Throws if tau makes the leading coefficients
/// cross in the wrong order (nonpositive denominator).
double lambda_star(const geometry::DomainMetrics& m, double tau,
                   double c_value);

/// Dimension-only lower bound for k* (tau = 3/n, isoperimetric reduction).
double k_star_lower(int dim, double c_value);

/// Dimension-only upper bound for k_*: P_LY at the Krahn-Szego level,
/// ((n+2)/n)^{n/2} 2^{1-n} / Gamma(n/2+1)^2 j_{n/2-1,1}^n.
double k_star_upper(int dim);

/// Largest k <= k_max whose unclamped counting-bound inversion exceeds
/// li_yau(k); 0 when the counting bound never improves (e.g. C = 0).
int crossover_scan(const geometry::DomainMetrics& m, int k_max, double alpha,
                   double c_value);

/// alpha = 3/(n+3), equivalently tau = 3/n.
double default_alpha(int dim);

/// Golden-section scan of implicit_bound over alpha in (0, 1) for a given k.
double optimize_alpha(int k, const geometry::DomainMetrics& m, double c_value);

}  // namespace spectral::eigen
