#pragma once

#include "spectral/constants.hpp"
#include "spectral/geometry.hpp"

namespace spectral::trace {

struct SpectralParams {
  double sigma = 1.5;
  int dim = 2;
  double lambda = 1.0;  // > 0
};

enum class Regime { zero_region, bounded };

/// value = leading_term - remainder_term outside the zero region; inside it
/// the Riesz mean vanishes identically and value = 0.
struct TraceBoundResult {
  double value = 0.0;
  Regime regime = Regime::bounded;
  double leading_term = 0.0;
  double remainder_term = 0.0;
};

/// lambda_1 >= pi^2 / (4 r^2); Riesz means vanish at or below this.
double zero_region_threshold(const geometry::DomainMetrics& m);

/// Sharp semiclassical bound L_{sigma,n} |Omega| Lambda^{sigma+n/2}.
/// Proven for sigma >= 1; evaluation for sigma in [0, 1) is the conjectured
/// (Polya-type) extension and is up to the caller to interpret.
double berezin(const SpectralParams& p, const geometry::DomainMetrics& m);

/// Improved bound for convex domains, sigma >= 3/2: zero below
/// pi^2/(4 r^2), else leading term minus
/// C(sigma,n) L_{sigma,n-1} |dOmega| Lambda^{sigma+(n-1)/2}.
TraceBoundResult improved(const SpectralParams& p,
                          const geometry::DomainMetrics& m, double c_value);
TraceBoundResult improved(const SpectralParams& p,
                          const geometry::DomainMetrics& m,
                          const constants::BoundC& c);

/// Remainder with the closed-form inner-parallel integral
/// J = int_0^1 (1 - s/(4 r sqrt(Lambda)))_+^{n-1} ds; valid for all
/// Lambda > 0, sigma >= 3/2.
TraceBoundResult integral_remainder_bound(const SpectralParams& p,
                                          const geometry::DomainMetrics& m);

/// Smooth-boundary variant: principal curvatures bounded by 1/K (caller
/// supplied; not derivable from metrics). Remainder factor
/// G = int_0^1 (1 - (n-1) t / (4 K sqrt(Lambda)))_+ dt in closed form.
TraceBoundResult curvature_bound(const SpectralParams& p,
                                 const geometry::DomainMetrics& m, double K);

/// Product domain Omega_1 x Omega_2 with convex Omega_1: requires
/// sigma + n2/2 >= 3/2 and that Omega_2 satisfies the plain Berezin/Polya
/// bound at exponent sigma (caller's responsibility). c_value is
/// C(sigma + n2/2, n1); the overload without it resolves c_lower.
TraceBoundResult product_bound(const SpectralParams& p,
                               const geometry::DomainMetrics& convex_factor,
                               double other_volume, int other_dim,
                               double c_value);
TraceBoundResult product_bound(const SpectralParams& p,
                               const geometry::DomainMetrics& convex_factor,
                               double other_volume, int other_dim);

}  // namespace spectral::trace
