#include "spectral/trace_bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace spectral::trace {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_params(const SpectralParams& p, const geometry::DomainMetrics& m) {
  if (!(p.lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");
  if (p.dim != m.dim) {
    throw std::invalid_argument("params/metrics dimension mismatch");
  }
}

void check_c(double sigma, int dim, double c_value) {
  if (!(c_value >= 0.0)) throw std::invalid_argument("C must be >= 0");
  if (c_value > constants::c_upper(sigma, dim) + 1e-12) {
    throw std::invalid_argument("C exceeds the proven upper bound");
  }
}

}  // namespace

double zero_region_threshold(const geometry::DomainMetrics& m) {
  return kPi * kPi / (4.0 * m.inradius * m.inradius);
}

double berezin(const SpectralParams& p, const geometry::DomainMetrics& m) {
  check_params(p, m);
  if (p.sigma < 0.0) throw std::invalid_argument("berezin: sigma >= 0");
  return constants::lieb_thirring(p.sigma, p.dim) * m.volume *
         std::pow(p.lambda, p.sigma + 0.5 * p.dim);
}

TraceBoundResult improved(const SpectralParams& p,
                          const geometry::DomainMetrics& m, double c_value) {
  check_params(p, m);
  if (p.sigma < 1.5) throw std::invalid_argument("improved: sigma >= 3/2");
  check_c(p.sigma, p.dim, c_value);
  if (p.lambda <= zero_region_threshold(m)) {
    return {0.0, Regime::zero_region, 0.0, 0.0};
  }
  const double leading = constants::lieb_thirring(p.sigma, p.dim) * m.volume *
                         std::pow(p.lambda, p.sigma + 0.5 * p.dim);
  const double remainder = c_value *
                           constants::lieb_thirring(p.sigma, p.dim - 1) *
                           m.surface *
                           std::pow(p.lambda, p.sigma + 0.5 * (p.dim - 1));
  return {leading - remainder, Regime::bounded, leading, remainder};
}

TraceBoundResult improved(const SpectralParams& p,
                          const geometry::DomainMetrics& m,
                          const constants::BoundC& c) {
  if (c.sigma != p.sigma || c.dim != p.dim) {
    throw std::invalid_argument("improved: BoundC computed for other (sigma, n)");
  }
  return improved(p, m, c.lower);
}

TraceBoundResult integral_remainder_bound(const SpectralParams& p,
                                          const geometry::DomainMetrics& m) {
  check_params(p, m);
  if (p.sigma < 1.5) {
    throw std::invalid_argument("integral_remainder_bound: sigma >= 3/2");
  }
  const int n = p.dim;
  const double leading = constants::lieb_thirring(p.sigma, n) * m.volume *
                         std::pow(p.lambda, p.sigma + 0.5 * n);
  // J = int_0^1 (1 - s/a)_+^{n-1} ds with a = 4 r sqrt(Lambda).
  const double a = 4.0 * m.inradius * std::sqrt(p.lambda);
  const double j = a >= 1.0
                       ? a / n * (1.0 - std::pow(1.0 - 1.0 / a, n))
                       : a / n;
  const double remainder = constants::lieb_thirring(p.sigma, n) *
                           std::pow(2.0, -n - 2) * m.surface *
                           std::pow(p.lambda, p.sigma + 0.5 * (n - 1)) * j;
  return {leading - remainder, Regime::bounded, leading, remainder};
}

TraceBoundResult curvature_bound(const SpectralParams& p,
                                 const geometry::DomainMetrics& m, double K) {
  check_params(p, m);
  if (p.sigma < 1.5) throw std::invalid_argument("curvature_bound: sigma >= 3/2");
  if (!(K > 0.0)) throw std::invalid_argument("curvature_bound: K must be > 0");
  const int n = p.dim;
  const double leading = constants::lieb_thirring(p.sigma, n) * m.volume *
                         std::pow(p.lambda, p.sigma + 0.5 * n);
  // G = int_0^1 (1 - b t)_+ dt with b = (n-1)/(4 K sqrt(Lambda)).
  const double b = (n - 1) / (4.0 * K * std::sqrt(p.lambda));
  const double g = b <= 1.0 ? 1.0 - 0.5 * b : 0.5 / b;
  const double remainder = constants::lieb_thirring(p.sigma, n) *
                           std::pow(2.0, -n - 2) * m.surface *
                           std::pow(p.lambda, p.sigma + 0.5 * (n - 1)) * g;
  return {leading - remainder, Regime::bounded, leading, remainder};
}

TraceBoundResult product_bound(const SpectralParams& p,
                               const geometry::DomainMetrics& convex_factor,
                               double other_volume, int other_dim,
                               double c_value) {
  if (!(p.lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");
  if (other_dim < 1 || !(other_volume > 0.0)) {
    throw std::invalid_argument("product_bound: invalid second factor");
  }
  const int n1 = convex_factor.dim;
  const int n = n1 + other_dim;
  if (p.dim != n) {
    throw std::invalid_argument("product_bound: params.dim must be n1 + n2");
  }
  const double sigma_eff = p.sigma + 0.5 * other_dim;
  if (sigma_eff < 1.5) {
    throw std::invalid_argument("product_bound: requires sigma + n2/2 >= 3/2");
  }
  check_c(sigma_eff, n1, c_value);
  if (p.lambda <= zero_region_threshold(convex_factor)) {
    return {0.0, Regime::zero_region, 0.0, 0.0};
  }
  const double leading = constants::lieb_thirring(p.sigma, n) *
                         convex_factor.volume * other_volume *
                         std::pow(p.lambda, p.sigma + 0.5 * n);
  const double remainder = c_value *
                           constants::lieb_thirring(p.sigma, n - 1) *
                           other_volume * convex_factor.surface *
                           std::pow(p.lambda, p.sigma + 0.5 * (n - 1));
  return {leading - remainder, Regime::bounded, leading, remainder};
}

TraceBoundResult product_bound(const SpectralParams& p,
                               const geometry::DomainMetrics& convex_factor,
                               double other_volume, int other_dim) {
  const double c =
      constants::c_lower(p.sigma + 0.5 * other_dim, convex_factor.dim);
  return product_bound(p, convex_factor, other_volume, other_dim, c);
}

}  // namespace spectral::trace
