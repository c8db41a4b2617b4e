#include "spectral/eigen_bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "spectral/constants.hpp"
#include "spectral/numerics.hpp"

namespace spectral::eigen {

namespace {

constexpr double kPi = 3.14159265358979323846;

double validity_floor(const geometry::DomainMetrics& m) {
  return kPi * kPi / (4.0 * m.inradius * m.inradius);
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1)");
  }
}

void check_c(double sigma, int dim, double c_value) {
  if (!(c_value >= 0.0)) throw std::invalid_argument("C must be >= 0");
  if (c_value > constants::c_upper(sigma, dim) + 1e-12) {
    throw std::invalid_argument("C exceeds the proven upper bound");
  }
}

}  // namespace

double CountingPolynomial::operator()(double lambda) const {
  if (lambda <= 0.0) return 0.0;
  const double v = leading * std::pow(lambda, 0.5 * dim) -
                   sub * std::pow(lambda, 0.5 * (dim - 1));
  return v > 0.0 ? v : 0.0;
}

double CountingPolynomial::invert(double count) const {
  if (!(count > 0.0)) {
    throw std::invalid_argument("CountingPolynomial::invert: count > 0");
  }
  // In x = sqrt(Lambda) the polynomial A x^n - B x^{n-1} is increasing for
  // x >= B/A, which is also its positive zero; the solution lies beyond it.
  const double lambda0 = (sub / leading) * (sub / leading);
  return numerics::solve_increasing([this](double l) { return (*this)(l); },
                                    count, lambda0);
}

double li_yau(int k, const geometry::DomainMetrics& m) {
  if (k < 1) throw std::invalid_argument("li_yau: k >= 1");
  const double n = m.dim;
  return std::pow(numerics::gamma(0.5 * n + 1.0), 2.0 / n) *
         (4.0 * kPi * n / (n + 2.0)) * std::pow(k / m.volume, 2.0 / n);
}

double krahn_szego(const geometry::DomainMetrics& m) {
  const double n = m.dim;
  const double j = numerics::bessel_first_zero(0.5 * n - 1.0);
  return kPi * std::pow(numerics::gamma(0.5 * n + 1.0), -2.0 / n) *
         std::pow(2.0 / m.volume, 2.0 / n) * j * j;
}

CountingPolynomial counting_bound(const geometry::DomainMetrics& m,
                                  double alpha, double c_value) {
  check_alpha(alpha);
  check_c(1.5, m.dim, c_value);
  const double n = m.dim;
  const double tau = alpha / (1.0 - alpha);
  const double t32 = std::pow(tau, 1.5);
  const double a = constants::lieb_thirring(1.5, m.dim) * m.volume *
                   std::pow(1.0 + tau, 0.5 * (n + 3.0)) / t32;
  const double b = c_value * constants::lieb_thirring(1.5, m.dim - 1) *
                   m.surface * std::pow(1.0 + tau, 1.0 + 0.5 * n) / t32;
  return {a, b, m.dim};
}

CountingPolynomial liyau_counting(const geometry::DomainMetrics& m) {
  const double n = m.dim;
  const double a = std::pow((n + 2.0) / (4.0 * kPi * n), 0.5 * n) * m.volume /
                   numerics::gamma(0.5 * n + 1.0);
  return {a, 0.0, m.dim};
}

double implicit_bound(int k, const geometry::DomainMetrics& m, double alpha,
                      double c_value) {
  if (k < 1) throw std::invalid_argument("implicit_bound: k >= 1");
  const auto poly = counting_bound(m, alpha, c_value);
  const double floor_lambda = validity_floor(m);
  // The counting bound is only valid from the floor on; below it the floor
  // itself (lambda_1 >= pi^2/(4 r^2)) is the bound returned.
  if (poly(floor_lambda) >= k) return floor_lambda;
  return numerics::solve_increasing([&poly](double l) { return poly(l); },
                                    k, floor_lambda);
}

double explicit_2d(int k, const geometry::DomainMetrics& m, double alpha,
                   double c_value) {
  if (m.dim != 2) throw std::invalid_argument("explicit_2d: n = 2 only");
  if (k < 1) throw std::invalid_argument("explicit_2d: k >= 1");
  check_alpha(alpha);
  check_c(1.5, 2, c_value);
  const double x = 10.0 * kPi * std::pow(alpha, 1.5) * k / m.volume;
  const double y = 15.0 * kPi * c_value / 8.0 * (m.surface / m.volume);
  const double root = x + y * std::sqrt(x + 0.25 * y * y) + 0.5 * y * y;
  const double value = (1.0 - alpha) * root;
  return std::max(value, validity_floor(m));
}

double lambda_star(const geometry::DomainMetrics& m, double tau,
                   double c_value) {
  if (!(tau > 0.0)) throw std::invalid_argument("lambda_star: tau > 0");
  const double alpha = tau / (1.0 + tau);
  const auto p = counting_bound(m, alpha, c_value);
  const auto ply = liyau_counting(m);
  const double denom = p.leading - ply.leading;
  if (!(denom > 0.0)) {
    throw std::invalid_argument(
        "lambda_star: counting bound does not dominate Li-Yau at this tau");
  }
  const double root = p.sub / denom;  // in x = sqrt(Lambda)
  const double star = root * root;
  // The crossing is unique; confirm the sign change numerically.
  const auto diff = [&](double l) { return p(l) - ply(l); };
  if (!(diff(star * (1.0 - 1e-6)) < 0.0) || !(diff(star * (1.0 + 1e-6)) > 0.0)) {
    throw std::runtime_error("lambda_star: sign-change verification failed");
  }
  return star;
}

double k_star_lower(int dim, double c_value) {
  if (dim < 2 || dim > 8) throw std::invalid_argument("k_star_lower: n in [2, 8]");
  if (!(c_value > 0.0)) throw std::invalid_argument("k_star_lower: C > 0");
  const double n = dim;
  const double num = c_value * std::sqrt(n + 2.0) *
                     std::pow(n + 3.0, 2.0 + 0.5 * n) *
                     numerics::gamma(n + 2.0);
  const double den = 3.0 * std::pow(2.0, n) * n *
                         std::pow(n + 3.0, 0.5 * (n + 3.0)) *
                         numerics::gamma(0.5 * n + 2.0) *
                         numerics::gamma(0.5 * n) -
                     std::pow(3.0, 1.5) * std::pow(n + 2.0, 0.5 * n) *
                         numerics::gamma(n + 4.0);
  if (!(den > 0.0)) {
    throw std::runtime_error("k_star_lower: nonpositive denominator");
  }
  const double g = numerics::gamma(0.5 * n + 1.0);
  return std::pow(1.5, n) * std::pow(kPi * n, n) / (g * g) *
         std::pow(num / den, n);
}

double k_star_upper(int dim) {
  if (dim < 2 || dim > 8) throw std::invalid_argument("k_star_upper: n in [2, 8]");
  const double n = dim;
  const double j = numerics::bessel_first_zero(0.5 * n - 1.0);
  const double g = numerics::gamma(0.5 * n + 1.0);
  return std::pow((n + 2.0) / n, 0.5 * n) * std::pow(2.0, 1.0 - n) / (g * g) *
         std::pow(j, n);
}

int crossover_scan(const geometry::DomainMetrics& m, int k_max, double alpha,
                   double c_value) {
  if (k_max < 1) throw std::invalid_argument("crossover_scan: k_max >= 1");
  const auto poly = counting_bound(m, alpha, c_value);
  // C = 0 leaves a monomial with a larger constant than Li-Yau's: never wins.
  if (poly.sub == 0.0) return 0;
  int last = 0;
  for (int k = 1; k <= k_max; ++k) {
    // Unclamped inversion: the comparison is about the counting bound
    // itself, not the trivial lambda_1 floor.
    if (poly.invert(k) > li_yau(k, m)) last = k;
  }
  return last;
}

double default_alpha(int dim) { return 3.0 / (dim + 3.0); }

double optimize_alpha(int k, const geometry::DomainMetrics& m,
                      double c_value) {
  // The validity floor flattens the objective on both flanks, so a pure
  // golden section can stall on a plateau; locate the hump on a grid first.
  constexpr int kGrid = 64;
  double best_alpha = default_alpha(m.dim);
  double best_value = -1.0;
  for (int i = 1; i <= kGrid; ++i) {
    const double alpha = static_cast<double>(i) / (kGrid + 1);
    const double value = implicit_bound(k, m, alpha, c_value);
    if (value > best_value) {
      best_value = value;
      best_alpha = alpha;
    }
  }
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = std::max(1e-4, best_alpha - 1.0 / (kGrid + 1));
  double b = std::min(1.0 - 1e-4, best_alpha + 1.0 / (kGrid + 1));
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = implicit_bound(k, m, x1, c_value);
  double f2 = implicit_bound(k, m, x2, c_value);
  for (int it = 0; it < 80 && b - a > 1e-10; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = implicit_bound(k, m, x2, c_value);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = implicit_bound(k, m, x1, c_value);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace spectral::eigen
