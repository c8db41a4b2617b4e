#include "spectral/constants.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace spectral::constants {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Memo for I(sigma, n); guarded so concurrent callers see consistent values.
std::mutex g_cache_mutex;
std::map<std::pair<double, int>, numerics::QuadratureResult> g_integral_cache;
numerics::Tolerance g_default_tol{};

}  // namespace

double lieb_thirring(double sigma, int dim) {
  if (sigma < 0.0 || dim < 1) {
    throw std::invalid_argument("lieb_thirring: sigma >= 0 and dim >= 1");
  }
  return numerics::gamma(sigma + 1.0) /
         (std::pow(4.0 * kPi, 0.5 * dim) *
          numerics::gamma(sigma + 1.0 + 0.5 * dim));
}

double angular_normalizer(int dim) {
  if (dim < 2) throw std::invalid_argument("angular_normalizer: dim >= 2");
  return 2.0 * numerics::gamma(0.5 * dim) /
         (std::sqrt(kPi) * numerics::gamma(0.5 * (dim - 1)));
}

numerics::QuadratureResult remainder_integral(double sigma, int dim,
                                              const numerics::Tolerance& tol) {
  if (sigma < 1.5) {
    throw std::invalid_argument("remainder_integral: sigma must be >= 3/2");
  }
  if (dim < 2) throw std::invalid_argument("remainder_integral: dim >= 2");

  const double cn = angular_normalizer(dim);
  const double power = sigma + 0.5 * dim;
  const numerics::Tolerance inner_tol{1e-12, 1e-12, tol.max_depth};

  long inner_evals = 0;
  // C_n int_{theta_c}^{pi/2} (1 - cos^2/s^2)^{power} sin^{n-2}; the positive
  // part is active exactly on [arccos(min(s,1)), pi/2].
  auto inner = [&](double s) -> double {
    if (s <= 0.0) return 0.0;
    const double theta_c = s < 1.0 ? std::acos(s) : 0.0;
    auto f = [&](double theta) {
      const double c = std::cos(theta);
      const double v = (s - c) * (s + c);  // s^2 - cos^2, no cancellation
      if (v <= 0.0) return 0.0;
      const double base = v / (s * s);
      if (dim == 2) return std::pow(base, power);
      return std::pow(base, power) * std::pow(std::sin(theta), dim - 2);
    };
    auto r = numerics::integrate(f, theta_c, 0.5 * kPi, inner_tol);
    inner_evals += r.evaluations;
    return cn * r.value;
  };

  auto outer_f = [&](double s) {
    return std::pow(1.0 - s / kPi, dim - 1) * (1.0 - inner(s));
  };
  const double cuts[] = {1.0};
  auto outer = numerics::integrate(outer_f, 0.0, kPi, cuts, tol);
  outer.evaluations += inner_evals;
  // The inner integrals contribute at most their tolerance per outer point.
  outer.error_estimate += cn * inner_tol.abs_tol * kPi;
  return outer;
}

numerics::QuadratureResult remainder_integral(double sigma, int dim) {
  numerics::Tolerance tol;
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    tol = g_default_tol;
  }
  return remainder_integral(sigma, dim, tol);
}

void set_quadrature_tolerance(const numerics::Tolerance& tol) {
  if (!(tol.abs_tol > 0.0) || !(tol.rel_tol > 0.0) || tol.max_depth < 1) {
    throw std::invalid_argument("set_quadrature_tolerance: invalid tolerance");
  }
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  g_default_tol = tol;
  g_integral_cache.clear();
}

namespace {

numerics::QuadratureResult cached_integral(double sigma, int dim) {
  const auto key = std::make_pair(sigma, dim);
  numerics::Tolerance tol;
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_integral_cache.find(key);
    if (it != g_integral_cache.end()) return it->second;
    tol = g_default_tol;
  }
  auto value = remainder_integral(sigma, dim, tol);
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  return g_integral_cache.emplace(key, value).first->second;
}

}  // namespace

double c_lower(double sigma, int dim) {
  const auto integral = cached_integral(sigma, dim);
  return lieb_thirring(sigma, dim) / (2.0 * lieb_thirring(sigma, dim - 1)) *
         integral.value;
}

double c_upper(double sigma, int dim) {
  if (sigma < 1.5 || dim < 2) {
    throw std::invalid_argument("c_upper: sigma >= 3/2 and dim >= 2");
  }
  return std::sqrt(kPi) * numerics::gamma(sigma + 0.5 * (dim + 1)) /
         (4.0 * dim * numerics::gamma(sigma + 1.0 + 0.5 * dim));
}

BoundC bound_c(double sigma, int dim) {
  const auto integral = cached_integral(sigma, dim);
  const double ratio =
      lieb_thirring(sigma, dim) / (2.0 * lieb_thirring(sigma, dim - 1));
  BoundC b{sigma, dim, ratio * integral.value, c_upper(sigma, dim),
           ratio * integral.error_estimate};
  if (!(b.lower > 0.0) || !(b.lower < b.upper)) {
    throw std::runtime_error("bound_c: enclosure invariant violated");
  }
  return b;
}

double glw_reference_constant() {
  return 11.0 / (9.0 * kPi * kPi) - 3.0 / (20.0 * std::pow(kPi, 4)) -
         2.0 / (5.0 * kPi * kPi) * std::log(4.0 * kPi / 3.0);
}

double resolve_c(double sigma, int dim, const double* override_value) {
  if (override_value == nullptr) return c_lower(sigma, dim);
  if (!(*override_value >= 0.0)) {
    throw std::invalid_argument("C override must be nonnegative");
  }
  if (*override_value > c_upper(sigma, dim) + 1e-12) {
    throw std::invalid_argument(
        "C override exceeds the proven upper bound c_upper(sigma, n)");
  }
  return *override_value;
}

}  // namespace spectral::constants
