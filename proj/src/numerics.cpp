#include "spectral/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace spectral::numerics {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lanczos approximation, g = 7, 9 coefficients.
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

// 15-point Gauss-Legendre nodes and weights on [-1, 1].
constexpr std::array<double, 15> kGlNode = {
    -0.98799251802048542849, -0.93727339240070590431, -0.84820658341042721620,
    -0.72441773136017004742, -0.57097217260853884754, -0.39415134707756336990,
    -0.20119409399743452230, 0.0,                     0.20119409399743452230,
    0.39415134707756336990,  0.57097217260853884754,  0.72441773136017004742,
    0.84820658341042721620,  0.93727339240070590431,  0.98799251802048542849};

constexpr std::array<double, 15> kGlWeight = {
    0.030753241996117268355, 0.070366047488108124709, 0.107159220467171935012,
    0.139570677926154314447, 0.166269205816993933553, 0.186161000015562211027,
    0.198431485327111576456, 0.202578241925561272880, 0.198431485327111576456,
    0.186161000015562211027, 0.166269205816993933553, 0.139570677926154314447,
    0.107159220467171935012, 0.070366047488108124709, 0.030753241996117268355};

double gl15(const std::function<double(double)>& f, double a, double b,
            long& evaluations) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < 15; ++i) {
    sum += kGlWeight[i] * f(mid + half * kGlNode[i]);
  }
  evaluations += 15;
  return sum * half;
}

void adapt(const std::function<double(double)>& f, double a, double b,
           double whole, double tol_abs, double rel_tol, int depth,
           int max_depth, QuadratureResult& out) {
  const double mid = 0.5 * (a + b);
  const double left = gl15(f, a, mid, out.evaluations);
  const double right = gl15(f, mid, b, out.evaluations);
  const double refined = left + right;
  const double diff = std::abs(refined - whole);
  if (diff <= std::max(tol_abs, rel_tol * std::abs(refined))) {
    out.value += refined;
    out.error_estimate += diff;
    return;
  }
  if (depth >= max_depth) {
    throw std::runtime_error(
        "integrate: tolerance not met, max_depth exhausted on [" +
        std::to_string(a) + ", " + std::to_string(b) + "]");
  }
  adapt(f, a, mid, left, 0.5 * tol_abs, rel_tol, depth + 1, max_depth, out);
  adapt(f, mid, b, right, 0.5 * tol_abs, rel_tol, depth + 1, max_depth, out);
}

double round_nearest(double x) { return std::floor(x + 0.5); }

}  // namespace

double gamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("gamma: argument must be positive");
  }
  if (x > 171.6) {
    throw std::domain_error("gamma: overflow for x > 171.6");
  }
  if (x < 0.5) {
    // Reflection keeps the Lanczos sum in its accurate range.
    return kPi / (std::sin(kPi * x) * gamma(1.0 - x));
  }
  const double z = x - 1.0;
  double s = kLanczos[0];
  for (int i = 1; i < 9; ++i) {
    s += kLanczos[i] / (z + i);
  }
  const double t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * s;
}

namespace {

// Ascending power series; every term ratio is below 1 for x < 12, so the
// worst cancellation loses ~4 digits at the switch point.
double bessel_series(double nu, double x) {
  const double half = 0.5 * x;
  double term = std::pow(half, nu) / spectral::numerics::gamma(nu + 1.0);
  if (term == 0.0) return 0.0;  // deep underflow, J is below 1e-300
  double sum = term;
  for (int k = 1; k <= 300; ++k) {
    term *= -(half * half) / (k * (nu + k));
    sum += term;
    if (std::abs(term) <= 1e-17 * (std::abs(sum) + 1e-300)) break;
  }
  return sum;
}

// J_nu(x) = (1/pi) int_0^pi cos(nu t - x sin t) dt
//         - (sin(nu pi)/pi) int_0^inf exp(-x sinh t - nu t) dt.
// The second term vanishes for integer order. Used for x >= 12, where the
// power series cancels catastrophically; the oscillatory part is resolved
// by the adaptive panels.
double bessel_integral(double nu, double x) {
  const Tolerance tol{2e-13, 1e-15, 48};
  const auto osc = integrate(
      [nu, x](double t) { return std::cos(nu * t - x * std::sin(t)); }, 0.0,
      kPi, tol);
  double value = osc.value / kPi;
  if (std::abs(nu - round_nearest(nu)) > 1e-12) {
    // exp(-x sinh 6) < 1e-1000 for x >= 12; [0, 6] captures everything.
    const auto tail = integrate(
        [nu, x](double t) { return std::exp(-x * std::sinh(t) - nu * t); },
        0.0, 6.0, tol);
    value -= std::sin(nu * kPi) / kPi * tail.value;
  }
  return value;
}

constexpr double kBesselSwitch = 12.0;

}  // namespace

namespace detail {

double bessel_j_raw(double order, double x) {
  if (x < kBesselSwitch) return bessel_series(order, x);
  return bessel_integral(order, x);
}

namespace {

double bessel_deriv_raw(double nu, double x) {
  // J_nu' = (nu/x) J_nu - J_{nu+1}; valid for all nu >= 0, x > 0.
  return nu / x * bessel_j_raw(nu, x) - bessel_j_raw(nu + 1.0, x);
}

double newton_polish(double nu, double x0, double lo, double hi) {
  double x = x0;
  for (int it = 0; it < 60; ++it) {
    const double fx = bessel_j_raw(nu, x);
    const double dfx = bessel_deriv_raw(nu, x);
    if (dfx == 0.0) break;
    double step = fx / dfx;
    double next = x - step;
    if (next <= lo || next >= hi) {
      next = 0.5 * (lo + hi);  // bisect when Newton leaves the bracket
    }
    if (bessel_j_raw(nu, next) * bessel_j_raw(nu, lo) < 0.0) {
      hi = next;
    } else {
      lo = next;
    }
    if (std::abs(next - x) <= 1e-13 * std::max(1.0, std::abs(next))) {
      return next;
    }
    x = next;
  }
  return x;
}

}  // namespace

double bessel_zero_in(double order, double lo, double hi) {
  double flo = bessel_j_raw(order, lo);
  double fhi = bessel_j_raw(order, hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (flo * fhi > 0.0) {
    throw std::runtime_error("bessel_zero_in: no sign change in bracket");
  }
  // Bisection to a short interval, then Newton inside it.
  for (int it = 0; it < 80 && hi - lo > 1e-3; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = bessel_j_raw(order, mid);
    if (fmid == 0.0) return mid;
    if (flo * fmid < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fmid;
    }
  }
  return newton_polish(order, 0.5 * (lo + hi), lo, hi);
}

double bessel_next_zero(double order, double after) {
  // Zero spacing exceeds 3.1 for order 0 and pi for order >= 1/2, so a
  // 0.5 scan step cannot jump over a sign change.
  const double step = 0.5;
  double a = after + 0.25;
  double fa = bessel_j_raw(order, a);
  for (int it = 0; it < 200; ++it) {
    const double b = a + step;
    const double fb = bessel_j_raw(order, b);
    if (fa == 0.0) return a;
    if (fa * fb <= 0.0) return bessel_zero_in(order, a, b);
    a = b;
    fa = fb;
  }
  throw std::runtime_error("bessel_next_zero: no sign change found");
}

double bessel_first_zero_raw(double order) {
  const double mu = 4.0 * order * order;
  const double beta = (0.5 * order + 0.75) * kPi;
  const double b8 = 8.0 * beta;
  // McMahon expansion for the first zero.
  double guess = beta - (mu - 1.0) / b8 -
                 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8 * b8 * b8);
  if (order > 2.0) {
    // McMahon drifts for larger orders; the uniform expansion seeds better.
    const double cbrt = std::cbrt(order);
    guess = order + 1.8557571 * cbrt + 1.033150 / cbrt;
  }
  // J_nu > 0 on (0, j_{nu,1}); scan up from a point below the zero.
  double lo = std::max(0.5, 0.9 * std::min(guess, order + 1.0));
  if (bessel_j_raw(order, lo) <= 0.0) lo = 0.5;
  double hi = lo;
  double step = std::max(0.25, 0.1 * guess);
  for (int it = 0; it < 200; ++it) {
    hi += step;
    if (bessel_j_raw(order, hi) < 0.0) break;
    lo = hi;
    if (it == 199) {
      throw std::runtime_error("bessel_first_zero: bracketing failed");
    }
  }
  const double zero = bessel_zero_in(order, lo, hi);
  if (std::abs(bessel_j_raw(order, zero)) > 1e-8) {
    throw std::runtime_error("bessel_first_zero: Newton did not converge");
  }
  return zero;
}

}  // namespace detail

double bessel_j(double order, double x) {
  if (!(order >= 0.0) || order > 10.0) {
    throw std::domain_error("bessel_j: order must lie in [0, 10]");
  }
  if (!(x >= 0.0) || x > 50.0) {
    throw std::domain_error("bessel_j: argument must lie in [0, 50]");
  }
  return detail::bessel_j_raw(order, x);
}

double bessel_first_zero(double order) {
  if (!(order >= 0.0) || order > 10.0) {
    throw std::domain_error("bessel_first_zero: order must lie in [0, 10]");
  }
  return detail::bessel_first_zero_raw(order);
}

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, std::span<const double> breakpoints,
                           const Tolerance& tol) {
  if (!(a <= b)) throw std::invalid_argument("integrate: requires a <= b");
  if (!(tol.abs_tol > 0.0) || !(tol.rel_tol > 0.0) || tol.max_depth < 1) {
    throw std::invalid_argument("integrate: invalid tolerance");
  }
  if (a == b) return {0.0, 0.0, 0};

  std::vector<double> cuts;
  cuts.push_back(a);
  for (double c : breakpoints) {
    if (c > a && c < b) cuts.push_back(c);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  QuadratureResult out;
  const double span = b - a;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = cuts[i + 1];
    const double whole = gl15(f, lo, hi, out.evaluations);
    // Each segment gets the slice of the absolute budget matching its width.
    const double seg_tol = tol.abs_tol * (hi - lo) / span;
    adapt(f, lo, hi, whole, seg_tol, tol.rel_tol, 0, tol.max_depth, out);
  }
  return out;
}

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const Tolerance& tol) {
  return integrate(f, a, b, std::span<const double>{}, tol);
}

double solve_increasing(const std::function<double(double)>& f, double target,
                        double bracket_lo) {
  const double f_tol = 1e-9 * std::max(1.0, std::abs(target));
  double lo = bracket_lo;
  double flo = f(lo);
  if (flo > target + f_tol) {
    throw std::invalid_argument(
        "solve_increasing: f(bracket_lo) exceeds target");
  }
  if (std::abs(flo - target) <= f_tol) return lo;

  double step = std::max(std::abs(lo), 1.0);
  const double step_limit = std::ldexp(std::max(std::abs(lo), 1.0), 60);
  double hi = lo + step;
  double fhi = f(hi);
  while (fhi < target) {
    step *= 2.0;
    if (step > step_limit) {
      throw std::runtime_error(
          "solve_increasing: bracket doubling exceeded 2^60 * bracket_lo");
    }
    lo = hi;
    flo = fhi;
    hi = bracket_lo + step;
    fhi = f(hi);
  }

  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm < target) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= 1e-14 * std::max(1.0, std::abs(mid))) break;
  }
  mid = 0.5 * (lo + hi);
  if (std::abs(f(mid) - target) > f_tol) {
    throw std::runtime_error("solve_increasing: bisection failed to converge");
  }
  return mid;
}

}  // namespace spectral::numerics
