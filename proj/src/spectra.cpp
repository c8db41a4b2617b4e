#include "spectral/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "spectral/numerics.hpp"

namespace spectral::spectra {

namespace {

constexpr double kPi = 3.14159265358979323846;

// (value, primary index, secondary index): the indices break floating-point
// ties deterministically.
using Entry = std::tuple<double, long, long>;

std::vector<double> sorted_values(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  std::vector<double> values;
  values.reserve(entries.size());
  for (const auto& e : entries) values.push_back(std::get<0>(e));
  return values;
}

}  // namespace

Spectrum::Spectrum(std::vector<double> eigenvalues, double lambda_max)
    : values_(std::move(eigenvalues)), lambda_max_(lambda_max) {
  if (!(lambda_max_ > 0.0)) {
    throw std::invalid_argument("Spectrum: lambda_max must be > 0");
  }
  if (!std::is_sorted(values_.begin(), values_.end())) {
    throw std::invalid_argument("Spectrum: eigenvalues must be ascending");
  }
  if (!values_.empty() &&
      (!(values_.front() > 0.0) || values_.back() > lambda_max_)) {
    throw std::invalid_argument(
        "Spectrum: eigenvalues must lie in (0, lambda_max]");
  }
}

Spectrum box_spectrum(std::span<const double> sides, double lambda_max) {
  if (sides.empty()) throw std::invalid_argument("box_spectrum: empty box");
  for (double a : sides) {
    if (!(a > 0.0)) throw std::invalid_argument("box_spectrum: sides > 0");
  }
  std::vector<Entry> entries;
  std::vector<int> index(sides.size(), 1);
  // Depth-first lattice walk over k_i >= 1 with running partial sums.
  long serial = 0;
  std::vector<double> partial(sides.size() + 1, 0.0);
  std::size_t d = 0;
  while (true) {
    const double term = kPi * index[d] / sides[d];
    const double sum = partial[d] + term * term;
    if (sum <= lambda_max) {
      if (d + 1 == sides.size()) {
        entries.emplace_back(sum, serial++, 0);
        ++index[d];
      } else {
        partial[d + 1] = sum;
        ++d;
        index[d] = 1;
      }
    } else {
      if (d == 0) break;
      index[d - 1] += 1;
      --d;
    }
  }
  return Spectrum(sorted_values(std::move(entries)), lambda_max);
}

namespace {

// Zeros of J_nu up to (and one past) `cutoff`, given the previous row's
// zeros: j_{nu,k} lies strictly between j_{nu-1,k} and j_{nu-1,k+1}.
std::vector<double> next_row_zeros(double nu,
                                   const std::vector<double>& prev,
                                   double cutoff) {
  std::vector<double> row;
  for (std::size_t k = 0; k + 1 < prev.size(); ++k) {
    row.push_back(numerics::detail::bessel_zero_in(nu, prev[k], prev[k + 1]));
    if (row.back() > cutoff) return row;
  }
  // The interlacing brackets ran out before passing the cutoff; extend by
  // scanning (only ever needed for the final sentinel zero).
  while (row.empty() || row.back() <= cutoff) {
    const double after = row.empty() ? prev.empty() ? nu : prev.front()
                                     : row.back();
    row.push_back(numerics::detail::bessel_next_zero(nu, after));
  }
  return row;
}

}  // namespace

Spectrum disk_spectrum(double radius, double lambda_max) {
  if (!(radius > 0.0)) throw std::invalid_argument("disk_spectrum: radius > 0");
  const double cutoff = radius * std::sqrt(lambda_max);
  std::vector<Entry> entries;
  std::vector<double> prev;

  for (long m = 0;; ++m) {
    std::vector<double> row;
    if (m == 0) {
      row.push_back(numerics::detail::bessel_first_zero_raw(0.0));
      while (row.back() <= cutoff) {
        row.push_back(numerics::detail::bessel_next_zero(0.0, row.back()));
      }
    } else {
      row = next_row_zeros(static_cast<double>(m), prev, cutoff);
    }
    if (row.empty() || row.front() > cutoff) break;
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] > cutoff) break;
      const double ev = row[k] * row[k] / (radius * radius);
      entries.emplace_back(ev, m, static_cast<long>(k + 1));
      if (m >= 1) entries.emplace_back(ev, m, static_cast<long>(k + 1));
    }
    prev = std::move(row);
  }
  return Spectrum(sorted_values(std::move(entries)), lambda_max);
}

Spectrum ball3_spectrum(double radius, double lambda_max) {
  if (!(radius > 0.0)) throw std::invalid_argument("ball3_spectrum: radius > 0");
  const double cutoff = radius * std::sqrt(lambda_max);
  std::vector<Entry> entries;
  std::vector<double> prev;

  for (long l = 0;; ++l) {
    std::vector<double> row;
    if (l == 0) {
      // J_{1/2} vanishes exactly at the multiples of pi.
      for (long k = 1; row.empty() || row.back() <= cutoff; ++k) {
        row.push_back(k * kPi);
      }
    } else {
      row = next_row_zeros(l + 0.5, prev, cutoff);
    }
    if (row.empty() || row.front() > cutoff) break;
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] > cutoff) break;
      const double ev = row[k] * row[k] / (radius * radius);
      for (long mult = 0; mult < 2 * l + 1; ++mult) {
        entries.emplace_back(ev, l, static_cast<long>(k + 1));
      }
    }
    prev = std::move(row);
  }
  return Spectrum(sorted_values(std::move(entries)), lambda_max);
}

Spectrum product_spectrum(const Spectrum& a, const Spectrum& b,
                          double lambda_max) {
  if (a.empty() || b.empty()) return Spectrum({}, lambda_max);
  const double min_a = a.eigenvalues().front();
  const double min_b = b.eigenvalues().front();
  // Sums missing from a truncated factor would be missing from the result.
  if (a.lambda_max() + min_b < lambda_max ||
      b.lambda_max() + min_a < lambda_max) {
    throw std::invalid_argument(
        "product_spectrum: factor spectra not complete enough for lambda_max");
  }
  std::vector<Entry> entries;
  long ia = 0;
  for (double ea : a.eigenvalues()) {
    ++ia;
    if (ea + min_b > lambda_max) break;
    long ib = 0;
    for (double eb : b.eigenvalues()) {
      ++ib;
      const double sum = ea + eb;
      if (sum > lambda_max) break;
      entries.emplace_back(sum, ia, ib);
    }
  }
  return Spectrum(sorted_values(std::move(entries)), lambda_max);
}

double riesz_mean(const Spectrum& s, double sigma, double lambda) {
  if (sigma < 0.0) throw std::invalid_argument("riesz_mean: sigma >= 0");
  if (lambda > s.lambda_max() * (1.0 + 1e-12)) {
    throw std::invalid_argument(
        "riesz_mean: lambda exceeds the completeness guarantee");
  }
  long double total = 0.0L;
  for (double ev : s.eigenvalues()) {
    if (ev >= lambda) break;
    total += sigma == 0.0
                 ? 1.0L
                 : static_cast<long double>(std::pow(lambda - ev, sigma));
  }
  return static_cast<double>(total);
}

double nth_eigenvalue(const Spectrum& s, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > s.size()) {
    throw std::out_of_range("nth_eigenvalue: k beyond enumerated range");
  }
  return s.eigenvalues()[k - 1];
}

void write_csv(const Spectrum& s, std::ostream& out) {
  char buf[64];
  for (double ev : s.eigenvalues()) {
    std::snprintf(buf, sizeof(buf), "%.17g\n", ev);
    out << buf;
  }
}

}  // namespace spectral::spectra
