#pragma once

#include <iosfwd>
#include <span>
#include <vector>

namespace spectral::spectra {

/// Finite initial segment of a Dirichlet spectrum: every eigenvalue up to
/// lambda_max is present (with multiplicity), nothing above it is kept.
/// Completeness is the contract that makes inequality verification against
/// these values meaningful.
class Spectrum {
 public:
  Spectrum(std::vector<double> eigenvalues, double lambda_max);

  const std::vector<double>& eigenvalues() const { return values_; }
  double lambda_max() const { return lambda_max_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

 private:
  std::vector<double> values_;  // sorted ascending, all > 0
  double lambda_max_;
};

/// Rectangular box: pi^2 sum (k_i/a_i)^2 over positive integer lattice
/// points, enumerated exhaustively up to lambda_max.
Spectrum box_spectrum(std::span<const double> sides, double lambda_max);

/// Disk of given radius: (j_{m,k}/R)^2, multiplicity 1 for m = 0 and 2 for
/// m >= 1. Zeros are enumerated row by row using the interlacing property
/// j_{m,k} < j_{m+1,k} < j_{m,k+1}.
Spectrum disk_spectrum(double radius, double lambda_max);

/// Three-dimensional ball: (j_{l+1/2,k}/R)^2 with multiplicity 2l+1.
Spectrum ball3_spectrum(double radius, double lambda_max);

/// All pairwise sums eta + nu up to lambda_max. Requires both factors to be
/// complete far enough for the result to be complete:
/// a.lambda_max + min(b) >= lambda_max and symmetrically.
Spectrum product_spectrum(const Spectrum& a, const Spectrum& b,
                          double lambda_max);

/// sum (lambda - lambda_k)_+^sigma; sigma = 0 counts eigenvalues strictly
/// below lambda. lambda must not exceed the completeness guarantee.
double riesz_mean(const Spectrum& s, double sigma, double lambda);

/// k-th smallest eigenvalue (1-based, with multiplicity).
double nth_eigenvalue(const Spectrum& s, int k);

/// One eigenvalue per line, 17 significant digits.
void write_csv(const Spectrum& s, std::ostream& out);

}  // namespace spectral::spectra
