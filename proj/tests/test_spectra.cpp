#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <sstream>

#include "spectral/constants.hpp"
#include "spectral/numerics.hpp"
#include "spectral/spectra.hpp"

using namespace spectral;
using spectra::Spectrum;

namespace {
constexpr double kPi = 3.14159265358979323846;
const double kPi2 = kPi * kPi;
}  // namespace

TEST_SUITE_BEGIN("spectra");

TEST_CASE("unit square spectrum by hand") {
  const auto s = spectra::box_spectrum(std::vector<double>{1.0, 1.0}, 100.0);
  REQUIRE(s.size() == 6);
  CHECK(s.eigenvalues()[0] == doctest::Approx(2.0 * kPi2).epsilon(1e-14));
  CHECK(s.eigenvalues()[1] == doctest::Approx(5.0 * kPi2).epsilon(1e-14));
  CHECK(s.eigenvalues()[2] == doctest::Approx(5.0 * kPi2).epsilon(1e-14));
  CHECK(s.eigenvalues()[3] == doctest::Approx(8.0 * kPi2).epsilon(1e-14));
  CHECK(s.eigenvalues()[4] == doctest::Approx(10.0 * kPi2).epsilon(1e-14));
  CHECK(s.eigenvalues()[5] == doctest::Approx(10.0 * kPi2).epsilon(1e-14));
}

TEST_CASE("box ground states") {
  const auto s = spectra::box_spectrum(std::vector<double>{1.0, 2.0}, 100.0);
  CHECK(spectra::nth_eigenvalue(s, 1) ==
        doctest::Approx(1.25 * kPi2).epsilon(1e-14));
  // below the ground state: empty is a valid result
  const auto empty = spectra::box_spectrum(std::vector<double>{1.0, 1.0}, 10.0);
  CHECK(empty.empty());
}

TEST_CASE("disk spectrum against Bessel zeros") {
  const auto s = spectra::disk_spectrum(1.0, 60.0);
  CHECK(spectra::nth_eigenvalue(s, 1) ==
        doctest::Approx(5.7831859629467).epsilon(1e-11));
  // j_{1,1}^2 with multiplicity two
  CHECK(spectra::nth_eigenvalue(s, 2) ==
        doctest::Approx(14.681970642124).epsilon(1e-11));
  CHECK(spectra::nth_eigenvalue(s, 3) ==
        doctest::Approx(spectra::nth_eigenvalue(s, 2)));

  // radius 2 divides everything by 4
  const auto big = spectra::disk_spectrum(2.0, 15.0);
  CHECK(spectra::nth_eigenvalue(big, 1) ==
        doctest::Approx(5.7831859629467 / 4.0).epsilon(1e-11));
}

TEST_CASE("disk eigenvalues are genuine Bessel zeros") {
  const double lambda_max = 400.0;
  const auto s = spectra::disk_spectrum(1.0, lambda_max);
  for (double ev : s.eigenvalues()) {
    const double x = std::sqrt(ev);
    // order is unknown here; scan low orders for a vanishing J
    double best = 1e9;
    for (int m = 0; m <= 40; ++m) {
      best = std::min(best, std::abs(numerics::detail::bessel_j_raw(m, x)));
    }
    CHECK(best < 1e-7);
  }
}

TEST_CASE("ball3 spectrum") {
  const auto s = spectra::ball3_spectrum(1.0, 50.0);
  CHECK(spectra::nth_eigenvalue(s, 1) == doctest::Approx(kPi2).epsilon(1e-12));
  // next shell: j_{3/2,1}^2 = 20.19..., multiplicity 3
  CHECK(spectra::nth_eigenvalue(s, 2) ==
        doctest::Approx(20.19072855642663).epsilon(1e-10));
  CHECK(spectra::nth_eigenvalue(s, 4) ==
        doctest::Approx(spectra::nth_eigenvalue(s, 2)));
  CHECK(spectra::nth_eigenvalue(s, 5) !=
        doctest::Approx(spectra::nth_eigenvalue(s, 2)));
}

TEST_CASE("product of intervals equals the box") {
  const double lambda_max = 500.0;
  const auto a = spectra::box_spectrum(std::vector<double>{1.0}, lambda_max);
  const auto b = spectra::box_spectrum(std::vector<double>{1.0}, lambda_max);
  const auto prod = spectra::product_spectrum(a, b, lambda_max);
  const auto box = spectra::box_spectrum(std::vector<double>{1.0, 1.0}, lambda_max);
  REQUIRE(prod.size() == box.size());
  for (std::size_t i = 0; i < prod.size(); ++i) {
    CHECK(prod.eigenvalues()[i] == box.eigenvalues()[i]);
  }
}

TEST_CASE("product with a singleton shifts the spectrum") {
  const auto a = spectra::box_spectrum(std::vector<double>{1.0}, 300.0);
  const Spectrum shift({kPi2}, 400.0);
  const auto prod = spectra::product_spectrum(a, shift, 300.0 + kPi2);
  REQUIRE(prod.size() == a.size());
  for (std::size_t i = 0; i < prod.size(); ++i) {
    CHECK(prod.eigenvalues()[i] ==
          doctest::Approx(a.eigenvalues()[i] + kPi2).epsilon(1e-14));
  }
}

TEST_CASE("product edge cases") {
  const Spectrum empty({}, 100.0);
  const auto a = spectra::box_spectrum(std::vector<double>{1.0}, 100.0);
  CHECK(spectra::product_spectrum(a, empty, 50.0).empty());
  // completeness precondition: factor truncated too early
  const auto short_a = spectra::box_spectrum(std::vector<double>{1.0}, 50.0);
  CHECK_THROWS_AS(spectra::product_spectrum(short_a, a, 150.0),
                  std::invalid_argument);
}

TEST_CASE("riesz mean examples") {
  const auto s = spectra::box_spectrum(std::vector<double>{1.0, 1.0}, 100.0);
  CHECK(spectra::riesz_mean(s, 2.0, 100.0) ==
        doctest::Approx(12019.2557400979).epsilon(1e-12));
  CHECK(spectra::riesz_mean(s, 1.5, 100.0) ==
        doctest::Approx(1539.53474423436).epsilon(1e-12));
  CHECK(spectra::riesz_mean(s, 2.0, 10.0) == 0.0);
  CHECK(spectra::riesz_mean(s, 0.0, 100.0) == 6.0);
  CHECK_THROWS_AS(spectra::riesz_mean(s, 2.0, 101.0), std::invalid_argument);
}

TEST_CASE("riesz mean is nondecreasing in lambda, N integer valued") {
  const auto s = spectra::box_spectrum(std::vector<double>{1.0, 1.0}, 2000.0);
  double prev15 = 0.0, prev0 = 0.0;
  for (double lambda = 5.0; lambda <= 2000.0; lambda += 19.7) {
    const double r15 = spectra::riesz_mean(s, 1.5, lambda);
    const double r0 = spectra::riesz_mean(s, 0.0, lambda);
    CHECK(r15 >= prev15);
    CHECK(r0 >= prev0);
    CHECK(r0 == doctest::Approx(std::round(r0)));
    prev15 = r15;
    prev0 = r0;
  }
}

TEST_CASE("nth eigenvalue bounds checking") {
  const auto s = spectra::box_spectrum(std::vector<double>{1.0, 1.0}, 100.0);
  CHECK(spectra::nth_eigenvalue(s, 1) == doctest::Approx(2.0 * kPi2));
  CHECK(spectra::nth_eigenvalue(s, 2) == doctest::Approx(5.0 * kPi2));
  CHECK_THROWS_AS(spectra::nth_eigenvalue(s, 7), std::out_of_range);
  CHECK_THROWS_AS(spectra::nth_eigenvalue(s, 0), std::out_of_range);
}

TEST_CASE("weyl consistency at 500 lambda_1") {
  struct Case {
    Spectrum s;
    double volume;
    int dim;
  };
  const double sq_max = 500.0 * 2.0 * kPi2;
  const double disk_max = 500.0 * 5.7831859629467;
  const double ball_max = 500.0 * kPi2;
  const Case cases[] = {
      {spectra::box_spectrum(std::vector<double>{1.0, 1.0}, sq_max), 1.0, 2},
      {spectra::disk_spectrum(1.0, disk_max), kPi, 2},
      {spectra::ball3_spectrum(1.0, ball_max), 4.0 * kPi / 3.0, 3},
  };
  for (const auto& c : cases) {
    const double n_exact = spectra::riesz_mean(c.s, 0.0, c.s.lambda_max());
    const double weyl = constants::lieb_thirring(0.0, c.dim) * c.volume *
                        std::pow(c.s.lambda_max(), 0.5 * c.dim);
    CHECK(n_exact / weyl >= 0.8);
    CHECK(n_exact / weyl <= 1.1);
  }
}

TEST_CASE("enumeration counts match an independent zero tally") {
  // counts computed externally with 25-digit Bessel zeros
  CHECK(spectra::disk_spectrum(1.0, 100.0).size() == 21);
  CHECK(spectra::disk_spectrum(1.0, 400.0).size() == 92);
  CHECK(spectra::disk_spectrum(1.0, 1156.637192).size() == 275);
  CHECK(spectra::ball3_spectrum(1.0, 100.0).size() == 46);
  CHECK(spectra::ball3_spectrum(1.0, 500.0).size() == 657);

  // and the eigenvalue mass below 100 on the disk, to full accuracy
  const auto s = spectra::disk_spectrum(1.0, 100.0);
  long double sum = 0.0L;
  for (double ev : s.eigenvalues()) sum += ev;
  CHECK(static_cast<double>(sum) ==
        doctest::Approx(1171.8558998703103).epsilon(1e-11));
}

TEST_CASE("ball3 eigenvalues are genuine half-integer Bessel zeros") {
  const auto s = spectra::ball3_spectrum(1.0, 300.0);
  for (double ev : s.eigenvalues()) {
    const double x = std::sqrt(ev);
    double best = 1e9;
    for (int l = 0; l <= 20; ++l) {
      best = std::min(best,
                      std::abs(numerics::detail::bessel_j_raw(l + 0.5, x)));
    }
    CHECK(best < 1e-7);
  }
}

TEST_CASE("ball3 count matches weyl within 20 percent at 500") {
  const auto s = spectra::ball3_spectrum(1.0, 500.0);
  const double weyl = constants::lieb_thirring(0.0, 3) * (4.0 * kPi / 3.0) *
                      std::pow(500.0, 1.5);
  const double count = static_cast<double>(s.size());
  CHECK(count / weyl > 0.8);
  CHECK(count / weyl < 1.2);
}

TEST_CASE("csv export shape") {
  const auto s = spectra::box_spectrum(std::vector<double>{1.0, 1.0}, 100.0);
  std::ostringstream out;
  spectra::write_csv(s, out);
  const std::string text = out.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 6);
  std::istringstream in(text);
  double first;
  in >> first;
  CHECK(first == doctest::Approx(2.0 * kPi2).epsilon(1e-15));
}

TEST_SUITE_END();
