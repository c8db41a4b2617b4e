// Acceptance suite: every gate criterion as one pass/fail line.
//
//   acceptance                   runs everything
//   acceptance --criterion NAME  runs a single criterion
//   acceptance --list            prints criterion names
//
// Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "spectral/constants.hpp"
#include "spectral/eigen_bounds.hpp"
#include "spectral/geometry.hpp"
#include "spectral/numerics.hpp"
#include "spectral/spectra.hpp"
#include "spectral/trace_bounds.hpp"
#include "spectral/verify.hpp"

namespace {

using namespace spectral;
using Clock = std::chrono::steady_clock;

constexpr double kPi = 3.14159265358979323846;

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// --- 1. Table 1: all 40 printed values reproduced, < 60 s -------------------

bool check_table1(std::string& detail) {
  const auto start = Clock::now();
  const auto report = verify::reproduce_table1(4);
  const double elapsed = seconds_since(start);

  int beyond_half_ulp = 0;
  double max_diff = 0.0;
  for (const auto& row : report.rows) {
    const double dl = std::abs(row.bounds.at("lower_diff"));
    const double du = std::abs(row.bounds.at("upper_diff"));
    max_diff = std::max({max_diff, dl, du});
    if (dl > 5e-5) ++beyond_half_ulp;
    if (du > 5e-5) ++beyond_half_ulp;
  }
  const bool time_ok = elapsed < 60.0;
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "40/40 printed values reproduced under the table's outward "
                "rounding; max |computed - printed| = %.2e (all within one "
                "print ulp 1e-4; %d cells sit past 5e-5, see README); %.1f s",
                max_diff, beyond_half_ulp, elapsed);
  detail = buf;
  return report.passed && max_diff <= 1e-4 && time_ok;
}

// --- 2. Table 2: k* and k_* integers within +-1, < 120 s --------------------

bool check_table2(std::string& detail) {
  const auto start = Clock::now();
  const auto report = verify::reproduce_table2();
  const double elapsed = seconds_since(start);

  bool exact = true;
  for (const auto& row : report.rows) {
    if (row.bounds.at("k_star") != row.bounds.at("printed_k_star")) exact = false;
    if (row.bounds.at("k_low") != row.bounds.at("printed_k_low")) exact = false;
  }
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "k* and k_* integers %s for n = 2..8 (C(3/2,n) from the "
                "quadrature pipeline, published rounding conventions); %.1f s",
                exact ? "match exactly" : "within +-1", elapsed);
  detail = buf;
  return report.passed && elapsed < 120.0;
}

// --- 3. GLW comparison -------------------------------------------------------

bool check_glw(std::string& detail) {
  const double ours = constants::c_lower(1.5, 2);
  const double glw = constants::glw_reference_constant();
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "c_lower(3/2,2) = %.6f > 0.0846 - 5e-5 and > GLW constant "
                "%.6f",
                ours, glw);
  detail = buf;
  return ours > 0.0846 - 5e-5 && ours > glw && glw > 0.0642;
}

// --- 4. Trace-bound property suite ------------------------------------------

bool check_trace(std::string& detail) {
  const auto domains = verify::standard_oracles();
  bool ok = true;
  double worst = std::numeric_limits<double>::infinity();
  int rows = 0;
  for (const auto& domain : domains) {
    const auto spectrum_probe = domain.spectrum(
        8.0 * trace::zero_region_threshold(domain.metrics));
    const double lambda1 = spectrum_probe.eigenvalues().front();
    const auto grid =
        verify::log_spaced_grid(lambda1 / 20.0, 200.0 * lambda1, 50);
    for (double sigma : {1.5, 2.0, 3.0}) {
      const double c = constants::c_lower(sigma, domain.metrics.dim);
      const auto report = verify::verify_trace(domain, sigma, grid, c);
      ok = ok && report.passed;
      worst = std::min(worst, report.worst_margin);
      rows += static_cast<int>(report.rows.size());
      // the chain improved <= berezin, and exact zero-region rows
      for (const auto& row : report.rows) {
        const double scale = std::max(1.0, std::abs(row.exact));
        if (row.bounds.at("improved") >
            row.bounds.at("berezin") + 1e-9 * scale) {
          ok = false;
        }
        if (row.x <= trace::zero_region_threshold(domain.metrics)) {
          if (row.exact != 0.0 || row.bounds.at("improved") != 0.0) ok = false;
        }
      }
    }
  }
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "%d rows over 5 domains x sigma {3/2,2,3}: exact <= improved "
                "<= berezin and <= integral bound; worst relative margin "
                "%.2e",
                rows, worst);
  detail = buf;
  return ok;
}

// --- 5. Eigenvalue property suite -------------------------------------------

bool check_eigen(std::string& detail) {
  const auto domains = verify::standard_oracles();
  bool ok = true;
  double worst = std::numeric_limits<double>::infinity();
  int rows = 0;
  for (const auto& domain : domains) {
    const int n = domain.metrics.dim;
    const double c = constants::c_lower(1.5, n);
    for (double alpha : {0.2, eigen::default_alpha(n), 0.8}) {
      const auto report = verify::verify_eigen(domain, 200, alpha, c);
      ok = ok && report.passed;
      worst = std::min(worst, report.worst_margin);
      rows += static_cast<int>(report.rows.size());
      if (n == 2) {
        for (const auto& row : report.rows) {
          const double imp = row.bounds.at("implicit");
          const double exp2 = row.bounds.at("explicit2d");
          if (std::abs(imp - exp2) > 1e-9 * std::max(1.0, std::abs(exp2))) {
            ok = false;
          }
        }
      }
    }
  }
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "%d rows, k <= 200, alpha {0.2, 3/(n+3), 0.8}: lambda_k >= "
                "li_yau, krahn_szego (k>=2), implicit, explicit2d; "
                "explicit == implicit to 1e-9; worst margin %.2e",
                rows, worst);
  detail = buf;
  return ok;
}

// --- 6. Crossover claim ------------------------------------------------------

bool check_crossover(std::string& detail) {
  const auto disk = geometry::ball_metrics({2, 1.0});
  const double c = constants::c_lower(1.5, 2);
  bool ok = true;
  double min_margin = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 40; ++k) {
    const double implicit = eigen::implicit_bound(k, disk, 0.6, c);
    const double liyau = eigen::li_yau(k, disk);
    min_margin = std::min(min_margin, implicit - liyau);
    if (!(implicit > liyau)) ok = false;
  }
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "unit disk, alpha = 3/5, C = c_lower(3/2,2): implicit bound "
                "exceeds li_yau for every k < 40 (smallest gap %.3e)",
                min_margin);
  detail = buf;
  return ok;
}

// --- 7. Geometry suite -------------------------------------------------------

bool check_geometry(std::string& detail) {
  const auto report = verify::perimeter_property_run(500, 2024);
  bool ok = report.passed;

  // coarea identity on a batch of random polygons
  verify::SplitMix64 rng(515151);
  double worst_coarea = 0.0;
  for (int trial = 0; trial < 15; ++trial) {
    const auto poly = verify::random_convex_polygon(rng);
    const auto m = geometry::polygon_metrics(poly);
    const auto events = geometry::inner_parallel_events(poly);
    numerics::Tolerance tol{1e-9, 1e-9, 34};
    const auto vol = numerics::integrate(
        [&](double t) { return geometry::inner_parallel(poly, t).perimeter(); },
        0.0, m.inradius, events, tol);
    worst_coarea = std::max(worst_coarea, std::abs(vol.value - m.volume));
    if (std::abs(vol.value - m.volume) > 1e-6) ok = false;
  }

  // lambda* fixpoint on random metric tuples
  double worst_fix = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    geometry::DomainMetrics m;
    if (trial % 3 == 0) {
      m = geometry::polygon_metrics(verify::random_convex_polygon(rng));
    } else if (trial % 3 == 1) {
      const int n = 2 + static_cast<int>(rng.next() % 5);
      std::vector<double> sides;
      for (int i = 0; i < n; ++i) sides.push_back(0.5 + 2.0 * rng.uniform());
      m = geometry::box_metrics({sides});
    } else {
      const int n = 2 + static_cast<int>(rng.next() % 5);
      m = geometry::ball_metrics({n, 0.5 + 2.0 * rng.uniform()});
    }
    const double tau = 3.0 / m.dim;
    const double c = 0.9 * constants::c_upper(1.5, m.dim);
    const double star = eigen::lambda_star(m, tau, c);
    const double p = eigen::counting_bound(m, tau / (1.0 + tau), c)(star);
    const double ply = eigen::liyau_counting(m)(star);
    const double rel = std::abs(p - ply) / std::max(1.0, std::abs(ply));
    worst_fix = std::max(worst_fix, rel);
    if (rel > 1e-9) ok = false;
  }

  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "500 seeded polygons respect the inner-parallel perimeter "
                "bound (worst margin %.2e), square equality holds, coarea "
                "within %.2e, lambda* fixpoint within %.2e",
                report.worst_margin, worst_coarea, worst_fix);
  detail = buf;
  return ok;
}

// --- 8. Oracle self-consistency ----------------------------------------------

bool check_oracles(std::string& detail) {
  // product of intervals == direct box, bitwise
  const double lambda_max = 2000.0;
  const auto a = spectra::box_spectrum(std::vector<double>{1.0}, lambda_max);
  const auto b = spectra::box_spectrum(std::vector<double>{1.0}, lambda_max);
  const auto prod = spectra::product_spectrum(a, b, lambda_max);
  const auto box =
      spectra::box_spectrum(std::vector<double>{1.0, 1.0}, lambda_max);
  bool product_ok = prod.size() == box.size();
  if (product_ok) {
    for (std::size_t i = 0; i < prod.size(); ++i) {
      if (prod.eigenvalues()[i] != box.eigenvalues()[i]) product_ok = false;
    }
  }

  // Weyl ratio at Lambda = 1e4, sigma = 2, gate |ratio - 1| <= 5%.
  // Known-red: the boundary term of the asymptotics contributes -6.4% at
  // this Lambda (the gate is reached only past Lambda ~ 1.7e4); reported
  // honestly rather than retuned. See README.
  const auto square = verify::box_oracle({1.0, 1.0});
  const auto spectrum = square.spectrum(1e4);
  const double exact = spectra::riesz_mean(spectrum, 2.0, 1e4);
  const double ber = trace::berezin({2.0, 2, 1e4}, square.metrics);
  const double ratio = exact / ber;
  const bool weyl_ok = std::abs(ratio - 1.0) <= 0.05;

  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "product-of-intervals == box: %s; Weyl ratio at 1e4 = %.6f "
                "(gate: within 5%% of 1 -> %s)",
                product_ok ? "exact" : "MISMATCH", ratio,
                weyl_ok ? "ok" : "FAILS, see README");
  detail = buf;
  return product_ok && weyl_ok;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {"table1", check_table1},
      {"table2", check_table2},
      {"glw-comparison", check_glw},
      {"trace-bounds", check_trace},
      {"eigen-bounds", check_eigen},
      {"crossover", check_crossover},
      {"geometry", check_geometry},
      {"oracle-consistency", check_oracles},
  };

  std::string only;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--list") == 0) {
      for (const auto& c : criteria) std::cout << c.name << "\n";
      return 0;
    }
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = argv[++i];
    }
  }

  int failures = 0;
  bool matched = false;
  for (const auto& criterion : criteria) {
    if (!only.empty() && criterion.name != only) continue;
    matched = true;
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << criterion.name << ": "
              << detail << "\n";
    if (!ok) ++failures;
  }
  if (!matched) {
    std::cerr << "unknown criterion: " << only << "\n";
    return 2;
  }
  return failures;
}
