#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <sstream>

#include "spectral/constants.hpp"
#include "spectral/verify.hpp"

using namespace spectral;
using verify::ReportRow;

TEST_SUITE_BEGIN("verify");

TEST_CASE("report assembly and the pass rule") {
  ReportRow good;
  good.x = 1.0;
  good.exact = 10.0;
  good.bounds["upper"] = 10.5;
  good.margins["upper"] = 0.5;

  ReportRow marginal;
  marginal.x = 2.0;
  marginal.exact = 100.0;
  marginal.margins["upper"] = -5e-8;  // inside the 1e-9 * max(1, 100) band

  auto ok = verify::assemble_report("demo", {good, marginal});
  CHECK(ok.passed);
  CHECK(ok.worst_margin == doctest::Approx(-5e-10));

  ReportRow bad;
  bad.x = 3.0;
  bad.exact = 1.0;
  bad.margins["upper"] = -1e-6;
  auto fail = verify::assemble_report("demo", {good, bad});
  CHECK_FALSE(fail.passed);
}

TEST_CASE("splitmix64 is deterministic") {
  verify::SplitMix64 a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  verify::SplitMix64 c(43);
  CHECK(a.next() != c.next());
  for (int i = 0; i < 1000; ++i) {
    const double u = c.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("random polygons are valid and reproducible") {
  verify::SplitMix64 rng1(7), rng2(7);
  for (int i = 0; i < 20; ++i) {
    const auto p1 = verify::random_convex_polygon(rng1);
    const auto p2 = verify::random_convex_polygon(rng2);
    REQUIRE(p1.vertices().size() == p2.vertices().size());
    CHECK(p1.area() == p2.area());
    CHECK(p1.area() >= 0.05);
    CHECK(p1.vertices().size() >= 3);
    CHECK(p1.vertices().size() <= 24);
  }
}

TEST_CASE("log spaced grid") {
  const auto grid = verify::log_spaced_grid(0.5, 512.0, 11);
  REQUIRE(grid.size() == 11);
  CHECK(grid.front() == doctest::Approx(0.5));
  CHECK(grid.back() == doctest::Approx(512.0));
  for (std::size_t i = 1; i < grid.size(); ++i) {
    CHECK(grid[i] / grid[i - 1] == doctest::Approx(2.0).epsilon(1e-9));
  }
}

TEST_CASE("verify_trace on the unit square") {
  const auto square = verify::box_oracle({1.0, 1.0});
  const double lambda1 = 2.0 * 9.8696044010893586;
  const auto grid = verify::log_spaced_grid(lambda1 / 20.0, 100.0 * lambda1, 40);
  const auto report =
      verify::verify_trace(square, 1.5, grid, constants::c_lower(1.5, 2));
  CHECK(report.passed);
  CHECK(report.rows.size() == 40);
  // zero-region rows are exactly 0 = 0
  for (const auto& row : report.rows) {
    if (row.x <= 9.8696044010893586) {
      CHECK(row.exact == 0.0);
      CHECK(row.bounds.at("improved") == 0.0);
    }
  }
}

TEST_CASE("verify_trace on the disk at sigma 2") {
  const auto disk = verify::disk_oracle(1.0);
  const auto grid = verify::log_spaced_grid(1.0, 500.0, 25);
  const auto report =
      verify::verify_trace(disk, 2.0, grid, constants::c_lower(2.0, 2));
  CHECK(report.passed);
}

TEST_CASE("verify_eigen on square and ball") {
  const auto square = verify::box_oracle({1.0, 1.0});
  const auto r1 = verify::verify_eigen(square, 120, 0.6,
                                       constants::c_lower(1.5, 2));
  CHECK(r1.passed);
  CHECK(r1.rows.size() == 120);
  CHECK(r1.rows.front().bounds.count("explicit2d") == 1);
  CHECK(r1.rows.front().bounds.count("krahn_szego") == 0);
  CHECK(r1.rows[1].bounds.count("krahn_szego") == 1);

  const auto ball = verify::ball3_oracle(1.0);
  const auto r2 = verify::verify_eigen(ball, 60, 0.5,
                                       constants::c_lower(1.5, 3));
  CHECK(r2.passed);
  CHECK(r2.rows.front().bounds.count("explicit2d") == 0);
}

TEST_CASE("table 1 reproduction") {
  const auto report = verify::reproduce_table1();
  CHECK(report.passed);
  CHECK(report.rows.size() == 20);
  // the (3/2, 2) cell: computed enclosure reproduces 0.0846 / 0.1334
  const auto& cell = report.rows.front();
  CHECK(cell.bounds.at("printed_lower") == 0.0846);
  CHECK(cell.bounds.at("printed_upper") == 0.1334);
  CHECK(cell.bounds.at("lower") == doctest::Approx(0.0846113).epsilon(1e-4));
  CHECK(cell.bounds.at("upper") == doctest::Approx(2.0 / 15.0).epsilon(1e-10));
}

TEST_CASE("table 2 reproduction") {
  const auto report = verify::reproduce_table2();
  CHECK(report.passed);
  REQUIRE(report.rows.size() == 7);
  const int kstar[] = {40, 91, 165, 255, 332, 392, 412};
  const int klow[] = {6, 10, 16, 25, 38, 59, 91};
  for (int i = 0; i < 7; ++i) {
    CHECK(report.rows[i].bounds.at("k_star") == kstar[i]);
    CHECK(report.rows[i].bounds.at("k_low") == klow[i]);
  }
}

TEST_CASE("perimeter property run") {
  const auto report = verify::perimeter_property_run(200, 2024);
  CHECK(report.passed);
  CHECK(report.rows.size() == 221);  // 200 trials + 21 square offsets
  // determinism
  const auto again = verify::perimeter_property_run(200, 2024);
  CHECK(verify::to_json(report) == verify::to_json(again));
}

TEST_CASE("report serialization") {
  ReportRow row;
  row.x = 1.0;
  row.exact = 2.5;
  row.bounds["upper"] = 3.0;
  row.margins["upper"] = 0.5;
  const auto report = verify::assemble_report("demo", {row});

  const auto json = verify::to_json(report);
  CHECK(json.find("\"domain\": \"demo\"") != std::string::npos);
  CHECK(json.find("\"passed\": true") != std::string::npos);

  std::ostringstream csv;
  verify::write_csv(report, csv);
  const std::string text = csv.str();
  CHECK(text.find("x,exact,bound:upper,margin:upper") != std::string::npos);
  CHECK(text.find("1,2.5,3,0.5") != std::string::npos);
}

TEST_SUITE_END();
