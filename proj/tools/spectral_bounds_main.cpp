// Command-line front end for the spectral-bounds library: semiclassical
// constants, trace and eigenvalue bounds, exact spectra, and the
// verification suites, with table / csv / json output.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spectral/constants.hpp"
#include "spectral/eigen_bounds.hpp"
#include "spectral/geometry.hpp"
#include "spectral/numerics.hpp"
#include "spectral/spectra.hpp"
#include "spectral/trace_bounds.hpp"
#include "spectral/verify.hpp"

namespace {

using nlohmann::json;
using namespace spectral;

struct OutputOptions {
  std::string format = "table";
  int decimals = 12;
  bool no_meta = false;
};

std::string fmt(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", decimals, v);
  return buf;
}

// ---------------------------------------------------------------------------
// Domain mini-language: box:a,b[,c...] | disk:R | ball3:R | polygon:path |
// product:(spec)x(spec)
// ---------------------------------------------------------------------------

struct DomainSpec {
  enum class Kind { box, disk, ball3, polygon, product };
  Kind kind = Kind::box;
  std::vector<double> sides;
  double radius = 1.0;
  std::string path;
  std::unique_ptr<DomainSpec> first;
  std::unique_ptr<DomainSpec> second;
  std::string text;
};

DomainSpec parse_domain(const std::string& text, int depth = 0);

DomainSpec parse_product(const std::string& body, int depth) {
  // body is "(spec)x(spec)"
  if (body.empty() || body.front() != '(') {
    throw std::invalid_argument("product domain: expected '(spec)x(spec)'");
  }
  int level = 0;
  std::size_t split = std::string::npos;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '(') ++level;
    if (body[i] == ')') {
      --level;
      if (level == 0) {
        split = i;
        break;
      }
    }
  }
  if (split == std::string::npos || split + 2 >= body.size() ||
      body[split + 1] != 'x' || body[split + 2] != '(' ||
      body.back() != ')') {
    throw std::invalid_argument("product domain: expected '(spec)x(spec)'");
  }
  DomainSpec spec;
  spec.kind = DomainSpec::Kind::product;
  spec.first = std::make_unique<DomainSpec>(
      parse_domain(body.substr(1, split - 1), depth + 1));
  spec.second = std::make_unique<DomainSpec>(parse_domain(
      body.substr(split + 3, body.size() - split - 4), depth + 1));
  return spec;
}

DomainSpec parse_domain(const std::string& text, int depth) {
  if (depth > 1) {
    throw std::invalid_argument("domain: product nesting depth exceeds 2");
  }
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("domain: expected '<kind>:<params>' in '" +
                                text + "'");
  }
  const std::string kind = text.substr(0, colon);
  const std::string body = text.substr(colon + 1);
  DomainSpec spec;
  spec.text = text;
  if (kind == "box") {
    spec.kind = DomainSpec::Kind::box;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      spec.sides.push_back(std::stod(item));
    }
    if (spec.sides.empty()) throw std::invalid_argument("box: no sides given");
  } else if (kind == "disk") {
    spec.kind = DomainSpec::Kind::disk;
    spec.radius = std::stod(body);
  } else if (kind == "ball3") {
    spec.kind = DomainSpec::Kind::ball3;
    spec.radius = std::stod(body);
  } else if (kind == "polygon") {
    spec.kind = DomainSpec::Kind::polygon;
    spec.path = body;
  } else if (kind == "product") {
    spec = parse_product(body, depth);
    spec.text = text;
  } else {
    throw std::invalid_argument("domain: unknown kind '" + kind + "'");
  }
  return spec;
}

int spec_dim(const DomainSpec& d) {
  switch (d.kind) {
    case DomainSpec::Kind::box:
      return static_cast<int>(d.sides.size());
    case DomainSpec::Kind::disk:
    case DomainSpec::Kind::polygon:
      return 2;
    case DomainSpec::Kind::ball3:
      return 3;
    case DomainSpec::Kind::product:
      return spec_dim(*d.first) + spec_dim(*d.second);
  }
  return 0;
}

double spec_volume(const DomainSpec& d) {
  switch (d.kind) {
    case DomainSpec::Kind::box: {
      double v = 1.0;
      for (double s : d.sides) v *= s;
      return v;
    }
    case DomainSpec::Kind::disk:
      return geometry::ball_metrics({2, d.radius}).volume;
    case DomainSpec::Kind::ball3:
      return geometry::ball_metrics({3, d.radius}).volume;
    case DomainSpec::Kind::polygon:
      return geometry::read_polygon_file(d.path).area();
    case DomainSpec::Kind::product:
      return spec_volume(*d.first) * spec_volume(*d.second);
  }
  return 0.0;
}

geometry::DomainMetrics spec_metrics(const DomainSpec& d) {
  switch (d.kind) {
    case DomainSpec::Kind::box:
      return geometry::box_metrics({d.sides});
    case DomainSpec::Kind::disk:
      return geometry::ball_metrics({2, d.radius});
    case DomainSpec::Kind::ball3:
      return geometry::ball_metrics({3, d.radius});
    case DomainSpec::Kind::polygon:
      return geometry::polygon_metrics(geometry::read_polygon_file(d.path));
    case DomainSpec::Kind::product:
      throw std::invalid_argument(
          "product domains have no single metrics object; the trace-bound "
          "product method uses the first factor's metrics");
  }
  throw std::logic_error("unreachable");
}

spectra::Spectrum spec_spectrum(const DomainSpec& d, double lambda_max) {
  switch (d.kind) {
    case DomainSpec::Kind::box:
      return spectra::box_spectrum(d.sides, lambda_max);
    case DomainSpec::Kind::disk:
      return spectra::disk_spectrum(d.radius, lambda_max);
    case DomainSpec::Kind::ball3:
      return spectra::ball3_spectrum(d.radius, lambda_max);
    case DomainSpec::Kind::polygon:
      throw std::invalid_argument(
          "polygon domains have no exact spectrum oracle");
    case DomainSpec::Kind::product: {
      // Each factor needs completeness up to lambda_max minus the other
      // factor's ground state; enumerating both to lambda_max suffices.
      auto a = spec_spectrum(*d.first, lambda_max);
      auto b = spec_spectrum(*d.second, lambda_max);
      return spectra::product_spectrum(a, b, lambda_max);
    }
  }
  throw std::logic_error("unreachable");
}

verify::OracleDomain spec_oracle(const DomainSpec& d) {
  return {d.text, spec_metrics(d),
          [&d](double lambda_max) { return spec_spectrum(d, lambda_max); }};
}

double first_eigenvalue(const verify::OracleDomain& oracle) {
  double lambda_max = 4.0 * trace::zero_region_threshold(oracle.metrics);
  for (int attempt = 0; attempt < 30; ++attempt) {
    const auto s = oracle.spectrum(lambda_max);
    if (!s.empty()) return s.eigenvalues().front();
    lambda_max *= 2.0;
  }
  throw std::runtime_error("could not locate the first eigenvalue");
}

// ---------------------------------------------------------------------------
// Output rendering
// ---------------------------------------------------------------------------

json meta_section(const std::string& command) {
  json m;
  m["tool"] = "spectral-bounds";
  m["command"] = command;
  return m;
}

void emit_keyvalue(const json& payload, const std::string& command,
                   const OutputOptions& out) {
  if (out.format == "json") {
    json doc;
    if (!out.no_meta) doc["meta"] = meta_section(command);
    doc["data"] = payload;
    std::cout << doc.dump(2) << "\n";
    return;
  }
  if (out.format == "csv") {
    std::string header, row;
    bool first = true;
    for (auto it = payload.begin(); it != payload.end(); ++it) {
      if (!first) {
        header += ",";
        row += ",";
      }
      first = false;
      header += it.key();
      if (it.value().is_number_float()) {
        row += fmt(it.value().get<double>(), out.decimals);
      } else {
        row += it.value().dump();
      }
    }
    std::cout << header << "\n" << row << "\n";
    return;
  }
  for (auto it = payload.begin(); it != payload.end(); ++it) {
    std::cout << it.key() << " = ";
    if (it.value().is_number_float()) {
      std::cout << fmt(it.value().get<double>(), out.decimals);
    } else {
      std::cout << it.value().dump();
    }
    std::cout << "\n";
  }
}

void emit_report(const verify::VerificationReport& report,
                 const std::string& command, const OutputOptions& out) {
  if (out.format == "json") {
    json doc;
    if (!out.no_meta) doc["meta"] = meta_section(command);
    doc["data"] = json::parse(verify::to_json(report));
    std::cout << doc.dump(2) << "\n";
    return;
  }
  if (out.format == "csv") {
    std::ostringstream csv;
    verify::write_csv(report, csv);
    std::cout << csv.str();
    return;
  }
  std::cout << report.domain_label << ": "
            << (report.passed ? "PASS" : "FAIL")
            << "  rows=" << report.rows.size()
            << "  worst_margin=" << fmt(report.worst_margin, 6) << "\n";
  for (const auto& row : report.rows) {
    std::cout << "  x=" << fmt(row.x, 6) << "  exact="
              << fmt(row.exact, out.decimals);
    for (const auto& [name, value] : row.bounds) {
      std::cout << "  " << name << "=" << fmt(value, out.decimals);
    }
    std::cout << "\n";
  }
}

int report_status(const std::vector<verify::VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (!r.passed) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semiclassical spectral bounds for convex domains"};
  app.require_subcommand(1);
  app.fallthrough();  // global output flags may follow the subcommand

  OutputOptions out;
  app.add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--decimals", out.decimals,
                 "Significant digits in table output")
      ->capture_default_str();
  app.add_flag("--no-meta", out.no_meta, "Suppress the JSON meta section");

  if (const char* env = std::getenv("SPECTRAL_BOUNDS_TOL")) {
    try {
      numerics::Tolerance tol;
      tol.abs_tol = std::stod(env);
      tol.rel_tol = tol.abs_tol;
      constants::set_quadrature_tolerance(tol);
    } catch (const std::exception& e) {
      std::cerr << "invalid SPECTRAL_BOUNDS_TOL: " << e.what() << "\n";
      return 2;
    }
  }

  // ---- constants ----
  auto* cmd_constants =
      app.add_subcommand("constants", "L^cl, C_n and the C(sigma,n) bounds");
  double c_sigma = 1.5;
  int c_dim = 2;
  cmd_constants->add_option("--sigma", c_sigma, "Riesz order")->required();
  cmd_constants->add_option("--dim", c_dim, "Dimension")->required();

  // ---- table1 / table2 ----
  auto* cmd_table1 =
      app.add_subcommand("table1", "Reproduce the published C(sigma,n) table");
  int t1_decimals = 4;
  cmd_table1->add_option("--tol-decimals", t1_decimals,
                         "Print precision of the published table");
  auto* cmd_table2 =
      app.add_subcommand("table2", "Reproduce the published k*/k_* table");

  // ---- trace-bound ----
  auto* cmd_trace = app.add_subcommand("trace-bound", "Riesz-mean upper bounds");
  std::string tr_method = "improved";
  double tr_sigma = 1.5, tr_lambda = 0.0, tr_curvature = 1.0;
  std::string tr_domain;
  std::optional<double> tr_c;
  cmd_trace->add_option("--method", tr_method, "Bound to evaluate")
      ->check(CLI::IsMember({"berezin", "improved", "integral", "curvature",
                             "product"}))
      ->capture_default_str();
  cmd_trace->add_option("--sigma", tr_sigma, "Riesz order")->required();
  cmd_trace->add_option("--lambda", tr_lambda, "Spectral parameter")->required();
  cmd_trace->add_option("--domain", tr_domain, "Domain spec")->required();
  cmd_trace->add_option("--c-value", tr_c,
                        "Override for C(sigma,n); must not exceed c_upper");
  cmd_trace->add_option("--curvature-scale", tr_curvature,
                        "K with curvatures bounded by 1/K (curvature method)");

  // ---- eigen-bound ----
  auto* cmd_eigen =
      app.add_subcommand("eigen-bound", "Individual eigenvalue lower bounds");
  std::string ei_method = "implicit";
  int ei_k = 1;
  std::string ei_domain;
  std::optional<double> ei_alpha, ei_c;
  bool ei_optimize = false;
  cmd_eigen->add_option("--method", ei_method, "Bound to evaluate")
      ->check(CLI::IsMember({"liyau", "krahn-szego", "implicit", "explicit2d"}))
      ->capture_default_str();
  cmd_eigen->add_option("--k", ei_k, "Eigenvalue index")->required();
  cmd_eigen->add_option("--domain", ei_domain, "Domain spec")->required();
  cmd_eigen->add_option("--alpha", ei_alpha, "Shift parameter in (0,1)");
  cmd_eigen->add_flag("--optimize-alpha", ei_optimize,
                      "Golden-section scan maximizing the bound");
  cmd_eigen->add_option("--c-value", ei_c, "Override for C(3/2,n)");

  // ---- spectrum ----
  auto* cmd_spectrum =
      app.add_subcommand("spectrum", "Exact Dirichlet eigenvalues");
  std::string sp_domain;
  double sp_lambda_max = 0.0;
  cmd_spectrum->add_option("--domain", sp_domain, "Domain spec")->required();
  cmd_spectrum->add_option("--lambda-max", sp_lambda_max,
                           "Completeness cutoff")->required();

  // ---- verify ----
  auto* cmd_verify = app.add_subcommand("verify", "Run a verification suite");
  std::string vf_suite;
  std::uint64_t vf_seed = 2024;
  std::vector<std::string> vf_domains;
  std::vector<double> vf_sigmas;
  int vf_kmax = 200, vf_trials = 500, vf_grid = 50;
  std::optional<double> vf_alpha, vf_c;
  cmd_verify->add_option("--suite", vf_suite, "Suite to run")
      ->check(CLI::IsMember({"trace", "eigen", "perimeter", "tables"}))
      ->required();
  cmd_verify->add_option("--seed", vf_seed, "PRNG seed (perimeter suite)")
      ->capture_default_str();
  cmd_verify->add_option("--domain", vf_domains,
                         "Domain specs (default: the five standard oracles)");
  cmd_verify->add_option("--sigma", vf_sigmas,
                         "Riesz orders (trace suite; default 1.5 2 3)");
  cmd_verify->add_option("--k-max", vf_kmax, "Eigenvalue range (eigen suite)")
      ->capture_default_str();
  cmd_verify->add_option("--trials", vf_trials, "Polygon trials (perimeter)")
      ->capture_default_str();
  cmd_verify->add_option("--grid-size", vf_grid, "Lambda grid size (trace)")
      ->capture_default_str();
  cmd_verify->add_option("--alpha", vf_alpha, "Shift parameter (eigen suite)");
  cmd_verify->add_option("--c-value", vf_c, "Override for C");

  // ---- geometry ----
  auto* cmd_geometry =
      app.add_subcommand("geometry", "Metrics dump and inner parallel bodies");
  std::string geo_domain;
  std::optional<double> geo_inner;
  cmd_geometry->add_option("--domain", geo_domain, "Domain spec")->required();
  cmd_geometry->add_option("--inner-parallel", geo_inner,
                           "Offset t for the inner parallel body (polygons)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cmd_constants) {
      json data;
      data["sigma"] = c_sigma;
      data["dim"] = c_dim;
      data["lieb_thirring"] = constants::lieb_thirring(c_sigma, c_dim);
      if (c_dim >= 2) {
        data["angular_normalizer"] = constants::angular_normalizer(c_dim);
      }
      if (c_sigma >= 1.5 && c_dim >= 2) {
        const auto b = constants::bound_c(c_sigma, c_dim);
        data["c_lower"] = b.lower;
        data["c_upper"] = b.upper;
        data["quad_error"] = b.quad_error;
      }
      emit_keyvalue(data, "constants", out);
      return 0;
    }

    if (*cmd_table1) {
      const auto report = verify::reproduce_table1(t1_decimals);
      emit_report(report, "table1", out);
      return report.passed ? 0 : 1;
    }
    if (*cmd_table2) {
      const auto report = verify::reproduce_table2();
      emit_report(report, "table2", out);
      return report.passed ? 0 : 1;
    }

    if (*cmd_trace) {
      const auto domain = parse_domain(tr_domain);
      json data;
      data["method"] = tr_method;
      data["sigma"] = tr_sigma;
      data["lambda"] = tr_lambda;
      data["domain"] = tr_domain;
      if (tr_method == "berezin") {
        const auto m = spec_metrics(domain);
        data["value"] =
            trace::berezin({tr_sigma, m.dim, tr_lambda}, m);
        if (tr_sigma < 1.0) {
          data["note"] =
              "sigma < 1: conjectured (Polya) regime of the Berezin bound";
        }
      } else if (tr_method == "product") {
        if (domain.kind != DomainSpec::Kind::product) {
          throw std::invalid_argument(
              "trace-bound --method product needs a product domain");
        }
        const auto m1 = spec_metrics(*domain.first);
        const int n2 = spec_dim(*domain.second);
        const double v2 = spec_volume(*domain.second);
        const double c = constants::resolve_c(
            tr_sigma + 0.5 * n2, m1.dim, tr_c ? &*tr_c : nullptr);
        const auto r = trace::product_bound(
            {tr_sigma, m1.dim + n2, tr_lambda}, m1, v2, n2, c);
        data["value"] = r.value;
        data["regime"] =
            r.regime == trace::Regime::zero_region ? "zero_region" : "bounded";
        data["leading_term"] = r.leading_term;
        data["remainder_term"] = r.remainder_term;
        data["c_value"] = c;
      } else {
        const auto m = spec_metrics(domain);
        trace::SpectralParams params{tr_sigma, m.dim, tr_lambda};
        trace::TraceBoundResult r;
        if (tr_method == "improved") {
          const double c =
              constants::resolve_c(tr_sigma, m.dim, tr_c ? &*tr_c : nullptr);
          r = trace::improved(params, m, c);
          data["c_value"] = c;
        } else if (tr_method == "integral") {
          r = trace::integral_remainder_bound(params, m);
        } else {
          r = trace::curvature_bound(params, m, tr_curvature);
        }
        data["value"] = r.value;
        data["regime"] =
            r.regime == trace::Regime::zero_region ? "zero_region" : "bounded";
        data["leading_term"] = r.leading_term;
        data["remainder_term"] = r.remainder_term;
      }
      emit_keyvalue(data, "trace-bound", out);
      return 0;
    }

    if (*cmd_eigen) {
      const auto domain = parse_domain(ei_domain);
      const auto m = spec_metrics(domain);
      json data;
      data["method"] = ei_method;
      data["k"] = ei_k;
      data["domain"] = ei_domain;
      if (ei_method == "liyau") {
        data["value"] = eigen::li_yau(ei_k, m);
      } else if (ei_method == "krahn-szego") {
        data["value"] = eigen::krahn_szego(m);
      } else {
        const double c =
            constants::resolve_c(1.5, m.dim, ei_c ? &*ei_c : nullptr);
        double alpha = ei_alpha ? *ei_alpha : eigen::default_alpha(m.dim);
        if (ei_optimize) alpha = eigen::optimize_alpha(ei_k, m, c);
        data["alpha"] = alpha;
        data["c_value"] = c;
        data["value"] = ei_method == "implicit"
                            ? eigen::implicit_bound(ei_k, m, alpha, c)
                            : eigen::explicit_2d(ei_k, m, alpha, c);
      }
      emit_keyvalue(data, "eigen-bound", out);
      return 0;
    }

    if (*cmd_spectrum) {
      const auto domain = parse_domain(sp_domain);
      const auto s = spec_spectrum(domain, sp_lambda_max);
      if (out.format == "csv") {
        spectra::write_csv(s, std::cout);
      } else if (out.format == "json") {
        json doc;
        if (!out.no_meta) doc["meta"] = meta_section("spectrum");
        doc["data"]["domain"] = sp_domain;
        doc["data"]["lambda_max"] = s.lambda_max();
        doc["data"]["eigenvalues"] = s.eigenvalues();
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << "# " << sp_domain << ", " << s.size()
                  << " eigenvalues <= " << fmt(s.lambda_max(), out.decimals)
                  << "\n";
        int k = 1;
        for (double ev : s.eigenvalues()) {
          std::cout << k++ << " " << fmt(ev, out.decimals) << "\n";
        }
      }
      return 0;
    }

    if (*cmd_verify) {
      std::vector<verify::VerificationReport> reports;
      if (vf_suite == "tables") {
        reports.push_back(verify::reproduce_table1());
        reports.push_back(verify::reproduce_table2());
      } else if (vf_suite == "perimeter") {
        reports.push_back(verify::perimeter_property_run(vf_trials, vf_seed));
      } else {
        std::vector<verify::OracleDomain> oracles;
        std::vector<DomainSpec> specs;  // keep alive for the lambdas
        if (vf_domains.empty()) {
          oracles = verify::standard_oracles();
        } else {
          specs.reserve(vf_domains.size());
          for (const auto& text : vf_domains) {
            specs.push_back(parse_domain(text));
          }
          for (const auto& spec : specs) oracles.push_back(spec_oracle(spec));
        }
        for (const auto& oracle : oracles) {
          if (vf_suite == "trace") {
            const auto sigmas =
                vf_sigmas.empty() ? std::vector<double>{1.5, 2.0, 3.0}
                                  : vf_sigmas;
            const double lambda1 = first_eigenvalue(oracle);
            const auto grid = verify::log_spaced_grid(
                lambda1 / 20.0, 200.0 * lambda1, vf_grid);
            for (double sigma : sigmas) {
              const double c = constants::resolve_c(
                  sigma, oracle.metrics.dim, vf_c ? &*vf_c : nullptr);
              reports.push_back(verify::verify_trace(oracle, sigma, grid, c));
            }
          } else {
            const double c = constants::resolve_c(1.5, oracle.metrics.dim,
                                                  vf_c ? &*vf_c : nullptr);
            const double alpha =
                vf_alpha ? *vf_alpha : eigen::default_alpha(oracle.metrics.dim);
            reports.push_back(verify::verify_eigen(oracle, vf_kmax, alpha, c));
          }
        }
      }
      for (const auto& r : reports) emit_report(r, "verify", out);
      return report_status(reports);
    }

    if (*cmd_geometry) {
      const auto domain = parse_domain(geo_domain);
      json data;
      data["domain"] = geo_domain;
      const auto m = spec_metrics(domain);
      data["dim"] = m.dim;
      data["volume"] = m.volume;
      data["surface"] = m.surface;
      data["inradius"] = m.inradius;
      data["width"] = m.width;
      if (geo_inner) {
        if (domain.kind != DomainSpec::Kind::polygon) {
          throw std::invalid_argument(
              "--inner-parallel needs a polygon domain");
        }
        const auto poly = geometry::read_polygon_file(domain.path);
        const auto inner = geometry::inner_parallel(poly, *geo_inner);
        data["inner_parallel_t"] = *geo_inner;
        data["inner_parallel_perimeter"] = inner.perimeter();
        data["inner_parallel_area"] = inner.area();
        data["inner_parallel_empty"] = !inner.body.has_value();
        data["perimeter_lower_bound"] =
            geometry::perimeter_lower_bound(m, *geo_inner);
      }
      emit_keyvalue(data, "geometry", out);
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
