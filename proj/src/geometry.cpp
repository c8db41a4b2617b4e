#include "spectral/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "spectral/numerics.hpp"

namespace spectral::geometry {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kCrossTol = 1e-12;

double cross(const Vec2& o, const Vec2& a, const Vec2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

double norm(const Vec2& a) { return std::hypot(a.x, a.y); }

double shoelace_area(const std::vector<Vec2>& v) {
  double twice = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec2& p = v[i];
    const Vec2& q = v[(i + 1) % v.size()];
    twice += p.x * q.y - p.y * q.x;
  }
  return 0.5 * twice;
}

double boundary_length(const std::vector<Vec2>& v) {
  double len = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec2& p = v[i];
    const Vec2& q = v[(i + 1) % v.size()];
    len += std::hypot(q.x - p.x, q.y - p.y);
  }
  return len;
}

struct EdgeLine {
  Vec2 normal;     // outward unit normal
  double offset;   // <normal, x> <= offset inside
};

std::vector<EdgeLine> edge_lines(const std::vector<Vec2>& v) {
  std::vector<EdgeLine> lines;
  lines.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec2& p = v[i];
    const Vec2& q = v[(i + 1) % v.size()];
    Vec2 e{q.x - p.x, q.y - p.y};
    const double len = norm(e);
    // CCW order puts the outward normal to the right of the edge.
    Vec2 n{e.y / len, -e.x / len};
    lines.push_back({n, dot(n, p)});
  }
  return lines;
}

}  // namespace

ConvexPolygon::ConvexPolygon(std::vector<Vec2> vertices) {
  if (vertices.size() < 3) {
    throw std::invalid_argument("ConvexPolygon: need at least 3 vertices");
  }
  const std::size_t m = vertices.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Vec2& o = vertices[i];
    const Vec2& a = vertices[(i + 1) % m];
    const Vec2& b = vertices[(i + 2) % m];
    const double la = std::hypot(a.x - o.x, a.y - o.y);
    const double lb = std::hypot(b.x - a.x, b.y - a.y);
    if (la == 0.0 || lb == 0.0) {
      throw std::invalid_argument("ConvexPolygon: repeated vertex");
    }
    if (cross(o, a, b) <= kCrossTol * la * lb) {
      throw std::invalid_argument(
          "ConvexPolygon: vertices must make strictly convex "
          "counterclockwise turns");
    }
  }
  if (shoelace_area(vertices) <= 0.0) {
    throw std::invalid_argument("ConvexPolygon: degenerate area");
  }
  vertices_ = std::move(vertices);
}

ConvexPolygon ConvexPolygon::unchecked(std::vector<Vec2> vertices) {
  std::vector<Vec2> cleaned;
  for (const Vec2& v : vertices) {
    if (!cleaned.empty() && std::hypot(v.x - cleaned.back().x,
                                       v.y - cleaned.back().y) < 1e-12) {
      continue;
    }
    cleaned.push_back(v);
  }
  while (cleaned.size() > 1 &&
         std::hypot(cleaned.front().x - cleaned.back().x,
                    cleaned.front().y - cleaned.back().y) < 1e-12) {
    cleaned.pop_back();
  }
  if (cleaned.size() < 3) {
    throw std::invalid_argument("ConvexPolygon::unchecked: collapsed input");
  }
  ConvexPolygon p;
  p.vertices_ = std::move(cleaned);
  return p;
}

double ConvexPolygon::area() const { return shoelace_area(vertices_); }

double ConvexPolygon::perimeter() const { return boundary_length(vertices_); }

DomainMetrics validate(DomainMetrics m) {
  if (m.dim < 2) throw std::invalid_argument("DomainMetrics: dim must be >= 2");
  if (!(m.volume > 0.0) || !(m.surface > 0.0) || !(m.inradius > 0.0) ||
      !(m.width > 0.0)) {
    throw std::invalid_argument("DomainMetrics: all fields must be positive");
  }
  if (m.width < 2.0 * m.inradius - 1e-9 * m.width) {
    throw std::invalid_argument("DomainMetrics: width below twice the inradius");
  }
  if (m.dim * m.volume < m.inradius * m.surface - 1e-9 * m.dim * m.volume) {
    throw std::invalid_argument("DomainMetrics: n|Omega| >= r|dOmega| violated");
  }
  return m;
}

DomainMetrics polygon_metrics(const ConvexPolygon& p) {
  const auto& v = p.vertices();
  const auto lines = edge_lines(v);
  const std::size_t m = lines.size();

  // Chebyshev center: the deepest point is determined by (at most) three
  // active edges; enumerate triples, solve for the tritangent circle, and
  // score each candidate center by its true clearance.
  double best = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        // [n.x n.y 1] [cx cy d]^T = offset for each of the three edges
        const double a1 = lines[i].normal.x, b1 = lines[i].normal.y;
        const double a2 = lines[j].normal.x, b2 = lines[j].normal.y;
        const double a3 = lines[k].normal.x, b3 = lines[k].normal.y;
        const double det = a1 * (b2 - b3) - b1 * (a2 - a3) + (a2 * b3 - a3 * b2);
        if (std::abs(det) < 1e-12) continue;
        const double c1 = lines[i].offset, c2 = lines[j].offset,
                     c3 = lines[k].offset;
        const double cx =
            (c1 * (b2 - b3) - b1 * (c2 - c3) + (c2 * b3 - c3 * b2)) / det;
        const double cy =
            (a1 * (c2 - c3) - c1 * (a2 - a3) + (a2 * c3 - a3 * c2)) / det;
        double clearance = std::numeric_limits<double>::infinity();
        for (const EdgeLine& e : lines) {
          clearance = std::min(clearance, e.offset - (e.normal.x * cx +
                                                      e.normal.y * cy));
        }
        best = std::max(best, clearance);
      }
    }
  }

  // Width: for polygons the minimal breadth is attained at an edge normal.
  double width = std::numeric_limits<double>::infinity();
  for (const EdgeLine& e : lines) {
    double hi = -std::numeric_limits<double>::infinity();
    double lo = std::numeric_limits<double>::infinity();
    for (const Vec2& vv : v) {
      const double s = dot(e.normal, vv);
      hi = std::max(hi, s);
      lo = std::min(lo, s);
    }
    width = std::min(width, hi - lo);
  }

  return validate({2, p.area(), p.perimeter(), best, width});
}

double support(const ConvexPolygon& p, Vec2 u) {
  if (std::abs(norm(u) - 1.0) > 1e-12) {
    throw std::invalid_argument("support: direction must be a unit vector");
  }
  double best = -std::numeric_limits<double>::infinity();
  for (const Vec2& v : p.vertices()) best = std::max(best, dot(v, u));
  return best;
}

InnerParallelBody inner_parallel(const ConvexPolygon& p, double t) {
  if (t < 0.0) throw std::invalid_argument("inner_parallel: t must be >= 0");
  if (t == 0.0) return {0.0, p};

  std::vector<Vec2> poly = p.vertices();
  for (const EdgeLine& e : edge_lines(p.vertices())) {
    const double c = e.offset - t;
    std::vector<Vec2> clipped;
    const std::size_t m = poly.size();
    for (std::size_t i = 0; i < m; ++i) {
      const Vec2& cur = poly[i];
      const Vec2& nxt = poly[(i + 1) % m];
      const double dc = dot(e.normal, cur) - c;
      const double dn = dot(e.normal, nxt) - c;
      if (dc <= 0.0) clipped.push_back(cur);
      if ((dc < 0.0 && dn > 0.0) || (dc > 0.0 && dn < 0.0)) {
        const double s = dc / (dc - dn);
        clipped.push_back({cur.x + s * (nxt.x - cur.x),
                           cur.y + s * (nxt.y - cur.y)});
      }
    }
    poly = std::move(clipped);
    if (poly.size() < 3) return {t, std::nullopt};
  }
  if (shoelace_area(poly) <= 0.0) return {t, std::nullopt};
  try {
    return {t, ConvexPolygon::unchecked(std::move(poly))};
  } catch (const std::invalid_argument&) {
    return {t, std::nullopt};  // collapsed to a point or segment
  }
}

double perimeter_lower_bound(const DomainMetrics& m, double t) {
  if (t < 0.0) throw std::invalid_argument("perimeter_lower_bound: t >= 0");
  const double frac = 1.0 - t / m.inradius;
  if (frac <= 0.0) return 0.0;
  return std::pow(frac, m.dim - 1) * m.surface;
}

namespace {

std::size_t offset_edge_count(const ConvexPolygon& p, double t) {
  const auto body = inner_parallel(p, t);
  return body.body ? body.body->vertices().size() : 0;
}

void collect_events(const ConvexPolygon& p, double a, std::size_t ca,
                    double b, std::size_t cb, std::vector<double>& out) {
  if (ca == cb) return;  // count is monotone, equal ends mean no event inside
  if (b - a < 1e-12) {
    out.push_back(b);
    return;
  }
  const double mid = 0.5 * (a + b);
  const std::size_t cm = offset_edge_count(p, mid);
  collect_events(p, a, ca, mid, cm, out);
  collect_events(p, mid, cm, b, cb, out);
}

}  // namespace

std::vector<double> inner_parallel_events(const ConvexPolygon& p) {
  const double r = polygon_metrics(p).inradius;
  std::vector<double> events;
  collect_events(p, 0.0, offset_edge_count(p, 0.0), r,
                 offset_edge_count(p, r * (1.0 - 1e-14)), events);
  std::sort(events.begin(), events.end());
  return events;
}

DomainMetrics box_metrics(const Box& b) {
  const int n = static_cast<int>(b.side_lengths.size());
  if (n < 2) {
    throw std::invalid_argument(
        "box_metrics: needs dimension >= 2 (1-D factors carry only a volume)");
  }
  double volume = 1.0;
  double min_side = std::numeric_limits<double>::infinity();
  for (double a : b.side_lengths) {
    if (!(a > 0.0)) throw std::invalid_argument("box_metrics: sides must be > 0");
    volume *= a;
    min_side = std::min(min_side, a);
  }
  double surface = 0.0;
  for (double a : b.side_lengths) surface += 2.0 * volume / a;
  return validate({n, volume, surface, 0.5 * min_side, min_side});
}

DomainMetrics ball_metrics(const Ball& b) {
  if (b.dimension < 2) throw std::invalid_argument("ball_metrics: dim >= 2");
  if (!(b.radius > 0.0)) throw std::invalid_argument("ball_metrics: radius > 0");
  const double n = b.dimension;
  const double volume = std::pow(kPi, 0.5 * n) * std::pow(b.radius, n) /
                        numerics::gamma(0.5 * n + 1.0);
  return validate(
      {b.dimension, volume, n * volume / b.radius, b.radius, 2.0 * b.radius});
}

ConvexPolygon read_polygon_json(std::istream& in) {
  nlohmann::json j;
  in >> j;
  if (!j.contains("vertices") || !j["vertices"].is_array()) {
    throw std::invalid_argument("polygon JSON: missing \"vertices\" array");
  }
  std::vector<Vec2> v;
  for (const auto& pt : j["vertices"]) {
    if (!pt.is_array() || pt.size() != 2) {
      throw std::invalid_argument("polygon JSON: vertices must be [x, y] pairs");
    }
    v.push_back({pt[0].get<double>(), pt[1].get<double>()});
  }
  return ConvexPolygon(std::move(v));
}

ConvexPolygon read_polygon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open polygon file: " + path);
  return read_polygon_json(in);
}

}  // namespace spectral::geometry
