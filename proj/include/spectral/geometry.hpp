#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace spectral::geometry {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

/// Strictly convex planar polygon, vertices in counterclockwise order.
/// Construction validates: at least 3 vertices, positive area, strictly
/// convex turns (normalized cross products above 1e-12).
class ConvexPolygon {
 public:
  explicit ConvexPolygon(std::vector<Vec2> vertices);

  /// Wraps vertices produced by half-plane clipping, which are convex by
  /// construction but may be arbitrarily close to degenerate. Consecutive
  /// duplicates are removed; no convexity check.
  static ConvexPolygon unchecked(std::vector<Vec2> vertices);

  const std::vector<Vec2>& vertices() const { return vertices_; }
  double area() const;
  double perimeter() const;

 private:
  ConvexPolygon() = default;
  std::vector<Vec2> vertices_;
};

struct Box {
  std::vector<double> side_lengths;  // all > 0
};

struct Ball {
  int dimension = 2;  // >= 2
  double radius = 1.0;
};

/// The geometric functionals the spectral bounds consume. Invariants
/// (checked on construction via validate):  all fields positive,
/// width >= 2 * inradius, and n|Omega| >= r|dOmega|.
struct DomainMetrics {
  int dim = 2;
  double volume = 0.0;
  double surface = 0.0;
  double inradius = 0.0;
  double width = 0.0;
};

DomainMetrics validate(DomainMetrics m);

/// Inner parallel body at offset t; empty once t exceeds the inradius.
struct InnerParallelBody {
  double offset = 0.0;
  std::optional<ConvexPolygon> body;

  double perimeter() const { return body ? body->perimeter() : 0.0; }
  double area() const { return body ? body->area() : 0.0; }
};

/// Volume by shoelace, surface = perimeter, inradius by Chebyshev center
/// (edge-triple enumeration), width as the minimal breadth over edge
/// normals.
DomainMetrics polygon_metrics(const ConvexPolygon& p);

/// Support function h(P, u) = max over vertices of <v, u>; u must be a unit
/// vector within 1e-12.
double support(const ConvexPolygon& p, Vec2 u);

/// Intersection of the edge half-planes translated inward by t, computed by
/// incremental clipping of the original polygon. t = 0 returns the polygon
/// itself; t beyond the inradius returns an empty body.
InnerParallelBody inner_parallel(const ConvexPolygon& p, double t);

/// (1 - t/r)_+^{n-1} |dOmega|: the guaranteed lower bound on the perimeter
/// of the inner parallel body at offset t.
double perimeter_lower_bound(const DomainMetrics& m, double t);

/// Offsets in (0, r) where the inner parallel body loses edges. Between
/// consecutive events the perimeter and area are polynomial in t, so these
/// are the breakpoints to hand to a quadrature over inner bodies. The edge
/// count is nonincreasing in t, which lets bisection find every event.
std::vector<double> inner_parallel_events(const ConvexPolygon& p);

DomainMetrics box_metrics(const Box& b);
DomainMetrics ball_metrics(const Ball& b);

/// Reads {"vertices": [[x, y], ...]} (counterclockwise) and validates
/// convexity.
ConvexPolygon read_polygon_json(std::istream& in);
ConvexPolygon read_polygon_file(const std::string& path);

}  // namespace spectral::geometry
