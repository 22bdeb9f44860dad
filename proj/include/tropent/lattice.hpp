#pragma once

#include <cstdint>
#include <vector>

namespace tropent {

struct Point2 {
  long long x = 0;
  long long y = 0;
  friend bool operator==(const Point2&, const Point2&) = default;
  friend auto operator<=>(const Point2&, const Point2&) = default;
};

// gcd-reduced copy of v; the zero vector stays zero.
Point2 primitive(Point2 v);

// cross product of (b-a) and (c-a); >0 means c lies left of a->b.
long long cross(const Point2& a, const Point2& b, const Point2& c);

struct PolygonEdge {
  Point2 from;
  Point2 to;
  Point2 dir;           // primitive direction from->to
  Point2 outer_normal;  // primitive, points away from the polygon interior
};

// Convex hull of a finite lattice point set, counterclockwise, collinear
// interior points dropped. Degenerate hulls (segment, point) are valid
// values with edge_count 1 resp. 0.
struct NewtonPolygon {
  std::vector<Point2> vertices;  // CCW; 1 vertex for a point, 2 for a segment

  int dimension() const;  // 0, 1 or 2
  std::size_t edge_count() const;
  // Empty for a point; one entry for a segment (dir = the segment direction);
  // one entry per side for a 2-dimensional polygon.
  std::vector<PolygonEdge> edges() const;
};

NewtonPolygon hull_2d(const std::vector<Point2>& points);

}  // namespace tropent
