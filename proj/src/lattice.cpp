#include "tropent/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tropent {

Point2 primitive(Point2 v) {
  long long g = std::gcd(std::abs(v.x), std::abs(v.y));
  if (g > 1) {
    v.x /= g;
    v.y /= g;
  }
  return v;
}

long long cross(const Point2& a, const Point2& b, const Point2& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

int NewtonPolygon::dimension() const {
  if (vertices.size() <= 1) return 0;
  return vertices.size() == 2 ? 1 : 2;
}

std::size_t NewtonPolygon::edge_count() const {
  switch (dimension()) {
    case 0: return 0;
    case 1: return 1;
    default: return vertices.size();
  }
}

std::vector<PolygonEdge> NewtonPolygon::edges() const {
  std::vector<PolygonEdge> out;
  if (dimension() == 0) return out;
  if (dimension() == 1) {
    Point2 d = primitive({vertices[1].x - vertices[0].x, vertices[1].y - vertices[0].y});
    out.push_back({vertices[0], vertices[1], d, {d.y, -d.x}});
    return out;
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Point2& a = vertices[i];
    const Point2& b = vertices[(i + 1) % vertices.size()];
    Point2 d = primitive({b.x - a.x, b.y - a.y});
    // For a CCW polygon the outward side of a->b is to the right.
    out.push_back({a, b, d, {d.y, -d.x}});
  }
  return out;
}

NewtonPolygon hull_2d(const std::vector<Point2>& points) {
  if (points.empty()) throw std::invalid_argument("hull_2d: no points");
  std::vector<Point2> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  NewtonPolygon poly;
  if (pts.size() == 1) {
    poly.vertices = pts;
    return poly;
  }

  // Andrew monotone chain, strict turns only (collinear points dropped).
  auto build = [&](bool lower) {
    std::vector<Point2> chain;
    auto scan = [&](const Point2& p) {
      while (chain.size() >= 2 &&
             cross(chain[chain.size() - 2], chain.back(), p) <= 0)
        chain.pop_back();
      chain.push_back(p);
    };
    if (lower)
      for (const auto& p : pts) scan(p);
    else
      for (auto it = pts.rbegin(); it != pts.rend(); ++it) scan(*it);
    return chain;
  };

  std::vector<Point2> lower = build(true);
  std::vector<Point2> upper = build(false);
  if (lower.size() == 2 && upper.size() == 2) {
    // All points collinear: keep the extreme pair.
    poly.vertices = {lower[0], lower[1]};
    return poly;
  }
  poly.vertices = std::move(lower);
  poly.vertices.insert(poly.vertices.end(), upper.begin() + 1, upper.end() - 1);
  return poly;
}

}  // namespace tropent
