#include "npscan/polygon.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "npscan/errors.hpp"

namespace npscan {

namespace {

// > 0 for a counter-clockwise turn o -> a -> b
Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::vector<Point> merge_collinear(const std::vector<Point>& v) {
  std::vector<Point> out;
  for (const auto& pt : v) {
    while (out.size() >= 2 && cross(out[out.size() - 2], out.back(), pt) == 0) out.pop_back();
    out.push_back(pt);
  }
  return out;
}

}  // namespace

ConvexPolygon::ConvexPolygon() : vertices_{Point{0, 0}} {}

ConvexPolygon::ConvexPolygon(std::vector<Point> vertices) {
  if (vertices.empty() || vertices.front() != Point{0, 0}) {
    throw Error(ErrorKind::MissingOrigin, "polygon must start at (0,0)");
  }
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (vertices[i].x <= vertices[i - 1].x) throw Error(ErrorKind::InvalidArgument, "x-coordinates must increase");
  }
  vertices_ = merge_collinear(vertices);
  for (std::size_t i = 2; i < vertices_.size(); ++i) {
    if (cross(vertices_[i - 2], vertices_[i - 1], vertices_[i]) < 0) {
      throw Error(ErrorKind::InvalidArgument, "slopes must increase");
    }
  }
}

Rational ConvexPolygon::operator()(const Rational& x) const {
  if (x < 0 || x > width()) throw Error(ErrorKind::DomainMismatch, "x outside polygon domain");
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    const auto& a = vertices_[i - 1];
    const auto& b = vertices_[i];
    if (x <= b.x) return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
  }
  return vertices_.front().y;
}

ConvexPolygon lower_hull(std::vector<Point> points) {
  std::sort(points.begin(), points.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].x == points[i - 1].x) throw Error(ErrorKind::InvalidArgument, "duplicate x-coordinate");
  }
  if (points.empty() || points.front() != Point{0, 0}) {
    throw Error(ErrorKind::MissingOrigin, "hull input must contain (0,0) as its leftmost point");
  }
  std::vector<Point> hull;
  for (const auto& pt : points) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
    hull.push_back(pt);
  }
  return ConvexPolygon(std::move(hull));
}

ConvexPolygon hodge_polygon(unsigned d) {
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "degree must be positive");
  std::vector<Point> v;
  for (unsigned k = 0; k < d; ++k) v.push_back(Point{Rational(k), Rational(k * (k + 1), 2 * d)});
  return ConvexPolygon(std::move(v));
}

std::vector<SlopeSide> slope_multiset(const ConvexPolygon& poly) {
  std::vector<SlopeSide> out;
  const auto& v = poly.vertices();
  for (std::size_t i = 1; i < v.size(); ++i) {
    const Rational len = v[i].x - v[i - 1].x;
    out.push_back(SlopeSide{(v[i].y - v[i - 1].y) / len, len});
  }
  return out;
}

Rational slope_length(const ConvexPolygon& poly, const Rational& slope) {
  for (const auto& side : slope_multiset(poly)) {
    if (side.slope == slope) return side.length;
  }
  return 0;
}

namespace {

std::vector<Rational> shared_abscissae(const ConvexPolygon& a, const ConvexPolygon& b) {
  if (a.width() != b.width()) throw Error(ErrorKind::DomainMismatch, "polygons have different widths");
  std::set<Rational> xs;
  for (const auto& v : a.vertices()) xs.insert(v.x);
  for (const auto& v : b.vertices()) xs.insert(v.x);
  return {xs.begin(), xs.end()};
}

}  // namespace

Rational vertical_gap(const ConvexPolygon& upper, const ConvexPolygon& lower) {
  const auto xs = shared_abscissae(upper, lower);
  Rational best = upper(xs.front()) - lower(xs.front());
  for (const auto& x : xs) best = std::max(best, Rational(upper(x) - lower(x)));
  return best;
}

bool lies_above(const ConvexPolygon& upper, const ConvexPolygon& lower) {
  for (const auto& x : shared_abscissae(upper, lower)) {
    if (upper(x) < lower(x)) return false;
  }
  return true;
}

std::string polygon_to_cell(const ConvexPolygon& poly) {
  std::string out;
  for (const auto& v : poly.vertices()) {
    if (!out.empty()) out += ';';
    out += rational_string(v.x) + ":" + rational_string(v.y);
  }
  return out;
}

ConvexPolygon polygon_from_cell(const std::string& cell) {
  std::vector<Point> pts;
  std::stringstream ss(cell);
  std::string item;
  while (std::getline(ss, item, ';')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::ParseError, "bad vertex '" + item + "'");
    pts.push_back(Point{parse_rational(item.substr(0, colon)), parse_rational(item.substr(colon + 1))});
  }
  return ConvexPolygon(std::move(pts));
}

std::string slopes_to_cell(const std::vector<SlopeSide>& sides) {
  std::string out;
  for (const auto& s : sides) {
    if (!out.empty()) out += ';';
    out += rational_string(s.slope) + ":" + rational_string(s.length);
  }
  return out;
}

}  // namespace npscan
