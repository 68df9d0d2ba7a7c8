#pragma once

#include <string>
#include <utility>
#include <vector>

#include "npscan/numeric.hpp"

namespace npscan {

struct Point {
  Rational x;
  Rational y;
  friend bool operator==(const Point&, const Point&) = default;
};

struct SlopeSide {
  Rational slope;
  Rational length;
  friend bool operator==(const SlopeSide&, const SlopeSide&) = default;
};

/// Convex piecewise-linear function on [0, width] given by its break points.
/// Starts at (0,0); x strictly increasing; slopes strictly increasing.
/// Construction merges collinear interior vertices, so equality is structural.
class ConvexPolygon {
 public:
  ConvexPolygon();  // the single vertex (0,0)
  explicit ConvexPolygon(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return vertices_; }
  Rational width() const { return vertices_.back().x; }
  Point endpoint() const { return vertices_.back(); }

  /// Piecewise-linear interpolation; DomainMismatch outside [0, width].
  Rational operator()(const Rational& x) const;

  friend bool operator==(const ConvexPolygon&, const ConvexPolygon&) = default;

 private:
  std::vector<Point> vertices_;
};

/// Lower convex hull (monotone chain). The input must contain (0,0).
ConvexPolygon lower_hull(std::vector<Point> points);

/// Break points (k, k(k+1)/(2d)), k = 0..d-1.
ConvexPolygon hodge_polygon(unsigned d);

/// Horizontal length of the side with slope exactly `slope`, 0 if absent.
Rational slope_length(const ConvexPolygon& poly, const Rational& slope);

std::vector<SlopeSide> slope_multiset(const ConvexPolygon& poly);

/// max over the union of vertex abscissae of upper(x) - lower(x).
Rational vertical_gap(const ConvexPolygon& upper, const ConvexPolygon& lower);

bool lies_above(const ConvexPolygon& upper, const ConvexPolygon& lower);

/// "xn/xd:yn/yd;..." as used in CSV cells.
std::string polygon_to_cell(const ConvexPolygon& poly);
ConvexPolygon polygon_from_cell(const std::string& cell);

/// "s1n/s1d:l1n/l1d;..." (slope:length pairs).
std::string slopes_to_cell(const std::vector<SlopeSide>& sides);

}  // namespace npscan
