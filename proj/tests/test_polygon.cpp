#include <random>

#include "doctest.h"
#include "npscan/errors.hpp"
#include "npscan/polygon.hpp"

using namespace npscan;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

ConvexPolygon poly(std::vector<std::pair<Rational, Rational>> pts) {
  std::vector<Point> v;
  for (auto& [x, y] : pts) v.push_back({x, y});
  return ConvexPolygon(v);
}

/// Brute-force lower envelope: min over all chords spanning x.
Rational envelope(const std::vector<Point>& pts, const Rational& x) {
  std::optional<Rational> best;
  for (const auto& a : pts) {
    for (const auto& b : pts) {
      if (a.x > x || b.x < x) continue;
      Rational y = a.x == b.x ? a.y : a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
      if (!best || y < *best) best = y;
    }
  }
  return *best;
}

}  // namespace

TEST_CASE("lower hull examples") {
  CHECK(lower_hull({{0, 0}, {1, 1}, {2, 1}}) == poly({{0, 0}, {2, 1}}));
  CHECK(lower_hull({{0, 0}, {1, R(1, 3)}, {2, 1}}).vertices().size() == 3);
  CHECK(lower_hull({{0, 0}}).vertices().size() == 1);
  try {
    lower_hull({{1, 0}, {2, 1}});
    FAIL("expected MissingOrigin");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingOrigin);
  }
}

TEST_CASE("lower hull matches the brute-force envelope") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 300; ++t) {
    std::vector<Point> pts{{0, 0}};
    const int n = 1 + static_cast<int>(rng() % 8);
    for (int k = 1; k <= n; ++k) {
      if (rng() % 3 == 0) continue;
      pts.push_back({k, R(static_cast<long>(rng() % 21), 1 + static_cast<long>(rng() % 6))});
    }
    const auto hull = lower_hull(pts);
    for (const auto& p : pts) CHECK(hull(p.x) == envelope(pts, p.x));
    CHECK(lower_hull(hull.vertices()) == hull);
    Rational total = 0;
    for (const auto& s : slope_multiset(hull)) total += s.length;
    CHECK(total == hull.width());
  }
}

TEST_CASE("construction merges collinear vertices and validates") {
  CHECK(poly({{0, 0}, {1, 1}, {2, 2}}).vertices().size() == 2);
  CHECK_THROWS_AS(poly({{0, 0}, {1, 1}, {2, 1}}), Error);
  CHECK_THROWS_AS(poly({{0, 1}, {1, 1}}), Error);
  CHECK_THROWS_AS(poly({{0, 0}, {0, 1}}), Error);
  CHECK(ConvexPolygon().vertices().size() == 1);
}

TEST_CASE("Hodge polygons") {
  CHECK(hodge_polygon(3) == poly({{0, 0}, {1, R(1, 3)}, {2, 1}}));
  CHECK(hodge_polygon(1).vertices().size() == 1);
  CHECK(hodge_polygon(5).endpoint() == Point{4, 2});
  for (unsigned d = 1; d <= 12; ++d) {
    const auto sides = slope_multiset(hodge_polygon(d));
    REQUIRE(sides.size() == d - 1);
    for (unsigned k = 1; k < d; ++k) {
      CHECK(sides[k - 1].slope == R(k, d));
      CHECK(sides[k - 1].length == 1);
    }
  }
}

TEST_CASE("slope lengths and multisets") {
  const auto p = poly({{0, 0}, {2, 1}});
  CHECK(slope_length(p, R(1, 2)) == 2);
  CHECK(slope_length(p, R(1, 3)) == 0);
  CHECK(slope_length(hodge_polygon(3), R(1, 3)) == 1);
  CHECK(slope_multiset(p) == std::vector<SlopeSide>{{R(1, 2), 2}});
  CHECK(slope_multiset(ConvexPolygon()).empty());
}

TEST_CASE("gaps and comparisons") {
  const auto hp = hodge_polygon(3);
  const auto np = poly({{0, 0}, {2, 1}});
  CHECK(vertical_gap(hp, hp) == 0);
  CHECK(vertical_gap(np, hp) == R(1, 6));
  CHECK(lies_above(hp, hp));
  CHECK(lies_above(np, hp));
  CHECK_FALSE(lies_above(hp, np));
  try {
    vertical_gap(np, hodge_polygon(4));
    FAIL("expected DomainMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DomainMismatch);
  }
  CHECK_THROWS_AS(np(R(3)), Error);
  CHECK(np(1) == R(1, 2));
}

TEST_CASE("mutual domination means equality") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    std::vector<Point> a{{0, 0}}, b{{0, 0}};
    for (int k = 1; k <= 4; ++k) {
      a.push_back({k, R(static_cast<long>(rng() % 7), 2)});
      b.push_back({k, R(static_cast<long>(rng() % 7), 2)});
    }
    a.back().y = b.back().y = 3;
    const auto pa = lower_hull(a), pb = lower_hull(b);
    if (vertical_gap(pa, pb) == 0 && lies_above(pa, pb) && lies_above(pb, pa)) CHECK(pa == pb);
    if (pa == pb) CHECK(vertical_gap(pa, pb) == 0);
  }
}

TEST_CASE("cell serialization round trip") {
  const auto hp = hodge_polygon(3);
  CHECK(polygon_to_cell(hp) == "0/1:0/1;1/1:1/3;2/1:1/1");
  CHECK(polygon_from_cell(polygon_to_cell(hp)) == hp);
  CHECK(slopes_to_cell(slope_multiset(hp)) == "1/3:1/1;2/3:1/1");
  CHECK(polygon_from_cell("0/1:0/1") == ConvexPolygon());
  CHECK_THROWS_AS(polygon_from_cell("0/1;1/1"), Error);
}
