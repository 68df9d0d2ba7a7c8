#include <random>

#include "doctest.h"
#include "npscan/dickson.hpp"
#include "npscan/errors.hpp"
#include "npscan/lfunction.hpp"
#include "oracles.hpp"

using namespace npscan;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

FieldPolynomial fp(std::uint64_t p, std::vector<std::int64_t> c) {
  return FieldPolynomial::from_residues(FiniteField::build(p, 1), c);
}

QPoly qp(std::vector<long> c) {
  std::vector<Rational> v(c.begin(), c.end());
  return QPoly(v);
}

ConvexPolygon poly(std::vector<std::pair<Rational, Rational>> pts) {
  std::vector<Point> v;
  for (auto& [x, y] : pts) v.push_back({x, y});
  return ConvexPolygon(v);
}

std::vector<std::int64_t> random_monic(std::mt19937_64& rng, std::uint64_t p, unsigned d) {
  std::vector<std::int64_t> c(d + 1);
  for (auto& x : c) x = static_cast<std::int64_t>(rng() % p);
  c[d] = 1;
  return c;
}

}  // namespace

TEST_CASE("exponential sums match direct evaluation") {
  std::mt19937_64 rng(21);
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (unsigned d = 1; d <= 4; ++d) {
      const auto coeffs = random_monic(rng, p, d);
      const auto f = fp(p, coeffs);
      for (unsigned m = 1; m <= 3; ++m) {
        const auto big = FiniteField::build(p, m);
        const oracle::Field O{static_cast<std::int64_t>(p),
                              oracle::Poly(big.modulus().begin(), big.modulus().end())};
        if (O.size() > 400) continue;
        for (std::uint64_t c = 1; c < p; ++c)
          CHECK(exp_sum(f, m, Character(p, c)).coeffs() == oracle::naive_exp_sum(O, coeffs, c));
      }
    }
  }
}

TEST_CASE("exponential sum examples") {
  CHECK(exp_sum(fp(3, {0, 0, 1}), 1, Character(3, 1)) == CycInt(3, {1, 2}));
  CHECK(exp_sum(fp(5, {}), 2, Character(5, 1)) == CycInt::integer(5, 25));
  for (std::uint64_t p : {3, 5, 7}) CHECK(exp_sum(fp(p, {0, 1}), 1, Character(p, 1)).is_zero());
  CHECK_THROWS_AS(exp_sum(fp(5, {0, 1}), 1, Character(3, 1)), Error);
  CHECK_THROWS_AS(Character(5, 10), Error);
}

TEST_CASE("L-polynomial examples") {
  const auto L = l_polynomial(fp(3, {0, 0, 1}), Character(3, 1));
  CHECK(L.coeffs() == std::vector<CycInt>{CycInt::integer(3, 1), CycInt(3, {1, 2})});
  CHECK(newton_polygon(L) == poly({{0, 0}, {1, R(1, 2)}}));
  const auto L1 = l_polynomial(fp(5, {3, 1}), Character(5, 1));
  CHECK(L1.degree() == 0);
  CHECK(newton_polygon(L1) == ConvexPolygon());
  CHECK(newton_polygon(l_polynomial(fp(7, {0, 0, 0, 1}), Character(7, 1))) == hodge_polygon(3));
  CHECK(newton_polygon(l_polynomial(fp(5, {0, 0, 0, 1}), Character(5, 1))) == poly({{0, 0}, {2, 1}}));
  try {
    l_polynomial(fp(3, {0, 0, 0, 1}), Character(3, 1));
    FAIL("expected DegreeCharClash");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeCharClash);
  }
}

TEST_CASE("Newton recurrence against a hand expansion") {
  // exp(S1 t + S2 t^2/2) = 1 + S1 t + (S1^2 + S2)/2 t^2
  const std::uint64_t p = 5;
  const auto s1 = CycInt(p, {2, 0, 2, 0}), s2 = CycInt(p, {4, 2, 0, -6});
  const auto a = coefficients_from_sums(p, {s1, s2});
  REQUIRE(a.size() == 3);
  CHECK(a[1] == s1);
  CHECK(a[2] == exact_div_int(s1 * s1 + s2, 2));
  CHECK(coefficients_from_sums(p, {}) == std::vector<CycInt>{CycInt::integer(p, 1)});
}

TEST_CASE("verification pass confirms the top coefficient") {
  std::mt19937_64 rng(8);
  for (std::uint64_t p : {3, 5, 7}) {
    for (unsigned d = 2; d <= 4; ++d) {
      if (d % p == 0) continue;
      const auto f = fp(p, random_monic(rng, p, d));
      CHECK_NOTHROW(l_polynomial(f, Character(p, 1), {}, true));
    }
  }
}

TEST_CASE("reduction into F_p[x]") {
  CHECK(reduce_mod_p(qp({0, -3, 0, 1}), 5) == fp(5, {0, 2, 0, 1}));
  const QPoly half({Rational(1, 2), 0, 1});
  CHECK(reduce_mod_p(half, 3) == fp(3, {2, 0, 1}));
  for (auto [f, p] : std::vector<std::pair<QPoly, std::uint64_t>>{{qp({0, 0, 0, 1}), 3}, {half, 2}}) {
    try {
      reduce_mod_p(f, p);
      FAIL("expected BadPlace");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BadPlace);
    }
  }
  CHECK(std::string(Error(ErrorKind::BadPlace, "x").what()).find("BadPlace") != std::string::npos);
}

TEST_CASE("np_at_prime examples") {
  CHECK(np_at_prime(qp({0, 0, 0, 1}), 7) == hodge_polygon(3));
  CHECK(np_at_prime(qp({0, 0, 0, 1}), 5) == poly({{0, 0}, {2, 1}}));
  CHECK_THROWS_AS(np_at_prime(qp({0, 0, 0, 1}), 3), Error);
  CHECK_THROWS_AS(np_at_prime(qp({0, 0, 0, 1}), 9), Error);
}

TEST_CASE("character independence, Galois compatibility and the Hodge floor") {
  std::mt19937_64 rng(17);
  for (std::uint64_t p : {3, 5, 7}) {
    for (unsigned d = 2; d <= 5; ++d) {
      if (d % p == 0) continue;
      for (int t = 0; t < 2; ++t) {
        const auto f = fp(p, random_monic(rng, p, d));
        const auto base = l_polynomial(f, Character(p, 1));
        const auto np = newton_polygon(base);
        CHECK(lies_above(np, hodge_polygon(d)));
        CHECK(np.endpoint() == Point{d - 1, R(d - 1, 2)});
        for (std::uint64_t c = 2; c < p; ++c) {
          const auto L = l_polynomial(f, Character(p, c));
          CHECK(newton_polygon(L) == np);
          for (std::size_t k = 0; k < L.coeffs().size(); ++k)
            CHECK(L.coeffs()[k] == galois_apply(base.coeffs()[k], static_cast<std::int64_t>(c)));
        }
      }
    }
  }
}

TEST_CASE("Hodge equality when p = 1 mod d") {
  for (unsigned d = 2; d <= 4; ++d) {
    for (std::uint64_t p : primes_in_range(3, 40)) {
      if (p % d != 1) continue;
      if (checked_pow(p, d - 1).value_or(UINT64_MAX) > 100000) continue;
      CHECK(np_at_prime(QPoly::monomial(d), p) == hodge_polygon(d));
    }
  }
}

TEST_CASE("base change") {
  CHECK(np_base_change_check(fp(3, {0, 0, 1}), 2, Character(3, 1)));
  CHECK(np_base_change_check(fp(3, {0, 0, 1}), 1, Character(3, 1)));
  CHECK(np_base_change_check(fp(5, {0, 0, 0, 1}), 2, Character(5, 1)));
  CHECK(np_base_change_check(fp(7, {0, 1, 0, 0, 1}), 2, Character(7, 1)));
  CHECK(np_base_change_check(fp(2, {0, 1, 0, 1}), 3, Character(2, 1)));
}

TEST_CASE("L-polynomial over a non-prime field") {
  const auto F9 = FiniteField::build(3, 2);
  const FieldPolynomial g(F9, {F9.zero(), F9.generator(), F9.zero(), F9.zero(), F9.one()});
  const auto L = l_polynomial(g, Character(3, 1), {}, true);
  CHECK(L.field_degree() == 2);
  CHECK(L.degree() == 3);
  const auto np = newton_polygon(L);
  CHECK(lies_above(np, hodge_polygon(4)));
  CHECK(np.endpoint() == Point{3, R(3, 2)});
}

TEST_CASE("permutation identity for exponential sums at admissible triples") {
  // (7, 1, 5) with f1 = x^2 + x
  const auto F7 = FiniteField::build(7, 1);
  const auto f1 = fp(7, {0, 1, 1});
  const auto composed = f1.compose(dickson(5, F7.one()));
  for (unsigned m : {1u, 5u}) CHECK(exp_sum(f1, m, Character(7, 1)) == exp_sum(composed, m, Character(7, 1)));
  // (5, 0, 3) with f1 = x^2 + 2x + 3, m = 1 and 3
  const auto g1 = fp(5, {3, 2, 1});
  const auto g = g1.compose(fp(5, {0, 0, 0, 1}));
  for (unsigned m : {1u, 3u}) CHECK(exp_sum(g1, m, Character(5, 2)) == exp_sum(g, m, Character(5, 2)));
}

TEST_CASE("budget errors") {
  try {
    l_polynomial(fp(101, {0, 1, 0, 0, 0, 0, 1}), Character(101, 1), EnumOptions{1000000, 1});
    FAIL("expected budget error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}
