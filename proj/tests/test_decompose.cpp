#include <random>
#include <set>

#include "doctest.h"
#include "npscan/decompose.hpp"
#include "npscan/errors.hpp"

using namespace npscan;

namespace {

QPoly random_poly(std::mt19937_64& rng, unsigned deg, bool zero_constant) {
  std::vector<Rational> c(deg + 1);
  for (auto& x : c) x = Rational(static_cast<long>(rng() % 15) - 7, 1 + static_cast<long>(rng() % 3));
  c[deg] = 1;
  if (zero_constant) c[0] = 0;
  return QPoly(c);
}

}  // namespace

TEST_CASE("composition") {
  CHECK(compose(QPoly::monomial(2), QPoly::monomial(3)) == QPoly::monomial(6));
  const QPoly g({1, 2, 3, 1});
  CHECK(compose(g, QPoly::x()) == g);
}

TEST_CASE("x^6 splits into degrees 2 and 3") {
  const auto chain = decompose(QPoly::monomial(6));
  REQUIRE(chain.factors.size() == 2);
  std::multiset<int> degs;
  for (const auto& f : chain.factors) degs.insert(f.poly.degree());
  CHECK(degs == std::multiset<int>{2, 3});
  CHECK(chain.recompose() == QPoly::monomial(6));
}

TEST_CASE("prime degree is indecomposable") {
  const auto chain = decompose(dickson(5, 1));
  REQUIRE(chain.factors.size() == 1);
  CHECK(chain.factors[0].kind == FactorKind::Dickson);
  CHECK(chain.recompose() == dickson(5, 1));
}

TEST_CASE("right factors") {
  const QPoly h({0, 3, 1});
  const QPoly g({5, -1, 0, 1});
  const auto split = right_factor(g.compose(h), 2);
  REQUIRE(split);
  CHECK(split->second == h);
  CHECK(split->first == g);
  CHECK_FALSE(right_factor(QPoly({0, 1, 0, 0, 0, 0, 1}) + QPoly::monomial(2), 3));
}

TEST_CASE("round trip on 200 random composites") {
  std::mt19937_64 rng(43);
  const std::vector<std::pair<unsigned, unsigned>> shapes = {{2, 2}, {2, 3}, {3, 2}, {3, 4}, {4, 3}, {2, 4}, {5, 2}};
  for (int t = 0; t < 200; ++t) {
    const auto [r, s] = shapes[t % shapes.size()];
    const auto f = random_poly(rng, r, false).compose(random_poly(rng, s, true));
    const auto chain = decompose(f);
    CHECK(chain.recompose() == f);
    CHECK(chain.factors.size() >= 2);
    for (std::size_t i = 1; i < chain.factors.size(); ++i) {
      CHECK(chain.factors[i].poly.is_monic());
      CHECK(chain.factors[i].poly.coeff(0) == 0);
    }
  }
}

TEST_CASE("Dickson factors are marked") {
  const auto f = QPoly({1, 1, 1}).compose(dickson(3, 0)).compose(QPoly({0, 2, 1}));
  const auto chain = decompose(f);
  CHECK(chain.recompose() == f);
  bool found = false;
  for (const auto& c : chain.factors) found |= c.kind == FactorKind::Dickson && c.dickson && c.dickson->n == 3;
  CHECK(found);
  CHECK_THROWS_AS(decompose(QPoly({0, 0, 2})), Error);
}
