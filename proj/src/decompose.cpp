#include "npscan/decompose.hpp"

#include "npscan/errors.hpp"

namespace npscan {

QPoly compose(const QPoly& g, const QPoly& h) { return g.compose(h); }

QPoly CompositionChain::recompose() const {
  if (factors.empty()) return QPoly::x();
  QPoly acc = factors.back().poly;
  for (std::size_t i = factors.size() - 1; i-- > 0;) acc = factors[i].poly.compose(acc);
  return acc;
}

std::optional<std::pair<QPoly, QPoly>> right_factor(const QPoly& f, unsigned s) {
  const int deg = f.degree();
  if (!f.is_monic() || s == 0 || deg < 1 || static_cast<unsigned>(deg) % s != 0) return std::nullopt;
  const auto d = static_cast<unsigned>(deg);
  const unsigned r = d / s;

  // The top s coefficients of f only see h^r; each fixes one coefficient of h.
  std::vector<Rational> h(s + 1, 0);
  h[s] = 1;
  for (unsigned k = 1; k < s; ++k) {
    const Rational have = QPoly(h).pow(r).coeff(d - k);
    h[s - k] = (f.coeff(d - k) - have) / r;
  }
  const QPoly hp(h);

  // f = sum g_i h^i with every g_i constant iff f = g o h.
  std::vector<Rational> g;
  QPoly rest = f;
  while (!rest.is_zero()) {
    auto [quo, rem] = rest.divmod(hp);
    if (rem.degree() > 0) return std::nullopt;
    g.push_back(rem.coeff(0));
    rest = std::move(quo);
  }
  QPoly gp(std::move(g));
  if (gp.compose(hp) != f) return std::nullopt;
  return std::make_pair(std::move(gp), hp);
}

namespace {

void decompose_into(const QPoly& f, std::vector<QPoly>& out) {
  const int deg = f.degree();
  for (int s = 2; s < deg; ++s) {
    if (deg % s != 0) continue;
    if (auto split = right_factor(f, static_cast<unsigned>(s))) {
      decompose_into(split->first, out);
      decompose_into(split->second, out);
      return;
    }
  }
  out.push_back(f);
}

}  // namespace

CompositionChain decompose(const QPoly& f) {
  if (!f.is_monic()) throw Error(ErrorKind::InvalidArgument, "decompose expects a monic polynomial");
  std::vector<QPoly> polys;
  decompose_into(f, polys);
  CompositionChain chain;
  for (auto& poly : polys) {
    ChainFactor factor;
    if (poly.degree() == 1) {
      factor.kind = FactorKind::Linear;
    } else if (auto form = recognize_dickson(poly)) {
      factor.kind = FactorKind::Dickson;
      factor.dickson = form;
    }
    factor.poly = std::move(poly);
    chain.factors.push_back(std::move(factor));
  }
  return chain;
}

}  // namespace npscan
