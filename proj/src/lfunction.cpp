#include "npscan/lfunction.hpp"

#include <numeric>

#include "npscan/errors.hpp"

namespace npscan {

Character::Character(std::uint64_t p, std::uint64_t c) : p_(p), c_(c % (p ? p : 1)) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (c_ == 0) throw Error(ErrorKind::InvalidArgument, "character index must be nonzero mod p");
}

LPolynomial::LPolynomial(std::uint64_t p, unsigned h, std::vector<CycInt> coeffs)
    : p_(p), h_(h), a_(std::move(coeffs)) {
  if (a_.empty() || a_[0] != CycInt::integer(p, 1)) {
    throw Error(ErrorKind::InvariantViolation, "L-polynomial must have constant term 1");
  }
  for (const auto& c : a_) {
    if (c.prime() != p) throw Error(ErrorKind::PrimeMismatch, "coefficient over a different Z[zeta]");
  }
  if (a_.back().is_zero()) throw Error(ErrorKind::InvariantViolation, "L-polynomial has a vanishing top coefficient");
}

CycInt exp_sum(const FieldPolynomial& fbar, unsigned m, const Character& chi, const EnumOptions& opts) {
  const std::uint64_t p = fbar.field().characteristic();
  if (chi.prime() != p) throw Error(ErrorKind::CharacteristicMismatch, "character prime differs from field characteristic");
  const auto hist = trace_histogram(fbar, m, opts);
  return character_sum(p, hist, chi.index());
}

std::vector<std::vector<std::uint64_t>> trace_histograms(const FieldPolynomial& fbar, unsigned count,
                                                         const EnumOptions& opts) {
  const std::uint64_t q_total = [&] {
    auto q = checked_pow(fbar.field().characteristic(), static_cast<std::uint64_t>(fbar.field().degree()) * count);
    return q ? *q : UINT64_MAX;
  }();
  if (q_total > opts.budget) {
    throw Error(ErrorKind::BudgetExceeded, "q^" + std::to_string(count) + " over " + fbar.field().describe() +
                                               " exceeds budget " + std::to_string(opts.budget));
  }
  std::vector<std::vector<std::uint64_t>> out;
  for (unsigned m = 1; m <= count; ++m) {
    out.push_back(trace_histogram(fbar, m, opts));
    const auto total = std::accumulate(out.back().begin(), out.back().end(), BigInt(0));
    if (total != pow(fbar.field().cardinality(), m)) {
      throw Error(ErrorKind::InvariantViolation, "trace histogram does not sum to q^m");
    }
  }
  return out;
}

std::vector<CycInt> coefficients_from_sums(std::uint64_t p, const std::vector<CycInt>& sums) {
  std::vector<CycInt> a{CycInt::integer(p, 1)};
  for (std::size_t k = 1; k <= sums.size(); ++k) {
    CycInt acc(p);
    for (std::size_t j = 1; j <= k; ++j) acc += sums[j - 1] * a[k - j];
    try {
      a.push_back(exact_div_int(acc, BigInt(k)));
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::NotDivisible) throw;
      throw Error(ErrorKind::InternalDivisibility, "Newton recurrence step " + std::to_string(k) + ": " + err.what());
    }
  }
  return a;
}

namespace {

unsigned checked_degree(const FieldPolynomial& fbar) {
  const int d = fbar.degree();
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "L-function needs a non-constant polynomial");
  const std::uint64_t p = fbar.field().characteristic();
  if (static_cast<std::uint64_t>(d) % p == 0) {
    throw Error(ErrorKind::DegreeCharClash, "p = " + std::to_string(p) + " divides degree " + std::to_string(d));
  }
  return static_cast<unsigned>(d);
}

}  // namespace

LPolynomial l_polynomial_from_histograms(const FieldPolynomial& fbar,
                                         const std::vector<std::vector<std::uint64_t>>& hists,
                                         const Character& chi, bool verify) {
  const unsigned d = checked_degree(fbar);
  const std::uint64_t p = fbar.field().characteristic();
  if (chi.prime() != p) throw Error(ErrorKind::CharacteristicMismatch, "character prime differs from field characteristic");
  const unsigned needed = verify ? d : d - 1;
  if (hists.size() < needed) throw Error(ErrorKind::InvalidArgument, "not enough trace histograms");
  std::vector<CycInt> sums;
  for (unsigned m = 1; m <= needed; ++m) sums.push_back(character_sum(p, hists[m - 1], chi.index()));
  auto a = coefficients_from_sums(p, sums);
  if (verify) {
    if (!a.back().is_zero()) {
      throw Error(ErrorKind::InvariantViolation, "S_d disagrees with the degree-(d-1) L-polynomial");
    }
    a.pop_back();
  }
  if (a.back().is_zero()) throw Error(ErrorKind::InvariantViolation, "L-polynomial has degree below d-1");
  return LPolynomial(p, fbar.field().degree(), std::move(a));
}

LPolynomial l_polynomial(const FieldPolynomial& fbar, const Character& chi, const EnumOptions& opts, bool verify) {
  const unsigned d = checked_degree(fbar);
  const auto hists = trace_histograms(fbar, verify ? d : d - 1, opts);
  return l_polynomial_from_histograms(fbar, hists, chi, verify);
}

ConvexPolygon newton_polygon(const LPolynomial& L) {
  const Rational scale(BigInt(L.field_degree()) * (L.prime() - 1));
  std::vector<Point> pts;
  for (std::size_t k = 0; k < L.coeffs().size(); ++k) {
    const auto v = pi_valuation(L.coeffs()[k]);
    if (!v) continue;
    pts.push_back(Point{Rational(k), Rational(BigInt(*v)) / scale});
  }
  return lower_hull(std::move(pts));
}

FieldPolynomial reduce_mod_p(const QPoly& f, std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (!f.is_monic()) throw Error(ErrorKind::InvalidArgument, "polynomial must be monic");
  if (static_cast<std::uint64_t>(f.degree()) % p == 0) {
    throw Error(ErrorKind::BadPlace, "(d,p)=1 fails: p = " + std::to_string(p) + " divides degree " +
                                         std::to_string(f.degree()));
  }
  const auto field = FiniteField::build(p, 1);
  std::vector<FieldElement> cs;
  for (const auto& c : f.coeffs()) {
    if (denominator(c) % p == 0) {
      throw Error(ErrorKind::BadPlace, "f is not in O_p[x]: coefficient " + rational_string(c) +
                                           " is not " + std::to_string(p) + "-integral");
    }
    cs.push_back(field.constant(static_cast<std::int64_t>(reduce_rational(c, p))));
  }
  return FieldPolynomial(field, std::move(cs));
}

ConvexPolygon np_at_prime(const QPoly& f, std::uint64_t p, std::uint64_t chi_index, const EnumOptions& opts) {
  const auto fbar = reduce_mod_p(f, p);
  return newton_polygon(l_polynomial(fbar, Character(p, chi_index), opts));
}

bool np_base_change_check(const FieldPolynomial& fbar, unsigned n, const Character& chi, const EnumOptions& opts) {
  const auto below = newton_polygon(l_polynomial(fbar, chi, opts));
  if (n == 1) return true;
  const auto tower = extend(fbar.field(), n);
  const auto above = newton_polygon(l_polynomial(fbar.mapped(tower.inclusion), chi, opts));
  return below == above;
}

}  // namespace npscan
