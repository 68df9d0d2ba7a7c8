#include "npscan/curve_zeta.hpp"

#include <set>

#include "npscan/errors.hpp"
#include "npscan/lfunction.hpp"
#include "npscan/rational_poly.hpp"

namespace npscan {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (c_.empty() || o.c_.empty()) return {};
  std::vector<BigInt> v(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return IntPoly(std::move(v));
}

std::string IntPoly::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) out += (i ? "," : "") + c_[i].str();
  return out + "]";
}

namespace {

unsigned genus_degree_of(const FieldPolynomial& gbar) {
  const int d = gbar.degree();
  const std::uint64_t p = gbar.field().characteristic();
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "Artin-Schreier curve needs a non-constant polynomial");
  if (static_cast<std::uint64_t>(d) % p == 0) {
    throw Error(ErrorKind::DegreeCharClash, "p = " + std::to_string(p) + " divides degree " + std::to_string(d));
  }
  return static_cast<unsigned>((p - 1) * static_cast<std::uint64_t>(d - 1));
}

/// Newton recurrence k b_k = -sum_{j=1}^{k} s_j b_{k-j}.
std::vector<BigInt> coefficients_from_power_sums(const std::vector<BigInt>& s) {
  std::vector<BigInt> b{1};
  for (std::size_t k = 1; k <= s.size(); ++k) {
    BigInt acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += s[j - 1] * b[k - j];
    if (acc % k != 0) throw Error(ErrorKind::InternalDivisibility, "zeta recurrence step " + std::to_string(k));
    b.push_back(-acc / k);
  }
  return b;
}

IntPoly p1_from_profile(const CurveCountProfile& prof) {
  const unsigned g = prof.genus_degree / 2;
  const std::vector<BigInt> sums(prof.power_sums.begin(), prof.power_sums.begin() + g);
  auto b = coefficients_from_power_sums(sums);
  b.resize(prof.genus_degree + 1, 0);
  const BigInt q = pow(BigInt(prof.p), prof.h);
  for (unsigned i = 0; i < g; ++i) b[prof.genus_degree - i] = pow(q, g - i) * b[i];
  return IntPoly(std::move(b));
}

}  // namespace

std::uint64_t count_curve_points(const FieldPolynomial& gbar, unsigned m, const EnumOptions& opts) {
  const auto hist = trace_histogram(gbar, m, opts);
  return 1 + gbar.field().characteristic() * hist[0];
}

CurveCountProfile curve_profile(const FieldPolynomial& gbar, unsigned depth, const EnumOptions& opts) {
  CurveCountProfile prof;
  prof.p = gbar.field().characteristic();
  prof.h = gbar.field().degree();
  prof.genus_degree = genus_degree_of(gbar);
  prof.degree = static_cast<unsigned>(gbar.degree());
  const auto hists = trace_histograms(gbar, depth, opts);
  const BigInt q = gbar.field().cardinality();
  for (unsigned m = 1; m <= depth; ++m) {
    const std::uint64_t n = 1 + prof.p * hists[m - 1][0];
    prof.counts.push_back(n);
    prof.power_sums.push_back(1 + pow(q, m) - n);
  }
  return prof;
}

IntPoly p1_polynomial(const FieldPolynomial& gbar, const EnumOptions& opts, bool verify) {
  const unsigned two_g = genus_degree_of(gbar);
  const unsigned g = two_g / 2;
  const auto prof = curve_profile(gbar, verify ? g + 1 : g, opts);
  IntPoly p1 = p1_from_profile(prof);
  if (verify) {
    // power sum s_{g+1} implied by the full coefficient list
    const unsigned k = g + 1;
    BigInt s = -BigInt(k) * p1.coeff(k);
    for (unsigned j = 1; j < k; ++j) s -= prof.power_sums[j - 1] * p1.coeff(k - j);
    if (s != prof.power_sums[g]) {
      throw Error(ErrorKind::InvariantViolation, "functional equation disagrees with the count N_" + std::to_string(k));
    }
  }
  return p1;
}

ConvexPolygon curve_newton_polygon(const IntPoly& p1, std::uint64_t p, unsigned h) {
  std::vector<Point> pts;
  for (std::size_t k = 0; k < p1.coeffs().size(); ++k) {
    if (p1.coeffs()[k] == 0) continue;
    pts.push_back(Point{Rational(k), Rational(valuation(p1.coeffs()[k], p), h)});
  }
  return lower_hull(std::move(pts));
}

namespace {

struct JointData {
  IntPoly p1;
  std::vector<LPolynomial> lpolys;  // c = 1..p-1
};

JointData joint_data(const FieldPolynomial& gbar, const EnumOptions& opts) {
  const unsigned two_g = genus_degree_of(gbar);
  const unsigned g = two_g / 2;
  const unsigned d = static_cast<unsigned>(gbar.degree());
  const unsigned depth = std::max(g, d - 1);
  const auto hists = trace_histograms(gbar, depth, opts);
  const std::uint64_t p = gbar.field().characteristic();

  CurveCountProfile prof;
  prof.p = p;
  prof.h = gbar.field().degree();
  prof.degree = d;
  prof.genus_degree = two_g;
  const BigInt q = gbar.field().cardinality();
  for (unsigned m = 1; m <= g; ++m) {
    const std::uint64_t n = 1 + p * hists[m - 1][0];
    prof.counts.push_back(n);
    prof.power_sums.push_back(1 + pow(q, m) - n);
  }
  JointData out{p1_from_profile(prof), {}};
  for (std::uint64_t c = 1; c < p; ++c) out.lpolys.push_back(l_polynomial_from_histograms(gbar, hists, Character(p, c)));
  return out;
}

}  // namespace

bool product_formula_check(const FieldPolynomial& gbar, const EnumOptions& opts) {
  const auto data = joint_data(gbar, opts);
  const std::uint64_t p = gbar.field().characteristic();
  std::vector<CycInt> prod{CycInt::integer(p, 1)};
  for (const auto& L : data.lpolys) {
    std::vector<CycInt> next(prod.size() + L.coeffs().size() - 1, CycInt(p));
    for (std::size_t i = 0; i < prod.size(); ++i) {
      for (std::size_t j = 0; j < L.coeffs().size(); ++j) next[i + j] += prod[i] * L.coeffs()[j];
    }
    prod = std::move(next);
  }
  std::vector<BigInt> ints;
  for (const auto& c : prod) ints.push_back(as_rational_integer(c));
  return IntPoly(std::move(ints)) == data.p1;
}

bool slope_length_relation_check(const FieldPolynomial& gbar, const EnumOptions& opts) {
  const auto data = joint_data(gbar, opts);
  const std::uint64_t p = gbar.field().characteristic();
  const auto curve_np = curve_newton_polygon(data.p1, p, gbar.field().degree());
  const auto l_np = newton_polygon(data.lpolys.front());
  std::set<Rational> slopes;
  for (const auto& s : slope_multiset(curve_np)) slopes.insert(s.slope);
  for (const auto& s : slope_multiset(l_np)) slopes.insert(s.slope);
  for (const auto& s : slopes) {
    if (slope_length(curve_np, s) != Rational(p - 1) * slope_length(l_np, s)) return false;
  }
  return true;
}

bool divisibility_check(const IntPoly& inner, const IntPoly& outer) {
  if (inner.coeffs().empty()) return outer.coeffs().empty();
  auto to_q = [](const IntPoly& f) {
    std::vector<Rational> v(f.coeffs().begin(), f.coeffs().end());
    return QPoly(std::move(v));
  };
  const auto [quo, rem] = to_q(outer).divmod(to_q(inner));
  if (!rem.is_zero()) return false;
  for (const auto& c : quo.coeffs()) {
    if (denominator(c) != 1) return false;
  }
  return true;
}

}  // namespace npscan
