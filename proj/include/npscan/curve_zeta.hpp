#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "npscan/finite_field.hpp"
#include "npscan/numeric.hpp"
#include "npscan/polygon.hpp"

namespace npscan {

/// Polynomial over Z, constant term first, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);

  const std::vector<BigInt>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

  IntPoly operator*(const IntPoly& o) const;
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  std::string to_string() const;

 private:
  std::vector<BigInt> c_;
};

/// Point counts of y^p - y = g(x) over F_{q^m}, m = 1..depth.
struct CurveCountProfile {
  std::uint64_t p = 0;
  unsigned h = 0;
  unsigned degree = 0;
  unsigned genus_degree = 0;          // 2g = (p - 1)(d - 1)
  std::vector<std::uint64_t> counts;  // N_1..N_depth
  std::vector<BigInt> power_sums;     // 1 + q^m - N_m
};

/// N_m = 1 + p * #{x in F_{q^m} : Tr(g(x)) = 0}; the 1 is the point above infinity.
std::uint64_t count_curve_points(const FieldPolynomial& gbar, unsigned m, const EnumOptions& opts = {});

CurveCountProfile curve_profile(const FieldPolynomial& gbar, unsigned depth, const EnumOptions& opts = {});

/// Numerator P_1 of the zeta function of the complete Artin-Schreier curve.
/// Counts up to depth g, then the functional equation b_{2g-i} = q^{g-i} b_i.
/// With `verify`, N_{g+1} is also counted and checked against the result.
IntPoly p1_polynomial(const FieldPolynomial& gbar, const EnumOptions& opts = {}, bool verify = false);

/// Hull of (k, v_p(b_k) / h).
ConvexPolygon curve_newton_polygon(const IntPoly& p1, std::uint64_t p, unsigned h);

/// prod over c = 1..p-1 of L(g, chi_c, t) equals P_1 exactly.
bool product_formula_check(const FieldPolynomial& gbar, const EnumOptions& opts = {});

/// len(NP(P_1), s) = (p - 1) len(NP(L), s) for every slope s.
bool slope_length_relation_check(const FieldPolynomial& gbar, const EnumOptions& opts = {});

/// outer / inner in Q[t] has zero remainder and integral quotient.
bool divisibility_check(const IntPoly& inner, const IntPoly& outer);

}  // namespace npscan
