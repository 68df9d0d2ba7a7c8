#pragma once

#include <string>
#include <utility>
#include <vector>

#include "npscan/numeric.hpp"

namespace npscan {

/// Dense polynomial over Q, constant term first, no trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  static QPoly constant(const Rational& c);
  static QPoly x();
  static QPoly monomial(unsigned n, const Rational& c = 1);

  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator-() const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator*(const Rational& s) const;
  QPoly pow(unsigned n) const;

  /// this(inner(x)).
  QPoly compose(const QPoly& inner) const;
  Rational operator()(const Rational& x) const;

  /// (quotient, remainder); divisor must be nonzero.
  std::pair<QPoly, QPoly> divmod(const QPoly& divisor) const;

  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// Human-readable, e.g. "x^3 - 3*x + 7".
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

}  // namespace npscan
