#include "npscan/rational_poly.hpp"

#include "npscan/errors.hpp"

namespace npscan {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

void QPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::constant(const Rational& c) { return QPoly({c}); }
QPoly QPoly::x() { return QPoly({0, 1}); }

QPoly QPoly::monomial(unsigned n, const Rational& c) {
  std::vector<Rational> v(n + 1, 0);
  v[n] = c;
  return QPoly(std::move(v));
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return QPoly(std::move(v));
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> v(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return QPoly(std::move(v));
}

QPoly QPoly::operator*(const Rational& s) const {
  QPoly r = *this;
  for (auto& c : r.c_) c *= s;
  r.normalize();
  return r;
}

QPoly QPoly::pow(unsigned n) const {
  QPoly result = constant(1);
  QPoly base = *this;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

QPoly QPoly::compose(const QPoly& inner) const {
  QPoly acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * inner + constant(c_[i]);
  return acc;
}

Rational QPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
  std::vector<Rational> rem = c_;
  const std::size_t dd = divisor.c_.size() - 1;
  if (rem.size() <= dd) return {QPoly(), *this};
  std::vector<Rational> quo(rem.size() - dd, 0);
  for (std::size_t k = rem.size(); k-- > dd;) {
    const Rational f = rem[k] / divisor.c_.back();
    quo[k - dd] = f;
    if (f == 0) continue;
    for (std::size_t i = 0; i <= dd; ++i) rem[k - dd + i] -= f * divisor.c_[i];
  }
  rem.resize(dd);
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

std::string QPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const std::string num = denominator(mag) == 1 ? numerator(mag).str() : "(" + mag.str() + ")";
    if (i == 0) {
      out += num;
      continue;
    }
    if (mag != 1) out += num + "*";
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace npscan
