#include "npscan/cyclotomic.hpp"

#include <algorithm>
#include <sstream>

#include "npscan/errors.hpp"

namespace npscan {

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
}

void require_same(const CycInt& a, const CycInt& b) {
  if (a.prime() != b.prime()) {
    throw Error(ErrorKind::PrimeMismatch, std::to_string(a.prime()) + " vs " + std::to_string(b.prime()));
  }
}

/// Fold a vector indexed by exponents mod p (length p) into the canonical basis.
std::vector<BigInt> reduce_full(std::vector<BigInt> full, std::uint64_t p) {
  const BigInt top = full[p - 1];
  full.resize(p - 1);
  if (top != 0) {
    for (auto& c : full) c -= top;
  }
  return full;
}

}  // namespace

CycInt::CycInt(std::uint64_t p) : p_(p), c_(p - 1) { require_prime(p); }

CycInt::CycInt(std::uint64_t p, std::vector<BigInt> coeffs) : p_(p) {
  require_prime(p);
  // accept either p-1 canonical coefficients or up to p (zeta^{p-1} term included)
  if (coeffs.size() > p) throw Error(ErrorKind::InvalidArgument, "too many coefficients for Z[zeta_p]");
  coeffs.resize(p, 0);
  c_ = reduce_full(std::move(coeffs), p);
}

CycInt CycInt::integer(std::uint64_t p, const BigInt& n) {
  CycInt r(p);
  r.c_[0] = n;
  return r;
}

bool CycInt::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const BigInt& c) { return c == 0; });
}

CycInt CycInt::operator+(const CycInt& o) const {
  CycInt r = *this;
  r += o;
  return r;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycInt CycInt::operator-() const {
  CycInt r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

CycInt CycInt::operator-(const CycInt& o) const { return *this + (-o); }

CycInt CycInt::operator*(const CycInt& o) const {
  require_same(*this, o);
  const std::size_t n = c_.size();
  std::vector<BigInt> full(p_, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (o.c_[j] == 0) continue;
      std::size_t k = i + j;
      if (k >= p_) k -= p_;
      full[k] += c_[i] * o.c_[j];
    }
  }
  CycInt r(p_);
  r.c_ = reduce_full(std::move(full), p_);
  return r;
}

std::string CycInt::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << ')';
  return os.str();
}

CycInt zeta_power(std::uint64_t p, std::int64_t k) {
  require_prime(p);
  const auto pp = static_cast<std::int64_t>(p);
  std::int64_t r = k % pp;
  if (r < 0) r += pp;
  std::vector<BigInt> full(p, 0);
  full[static_cast<std::size_t>(r)] = 1;
  return CycInt(p, std::move(full));
}

CycInt character_sum(std::uint64_t p, const std::vector<std::uint64_t>& hist, std::uint64_t c) {
  if (hist.size() != p) throw Error(ErrorKind::CharacteristicMismatch, "histogram length differs from p");
  std::vector<BigInt> full(p, 0);
  for (std::uint64_t a = 0; a < p; ++a) full[mulmod(a, c, p)] += hist[a];
  return CycInt(p, std::move(full));
}

CycInt exact_div_int(const CycInt& a, const BigInt& k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
  std::vector<BigInt> q;
  q.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) {
    if (c % k != 0) throw Error(ErrorKind::NotDivisible, a.to_string() + " by " + k.str());
    q.push_back(c / k);
  }
  return CycInt(a.prime(), std::move(q));
}

PiValuation pi_valuation(const CycInt& a) {
  if (a.is_zero()) return std::nullopt;
  const std::uint64_t p = a.prime();
  const auto& c = a.coeffs();
  const std::size_t n = c.size();
  // zeta = 1 - pi: b_j = (-1)^j sum_{i >= j} c_i binom(i, j)
  std::uint64_t best = UINT64_MAX;
  for (std::size_t j = 0; j < n; ++j) {
    BigInt b = 0;
    BigInt choose = 1;  // binom(j, j)
    for (std::size_t i = j; i < n; ++i) {
      if (i > j) choose = choose * i / (i - j);
      b += c[i] * choose;
    }
    if (b == 0) continue;
    const std::uint64_t v = j + (p - 1) * valuation(b, p);
    best = std::min(best, v);
  }
  return best;
}

CycInt galois_apply(const CycInt& a, std::int64_t c) {
  const std::uint64_t p = a.prime();
  const auto pp = static_cast<std::int64_t>(p);
  std::int64_t r = c % pp;
  if (r < 0) r += pp;
  if (r == 0) throw Error(ErrorKind::NotAUnit, std::to_string(c) + " is not a unit mod " + std::to_string(p));
  std::vector<BigInt> full(p, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) full[mulmod(i, static_cast<std::uint64_t>(r), p)] += a.coeffs()[i];
  return CycInt(p, std::move(full));
}

BigInt as_rational_integer(const CycInt& a) {
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] != 0) throw Error(ErrorKind::NotRational, a.to_string() + " is not a rational integer");
  }
  return a.coeffs()[0];
}

}  // namespace npscan
