#include "npscan/dickson.hpp"

#include "npscan/errors.hpp"

namespace npscan {

QPoly dickson(unsigned n, const Rational& a) {
  QPoly prev = QPoly::constant(2);
  if (n == 0) return prev;
  QPoly cur = QPoly::x();
  const QPoly ax = QPoly::constant(a);
  for (unsigned k = 2; k <= n; ++k) {
    QPoly next = QPoly::x() * cur - ax * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

FieldPolynomial dickson(unsigned n, const FieldElement& a) {
  const FiniteField& F = a.field();
  using Coeffs = std::vector<FieldElement>;
  Coeffs prev{F.constant(2)};
  if (n == 0) return FieldPolynomial(F, prev);
  Coeffs cur{F.zero(), F.one()};
  for (unsigned k = 2; k <= n; ++k) {
    Coeffs next(cur.size() + 1, F.zero());
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] = cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] = next[i] - a * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return FieldPolynomial(F, std::move(cur));
}

bool is_permutation_bruteforce(const FieldPolynomial& g, const EnumOptions& opts) {
  const FiniteField& F = g.field();
  const std::uint64_t q = F.enumerable_size(opts.budget);
  std::vector<bool> seen(q, false);
  for (std::uint64_t i = 0; i < q; ++i) {
    const std::uint64_t image = g(F.from_index(i)).index();
    if (seen[image]) return false;
    seen[image] = true;
  }
  return true;
}

bool dickson_perm_criterion(unsigned n, bool a_is_zero, const BigInt& q) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "Dickson degree must be positive");
  const BigInt group = a_is_zero ? BigInt(q - 1) : BigInt(q * q - 1);
  return boost::multiprecision::gcd(BigInt(n), group) == 1;
}

bool dickson_perm_criterion(unsigned n, const FieldElement& a) {
  return dickson_perm_criterion(n, a.is_zero(), a.field().cardinality());
}

AdmissibleTriple is_admissible(std::uint64_t p, const Rational& a, unsigned n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "admissible triples need n > 1");
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  AdmissibleTriple t;
  t.p = p;
  t.a = a;
  t.n = n;
  t.a_integral = denominator(a) % p != 0;
  t.coprime_to_6n = (BigInt(6) * n) % p != 0;
  if (t.a_integral) {
    const bool a_zero = reduce_rational(a, p) == 0;
    t.permutes = dickson_perm_criterion(n, a_zero, BigInt(p));
  }
  return t;
}

std::optional<DicksonForm> recognize_dickson(const QPoly& u) {
  const int deg = u.degree();
  if (deg < 2 || !u.is_monic()) return std::nullopt;
  const auto n = static_cast<unsigned>(deg);
  const Rational shift = u.coeff(n - 1) / n;
  const QPoly depressed = u.compose(QPoly({-shift, 1}));
  const Rational a = -depressed.coeff(n - 2) / n;
  const QPoly residual = depressed - dickson(n, a);
  if (residual.degree() > 0) return std::nullopt;
  return DicksonForm{n, a, shift, residual.coeff(0)};
}

GppVerdict gpp_over_Q(unsigned n, const Rational& a, std::uint64_t sample_bound) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "Dickson degree must be positive");
  GppVerdict v;
  v.criterion = a == 0 ? (n % 2 == 1) : (n % 2 != 0 && n % 3 != 0);
  if (n > 1 && sample_bound > 0) {
    for (std::uint64_t p : primes_in_range(2, sample_bound)) {
      if (is_admissible(p, a, n).admissible()) {
        v.witness = p;
        break;
      }
    }
  }
  return v;
}

}  // namespace npscan
