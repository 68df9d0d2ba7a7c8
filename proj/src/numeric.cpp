#include "npscan/numeric.hpp"

#include <cctype>
#include <numeric>

#include "npscan/errors.hpp"

namespace npscan {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NoEmbedding: return "NoEmbedding";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::PrimeMismatch: return "PrimeMismatch";
    case ErrorKind::CharacteristicMismatch: return "CharacteristicMismatch";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::NotRational: return "NotRational";
    case ErrorKind::DegreeCharClash: return "DegreeCharClash";
    case ErrorKind::InternalDivisibility: return "InternalDivisibility";
    case ErrorKind::BadPlace: return "BadPlace";
    case ErrorKind::MissingOrigin: return "MissingOrigin";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw Error(ErrorKind::NotAUnit, std::to_string(a) + " is not invertible mod " + std::to_string(m));
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n <= hi; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

unsigned valuation(const BigInt& n, std::uint64_t p) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "valuation of zero");
  BigInt m = abs(n);
  unsigned v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

Rational rational_pow(const Rational& r, unsigned n) {
  return Rational(boost::multiprecision::pow(numerator(r), n), boost::multiprecision::pow(denominator(r), n));
}

std::optional<std::uint64_t> checked_pow(std::uint64_t p, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(r, p, &r)) return std::nullopt;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t reduce_rational(const Rational& r, std::uint64_t p) {
  BigInt num = numerator(r) % p;
  if (num < 0) num += p;
  BigInt den = denominator(r) % p;
  if (den == 0) throw Error(ErrorKind::BadPlace, "denominator divisible by " + std::to_string(p));
  std::uint64_t n = static_cast<std::uint64_t>(num);
  std::uint64_t d = static_cast<std::uint64_t>(den);
  return mulmod(n, invmod(d, p), p);
}

std::string rational_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& raw) {
  std::string s;
  for (char ch : raw) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
  };
  auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw Error(ErrorKind::ParseError, "not a rational: '" + raw + "'");
    return Rational(BigInt(strip_plus(s)));
  }
  std::string n = s.substr(0, slash), d = s.substr(slash + 1);
  if (!valid_int(n) || !valid_int(d)) throw Error(ErrorKind::ParseError, "not a rational: '" + raw + "'");
  BigInt den(strip_plus(d));
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + raw + "'");
  return Rational(BigInt(strip_plus(n)), den);
}

}  // namespace npscan
