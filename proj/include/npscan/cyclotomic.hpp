#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "npscan/numeric.hpp"

namespace npscan {

/// Element of Z[zeta_p] in the basis 1, zeta, ..., zeta^{p-2}.
/// zeta^{p-1} is always rewritten as -(1 + zeta + ... + zeta^{p-2}), which
/// makes the coefficient vector canonical.
class CycInt {
 public:
  explicit CycInt(std::uint64_t p);  // zero
  CycInt(std::uint64_t p, std::vector<BigInt> coeffs);
  static CycInt integer(std::uint64_t p, const BigInt& n);

  std::uint64_t prime() const { return p_; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  bool is_zero() const;

  CycInt operator+(const CycInt& o) const;
  CycInt operator-(const CycInt& o) const;
  CycInt operator-() const;
  CycInt operator*(const CycInt& o) const;
  CycInt& operator+=(const CycInt& o);

  friend bool operator==(const CycInt& a, const CycInt& b) = default;

  std::string to_string() const;

 private:
  std::uint64_t p_;
  std::vector<BigInt> c_;
};

/// zeta^k, k taken mod p.
CycInt zeta_power(std::uint64_t p, std::int64_t k);

/// Sum_a hist[a] * zeta^{a*c}.
CycInt character_sum(std::uint64_t p, const std::vector<std::uint64_t>& hist, std::uint64_t c);

/// Coefficient-wise exact division; NotDivisible otherwise.
CycInt exact_div_int(const CycInt& a, const BigInt& k);

/// Valuation at pi = 1 - zeta normalized so v(pi) = 1 (hence v(p) = p - 1).
/// nullopt stands for +infinity (the zero element).
using PiValuation = std::optional<std::uint64_t>;
PiValuation pi_valuation(const CycInt& a);

/// Image under zeta -> zeta^c. NotAUnit unless gcd(c, p) = 1.
CycInt galois_apply(const CycInt& a, std::int64_t c);

/// The integer c_0 when every other coefficient vanishes; NotRational otherwise.
BigInt as_rational_integer(const CycInt& a);

}  // namespace npscan
