#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "npscan/finite_field.hpp"
#include "npscan/numeric.hpp"
#include "npscan/rational_poly.hpp"

namespace npscan {

/// D_n(x, a) over Q via D_0 = 2, D_1 = x, D_k = x D_{k-1} - a D_{k-2}.
QPoly dickson(unsigned n, const Rational& a);
/// The same recurrence over the field of `a`.
FieldPolynomial dickson(unsigned n, const FieldElement& a);

bool is_permutation_bruteforce(const FieldPolynomial& g, const EnumOptions& opts = {});

/// gcd(n, q - 1) = 1 when a = 0, gcd(n, q^2 - 1) = 1 otherwise.
bool dickson_perm_criterion(unsigned n, const FieldElement& a);
bool dickson_perm_criterion(unsigned n, bool a_is_zero, const BigInt& q);

/// (p, a, n) over Q, where the group of roots of unity has order 2.
struct AdmissibleTriple {
  std::uint64_t p = 0;
  Rational a;
  unsigned n = 0;
  bool a_integral = false;
  bool coprime_to_6n = false;  // p does not divide 3 * n * 2
  bool permutes = false;       // D_n(x, a mod p) permutes F_p
  bool admissible() const { return a_integral && coprime_to_6n && permutes; }
};

AdmissibleTriple is_admissible(std::uint64_t p, const Rational& a, unsigned n);

/// u(x) = D_n(x + shift, a) + offset.
struct DicksonForm {
  unsigned n = 0;
  Rational a;
  Rational shift;
  Rational offset;
  friend bool operator==(const DicksonForm&, const DicksonForm&) = default;
};

/// Recognizes monic u of degree >= 2 as a shifted Dickson polynomial.
std::optional<DicksonForm> recognize_dickson(const QPoly& u);

struct GppVerdict {
  bool criterion = false;                 // infinitely many permuting primes
  std::optional<std::uint64_t> witness;   // smallest admissible prime found by sampling
};

/// Whether D_n(x, a) is a global permutation polynomial over Q: for a = 0 iff
/// n is odd, for a != 0 iff gcd(n, 6) = 1. A positive `sample_bound` also
/// searches primes up to that bound for an admissible witness.
GppVerdict gpp_over_Q(unsigned n, const Rational& a, std::uint64_t sample_bound = 0);

}  // namespace npscan
