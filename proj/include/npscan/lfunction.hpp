#pragma once

#include <cstdint>
#include <vector>

#include "npscan/cyclotomic.hpp"
#include "npscan/finite_field.hpp"
#include "npscan/polygon.hpp"
#include "npscan/rational_poly.hpp"

namespace npscan {

/// chi_c(a) = zeta_p^{c a}, c a unit mod p.
class Character {
 public:
  Character(std::uint64_t p, std::uint64_t c);
  std::uint64_t prime() const { return p_; }
  std::uint64_t index() const { return c_; }

 private:
  std::uint64_t p_;
  std::uint64_t c_;
};

/// L(f, chi, t) = 1 + a_1 t + ... + a_{d-1} t^{d-1} over Z[zeta_p], for f over
/// a field with q = p^h elements.
class LPolynomial {
 public:
  LPolynomial(std::uint64_t p, unsigned h, std::vector<CycInt> coeffs);

  std::uint64_t prime() const { return p_; }
  unsigned field_degree() const { return h_; }
  const std::vector<CycInt>& coeffs() const { return a_; }
  unsigned degree() const { return static_cast<unsigned>(a_.size()) - 1; }

  friend bool operator==(const LPolynomial&, const LPolynomial&) = default;

 private:
  std::uint64_t p_;
  unsigned h_;
  std::vector<CycInt> a_;
};

/// S_m(f, chi) = sum over x in F_{q^m} of chi(Tr(f(x))), via the trace histogram.
CycInt exp_sum(const FieldPolynomial& fbar, unsigned m, const Character& chi, const EnumOptions& opts = {});

/// Trace histograms for m = 1..count, reusable across characters.
std::vector<std::vector<std::uint64_t>> trace_histograms(const FieldPolynomial& fbar, unsigned count,
                                                         const EnumOptions& opts = {});

/// Coefficients of exp(sum_m S_m t^m / m) up to t^{sums.size()}:
/// k a_k = sum_{j=1}^{k} S_j a_{k-j}, a_0 = 1.
std::vector<CycInt> coefficients_from_sums(std::uint64_t p, const std::vector<CycInt>& sums);

/// With `verify`, S_d is also enumerated and the recurrence must give a_d = 0.
LPolynomial l_polynomial(const FieldPolynomial& fbar, const Character& chi, const EnumOptions& opts = {},
                         bool verify = false);
LPolynomial l_polynomial_from_histograms(const FieldPolynomial& fbar,
                                         const std::vector<std::vector<std::uint64_t>>& hists,
                                         const Character& chi, bool verify = false);

/// q-adic Newton polygon: hull of (k, v_pi(a_k) / (h (p - 1))).
ConvexPolygon newton_polygon(const LPolynomial& L);

/// Reduction of a monic rational polynomial into F_p[x]. BadPlace when a
/// denominator is divisible by p or when p divides the degree.
FieldPolynomial reduce_mod_p(const QPoly& f, std::uint64_t p);

ConvexPolygon np_at_prime(const QPoly& f, std::uint64_t p, std::uint64_t chi_index = 1, const EnumOptions& opts = {});

/// NP over F_q equals NP over F_{q^n} (each normalized by its own q).
bool np_base_change_check(const FieldPolynomial& fbar, unsigned n, const Character& chi, const EnumOptions& opts = {});

}  // namespace npscan
