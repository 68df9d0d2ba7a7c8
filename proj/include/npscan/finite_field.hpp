#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "npscan/numeric.hpp"

namespace npscan {

using Residue = std::uint64_t;

namespace detail {
struct FieldKernel;
}

/// Limits for anything that walks every element of a field.
struct EnumOptions {
  std::uint64_t budget = 100'000'000;
  unsigned jobs = 1;
};

class FieldElement;

/// F_{p^e} = F_p[theta] / (modulus). The modulus is the smallest monic
/// irreducible of degree e when coefficient vectors are compared constant
/// term first, so two builds with the same (p, e) always agree.
class FiniteField {
 public:
  static FiniteField build(std::uint64_t p, unsigned e);

  std::uint64_t characteristic() const;
  unsigned degree() const;
  /// e + 1 coefficients, constant term first, monic.
  const std::vector<Residue>& modulus() const;
  BigInt cardinality() const;
  /// Cardinality as a machine integer; throws BudgetExceeded above `budget`.
  std::uint64_t enumerable_size(std::uint64_t budget) const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement constant(std::int64_t c) const;
  /// The class of theta. For e = 1 the modulus is x, so this is 0.
  FieldElement generator() const;
  FieldElement element(std::vector<Residue> coeffs) const;
  /// Inverse of FieldElement::index().
  FieldElement from_index(std::uint64_t index) const;

  const detail::FieldKernel& kernel() const;

  std::string describe() const;

  friend bool operator==(const FiniteField& a, const FiniteField& b);

 private:
  struct Impl;
  explicit FiniteField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

class FieldElement {
 public:
  FieldElement(FiniteField field, std::vector<Residue> coeffs);

  const FiniteField& field() const { return field_; }
  std::span<const Residue> coeffs() const { return coeffs_; }
  bool is_zero() const;
  /// Base-p integer whose digits are the coefficients, constant term lowest.
  std::uint64_t index() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement pow(const BigInt& exp) const;
  FieldElement inverse() const;
  FieldElement frobenius() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  /// Lexicographic on coefficient vectors, constant term compared first.
  friend bool lex_less(const FieldElement& a, const FieldElement& b);

  std::string to_string() const;

 private:
  FiniteField field_;
  std::vector<Residue> coeffs_;
};

/// Tr_{F_{p^e}/F_p}(x).
Residue trace_to_prime(const FieldElement& x);

/// Ring embedding F_{p^a} -> F_{p^b} (a | b) fixing F_p.
class Embedding {
 public:
  const FiniteField& source() const { return source_; }
  const FiniteField& target() const { return target_; }
  /// Image of the source generator.
  FieldElement generator_image() const;
  FieldElement operator()(const FieldElement& x) const;

 private:
  friend Embedding embed(const FiniteField& sub, const FiniteField& sup);
  Embedding(FiniteField source, FiniteField target, std::vector<FieldElement> powers)
      : source_(std::move(source)), target_(std::move(target)), powers_(std::move(powers)) {}
  FiniteField source_;
  FiniteField target_;
  std::vector<FieldElement> powers_;  // images of theta^0 .. theta^{a-1}
};

/// Sends the source generator to the lexicographically smallest root of the
/// source modulus inside `sup`. Throws NoEmbedding unless sub.e | sup.e.
Embedding embed(const FiniteField& sub, const FiniteField& sup);

/// Polynomial with coefficients in one finite field, constant term first.
/// The zero polynomial has no coefficients and degree -1.
class FieldPolynomial {
 public:
  FieldPolynomial(FiniteField field, std::vector<FieldElement> coeffs);
  /// Coefficients given as residues in F_p, embedded as constants.
  static FieldPolynomial from_residues(const FiniteField& field, const std::vector<std::int64_t>& coeffs);

  const FiniteField& field() const { return field_; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  FieldElement operator()(const FieldElement& x) const;
  FieldPolynomial mapped(const Embedding& emb) const;
  FieldPolynomial compose(const FieldPolynomial& inner) const;

  friend bool operator==(const FieldPolynomial& a, const FieldPolynomial& b);

  std::string to_string() const;

 private:
  FiniteField field_;
  std::vector<FieldElement> coeffs_;
};

/// Histogram t_a = #{x in F_{q^m} : Tr_{F_{q^m}/F_p}(f(x)) = a}, a in F_p,
/// where q is the cardinality of f's field. One pass over F_{q^m}.
std::vector<std::uint64_t> trace_histogram(const FieldPolynomial& f, unsigned m, const EnumOptions& opts = {});

/// F_{q^m} built over F_p together with the embedding of f's field.
struct ExtensionTower {
  FiniteField top;
  Embedding inclusion;
};
ExtensionTower extend(const FiniteField& base, unsigned m);

}  // namespace npscan
