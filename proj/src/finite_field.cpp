#include "npscan/finite_field.hpp"

#include <algorithm>
#include <sstream>

#include "npscan/detail/field_kernel.hpp"
#include "npscan/errors.hpp"

namespace npscan {

namespace {

using Poly = std::vector<Residue>;  // over F_p, constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const Residue lead_inv = invmod(m.back(), p);
  while (a.size() > dm) {
    const Residue c = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + p - mulmod(c, m[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + mulmod(a[i], b[j], p)) % p;
    }
  }
  return poly_mod(std::move(prod), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t exp, const Poly& m, std::uint64_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), m, p);
  while (exp) {
    if (exp & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    exp >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_irreducible(const Poly& m, std::uint64_t p) {
  const std::size_t e = m.size() - 1;
  if (e <= 1) return true;
  if (m[0] == 0) return false;
  Poly x{0, 1};
  Poly frob = x;
  for (std::size_t k = 1; k <= e / 2; ++k) {
    frob = poly_powmod(frob, p, m, p);
    Poly diff = frob;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    Poly g = poly_gcd(m, diff, p);
    if (g.size() > 1) return false;
  }
  return true;
}

Poly smallest_irreducible(std::uint64_t p, unsigned e) {
  Poly m(e + 1, 0);
  m[e] = 1;
  if (e == 1) return m;  // x
  // constant term is the most significant digit; c0 = 0 is always reducible
  m[0] = 1;
  while (true) {
    if (is_irreducible(m, p)) return m;
    int i = static_cast<int>(e) - 1;
    while (i >= 0) {
      if (++m[i] < p) break;
      m[i] = 0;
      --i;
    }
    if (i < 0) throw Error(ErrorKind::InvariantViolation, "no irreducible polynomial found");
  }
}

}  // namespace

struct FiniteField::Impl {
  std::uint64_t p;
  unsigned e;
  Poly modulus;
  detail::FieldKernel kernel;
};

FiniteField FiniteField::build(std::uint64_t p, unsigned e) {
  if (e == 0) throw Error(ErrorKind::InvalidArgument, "extension degree must be positive");
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 62)) throw Error(ErrorKind::InvalidArgument, "characteristic too large");
  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->e = e;
  impl->modulus = smallest_irreducible(p, e);

  auto& k = impl->kernel;
  k.p = p;
  k.e = e;
  k.reduce = detail::Reducer(p);
  const unsigned __int128 bound = static_cast<unsigned __int128>(2 * e) * (p - 1) * (p - 1);
  k.lazy = bound < (static_cast<unsigned __int128>(1) << 63);
  k.neg_modulus.resize(e);
  for (unsigned i = 0; i < e; ++i) k.neg_modulus[i] = (p - impl->modulus[i]) % p;
  const unsigned __int128 wide_bound = bound / 2 * (1 + static_cast<unsigned __int128>(e - 1) * (p - 1));
  k.wide = e > 1 && wide_bound < (static_cast<unsigned __int128>(1) << 64);
  if (k.wide) {
    // rows x^e, x^{e+1}, ... reduced mod the modulus
    k.fold.assign(static_cast<std::size_t>(e - 1) * e, 0);
    std::vector<std::uint64_t> row(k.neg_modulus);
    for (unsigned r = 0; r + 1 < e; ++r) {
      std::copy(row.begin(), row.end(), k.fold.begin() + static_cast<std::ptrdiff_t>(r) * e);
      const std::uint64_t top = row[e - 1];
      for (unsigned i = e - 1; i > 0; --i) row[i] = (row[i - 1] + mulmod(top, k.neg_modulus[i], p)) % p;
      row[0] = mulmod(top, k.neg_modulus[0], p);
    }
  }

  // Tr(theta^i) are the power sums of the modulus roots (Newton's identities).
  const auto& a = impl->modulus;
  k.traces.assign(e, 0);
  k.traces[0] = e % p;
  for (unsigned i = 1; i < e; ++i) {
    std::uint64_t s = mulmod(i % p, a[e - i], p);
    for (unsigned j = 1; j < i; ++j) s = (s + mulmod(a[e - j], k.traces[i - j], p)) % p;
    k.traces[i] = (p - s) % p;
  }
  return FiniteField(std::move(impl));
}

std::uint64_t FiniteField::characteristic() const { return impl_->p; }
unsigned FiniteField::degree() const { return impl_->e; }
const std::vector<Residue>& FiniteField::modulus() const { return impl_->modulus; }
const detail::FieldKernel& FiniteField::kernel() const { return impl_->kernel; }

BigInt FiniteField::cardinality() const { return boost::multiprecision::pow(BigInt(impl_->p), impl_->e); }

std::uint64_t FiniteField::enumerable_size(std::uint64_t budget) const {
  auto q = checked_pow(impl_->p, impl_->e);
  if (!q || *q > budget) {
    throw Error(ErrorKind::BudgetExceeded, "enumerating " + describe() + " exceeds budget " + std::to_string(budget));
  }
  return *q;
}

FieldElement FiniteField::zero() const { return FieldElement(*this, Poly(impl_->e, 0)); }
FieldElement FiniteField::one() const { return constant(1); }

FieldElement FiniteField::constant(std::int64_t c) const {
  Poly v(impl_->e, 0);
  const auto p = static_cast<std::int64_t>(impl_->p);
  std::int64_t r = c % p;
  if (r < 0) r += p;
  v[0] = static_cast<Residue>(r);
  return FieldElement(*this, std::move(v));
}

FieldElement FiniteField::generator() const {
  if (impl_->e == 1) return zero();
  Poly v(impl_->e, 0);
  v[1] = 1;
  return FieldElement(*this, std::move(v));
}

FieldElement FiniteField::element(std::vector<Residue> coeffs) const {
  if (coeffs.size() > impl_->e) throw Error(ErrorKind::InvalidArgument, "too many coefficients for " + describe());
  coeffs.resize(impl_->e, 0);
  for (auto& c : coeffs) c %= impl_->p;
  return FieldElement(*this, std::move(coeffs));
}

FieldElement FiniteField::from_index(std::uint64_t index) const {
  Poly v(impl_->e, 0);
  for (unsigned i = 0; i < impl_->e; ++i) {
    v[i] = index % impl_->p;
    index /= impl_->p;
  }
  return FieldElement(*this, std::move(v));
}

std::string FiniteField::describe() const {
  return "F_" + std::to_string(impl_->p) + (impl_->e > 1 ? "^" + std::to_string(impl_->e) : "");
}

bool operator==(const FiniteField& a, const FiniteField& b) {
  return a.impl_ == b.impl_ || (a.impl_->p == b.impl_->p && a.impl_->modulus == b.impl_->modulus);
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(FiniteField field, std::vector<Residue> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

bool FieldElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Residue c) { return c == 0; });
}

std::uint64_t FieldElement::index() const {
  std::uint64_t idx = 0;
  const std::uint64_t p = field_.characteristic();
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (__builtin_mul_overflow(idx, p, &idx) || __builtin_add_overflow(idx, coeffs_[i], &idx)) {
      throw Error(ErrorKind::BudgetExceeded, "element index overflows 64 bits");
    }
  }
  return idx;
}

static void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) {
    throw Error(ErrorKind::FieldMismatch, a.field().describe() + " vs " + b.field().describe());
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_field(*this, o);
  Poly out(coeffs_.size());
  field_.kernel().add(coeffs_.data(), o.coeffs_.data(), out.data());
  return FieldElement(field_, std::move(out));
}

FieldElement FieldElement::operator-() const {
  const std::uint64_t p = field_.characteristic();
  Poly out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (p - coeffs_[i]) % p;
  return FieldElement(field_, std::move(out));
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_field(*this, o);
  const auto& k = field_.kernel();
  Poly out(k.e);
  std::vector<std::uint64_t> acc(2 * k.e);
  k.mul(coeffs_.data(), o.coeffs_.data(), out.data(), acc.data());
  return FieldElement(field_, std::move(out));
}

FieldElement FieldElement::pow(const BigInt& exp) const {
  if (exp < 0) return inverse().pow(-exp);
  FieldElement result = field_.one();
  FieldElement base = *this;
  BigInt n = exp;
  while (n > 0) {
    if (bit_test(n, 0)) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorKind::NotAUnit, "zero has no inverse");
  return pow(field_.cardinality() - 2);
}

FieldElement FieldElement::frobenius() const { return pow(BigInt(field_.characteristic())); }

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

bool lex_less(const FieldElement& a, const FieldElement& b) { return a.coeffs_ < b.coeffs_; }

std::string FieldElement::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i];
  os << ')';
  return os.str();
}

Residue trace_to_prime(const FieldElement& x) { return x.field().kernel().trace(x.coeffs().data()); }

// ---------------------------------------------------------------------------

namespace {

/// Basis of the kernel of a square matrix over F_p (row-major).
std::vector<Poly> nullspace(std::vector<Poly> rows, std::uint64_t p) {
  const std::size_t n = rows.size();
  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot(n, false);
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < n; ++col) {
    std::size_t sel = r;
    while (sel < n && rows[sel][col] == 0) ++sel;
    if (sel == n) continue;
    std::swap(rows[r], rows[sel]);
    const Residue inv = invmod(rows[r][col], p);
    for (auto& v : rows[r]) v = mulmod(v, inv, p);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const Residue f = rows[i][col];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = (rows[i][j] + p - mulmod(f, rows[r][j], p)) % p;
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    is_pivot[col] = true;
    ++r;
  }
  std::vector<Poly> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Poly v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i) {
      v[pivot_col_of_row[i]] = (p - rows[i][free]) % p;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

FieldElement eval_residue_poly(const Poly& coeffs, const FieldElement& x) {
  FieldElement acc = x.field().zero();
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = acc * x + x.field().constant(static_cast<std::int64_t>(coeffs[i]));
  }
  return acc;
}

}  // namespace

Embedding embed(const FiniteField& sub, const FiniteField& sup) {
  const unsigned a = sub.degree(), b = sup.degree();
  if (sub.characteristic() != sup.characteristic() || b % a != 0) {
    throw Error(ErrorKind::NoEmbedding, sub.describe() + " does not embed in " + sup.describe());
  }
  if (a == 1) return Embedding(sub, sup, {sup.one()});

  const std::uint64_t p = sup.characteristic();
  // The copy of F_{p^a} inside sup is the fixed space of y -> y^{p^a}.
  const FieldElement frob_gen = sup.generator().pow(boost::multiprecision::pow(BigInt(p), a));
  std::vector<Poly> rows(b, Poly(b, 0));
  FieldElement col = sup.one();
  for (unsigned j = 0; j < b; ++j) {
    for (unsigned i = 0; i < b; ++i) rows[i][j] = col.coeffs()[i];
    col = col * frob_gen;
  }
  for (unsigned i = 0; i < b; ++i) rows[i][i] = (rows[i][i] + p - 1) % p;
  const auto basis = nullspace(std::move(rows), p);
  if (basis.size() != a) throw Error(ErrorKind::InvariantViolation, "fixed field has unexpected dimension");

  const auto count = checked_pow(p, a);
  if (!count || *count > EnumOptions{}.budget) {
    throw Error(ErrorKind::BudgetExceeded, "subfield too large to search for roots");
  }
  std::optional<FieldElement> best;
  std::vector<Residue> digits(a, 0);
  for (std::uint64_t idx = 0; idx < *count; ++idx) {
    std::uint64_t t = idx;
    Poly y(b, 0);
    for (unsigned k = 0; k < a; ++k) {
      const Residue d = t % p;
      t /= p;
      if (d == 0) continue;
      for (unsigned i = 0; i < b; ++i) y[i] = (y[i] + mulmod(d, basis[k][i], p)) % p;
    }
    FieldElement cand = sup.element(std::move(y));
    if (!eval_residue_poly(sub.modulus(), cand).is_zero()) continue;
    if (!best || lex_less(cand, *best)) best = cand;
  }
  if (!best) throw Error(ErrorKind::InvariantViolation, "modulus has no root in extension");

  std::vector<FieldElement> powers{sup.one()};
  for (unsigned i = 1; i < a; ++i) powers.push_back(powers.back() * *best);
  return Embedding(sub, sup, std::move(powers));
}

FieldElement Embedding::generator_image() const { return (*this)(source_.generator()); }

FieldElement Embedding::operator()(const FieldElement& x) const {
  if (!(x.field() == source_)) throw Error(ErrorKind::FieldMismatch, "element is not in the embedding source");
  FieldElement out = target_.zero();
  for (std::size_t i = 0; i < powers_.size(); ++i) {
    const Residue c = x.coeffs()[i];
    if (c != 0) out = out + target_.constant(static_cast<std::int64_t>(c)) * powers_[i];
  }
  return out;
}

ExtensionTower extend(const FiniteField& base, unsigned m) {
  if (m == 1) return ExtensionTower{base, embed(base, base)};
  FiniteField top = FiniteField::build(base.characteristic(), base.degree() * m);
  Embedding inc = embed(base, top);
  return ExtensionTower{std::move(top), std::move(inc)};
}

// ---------------------------------------------------------------------------

FieldPolynomial::FieldPolynomial(FiniteField field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!(c.field() == field_)) throw Error(ErrorKind::FieldMismatch, "coefficient outside " + field_.describe());
  }
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldPolynomial FieldPolynomial::from_residues(const FiniteField& field, const std::vector<std::int64_t>& coeffs) {
  std::vector<FieldElement> cs;
  cs.reserve(coeffs.size());
  for (auto c : coeffs) cs.push_back(field.constant(c));
  return FieldPolynomial(field, std::move(cs));
}

FieldElement FieldPolynomial::operator()(const FieldElement& x) const {
  if (!(x.field() == field_)) throw Error(ErrorKind::FieldMismatch, "evaluation point outside " + field_.describe());
  FieldElement acc = field_.zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

FieldPolynomial FieldPolynomial::mapped(const Embedding& emb) const {
  std::vector<FieldElement> cs;
  cs.reserve(coeffs_.size());
  for (const auto& c : coeffs_) cs.push_back(emb(c));
  return FieldPolynomial(emb.target(), std::move(cs));
}

FieldPolynomial FieldPolynomial::compose(const FieldPolynomial& inner) const {
  if (!(inner.field_ == field_)) throw Error(ErrorKind::FieldMismatch, "composition across fields");
  std::vector<FieldElement> acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    // acc = acc * inner + c_i
    std::vector<FieldElement> next(acc.empty() ? 1 : acc.size() + inner.coeffs_.size() - 1, field_.zero());
    for (std::size_t a = 0; a < acc.size(); ++a) {
      for (std::size_t b = 0; b < inner.coeffs_.size(); ++b) next[a + b] = next[a + b] + acc[a] * inner.coeffs_[b];
    }
    next[0] = next[0] + coeffs_[i];
    acc = std::move(next);
  }
  return FieldPolynomial(field_, std::move(acc));
}

bool operator==(const FieldPolynomial& a, const FieldPolynomial& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

std::string FieldPolynomial::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i].to_string();
  os << ']';
  return os.str();
}

}  // namespace npscan
