#include <algorithm>
#include <thread>

#include "npscan/detail/field_kernel.hpp"
#include "npscan/errors.hpp"
#include "npscan/finite_field.hpp"

namespace npscan {

namespace {

struct Term {
  unsigned exponent;
  std::vector<std::uint64_t> coeff;
};

/// Sparse Horner plan: f(x) = ((c_0 x^{g_0} + c_1) x^{g_1} + ...) x^{tail}.
struct EvalPlan {
  const detail::FieldKernel* k;
  std::vector<Term> terms;           // descending exponent
  std::vector<unsigned> gaps;        // gaps[i] between terms[i] and terms[i+1]; last entry is the tail
  std::vector<unsigned> distinct;    // distinct gaps > 1

  struct Scratch {
    std::vector<std::uint64_t> acc, tmp, sq, powers;
  };

  Scratch scratch() const {
    const unsigned e = k->e;
    return Scratch{std::vector<std::uint64_t>(2 * e), std::vector<std::uint64_t>(e), std::vector<std::uint64_t>(e),
                   std::vector<std::uint64_t>(e * distinct.size())};
  }

  void power(const std::uint64_t* x, unsigned n, std::uint64_t* out, Scratch& s) const {
    const unsigned e = k->e;
    std::copy(x, x + e, s.sq.data());
    std::fill(out, out + e, 0);
    out[0] = 1;
    bool first = true;
    while (n) {
      if (n & 1) {
        if (first) {
          std::copy(s.sq.begin(), s.sq.end(), out);
          first = false;
        } else {
          k->mul(out, s.sq.data(), s.tmp.data(), s.acc.data());
          std::copy(s.tmp.begin(), s.tmp.end(), out);
        }
      }
      n >>= 1;
      if (n) {
        k->mul(s.sq.data(), s.sq.data(), s.tmp.data(), s.acc.data());
        std::copy(s.tmp.begin(), s.tmp.end(), s.sq.begin());
      }
    }
  }

  const std::uint64_t* gap_power(const std::uint64_t* x, unsigned gap, Scratch& s) const {
    if (gap == 1) return x;
    auto it = std::find(distinct.begin(), distinct.end(), gap);
    return s.powers.data() + k->e * static_cast<std::size_t>(it - distinct.begin());
  }

  void eval(const std::uint64_t* x, std::uint64_t* out, Scratch& s) const {
    const unsigned e = k->e;
    for (std::size_t i = 0; i < distinct.size(); ++i) power(x, distinct[i], s.powers.data() + e * i, s);
    std::copy(terms[0].coeff.begin(), terms[0].coeff.end(), out);
    for (std::size_t i = 0; i < gaps.size(); ++i) {
      if (gaps[i] == 0) continue;
      k->mul(out, gap_power(x, gaps[i], s), s.tmp.data(), s.acc.data());
      if (i + 1 < terms.size()) {
        k->add(s.tmp.data(), terms[i + 1].coeff.data(), out);
      } else {
        std::copy(s.tmp.begin(), s.tmp.end(), out);
      }
    }
  }
};

EvalPlan make_plan(const FieldPolynomial& g) {
  EvalPlan plan{&g.field().kernel(), {}, {}, {}};
  for (std::size_t i = g.coeffs().size(); i-- > 0;) {
    const auto& c = g.coeffs()[i];
    if (c.is_zero()) continue;
    plan.terms.push_back(Term{static_cast<unsigned>(i), {c.coeffs().begin(), c.coeffs().end()}});
  }
  for (std::size_t i = 0; i < plan.terms.size(); ++i) {
    const unsigned next = i + 1 < plan.terms.size() ? plan.terms[i + 1].exponent : 0;
    plan.gaps.push_back(plan.terms[i].exponent - next);
  }
  for (unsigned gap : plan.gaps) {
    if (gap > 1 && std::find(plan.distinct.begin(), plan.distinct.end(), gap) == plan.distinct.end()) {
      plan.distinct.push_back(gap);
    }
  }
  return plan;
}

/// Walks the lines {x0 + c : c in F_p} for line indices [first, last).
/// When deg f + 1 is well below p, Tr(f(x0 + c)) is a polynomial of degree
/// <= deg f in c, so each line needs only deg f + 1 evaluations followed by
/// forward differencing in F_p.
void scan_lines(const EvalPlan& plan, unsigned degree, std::uint64_t first, std::uint64_t last,
                std::vector<std::uint64_t>& hist) {
  const auto& k = *plan.k;
  const std::uint64_t p = k.p;
  const unsigned e = k.e;
  auto s = plan.scratch();
  std::vector<std::uint64_t> x(e, 0), fx(e);
  std::uint64_t t = first;
  for (unsigned i = 1; i < e; ++i) {
    x[i] = t % p;
    t /= p;
  }
  const bool differencing = 2 * (static_cast<std::uint64_t>(degree) + 1) <= p;
  std::vector<std::uint64_t> table(degree + 1);

  for (std::uint64_t line = first; line < last; ++line) {
    if (differencing) {
      for (unsigned i = 0; i <= degree; ++i) {
        x[0] = i;
        plan.eval(x.data(), fx.data(), s);
        table[i] = k.trace(fx.data());
      }
      for (unsigned j = 1; j <= degree; ++j) {
        for (unsigned i = degree; i >= j; --i) table[i] = k.addmod(table[i], p - table[i - 1]);
      }
      for (std::uint64_t c = 0; c < p; ++c) {
        ++hist[table[0]];
        for (unsigned j = 0; j < degree; ++j) table[j] = k.addmod(table[j], table[j + 1]);
      }
    } else {
      for (std::uint64_t c = 0; c < p; ++c) {
        x[0] = c;
        plan.eval(x.data(), fx.data(), s);
        ++hist[k.trace(fx.data())];
      }
    }
    for (unsigned i = 1; i < e; ++i) {
      if (++x[i] < p) break;
      x[i] = 0;
    }
  }
}

/// Coordinates in a normal basis {beta^{q^j}} of F_{q^m} over F_q. The
/// q-power map rotates them, and Tr(f(x^q)) = Tr(f(x)) since f has
/// coefficients in F_q, so one evaluation per necklace suffices.
struct NormalBasis {
  unsigned m = 0;
  std::uint64_t q = 0;
  std::vector<std::uint64_t> table;  // table[(j * q + a) * e]: a * beta^{q^j} over F_p
};

unsigned rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p) {
  unsigned rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const std::uint64_t inv = invmod(rows[rank][c], p);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const std::uint64_t t = mulmod(rows[r][c], inv, p);
      if (t == 0) continue;
      for (std::size_t k = c; k < cols; ++k) rows[r][k] = (rows[r][k] + p - mulmod(t, rows[rank][k], p)) % p;
    }
    ++rank;
  }
  return rank;
}

NormalBasis normal_basis(const ExtensionTower& tower, unsigned m) {
  const FiniteField& base = tower.inclusion.source();
  const FiniteField& top = tower.top;
  const std::uint64_t p = top.characteristic();
  const unsigned h = base.degree(), e = top.degree();
  std::vector<FieldElement> units;
  for (unsigned i = 0; i < h; ++i) units.push_back(tower.inclusion(i == 0 ? base.one() : base.generator().pow(BigInt(i))));

  for (std::uint64_t idx = 1;; ++idx) {
    std::vector<FieldElement> conj{top.from_index(idx)};
    for (unsigned j = 1; j < m; ++j) {
      FieldElement next = conj.back();
      for (unsigned i = 0; i < h; ++i) next = next.frobenius();
      conj.push_back(next);
    }
    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& c : conj) {
      for (const auto& u : units) {
        const FieldElement v = u * c;
        rows.emplace_back(v.coeffs().begin(), v.coeffs().end());
      }
    }
    if (rank_mod_p(rows, p) < e) continue;

    NormalBasis nb;
    nb.m = m;
    nb.q = *checked_pow(p, h);
    nb.table.assign(static_cast<std::size_t>(m) * nb.q * e, 0);
    for (unsigned j = 0; j < m; ++j) {
      for (std::uint64_t a = 0; a < nb.q; ++a) {
        const FieldElement v = tower.inclusion(base.from_index(a)) * conj[j];
        std::copy(v.coeffs().begin(), v.coeffs().end(), nb.table.begin() + static_cast<std::ptrdiff_t>((j * nb.q + a) * e));
      }
    }
    return nb;
  }
}

/// Fredricksen-Kessler-Maiorana over necklaces of length m on q letters,
/// evaluating every `stride`-th necklace starting at `offset`. Each necklace
/// of period d stands for an orbit of d elements.
void scan_necklaces(const EvalPlan& plan, const NormalBasis& nb, unsigned offset, unsigned stride,
                    std::vector<std::uint64_t>& hist) {
  const auto& k = *plan.k;
  const unsigned e = k.e, m = nb.m;
  const std::uint64_t q = nb.q;
  auto s = plan.scratch();
  std::vector<std::uint64_t> a(m + 1, 0), x(e), fx(e);
  std::uint64_t counter = 0;
  auto visit = [&](unsigned period) {
    if (counter++ % stride != offset) return;
    std::fill(x.begin(), x.end(), 0);
    for (unsigned j = 0; j < m; ++j) {
      const std::uint64_t* v = nb.table.data() + (j * q + a[j + 1]) * e;
      for (unsigned i = 0; i < e; ++i) x[i] += v[i];
    }
    for (unsigned i = 0; i < e; ++i) x[i] %= k.p;
    plan.eval(x.data(), fx.data(), s);
    hist[k.trace(fx.data())] += period;
  };
  visit(1);
  for (;;) {
    unsigned i = m;
    while (i > 0 && a[i] == q - 1) --i;
    if (i == 0) break;
    ++a[i];
    for (unsigned j = i + 1; j <= m; ++j) a[j] = a[j - i];
    if (m % i == 0) visit(i);
  }
}

}  // namespace

std::vector<std::uint64_t> trace_histogram(const FieldPolynomial& f, unsigned m, const EnumOptions& opts) {
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "extension degree m must be positive");
  const std::uint64_t p = f.field().characteristic();
  const auto size = checked_pow(p, static_cast<std::uint64_t>(f.field().degree()) * m);
  if (!size || *size > opts.budget) {
    throw Error(ErrorKind::BudgetExceeded, "enumerating degree-" + std::to_string(m) + " extension of " +
                                               f.field().describe() + " exceeds budget " + std::to_string(opts.budget));
  }
  std::vector<std::uint64_t> hist(p, 0);
  if (f.is_zero()) {
    hist[0] = *size;
    return hist;
  }
  const auto tower = extend(f.field(), m);
  const FieldPolynomial g = f.mapped(tower.inclusion);
  const EvalPlan plan = make_plan(g);
  const auto degree = static_cast<unsigned>(g.degree());

  const bool differencing = 2 * (static_cast<std::uint64_t>(degree) + 1) <= p;
  const std::uint64_t q = *checked_pow(p, f.field().degree());
  if (m > 1 && q * m <= (1u << 20) && (!differencing || p < m * (degree + 1))) {
    const NormalBasis nb = normal_basis(tower, m);
    const unsigned jobs = std::max(1u, opts.jobs);
    std::vector<std::vector<std::uint64_t>> partial(jobs, std::vector<std::uint64_t>(p, 0));
    std::vector<std::thread> workers;
    for (unsigned j = 0; j < jobs; ++j) {
      workers.emplace_back([&, j] { scan_necklaces(plan, nb, j, jobs, partial[j]); });
    }
    for (auto& w : workers) w.join();
    for (const auto& part : partial) {
      for (std::uint64_t a = 0; a < p; ++a) hist[a] += part[a];
    }
    return hist;
  }

  const std::uint64_t lines = *size / p;
  const unsigned jobs = static_cast<unsigned>(std::clamp<std::uint64_t>(opts.jobs, 1, lines));
  if (jobs == 1) {
    scan_lines(plan, degree, 0, lines, hist);
  } else {
    std::vector<std::vector<std::uint64_t>> partial(jobs, std::vector<std::uint64_t>(p, 0));
    std::vector<std::thread> workers;
    for (unsigned j = 0; j < jobs; ++j) {
      const std::uint64_t lo = lines * j / jobs, hi = lines * (j + 1) / jobs;
      workers.emplace_back([&, j, lo, hi] { scan_lines(plan, degree, lo, hi, partial[j]); });
    }
    for (auto& w : workers) w.join();
    for (const auto& part : partial) {
      for (std::uint64_t a = 0; a < p; ++a) hist[a] += part[a];
    }
  }
  return hist;
}

}  // namespace npscan
