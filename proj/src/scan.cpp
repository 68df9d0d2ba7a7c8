#include "npscan/scan.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "npscan/cache.hpp"
#include "npscan/curve_zeta.hpp"
#include "npscan/decompose.hpp"
#include "npscan/errors.hpp"
#include "npscan/lfunction.hpp"

namespace npscan {

namespace {

using nlohmann::json;

json big_to_json(const BigInt& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(n);
  }
  return n.str();
}

json rational_json(const Rational& r) { return json::array({big_to_json(numerator(r)), big_to_json(denominator(r))}); }

json polygon_json(const ConvexPolygon& poly) {
  json out = json::array();
  for (const auto& v : poly.vertices()) {
    out.push_back(json::array({big_to_json(numerator(v.x)), big_to_json(denominator(v.x)),
                               big_to_json(numerator(v.y)), big_to_json(denominator(v.y))}));
  }
  return out;
}

bool in_good_set(const QPoly& f, std::uint64_t p) {
  if (static_cast<std::uint64_t>(f.degree()) % p == 0) return false;
  for (const auto& c : f.coeffs()) {
    if (denominator(c) % p == 0) return false;
  }
  return true;
}

std::string format_ms(double ms) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << ms;
  return os.str();
}

}  // namespace

std::optional<DicksonHint> find_gpp_hint(const QPoly& f) {
  if (f.degree() < 2) return std::nullopt;
  for (const auto& factor : decompose(f).factors) {
    if (factor.kind != FactorKind::Dickson) continue;
    const auto& form = *factor.dickson;
    if (form.n > 1 && gpp_over_Q(form.n, form.a).criterion) return DicksonHint{form.n, form.a};
  }
  return std::nullopt;
}

ScanRecord scan_prime(const QPoly& f, std::uint64_t p, std::uint64_t c, const std::optional<DicksonHint>& hint,
                      const EnumOptions& opts, ResultCache* cache) {
  const auto start = std::chrono::steady_clock::now();
  ScanRecord r;
  r.p = p;
  r.c = c;
  r.d = static_cast<unsigned>(f.degree());
  r.p_mod_d = r.d ? p % r.d : 0;
  const auto fbar = reduce_mod_p(f, p);  // BadPlace escapes
  if (hint) r.admissible = is_admissible(p, hint->a, hint->n).admissible();

  const std::string key = cache ? cache_key(f, p, c) : std::string();
  std::optional<ConvexPolygon> np = cache ? cache->get(key) : std::nullopt;
  if (!np) {
    try {
      np = newton_polygon(l_polynomial(fbar, Character(p, c), opts));
      if (cache) cache->put(key, *np);
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::InvariantViolation) throw;
      r.error = std::string(to_string(err.kind()));
    }
  }
  if (np) {
    const auto hp = hodge_polygon(r.d);
    r.polygon = np;
    r.gap = vertical_gap(*np, hp);
    r.np_eq_hp = *np == hp;
    for (const auto& side : slope_multiset(*np)) {
      if (side.length >= 2) {
        r.slope_mult_ge2 = true;
        r.v0 = side.slope;
        break;
      }
    }
  }
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<std::string> record_violations(const ScanRecord& r) {
  std::vector<std::string> out;
  if (!r.polygon) return out;
  const std::string where = "p = " + std::to_string(r.p) + ": ";
  const auto hp = hodge_polygon(r.d);
  if (!lies_above(*r.polygon, hp)) out.push_back(where + "Newton polygon dips below the Hodge polygon");
  if ((r.p - 1) % r.d == 0 && !r.np_eq_hp) out.push_back(where + "p = 1 mod d but NP != HP");
  if (r.admissible.value_or(false)) {
    if (!r.slope_mult_ge2) out.push_back(where + "admissible prime without a repeated slope");
    if (r.gap < Rational(1, 2 * r.d)) out.push_back(where + "admissible prime with gap below 1/(2d)");
  }
  return out;
}

ScanResult run_scan(const QPoly& f, const ScanOptions& options, const std::function<void(const ScanRecord&)>& emit) {
  if (!f.is_monic() || f.degree() < 1) throw Error(ErrorKind::InvalidArgument, "scan needs a monic non-constant polynomial");
  if (options.p_max < 2) throw Error(ErrorKind::InvalidArgument, "prime bound must be at least 2");
  ScanResult result;
  if (options.hint) {
    result.hint = options.hint;
    result.hint_source = "user";
  } else {
    result.hint = find_gpp_hint(f);
    result.hint_source = result.hint ? "decomposition" : "none";
  }

  std::vector<std::uint64_t> primes;
  for (auto p : primes_in_range(2, options.p_max)) {
    if (in_good_set(f, p) && options.c % p != 0) primes.push_back(p);
  }
  result.records.resize(primes.size());

  EnumOptions inner = options.enumeration;
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(std::max<std::size_t>(primes.size(), 1))));
  if (jobs > 1) inner.jobs = 1;

  std::mutex emit_mutex;
  std::vector<bool> done(primes.size(), false);
  std::size_t next_emit = 0;
  std::atomic<std::size_t> next_task{0};
  std::exception_ptr failure;

  auto worker = [&] {
    while (true) {
      const std::size_t i = next_task++;
      if (i >= primes.size()) return;
      try {
        result.records[i] = scan_prime(f, primes[i], options.c, result.hint, inner, options.cache);
      } catch (...) {
        std::lock_guard lock(emit_mutex);
        if (!failure) failure = std::current_exception();
        next_task = primes.size();
        return;
      }
      std::lock_guard lock(emit_mutex);
      done[i] = true;
      while (next_emit < primes.size() && done[next_emit]) {
        if (emit) emit(result.records[next_emit]);
        ++next_emit;
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  auto& s = result.summary;
  s.polynomial = f.to_string();
  s.p_max = options.p_max;
  s.rows = result.records.size();
  const Rational bound(1, 2 * f.degree());
  for (const auto& r : result.records) {
    for (auto& v : record_violations(r)) result.violations.push_back(std::move(v));
    if (!r.polygon) {
      ++s.failed;
      continue;
    }
    s.np_eq_hp += r.np_eq_hp;
    s.gap_witnesses += r.gap >= bound;
    s.admissible += r.admissible.value_or(false);
    s.slope_mult_ge2 += r.slope_mult_ge2;
  }
  s.verdict = (s.np_eq_hp > 0 && s.gap_witnesses > 0) ? kOscillates : kNoOscillation;
  return result;
}

std::string record_to_csv(const ScanRecord& r, bool timing) {
  std::ostringstream os;
  os << r.p << ',' << r.c << ',' << r.d << ',';
  if (r.polygon) {
    os << polygon_to_cell(*r.polygon) << ',' << slopes_to_cell(slope_multiset(*r.polygon)) << ','
       << rational_string(r.gap) << ',' << (r.np_eq_hp ? "true" : "false");
  } else {
    os << "error:" << r.error << ",,,";
  }
  os << ',' << r.p_mod_d << ',';
  if (r.admissible) os << (*r.admissible ? "true" : "false");
  os << ',' << (r.slope_mult_ge2 ? "true" : "false") << ',';
  if (r.v0) os << rational_string(*r.v0);
  os << ',';
  if (timing) os << format_ms(r.ms);
  return os.str();
}

std::string record_to_json(const ScanRecord& r, bool timing) {
  json j;
  j["p"] = r.p;
  j["c"] = r.c;
  j["d"] = r.d;
  if (r.polygon) {
    j["vertices"] = polygon_json(*r.polygon);
    json slopes = json::array();
    for (const auto& s : slope_multiset(*r.polygon)) {
      slopes.push_back({{"slope", rational_json(s.slope)}, {"length", rational_json(s.length)}});
    }
    j["slopes"] = slopes;
    j["gap"] = rational_json(r.gap);
    j["np_eq_hp"] = r.np_eq_hp;
  } else {
    j["error"] = r.error;
  }
  j["p_mod_d"] = r.p_mod_d;
  j["admissible"] = r.admissible ? json(*r.admissible) : json(nullptr);
  j["slope_mult_ge2"] = r.slope_mult_ge2;
  j["v0"] = r.v0 ? rational_json(*r.v0) : json(nullptr);
  if (timing) j["ms"] = r.ms;
  return j.dump();
}

std::string summary_to_json(const ScanSummary& s) {
  json j{{"polynomial", s.polynomial},   {"p_max", s.p_max},
         {"rows", s.rows},               {"np_eq_hp", s.np_eq_hp},
         {"gap_witnesses", s.gap_witnesses}, {"admissible", s.admissible},
         {"slope_mult_ge2", s.slope_mult_ge2}, {"failed", s.failed},
         {"verdict", s.verdict}};
  return j.dump();
}

std::string polygon_to_json(const ConvexPolygon& poly) { return polygon_json(poly).dump(); }
std::string rational_to_json(const Rational& r) { return rational_json(r).dump(); }

// ---------------------------------------------------------------------------

bool CrosscheckReport::passed() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Fail) return false;
  }
  return true;
}

std::optional<DicksonSplit> dickson_split(const QPoly& f) {
  if (f.degree() < 2) return std::nullopt;
  const auto chain = decompose(f);
  std::optional<std::size_t> pick;
  for (std::size_t i = 0; i < chain.factors.size(); ++i) {
    const auto& factor = chain.factors[i];
    if (factor.kind != FactorKind::Dickson) continue;
    const auto& form = *factor.dickson;
    if (!pick) pick = i;
    if (gpp_over_Q(form.n, form.a).criterion) {
      pick = i;
      break;
    }
  }
  if (!pick) return std::nullopt;
  const auto& form = *chain.factors[*pick].dickson;
  QPoly outer = QPoly::x();
  for (std::size_t i = 0; i < *pick; ++i) outer = outer.compose(chain.factors[i].poly);
  outer = outer.compose(QPoly({form.offset, 1}));
  QPoly inner({form.shift, 1});
  QPoly tail = QPoly::x();
  for (std::size_t i = *pick + 1; i < chain.factors.size(); ++i) tail = tail.compose(chain.factors[i].poly);
  inner = inner.compose(tail);
  return DicksonSplit{std::move(outer), std::move(inner), DicksonHint{form.n, form.a}};
}

namespace {

template <typename Fn>
CheckResult run_check(std::string name, Fn&& fn) {
  CheckResult out{std::move(name), CheckStatus::Fail, {}};
  try {
    out.status = fn(out.detail) ? CheckStatus::Pass : CheckStatus::Fail;
  } catch (const Error& err) {
    out.status = err.kind() == ErrorKind::BudgetExceeded ? CheckStatus::Skipped : CheckStatus::Fail;
    out.detail = err.what();
  }
  return out;
}

}  // namespace

CrosscheckReport crosscheck(const QPoly& f, std::uint64_t p, const EnumOptions& opts) {
  const auto fbar = reduce_mod_p(f, p);
  CrosscheckReport report;
  auto& checks = report.checks;

  checks.push_back(run_check("product_formula", [&](std::string&) { return product_formula_check(fbar, opts); }));
  checks.push_back(run_check("slope_length_relation", [&](std::string&) { return slope_length_relation_check(fbar, opts); }));
  checks.push_back(run_check("base_change", [&](std::string&) { return np_base_change_check(fbar, 2, Character(p, 1), opts); }));
  checks.push_back(run_check("character_independence", [&](std::string& detail) {
    const unsigned d = static_cast<unsigned>(fbar.degree());
    const auto hists = trace_histograms(fbar, d - 1, opts);
    const auto base = l_polynomial_from_histograms(fbar, hists, Character(p, 1));
    const auto np = newton_polygon(base);
    for (std::uint64_t c = 2; c < p; ++c) {
      const auto L = l_polynomial_from_histograms(fbar, hists, Character(p, c));
      if (newton_polygon(L) != np) {
        detail = "polygon differs for c = " + std::to_string(c);
        return false;
      }
      for (std::size_t k = 0; k < L.coeffs().size(); ++k) {
        if (L.coeffs()[k] != galois_apply(base.coeffs()[k], static_cast<std::int64_t>(c))) {
          detail = "coefficient " + std::to_string(k) + " is not the Galois conjugate for c = " + std::to_string(c);
          return false;
        }
      }
    }
    return true;
  }));

  const auto split = dickson_split(f);
  if (!split) {
    checks.push_back(CheckResult{"divisibility", CheckStatus::Skipped, "no Dickson composition factor"});
    return report;
  }
  const auto& dn = split->dickson;
  const QPoly partial = split->outer.compose(dickson(dn.n, dn.a));
  checks.push_back(run_check("divisibility", [&](std::string& detail) {
    if (static_cast<std::uint64_t>(partial.degree()) % p == 0) {
      detail = "p divides deg(f1 o D_n)";
      return true;
    }
    const auto inner_p1 = p1_polynomial(reduce_mod_p(partial, p), opts);
    const auto outer_p1 = p1_polynomial(fbar, opts);
    detail = "P1(f1 o D_n) = " + inner_p1.to_string();
    return divisibility_check(inner_p1, outer_p1);
  }));

  const auto adm = is_admissible(p, dn.a, dn.n);
  if (!adm.admissible()) {
    checks.push_back(CheckResult{"exp_sum_permutation_identity", CheckStatus::Skipped,
                                 "(p, a, n) is not admissible"});
    return report;
  }
  for (unsigned m : {1u, dn.n}) {
    checks.push_back(run_check("exp_sum_permutation_identity_m" + std::to_string(m), [&](std::string&) {
      const Character chi(p, 1);
      const auto f1 = reduce_mod_p(split->outer, p);
      const auto composed = f1.compose(dickson(dn.n, FiniteField::build(p, 1).constant(
                                                          static_cast<std::int64_t>(reduce_rational(dn.a, p)))));
      return exp_sum(f1, m, chi, opts) == exp_sum(composed, m, chi, opts);
    }));
  }
  return report;
}

}  // namespace npscan
