// npscan: Newton polygons of exponential sums across primes.

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "npscan/cache.hpp"
#include "npscan/curve_zeta.hpp"
#include "npscan/decompose.hpp"
#include "npscan/dickson.hpp"
#include "npscan/errors.hpp"
#include "npscan/lfunction.hpp"
#include "npscan/parse.hpp"
#include "npscan/scan.hpp"

using namespace npscan;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kInternal = 1, kBadInput = 2, kBudget = 3, kViolation = 4 };

struct Globals {
  std::string format = "csv";
  unsigned jobs = 1;
  std::string cache_path;
  std::uint64_t budget = 100'000'000;
  std::uint64_t chr = 1;
  bool no_timing = false;

  EnumOptions enumeration() const { return EnumOptions{budget, jobs}; }
  bool as_json() const { return format == "json"; }
};

int exit_for(const Error& err) {
  switch (err.kind()) {
    case ErrorKind::BudgetExceeded:
      return kBudget;
    case ErrorKind::InvariantViolation:
      return kViolation;
    case ErrorKind::NotPrime:
    case ErrorKind::BadPlace:
    case ErrorKind::ParseError:
    case ErrorKind::InvalidArgument:
    case ErrorKind::DegreeCharClash:
    case ErrorKind::NotAUnit:
    case ErrorKind::NoEmbedding:
      return kBadInput;
    default:
      return kInternal;
  }
}

std::vector<std::string> coeff_strings(const QPoly& f) {
  std::vector<std::string> out;
  for (const auto& c : f.coeffs()) out.push_back(rational_string(c));
  return out;
}

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Fail:
      return "FAIL";
    default:
      return "SKIPPED";
  }
}

std::string kind_name(FactorKind k) {
  switch (k) {
    case FactorKind::Linear:
      return "linear";
    case FactorKind::Dickson:
      return "dickson";
    default:
      return "other";
  }
}

std::optional<DicksonHint> parse_hint(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(ErrorKind::ParseError, "--dickson expects n,a");
  const auto n = std::stoul(text.substr(0, comma));
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "--dickson needs n >= 2");
  return DicksonHint{static_cast<unsigned>(n), parse_rational(text.substr(comma + 1))};
}

int cmd_np(const Globals& g, const std::string& poly, std::uint64_t p) {
  const QPoly f = parse_polynomial(poly);
  std::unique_ptr<ResultCache> cache;
  if (!g.cache_path.empty()) cache = std::make_unique<ResultCache>(g.cache_path);
  const auto r = scan_prime(f, p, g.chr, find_gpp_hint(f), g.enumeration(), cache.get());
  if (!r.polygon) throw Error(ErrorKind::BudgetExceeded, r.error);
  if (g.as_json()) {
    std::cout << record_to_json(r, !g.no_timing) << '\n';
  } else {
    std::cout << kCsvHeader << '\n' << record_to_csv(r, !g.no_timing) << '\n';
  }
  const auto violations = record_violations(r);
  for (const auto& v : violations) std::cerr << "violation: " << v << '\n';
  return violations.empty() ? kOk : kViolation;
}

int cmd_scan(const Globals& g, const std::string& poly, std::uint64_t p_max, const std::string& hint_text) {
  const QPoly f = parse_polynomial(poly);
  ScanOptions opts;
  opts.p_max = p_max;
  opts.c = g.chr;
  opts.hint = parse_hint(hint_text);
  opts.enumeration = g.enumeration();
  opts.jobs = g.jobs;
  std::unique_ptr<ResultCache> cache;
  if (!g.cache_path.empty()) {
    cache = std::make_unique<ResultCache>(g.cache_path);
    for (const auto& w : cache->warnings()) std::cerr << "cache: " << w << '\n';
    opts.cache = cache.get();
  }
  const bool timing = !g.no_timing;
  if (!g.as_json()) std::cout << kCsvHeader << '\n';
  const auto result = run_scan(f, opts, [&](const ScanRecord& r) {
    std::cout << (g.as_json() ? record_to_json(r, timing) : record_to_csv(r, timing)) << '\n' << std::flush;
  });

  std::string hint_line = "none found";
  if (result.hint) {
    hint_line = "D_" + std::to_string(result.hint->n) + "(x, " + rational_string(result.hint->a) + ") from " +
                result.hint_source;
  }
  if (g.as_json()) {
    json s = json::parse(summary_to_json(result.summary));
    s["dickson_hint"] = hint_line;
    s["violations"] = result.violations;
    std::cout << json{{"summary", s}}.dump() << '\n';
  } else {
    const auto& s = result.summary;
    std::cerr << "# dickson hint: " << hint_line << '\n'
              << "# rows " << s.rows << ", np_eq_hp " << s.np_eq_hp << ", gap >= 1/(2d) " << s.gap_witnesses
              << ", admissible " << s.admissible << ", slope_mult_ge2 " << s.slope_mult_ge2 << ", failed "
              << s.failed << '\n'
              << "# verdict: " << s.verdict << '\n';
  }
  for (const auto& v : result.violations) std::cerr << "violation: " << v << '\n';
  return result.violations.empty() ? kOk : kViolation;
}

int cmd_crosscheck(const Globals& g, const std::string& poly, std::uint64_t p) {
  const auto report = crosscheck(parse_polynomial(poly), p, g.enumeration());
  if (g.as_json()) {
    json out = json::array();
    for (const auto& c : report.checks) {
      out.push_back({{"check", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
    }
    std::cout << json{{"checks", out}, {"passed", report.passed()}}.dump() << '\n';
  } else {
    for (const auto& c : report.checks) {
      std::cout << status_name(c.status) << ' ' << c.name;
      if (!c.detail.empty()) std::cout << " (" << c.detail << ')';
      std::cout << '\n';
    }
  }
  return report.passed() ? kOk : kViolation;
}

int cmd_decompose(const Globals& g, const std::string& poly) {
  const auto chain = decompose(parse_polynomial(poly));
  if (g.as_json()) {
    json out = json::array();
    for (const auto& f : chain.factors) out.push_back({{"kind", kind_name(f.kind)}, {"coeffs", coeff_strings(f.poly)}});
    std::cout << out.dump() << '\n';
  } else {
    for (const auto& f : chain.factors) std::cout << kind_name(f.kind) << ": " << f.poly.to_string() << '\n';
  }
  return kOk;
}

int cmd_zeta(const Globals& g, const std::string& poly, std::uint64_t p, unsigned degree) {
  const QPoly f = parse_polynomial(poly);
  const auto field = FiniteField::build(p, degree);
  std::vector<std::int64_t> residues;
  for (const auto& c : f.coeffs()) {
    if (denominator(c) % p == 0) throw Error(ErrorKind::BadPlace, "f is not in O_p[x]");
    residues.push_back(static_cast<std::int64_t>(reduce_rational(c, p)));
  }
  const auto gbar = FieldPolynomial::from_residues(field, residues);
  if (gbar.degree() < 1) throw Error(ErrorKind::InvalidArgument, "g must be non-constant mod p");
  if (static_cast<std::uint64_t>(gbar.degree()) % p == 0) throw Error(ErrorKind::DegreeCharClash, "p divides deg g");
  const auto p1 = p1_polynomial(gbar, g.enumeration(), true);
  const auto np = curve_newton_polygon(p1, p, degree);
  if (g.as_json()) {
    std::vector<std::string> cs;
    for (const auto& c : p1.coeffs()) cs.push_back(c.str());
    std::cout << json{{"p1", cs}, {"newton_polygon", json::parse(polygon_to_json(np))}}.dump() << '\n';
  } else {
    std::cout << "P1 = " << p1.to_string() << '\n' << "NP = " << polygon_to_cell(np) << '\n';
  }
  return kOk;
}

int cmd_dickson_generate(const Globals& g, unsigned n, const std::string& a) {
  const auto d = dickson(n, parse_rational(a));
  if (g.as_json()) {
    std::cout << json(coeff_strings(d)).dump() << '\n';
  } else {
    std::cout << d.to_string() << '\n';
  }
  return kOk;
}

int cmd_dickson_recognize(const Globals& g, const std::string& poly) {
  const auto form = recognize_dickson(parse_polynomial(poly));
  if (g.as_json()) {
    json out = nullptr;
    if (form) {
      out = {{"n", form->n}, {"a", rational_string(form->a)}, {"shift", rational_string(form->shift)},
             {"offset", rational_string(form->offset)}};
    }
    std::cout << out.dump() << '\n';
  } else if (form) {
    std::cout << "D_" << form->n << "(x + " << rational_string(form->shift) << ", " << rational_string(form->a)
              << ") + " << rational_string(form->offset) << '\n';
  } else {
    std::cout << "none\n";
  }
  return kOk;
}

int cmd_dickson_perm(const Globals& g, unsigned n, const std::string& a_text, std::uint64_t p, unsigned degree) {
  const Rational a = parse_rational(a_text);
  const auto field = FiniteField::build(p, degree);
  const auto abar = field.constant(static_cast<std::int64_t>(reduce_rational(a, p)));
  const bool criterion = dickson_perm_criterion(n, abar);
  std::optional<bool> brute;
  try {
    brute = is_permutation_bruteforce(dickson(n, abar), g.enumeration());
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::BudgetExceeded) throw;
  }
  std::optional<AdmissibleTriple> triple;
  if (degree == 1 && n >= 2) triple = is_admissible(p, a, n);
  if (g.as_json()) {
    json out{{"q", field.cardinality().str()}, {"criterion", criterion}, {"bruteforce", brute ? json(*brute) : json(nullptr)}};
    if (triple) out["admissible"] = triple->admissible();
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "criterion " << (criterion ? "true" : "false") << ", bruteforce "
              << (brute ? (*brute ? "true" : "false") : "skipped");
    if (triple) std::cout << ", admissible " << (triple->admissible() ? "true" : "false");
    std::cout << '\n';
  }
  if (brute && *brute != criterion) return kViolation;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newton polygons of exponential sums across primes"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--cache", g.cache_path, "JSON-lines result cache");
  app.add_option("--budget", g.budget, "Maximum field size to enumerate");
  app.add_option("--char", g.chr, "Character index c");
  app.add_flag("--no-timing", g.no_timing, "Leave the ms column empty");

  std::string poly, a_text, hint_text;
  std::uint64_t p = 0, p_max = 100;
  unsigned n = 0, degree = 1;
  std::function<int()> run;

  auto* np = app.add_subcommand("np", "Newton polygon at one prime");
  np->add_option("poly", poly)->required();
  np->add_option("p", p)->required();
  np->callback([&] { run = [&] { return cmd_np(g, poly, p); }; });

  auto* scan = app.add_subcommand("scan", "Scan primes up to a bound");
  scan->add_option("poly", poly)->required();
  scan->add_option("--pmax", p_max, "Prime bound");
  scan->add_option("--dickson", hint_text, "Dickson factor n,a");
  scan->callback([&] { run = [&] { return cmd_scan(g, poly, p_max, hint_text); }; });

  auto* cross = app.add_subcommand("crosscheck", "Run the consistency checks at one prime");
  cross->add_option("poly", poly)->required();
  cross->add_option("p", p)->required();
  cross->callback([&] { run = [&] { return cmd_crosscheck(g, poly, p); }; });

  auto* dec = app.add_subcommand("decompose", "Functional decomposition over Q");
  dec->add_option("poly", poly)->required();
  dec->callback([&] { run = [&] { return cmd_decompose(g, poly); }; });

  auto* zeta = app.add_subcommand("zeta", "P_1 of y^p - y = g(x) over F_{p^e}");
  zeta->add_option("poly", poly)->required();
  zeta->add_option("p", p)->required();
  zeta->add_option("--degree", degree, "Extension degree e")->check(CLI::Range(1u, 64u));
  zeta->callback([&] { run = [&] { return cmd_zeta(g, poly, p, degree); }; });

  auto* dk = app.add_subcommand("dickson", "Dickson polynomial tools");
  dk->require_subcommand(1);
  auto* gen = dk->add_subcommand("generate", "Print D_n(x, a)");
  gen->add_option("n", n)->required();
  gen->add_option("a", a_text)->required();
  gen->callback([&] { run = [&] { return cmd_dickson_generate(g, n, a_text); }; });
  auto* rec = dk->add_subcommand("recognize", "Match a shifted Dickson polynomial");
  rec->add_option("poly", poly)->required();
  rec->callback([&] { run = [&] { return cmd_dickson_recognize(g, poly); }; });
  auto* perm = dk->add_subcommand("perm-check", "Permutation criterion against brute force");
  perm->add_option("n", n)->required()->check(CLI::PositiveNumber);
  perm->add_option("a", a_text)->required();
  perm->add_option("p", p)->required();
  perm->add_option("--degree", degree, "Extension degree e")->check(CLI::Range(1u, 64u));
  perm->callback([&] { run = [&] { return cmd_dickson_perm(g, n, a_text, p, degree); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }
  try {
    return run ? run() : kBadInput;
  } catch (const Error& err) {
    std::cerr << "npscan: " << err.what() << '\n';
    return exit_for(err);
  } catch (const std::exception& err) {
    std::cerr << "npscan: " << err.what() << '\n';
    return kBadInput;
  }
}
