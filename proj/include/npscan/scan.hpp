#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "npscan/dickson.hpp"
#include "npscan/finite_field.hpp"
#include "npscan/polygon.hpp"
#include "npscan/rational_poly.hpp"

namespace npscan {

class ResultCache;

struct DicksonHint {
  unsigned n = 0;
  Rational a;
};

/// One prime of a scan.
struct ScanRecord {
  std::uint64_t p = 0;
  std::uint64_t c = 1;
  unsigned d = 0;
  std::optional<ConvexPolygon> polygon;  // empty when the row failed
  std::string error;                     // in-row failure (e.g. budget)
  Rational gap;                          // vertical gap NP - HP(d)
  bool np_eq_hp = false;
  std::uint64_t p_mod_d = 0;
  std::optional<bool> admissible;        // only with a Dickson hint
  bool slope_mult_ge2 = false;
  std::optional<Rational> v0;            // a slope of length >= 2
  double ms = 0;
};

struct ScanSummary {
  std::string polynomial;
  std::uint64_t p_max = 0;
  std::size_t rows = 0;
  std::size_t np_eq_hp = 0;
  std::size_t gap_witnesses = 0;  // gap >= 1/(2d)
  std::size_t admissible = 0;
  std::size_t slope_mult_ge2 = 0;
  std::size_t failed = 0;
  std::string verdict;
};

struct ScanOptions {
  std::uint64_t p_max = 100;
  std::uint64_t c = 1;
  std::optional<DicksonHint> hint;  // found automatically when empty
  EnumOptions enumeration;
  unsigned jobs = 1;
  ResultCache* cache = nullptr;
};

struct ScanResult {
  std::vector<ScanRecord> records;
  ScanSummary summary;
  std::optional<DicksonHint> hint;
  std::string hint_source;               // "user", "decomposition" or "none"
  std::vector<std::string> violations;   // theorem-backed checks that failed
};

inline constexpr const char* kOscillates = "oscillates (limit cannot exist)";
inline constexpr const char* kNoOscillation = "no oscillation witnessed up to bound";

/// Dickson factor D_n(x, a) of f that is a GPP over Q with n > 1, if any.
std::optional<DicksonHint> find_gpp_hint(const QPoly& f);

/// NP_p(f) and its derived flags. Errors other than BadPlace become in-row errors.
ScanRecord scan_prime(const QPoly& f, std::uint64_t p, std::uint64_t c, const std::optional<DicksonHint>& hint,
                      const EnumOptions& opts, ResultCache* cache = nullptr);

/// Record-level theorem checks; returns a description per violation.
std::vector<std::string> record_violations(const ScanRecord& r);

/// Scans primes p <= p_max outside the bad set of f in increasing order.
/// `emit` sees records in ascending p regardless of `jobs`.
ScanResult run_scan(const QPoly& f, const ScanOptions& options,
                    const std::function<void(const ScanRecord&)>& emit = {});

inline constexpr const char* kCsvHeader = "p,c,d,vertices,slopes,gap,np_eq_hp,p_mod_d,admissible,slope_mult_ge2,v0,ms";
std::string record_to_csv(const ScanRecord& r, bool timing = true);
std::string record_to_json(const ScanRecord& r, bool timing = true);
std::string summary_to_json(const ScanSummary& s);
std::string polygon_to_json(const ConvexPolygon& poly);
std::string rational_to_json(const Rational& r);

// --- cross-checks --------------------------------------------------------

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
};

struct CrosscheckReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// f = f1 o D_n(x, a) o f3 read off the decomposition chain.
struct DicksonSplit {
  QPoly outer;  // f1
  QPoly inner;  // f3
  DicksonHint dickson;
};
std::optional<DicksonSplit> dickson_split(const QPoly& f);

CrosscheckReport crosscheck(const QPoly& f, std::uint64_t p, const EnumOptions& opts = {});

}  // namespace npscan
