#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace npscan {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Primes in [lo, hi], ascending.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

/// p-adic valuation of a nonzero integer.
unsigned valuation(const BigInt& n, std::uint64_t p);

/// r^n for n >= 0.
Rational rational_pow(const Rational& r, unsigned n);

/// p^e, or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> checked_pow(std::uint64_t p, std::uint64_t e);

/// Distinct prime factors, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Reduce a rational into F_p. Requires the denominator coprime to p.
std::uint64_t reduce_rational(const Rational& r, std::uint64_t p);

/// "num/den" with den > 0; integers still carry "/1".
std::string rational_string(const Rational& r);

/// Accepts "n", "-n", "n/d".
Rational parse_rational(const std::string& s);

}  // namespace npscan
