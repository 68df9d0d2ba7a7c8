#pragma once

#include <cstdint>
#include <vector>

namespace npscan::detail {

/// x mod p for 64-bit x via a precomputed reciprocal.
struct Reducer {
  std::uint64_t p = 1;
  std::uint64_t inv = 0;  // floor(2^64 / p) when p > 1

  Reducer() = default;
  explicit Reducer(std::uint64_t modulus)
      : p(modulus), inv(modulus > 1 ? static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) / modulus) : 0) {}

  std::uint64_t operator()(std::uint64_t x) const {
    auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * inv) >> 64);
    std::uint64_t r = x - q * p;
    while (r >= p) r -= p;
    return r;
  }
};

/// Raw coefficient-vector arithmetic for one field; all buffers have length e
/// except the product accumulator, which needs 2e - 1 slots.
struct FieldKernel {
  std::uint64_t p = 0;
  unsigned e = 0;
  std::vector<std::uint64_t> neg_modulus;  // (p - m_i) mod p, i < e
  std::vector<std::uint64_t> traces;       // Tr(theta^i), i < e
  std::vector<std::uint64_t> fold;         // x^{e+r} mod modulus, r < e - 1, row-major
  Reducer reduce;
  bool lazy = false;  // products can be summed before reducing
  bool wide = false;  // the whole fold fits in 64 bits before reducing

  void add(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out) const {
    for (unsigned i = 0; i < e; ++i) {
      std::uint64_t s = a[i] + b[i];
      out[i] = s >= p ? s - p : s;
    }
  }

  void mul(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out, std::uint64_t* acc) const {
    if (e == 1) {
      out[0] = lazy ? reduce(a[0] * b[0]) : mulmod_slow(a[0], b[0]);
      return;
    }
    if (wide) {
      switch (e) {
        case 2: return mul_fixed<2>(a, b, out, acc);
        case 3: return mul_fixed<3>(a, b, out, acc);
        case 4: return mul_fixed<4>(a, b, out, acc);
        case 5: return mul_fixed<5>(a, b, out, acc);
        case 6: return mul_fixed<6>(a, b, out, acc);
        case 7: return mul_fixed<7>(a, b, out, acc);
        case 8: return mul_fixed<8>(a, b, out, acc);
        case 9: return mul_fixed<9>(a, b, out, acc);
        case 10: return mul_fixed<10>(a, b, out, acc);
        case 11: return mul_fixed<11>(a, b, out, acc);
        case 12: return mul_fixed<12>(a, b, out, acc);
        default: break;
      }
    }
    const unsigned len = 2 * e - 1;
    for (unsigned i = 0; i < len; ++i) acc[i] = 0;
    if (lazy) {
      for (unsigned i = 0; i < e; ++i) {
        const std::uint64_t ai = a[i];
        if (ai == 0) continue;
        for (unsigned j = 0; j < e; ++j) acc[i + j] += ai * b[j];
      }
      for (unsigned k = len - 1; k >= e; --k) {
        const std::uint64_t c = reduce(acc[k]);
        if (c == 0) continue;
        std::uint64_t* base = acc + (k - e);
        for (unsigned i = 0; i < e; ++i) base[i] += c * neg_modulus[i];
      }
      for (unsigned i = 0; i < e; ++i) out[i] = reduce(acc[i]);
      return;
    }
    for (unsigned i = 0; i < e; ++i) {
      for (unsigned j = 0; j < e; ++j) acc[i + j] = addmod(acc[i + j], mulmod_slow(a[i], b[j]));
    }
    for (unsigned k = len - 1; k >= e; --k) {
      const std::uint64_t c = acc[k];
      if (c == 0) continue;
      for (unsigned i = 0; i < e; ++i) acc[k - e + i] = addmod(acc[k - e + i], mulmod_slow(c, neg_modulus[i]));
    }
    for (unsigned i = 0; i < e; ++i) out[i] = acc[i];
  }

  template <unsigned E>
  void mul_fixed(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out, std::uint64_t* acc) const {
    for (unsigned i = 0; i < 2 * E - 1; ++i) acc[i] = 0;
    for (unsigned i = 0; i < E; ++i) {
      const std::uint64_t ai = a[i];
      for (unsigned j = 0; j < E; ++j) acc[i + j] += ai * b[j];
    }
    const std::uint64_t* f = fold.data();
    for (unsigned r = 0; r + 1 < E; ++r) {
      const std::uint64_t c = acc[E + r];
      for (unsigned i = 0; i < E; ++i) acc[i] += c * f[r * E + i];
    }
    for (unsigned i = 0; i < E; ++i) out[i] = reduce(acc[i]);
  }

  std::uint64_t trace(const std::uint64_t* a) const {
    if (lazy) {
      std::uint64_t s = 0;
      for (unsigned i = 0; i < e; ++i) s += a[i] * traces[i];
      return reduce(s);
    }
    std::uint64_t s = 0;
    for (unsigned i = 0; i < e; ++i) s = addmod(s, mulmod_slow(a[i], traces[i]));
    return s;
  }

  std::uint64_t addmod(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;  // a, b < p < 2^63
    return s >= p ? s - p : s;
  }
  std::uint64_t mulmod_slow(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  }
};

}  // namespace npscan::detail
