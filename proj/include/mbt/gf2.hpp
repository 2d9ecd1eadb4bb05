#pragma once

#include <cstdint>
#include <stdexcept>

#ifdef MBT_HAVE_PCLMUL
#include <wmmintrin.h>
#endif

namespace mbt {

// GF(2^bits) with a fixed low-weight irreducible reduction polynomial
// x^bits + low_terms. Addition is xor; a+a = 0 (characteristic 2).
struct Gf2Field {
  int bits = 64;
  uint64_t low_terms = 0x1B;  // x^64 + x^4 + x^3 + x + 1
  uint64_t mask = ~0ULL;

  static Gf2Field make(int bits) {
    switch (bits) {
      case 64: return {64, 0x1B, ~0ULL};
      case 16: return {16, 0x2B, 0xFFFF};  // x^16 + x^5 + x^3 + x + 1
      default: throw std::invalid_argument("Gf2Field: unsupported field size");
    }
  }

  uint64_t add(uint64_t a, uint64_t b) const { return a ^ b; }

  uint64_t mul(uint64_t a, uint64_t b) const {
#ifdef MBT_HAVE_PCLMUL
    if (bits == 64) {
      __m128i x = _mm_cvtsi64_si128(static_cast<long long>(a));
      __m128i y = _mm_cvtsi64_si128(static_cast<long long>(b));
      __m128i p = _mm_clmulepi64_si128(x, y, 0x00);
      uint64_t lo = static_cast<uint64_t>(_mm_cvtsi128_si64(p));
      uint64_t hi = static_cast<uint64_t>(_mm_cvtsi128_si64(_mm_srli_si128(p, 8)));
      __m128i red = _mm_cvtsi64_si128(static_cast<long long>(low_terms));
      while (hi) {
        __m128i q = _mm_clmulepi64_si128(_mm_cvtsi64_si128(static_cast<long long>(hi)),
                                         red, 0x00);
        lo ^= static_cast<uint64_t>(_mm_cvtsi128_si64(q));
        hi = static_cast<uint64_t>(_mm_cvtsi128_si64(_mm_srli_si128(q, 8)));
      }
      return lo;
    }
    if (bits <= 32) {
      __m128i x = _mm_cvtsi64_si128(static_cast<long long>(a));
      __m128i y = _mm_cvtsi64_si128(static_cast<long long>(b));
      uint64_t p = static_cast<uint64_t>(_mm_cvtsi128_si64(_mm_clmulepi64_si128(x, y, 0x00)));
      while (p >> bits) {
        uint64_t hi = p >> bits;
        __m128i q = _mm_clmulepi64_si128(_mm_cvtsi64_si128(static_cast<long long>(hi)),
                                         _mm_cvtsi64_si128(static_cast<long long>(low_terms)),
                                         0x00);
        p = (p & mask) ^ static_cast<uint64_t>(_mm_cvtsi128_si64(q));
      }
      return p;
    }
#endif
    return mul_generic(a, b);
  }

  uint64_t mul_generic(uint64_t a, uint64_t b) const {
    uint64_t res = 0;
    uint64_t top = 1ULL << (bits - 1);
    while (b) {
      if (b & 1) res ^= a;
      b >>= 1;
      uint64_t carry = a & top;
      a = (a << 1) & mask;
      if (carry) a ^= low_terms;
    }
    return res;
  }

  uint64_t pow(uint64_t a, uint64_t e) const {
    uint64_t res = 1;
    while (e) {
      if (e & 1) res = mul(res, a);
      a = mul(a, a);
      e >>= 1;
    }
    return res;
  }
};

}  // namespace mbt
