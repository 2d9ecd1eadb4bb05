#pragma once

#include <vector>

#include "mbt/gf2.hpp"

namespace mbt {

// Element of the group algebra GF(2^l)[Z_2^d]: a dense coefficient vector
// indexed by bit-vectors of Z_2^d. Addition is coordinatewise xor;
// multiplication is xor-convolution. Key cancellation property used by
// the detector: (e_0 + e_v)^2 = 0 for every v.
struct GroupAlgebraElement {
  int dim_log = 0;  // d
  std::vector<uint64_t> coeffs;

  GroupAlgebraElement() = default;
  explicit GroupAlgebraElement(int d) : dim_log(d), coeffs(size_t(1) << d, 0) {}

  static GroupAlgebraElement zero(int d) { return GroupAlgebraElement(d); }
  // r * (e_0 + e_v)
  static GroupAlgebraElement pair(int d, uint64_t v, uint64_t r) {
    GroupAlgebraElement e(d);
    e.coeffs[0] ^= r;
    e.coeffs[v] ^= r;
    return e;
  }
  static GroupAlgebraElement basis(int d, uint64_t v, uint64_t r = 1) {
    GroupAlgebraElement e(d);
    e.coeffs[v] = r;
    return e;
  }

  bool is_zero() const {
    for (uint64_t c : coeffs)
      if (c) return false;
    return true;
  }

  void add_inplace(const GroupAlgebraElement& o) {
    for (size_t i = 0; i < coeffs.size(); i++) coeffs[i] ^= o.coeffs[i];
  }

  void scale_inplace(uint64_t s, const Gf2Field& f) {
    for (auto& c : coeffs) c = f.mul(c, s);
  }
};

inline GroupAlgebraElement ga_add(const GroupAlgebraElement& a,
                                  const GroupAlgebraElement& b) {
  GroupAlgebraElement c = a;
  c.add_inplace(b);
  return c;
}

// Naive xor-convolution: 4^d field multiplications.
inline GroupAlgebraElement ga_mul(const GroupAlgebraElement& a,
                                  const GroupAlgebraElement& b, const Gf2Field& f) {
  GroupAlgebraElement c(a.dim_log);
  size_t n = a.coeffs.size();
  for (size_t u = 0; u < n; u++) {
    uint64_t au = a.coeffs[u];
    if (!au) continue;
    for (size_t v = 0; v < n; v++) {
      uint64_t bv = b.coeffs[v];
      if (!bv) continue;
      c.coeffs[u ^ v] ^= f.mul(au, bv);
    }
  }
  return c;
}

}  // namespace mbt
