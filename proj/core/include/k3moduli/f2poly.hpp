// f2poly.hpp — univariate polynomials over F2 as packed bit vectors.
//
// Used as the coefficient ring when bivariate F2 polynomials are processed
// coefficient-wise (contents, pseudo-remainder sequences).  Exponent i lives
// at bit i of word i/64.
#pragma once

#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace k3m {

struct F2Poly {
  std::vector<uint64_t> w;  // invariant: no trailing zero words

  F2Poly() = default;
  static F2Poly zero() { return F2Poly(); }
  static F2Poly one() { return monomial(0); }
  static F2Poly monomial(unsigned e) {
    F2Poly p;
    p.set(e);
    return p;
  }

  void trim() {
    while (!w.empty() && w.back() == 0) w.pop_back();
  }
  bool is_zero() const { return w.empty(); }
  bool get(unsigned e) const {
    unsigned blk = e / 64;
    return blk < w.size() && ((w[blk] >> (e % 64)) & 1);
  }
  void set(unsigned e) {  // toggle-or-set semantics: XOR the term in
    unsigned blk = e / 64;
    if (blk >= w.size()) w.resize(blk + 1, 0);
    w[blk] ^= (uint64_t(1) << (e % 64));
    trim();
  }
  int deg() const {
    if (w.empty()) return -1;
    unsigned top = unsigned(w.size()) - 1;
    uint64_t x = w[top];
    int b = 63;
    while (!(x >> b & 1)) --b;
    return int(top) * 64 + b;
  }

  bool operator==(const F2Poly& o) const { return w == o.w; }

  friend F2Poly operator+(const F2Poly& a, const F2Poly& b) {
    F2Poly r;
    r.w.resize(std::max(a.w.size(), b.w.size()), 0);
    for (size_t i = 0; i < r.w.size(); ++i) {
      if (i < a.w.size()) r.w[i] ^= a.w[i];
      if (i < b.w.size()) r.w[i] ^= b.w[i];
    }
    r.trim();
    return r;
  }

  F2Poly shifted(unsigned e) const {
    if (is_zero()) return F2Poly();
    F2Poly r;
    unsigned blks = e / 64, bits = e % 64;
    r.w.assign(w.size() + blks + 1, 0);
    for (size_t i = 0; i < w.size(); ++i) {
      r.w[i + blks] ^= w[i] << bits;
      if (bits) r.w[i + blks + 1] ^= w[i] >> (64 - bits);
    }
    r.trim();
    return r;
  }

  friend F2Poly operator*(const F2Poly& a, const F2Poly& b) {
    F2Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    int da = a.deg();
    for (int e = 0; e <= da; ++e)
      if (a.get(unsigned(e))) r = r + b.shifted(unsigned(e));
    return r;
  }

  friend std::pair<F2Poly, F2Poly> divmod(const F2Poly& a, const F2Poly& b) {
    if (b.is_zero()) raise(ErrorCode::DIVISION_BY_ZERO, "F2Poly division by zero");
    F2Poly q, r = a;
    int db = b.deg();
    while (!r.is_zero() && r.deg() >= db) {
      unsigned e = unsigned(r.deg() - db);
      q.set(e);
      r = r + b.shifted(e);
    }
    return {q, r};
  }
  friend F2Poly operator/(const F2Poly& a, const F2Poly& b) { return divmod(a, b).first; }
  friend F2Poly operator%(const F2Poly& a, const F2Poly& b) { return divmod(a, b).second; }

  friend F2Poly gcd(F2Poly a, F2Poly b) {
    while (!b.is_zero()) {
      F2Poly r = a % b;
      a = b;
      b = r;
    }
    return a;
  }
};

}  // namespace k3m
