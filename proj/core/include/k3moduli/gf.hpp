// gf.hpp — exact arithmetic in GF(2^m) for m in {1, 2, 4, 8, 12}.
//
// Each supported degree has one fixed irreducible modulus (documented in
// docs/formats.md and asserted primitive when the tables are built):
//
//   m = 1 : x          (the prime field F2 itself)
//   m = 2 : x^2 + x + 1
//   m = 4 : x^4 + x + 1
//   m = 8 : x^8 + x^4 + x^3 + x^2 + 1
//   m = 12: x^12 + x^6 + x^4 + x + 1
//
// Elements are bit vectors of polynomial residues (fits in uint16_t).  Because
// every modulus is primitive, multiplication and inversion use log/antilog
// tables with generator g = the class of x.  An element carries a pointer to
// its field context; mixing contexts raises FIELD_MISMATCH.
//
// F4 embeds in GF(2^m) exactly when m is even; the fixed embedding sends w to
// g^((2^m-1)/3).  For m = 1 the embedding of w raises BAD_INPUT.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "f4.hpp"

namespace k3m {

class GFContext {
 public:
  // The shared context for one of the supported degrees.  Throws BAD_INPUT for
  // any other degree.
  static const GFContext& get(unsigned m);

  unsigned degree() const { return m_; }
  uint32_t modulus() const { return modulus_; }     // bit i = coefficient of x^i
  uint32_t order() const { return 1u << m_; }       // number of field elements
  uint16_t generator() const { return alog_[1 % (order() - 1)]; }

  uint16_t mul(uint16_t a, uint16_t b) const {
    if (a == 0 || b == 0) return 0;
    return alog_[(log_[a] + log_[b]) % (order() - 1)];
  }
  uint16_t inv(uint16_t a) const {
    if (a == 0) raise(ErrorCode::DIVISION_BY_ZERO, "inverse of 0 in GF(2^" + std::to_string(m_) + ")");
    return alog_[(order() - 1 - log_[a]) % (order() - 1)];
  }
  uint16_t pow(uint16_t a, uint64_t e) const;

  // Image of an F4 scalar under the fixed embedding (even m only).
  uint16_t embed_f4(F4 a) const;

  uint16_t element_at(uint32_t index) const { return uint16_t(index); }  // 0 .. order()-1

 private:
  explicit GFContext(unsigned m);
  unsigned m_;
  uint32_t modulus_;
  std::vector<uint16_t> log_, alog_;
  uint16_t f4img_[4];  // images of 0,1,w,w+1 (w image 0 when m is odd)
  bool has_f4_;
  friend struct GFElement;
};

struct GFElement {
  uint16_t v = 0;
  const GFContext* F = nullptr;

  GFElement() = default;
  GFElement(uint16_t value, const GFContext& ctx) : v(value), F(&ctx) {}

  static GFElement zero(const GFContext& ctx) { return GFElement(0, ctx); }
  static GFElement one(const GFContext& ctx) { return GFElement(1, ctx); }
  static GFElement from_f4(F4 a, const GFContext& ctx) { return GFElement(ctx.embed_f4(a), ctx); }

  bool is_zero() const { return v == 0; }
  const GFContext& ctx() const {
    if (!F) raise(ErrorCode::BAD_INPUT, "GFElement without field context");
    return *F;
  }

  friend void check_same(const GFElement& a, const GFElement& b) {
    if (a.F != b.F)
      raise(ErrorCode::FIELD_MISMATCH, "operands from different GF(2^m) contexts");
  }

  friend GFElement operator+(GFElement a, GFElement b) {
    check_same(a, b);
    return GFElement(uint16_t(a.v ^ b.v), a.ctx());
  }
  friend GFElement operator-(GFElement a, GFElement b) { return a + b; }
  friend GFElement operator*(GFElement a, GFElement b) {
    check_same(a, b);
    return GFElement(a.ctx().mul(a.v, b.v), a.ctx());
  }
  friend GFElement operator/(GFElement a, GFElement b) {
    check_same(a, b);
    return GFElement(a.ctx().mul(a.v, b.ctx().inv(b.v)), a.ctx());
  }
  GFElement& operator+=(GFElement b) { *this = *this + b; return *this; }
  GFElement& operator*=(GFElement b) { *this = *this * b; return *this; }

  GFElement inverse() const { return GFElement(ctx().inv(v), ctx()); }
  GFElement square() const { return *this * *this; }
  // Square root: x -> x^(2^(m-1)); squaring is a bijection in characteristic 2.
  GFElement sqrt() const;
  GFElement pow(uint64_t e) const { return GFElement(ctx().pow(v, e), ctx()); }

  bool operator==(const GFElement& o) const { return v == o.v && F == o.F; }
  bool operator!=(const GFElement& o) const { return !(*this == o); }
};

}  // namespace k3m
