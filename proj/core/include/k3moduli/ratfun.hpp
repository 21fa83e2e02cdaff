// ratfun.hpp — the rational function field F4(l), plus fractional-linear maps.
//
// A RatFun is kept in canonical form: numerator and denominator coprime, the
// denominator monic, and zero represented as 0/1.  With that normalization,
// operator== is exact equality of rational functions, and RatFun satisfies the
// field interface used by the generic linear algebra.
#pragma once

#include <string>

#include "unipoly.hpp"

namespace k3m {

struct RatFun {
  UniPoly num, den;

  RatFun() : num(), den(uni_one()) {}
  RatFun(UniPoly n, UniPoly d) : num(std::move(n)), den(std::move(d)) { canonicalize(); }

  static RatFun from_poly(UniPoly p) { return RatFun(std::move(p), uni_one()); }
  static RatFun constant(F4 a) { return from_poly(uni_const(a)); }
  static RatFun zero() { return RatFun(); }
  static RatFun one() { return constant(F4::one()); }
  static RatFun lambda() { return from_poly(uni_x()); }

  bool is_zero() const { return num.is_zero(); }
  bool is_poly() const { return den.deg() == 0; }

  void canonicalize() {
    if (den.is_zero()) raise(ErrorCode::DIVISION_BY_ZERO, "rational function with zero denominator");
    if (num.is_zero()) { den = uni_one(); return; }
    UniPoly g = gcd(num, den);
    if (g.deg() > 0) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
    F4 s = den.lead().inverse();
    num = num.scaled(s);
    den = den.scaled(s);
  }

  bool operator==(const RatFun& o) const { return num == o.num && den == o.den; }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + b; }
  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num * b.num, a.den * b.den);
  }
  friend RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) raise(ErrorCode::DIVISION_BY_ZERO, "division by zero rational function");
    return RatFun(a.num * b.den, a.den * b.num);
  }
  RatFun& operator+=(const RatFun& b) { *this = *this + b; return *this; }
  RatFun& operator*=(const RatFun& b) { *this = *this * b; return *this; }

  RatFun inverse() const {
    if (is_zero()) raise(ErrorCode::DIVISION_BY_ZERO, "inverse of zero rational function");
    return RatFun(den, num);
  }

  // Evaluate at a field point; POLE if the denominator vanishes there.
  GFElement eval(const GFElement& x) const {
    GFElement d = eval_at(den, x);
    if (d.is_zero()) raise(ErrorCode::POLE, "rational function evaluated at a pole");
    return eval_at(num, x) / d;
  }

  std::string str(char var = 'l') const;
};

// Substitute g into f: (f o g)(l) = f(g(l)).  Computed by homogenizing the
// numerator and denominator of f with respect to g = p/q.
RatFun compose(const RatFun& f, const RatFun& g);

// Parse "num" or "num/den" where both parts follow the UniPoly grammar; a
// parenthesized denominator "( ... )" is allowed.
RatFun parse_ratfun(const std::string& text, char var = 'l');

// A fractional-linear substitution l -> (a*l + b)/(c*l + d) with F4 entries
// and a*d + b*c != 0.
struct FracLinear {
  F4 a, b, c, d;

  FracLinear() : a(F4::one()), b(), c(), d(F4::one()) {}
  FracLinear(F4 a_, F4 b_, F4 c_, F4 d_) : a(a_), b(b_), c(c_), d(d_) {
    if ((a * d + b * c).is_zero())
      raise(ErrorCode::BAD_INPUT, "degenerate fractional-linear map");
    normalize();
  }
  static FracLinear identity() { return FracLinear(); }

  // First nonzero of (a,b,c,d) scaled to 1, so equality is exact.
  void normalize() {
    F4 s = !a.is_zero() ? a : (!b.is_zero() ? b : (!c.is_zero() ? c : d));
    s = s.inverse();
    a = a * s; b = b * s; c = c * s; d = d * s;
  }
  bool operator==(const FracLinear&) const = default;

  RatFun as_ratfun() const {
    UniPoly n = uni_x().scaled(a) + uni_const(b);
    UniPoly m = uni_x().scaled(c) + uni_const(d);
    return RatFun(n, m);
  }
  // Composition (this after other): (this o other)(l) = this(other(l)).
  FracLinear after(const FracLinear& o) const {
    return FracLinear(a * o.a + b * o.c, a * o.b + b * o.d,
                      c * o.a + d * o.c, c * o.b + d * o.d);
  }
  FracLinear inverse() const { return FracLinear(d, b, c, a); }

  GFElement apply(const GFElement& x) const { return as_ratfun().eval(x); }
  F4 apply(F4 x) const {
    F4 dd = c * x + d;
    if (dd.is_zero()) raise(ErrorCode::POLE, "fractional-linear map evaluated at its pole");
    return (a * x + b) / dd;
  }
  std::string str(char var = 'l') const { return as_ratfun().str(var); }
};

// Recognize a rational function of the shape (a*l+b)/(c*l+d); BAD_INPUT if the
// degrees do not fit.
FracLinear as_frac_linear(const RatFun& f);

}  // namespace k3m
