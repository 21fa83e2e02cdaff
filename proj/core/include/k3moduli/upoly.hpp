// upoly.hpp — dense univariate polynomials over a characteristic-2 coefficient
// ring K (generic template).
//
// Coefficients are stored in ascending order and kept trimmed.  Division and
// gcd require K to be a field; arithmetic alone works over any ring, so
// UPoly<UPoly<K>> is a valid bivariate representation and is what the
// multivariate gcd routines operate on (content / primitive-part recursion
// with a primitive pseudo-remainder sequence).
#pragma once

#include <utility>
#include <vector>

#include "errors.hpp"

namespace k3m {

template <class K>
struct UPoly {
  std::vector<K> c;  // c[i] = coefficient of x^i; invariant: no trailing zeros

  UPoly() = default;
  explicit UPoly(std::vector<K> coeffs) : c(std::move(coeffs)) { trim(); }
  static UPoly zero() { return UPoly(); }
  static UPoly constant(K a) { return UPoly(std::vector<K>{a}); }
  static UPoly monomial(K a, size_t e) {
    std::vector<K> v(e + 1);
    v[e] = a;
    return UPoly(std::move(v));
  }

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int deg() const { return int(c.size()) - 1; }  // deg(0) = -1
  K lead() const {
    if (is_zero()) raise(ErrorCode::ZERO_INPUT, "leading coefficient of zero polynomial");
    return c.back();
  }
  K coeff(size_t i) const { return i < c.size() ? c[i] : K{}; }

  bool operator==(const UPoly& o) const { return c == o.c; }
  bool operator!=(const UPoly& o) const { return !(*this == o); }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<K> r(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.size(); ++i) {
      if (i < a.c.size() && i < b.c.size()) r[i] = a.c[i] + b.c[i];
      else if (i < a.c.size()) r[i] = a.c[i];
      else r[i] = b.c[i];
    }
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + b; }  // char 2

  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<K> r(a.c.size() + b.c.size() - 1);
    for (size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i].is_zero()) continue;
      for (size_t j = 0; j < b.c.size(); ++j) r[i + j] = r[i + j] + a.c[i] * b.c[j];
    }
    return UPoly(std::move(r));
  }
  UPoly& operator+=(const UPoly& b) { *this = *this + b; return *this; }
  UPoly& operator*=(const UPoly& b) { *this = *this * b; return *this; }

  UPoly scaled(K a) const {
    UPoly r = *this;
    for (auto& x : r.c) x = x * a;
    r.trim();
    return r;
  }
  UPoly shifted(size_t e) const {  // multiply by x^e
    if (is_zero()) return UPoly();
    std::vector<K> r(c.size() + e);
    for (size_t i = 0; i < c.size(); ++i) r[i + e] = c[i];
    return UPoly(std::move(r));
  }

  // Characteristic-2 formal derivative: even-exponent terms vanish.
  UPoly derivative() const {
    if (c.size() <= 1) return UPoly();
    std::vector<K> r(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i)
      if (i & 1) r[i - 1] = c[i];
    return UPoly(std::move(r));
  }

  UPoly pow(unsigned e) const {
    UPoly r = UPoly::constant_one_like(*this);
    UPoly b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  // Evaluate with Horner's rule at a point of any ring E, given a coefficient
  // lift K -> E.
  template <class E, class Lift>
  E eval_with(const E& x, Lift lift) const {
    E r = lift(K{});  // zero of E
    for (size_t i = c.size(); i-- > 0;) r = r * x + lift(c[i]);
    return r;
  }
  K eval(const K& x) const {
    return eval_with<K>(x, [](const K& a) { return a; });
  }

 private:
  static UPoly constant_one_like(const UPoly& p) {
    // One of K obtained without a context: all coefficient types used here
    // construct their multiplicative identity from an existing value.
    if (!p.is_zero()) {
      K lead = p.c.back();
      return UPoly::constant(lead * lead.inverse());
    }
    raise(ErrorCode::ZERO_INPUT, "pow of zero polynomial needs nonzero base for identity");
  }
};

// Field-coefficient division with remainder.
template <class K>
std::pair<UPoly<K>, UPoly<K>> divmod(const UPoly<K>& a, const UPoly<K>& b) {
  if (b.is_zero()) raise(ErrorCode::DIVISION_BY_ZERO, "polynomial division by zero");
  UPoly<K> r = a, q;
  K binv = b.lead().inverse();
  if (a.deg() >= b.deg()) q.c.resize(a.deg() - b.deg() + 1);
  while (!r.is_zero() && r.deg() >= b.deg()) {
    K f = r.lead() * binv;
    size_t e = size_t(r.deg() - b.deg());
    q.c[e] = q.c[e] + f;
    r = r + b.scaled(f).shifted(e);  // char 2: subtraction = addition
  }
  q.trim();
  return {q, r};
}

template <class K>
UPoly<K> operator/(const UPoly<K>& a, const UPoly<K>& b) { return divmod(a, b).first; }
template <class K>
UPoly<K> operator%(const UPoly<K>& a, const UPoly<K>& b) { return divmod(a, b).second; }

// Exact division; raises BAD_INPUT if b does not divide a.
template <class K>
UPoly<K> exact_div(const UPoly<K>& a, const UPoly<K>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) raise(ErrorCode::BAD_INPUT, "inexact polynomial division");
  return q;
}

// Monic gcd over a field.
template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
  while (!b.is_zero()) {
    UPoly<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(a.lead().inverse());
}

// Pseudo-remainder over a ring: lead(b)^(deg a - deg b + 1) * a = q*b + prem.
template <class R>
UPoly<R> prem(UPoly<R> a, const UPoly<R>& b) {
  if (b.is_zero()) raise(ErrorCode::DIVISION_BY_ZERO, "pseudo-remainder by zero");
  int k = a.deg() - b.deg() + 1;
  if (k <= 0) return a;
  UPoly<R> lb = UPoly<R>::constant(b.lead());
  while (!a.is_zero() && a.deg() >= b.deg()) {
    size_t e = size_t(a.deg() - b.deg());
    UPoly<R> t = b.scaled(a.lead()).shifted(e);
    a = (a * lb) + t;
    --k;
  }
  // Keep the classic normalization so exact divisibility statements hold.
  while (k-- > 0) a = a * lb;
  return a;
}

}  // namespace k3m
