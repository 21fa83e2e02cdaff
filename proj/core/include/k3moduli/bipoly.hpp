// bipoly.hpp — sparse bivariate polynomials in the variables J (source) and
// J' (target) used for correspondence curves.
//
// Two coefficient domains are provided:
//   BiPoly  — F2 coefficients, stored as a sorted set of exponent pairs with
//             XOR insertion semantics.  This is the public curve type.
//   BiPoly4 — F4 coefficients, used transiently inside eliminations whose
//             inputs involve w; results descend to BiPoly (up to a global F4
//             scalar) or the elimination is rejected.
//
// The monomial order everywhere is graded lexicographic with J before J'.
// The canonical form of a curve is: no monomial factor J^a J'^b, no content in
// either single variable, and squarefree.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "f2poly.hpp"
#include "f4.hpp"
#include "upoly.hpp"

namespace k3m {

// Packed exponent pair: J-degree in the high half, J'-degree in the low half.
using Mono2 = uint32_t;
constexpr Mono2 make_mono(unsigned a, unsigned b) { return (a << 16) | b; }
constexpr unsigned mono_a(Mono2 m) { return m >> 16; }
constexpr unsigned mono_b(Mono2 m) { return m & 0xffff; }

// Graded lex, J first: higher total degree wins, ties broken by J-degree.
inline bool mono_less(Mono2 x, Mono2 y) {
  unsigned tx = mono_a(x) + mono_b(x), ty = mono_a(y) + mono_b(y);
  if (tx != ty) return tx < ty;
  return mono_a(x) < mono_a(y);
}

class BiPoly {
 public:
  BiPoly() = default;
  static BiPoly zero() { return BiPoly(); }
  static BiPoly one() { return monomial(0, 0); }
  static BiPoly monomial(unsigned a, unsigned b);
  static BiPoly var_j() { return monomial(1, 0); }
  static BiPoly var_jp() { return monomial(0, 1); }

  bool is_zero() const { return t_.empty(); }
  bool is_one() const { return t_.size() == 1 && t_[0] == 0; }
  size_t terms() const { return t_.size(); }
  const std::vector<Mono2>& monos() const { return t_; }
  void toggle(unsigned a, unsigned b);  // XOR the monomial J^a J'^b in or out
  bool has(unsigned a, unsigned b) const;
  int deg_j() const;
  int deg_jp() const;
  Mono2 lead() const;  // max in graded-lex order; ZERO_INPUT on zero

  bool operator==(const BiPoly& o) const { return t_ == o.t_; }
  bool operator!=(const BiPoly& o) const { return !(*this == o); }
  bool operator<(const BiPoly& o) const { return t_ < o.t_; }  // for containers

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly& operator+=(const BiPoly& b) { *this = *this + b; return *this; }
  BiPoly& operator*=(const BiPoly& b) { *this = *this * b; return *this; }

  // Swap the roles of J and J'.
  BiPoly transposed() const;

  // Characteristic-2 partial derivatives.
  BiPoly derivative_j() const;
  BiPoly derivative_jp() const;

  // Greedy leading-term division.  divides() decides exact divisibility; the
  // quotient is returned through *quotient when requested.
  bool divides_into(const BiPoly& divisor, BiPoly* quotient) const;
  friend BiPoly exact_div(const BiPoly& a, const BiPoly& b);

  std::string str() const;  // e.g. "J^3*J'^2+J*J'+1"

 private:
  std::vector<Mono2> t_;  // sorted ascending by packed value (canonical storage)
};

BiPoly parse_bipoly(const std::string& text);

// Views for coefficient-wise work: coefficient i is the F2Poly in the other
// variable of the J^i (resp. J'^i) slice.
UPoly<F2Poly> rows_in_j(const BiPoly& f);   // polynomial in J over F2[J']
UPoly<F2Poly> rows_in_jp(const BiPoly& f);  // polynomial in J' over F2[J]
BiPoly from_rows_in_j(const UPoly<F2Poly>& f);
BiPoly from_rows_in_jp(const UPoly<F2Poly>& f);

// Multivariate gcd via content / primitive-part recursion with a primitive
// pseudo-remainder sequence.
BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b);

// Product of the distinct irreducible factors.
BiPoly bipoly_squarefree(const BiPoly& f);

// Canonical curve form: strip monomial factors, strip single-variable
// contents, take the squarefree part.
BiPoly canonicalize_curve(const BiPoly& f);

// ---------------------------------------------------------------------------

class BiPoly4 {
 public:
  BiPoly4() = default;
  static BiPoly4 zero() { return BiPoly4(); }
  static BiPoly4 one() { return monomial(F4::one(), 0, 0); }
  static BiPoly4 monomial(F4 c, unsigned a, unsigned b);
  static BiPoly4 lift(const BiPoly& f);

  bool is_zero() const { return t_.empty(); }
  void add_term(F4 c, unsigned a, unsigned b);
  const std::map<Mono2, F4>& terms() const { return t_; }
  Mono2 lead() const;
  F4 lead_coeff() const;

  bool operator==(const BiPoly4& o) const { return t_ == o.t_; }

  friend BiPoly4 operator+(const BiPoly4& a, const BiPoly4& b);
  friend BiPoly4 operator*(const BiPoly4& a, const BiPoly4& b);

  BiPoly4 scaled(F4 s) const;
  friend BiPoly4 exact_div(const BiPoly4& a, const BiPoly4& b);

  // Strip the common monomial factor and both single-variable contents
  // (computed over F4), then try to scale into F2.  BAD_INPUT if no scalar
  // multiple has all coefficients in {0,1}.
  BiPoly descend_to_f2() const;

  std::string str() const;

 private:
  std::map<Mono2, F4> t_;
};

// Bareiss determinant of a square matrix over a ring with exact division.
// Row swaps carry no sign because every ring here has characteristic 2.
template <class R>
R bareiss_determinant(std::vector<std::vector<R>> m) {
  size_t n = m.size();
  if (n == 0) raise(ErrorCode::BAD_INPUT, "determinant of empty matrix");
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return R{};  // a zero column below the pivot: determinant 0
      std::swap(m[k], m[r]);
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        R num = m[i][j] * m[k][k] + m[i][k] * m[k][j];  // char 2: + is -
        m[i][j] = (k == 0) ? num : exact_div(num, m[k - 1][k - 1]);
      }
      m[i][k] = R{};
    }
  }
  return m[n - 1][n - 1];
}

// Sylvester resultant over a polynomial coefficient ring, eliminating the
// outer variable of f and g.
template <class R>
R sylvester_resultant(const UPoly<R>& f, const UPoly<R>& g) {
  if (f.is_zero() || g.is_zero()) return R{};
  size_t m = size_t(f.deg()), n = size_t(g.deg());
  if (m + n == 0) raise(ErrorCode::BAD_INPUT, "resultant of two constants");
  std::vector<std::vector<R>> s(m + n, std::vector<R>(m + n, R{}));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k <= m; ++k) s[i][i + k] = f.coeff(m - k);
  for (size_t i = 0; i < m; ++i)
    for (size_t k = 0; k <= n; ++k) s[n + i][i + k] = g.coeff(n - k);
  return bareiss_determinant(std::move(s));
}

}  // namespace k3m
