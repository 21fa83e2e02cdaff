// tripoly.hpp — trivariate polynomials in X, Y, Z with coefficients in F4[l],
// used for the parametric sextic forms, their partial derivatives, and the
// quintic linear systems.
//
// Terms live in a map keyed by exponent triples, so the zero polynomial is an
// empty map and equality is structural.  All forms handled here are
// homogeneous; is_homogeneous() lets callers assert that.
#pragma once

#include <array>
#include <map>
#include <string>

#include "gf.hpp"
#include "ratfun.hpp"

namespace k3m {

using Mono3 = std::array<int, 3>;  // exponents of X, Y, Z

class TriPoly {
 public:
  TriPoly() = default;
  static TriPoly zero() { return TriPoly(); }
  static TriPoly term(const UniPoly& u, int a, int b, int c);
  static TriPoly variable(int axis);  // 0 -> X, 1 -> Y, 2 -> Z

  bool is_zero() const { return t_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;
  const std::map<Mono3, UniPoly>& terms() const { return t_; }
  UniPoly coeff(int a, int b, int c) const;
  void add_term(const Mono3& m, const UniPoly& u);  // accumulates, erases cancellations

  bool operator==(const TriPoly& o) const { return t_ == o.t_; }
  bool operator!=(const TriPoly& o) const { return !(*this == o); }

  friend TriPoly operator+(const TriPoly& a, const TriPoly& b);
  friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
  TriPoly scaled(const UniPoly& u) const;

  // Characteristic-2 partial derivatives: only odd exponents survive.
  TriPoly dX() const { return derivative(0); }
  TriPoly dY() const { return derivative(1); }
  TriPoly dZ() const { return derivative(2); }

  // Evaluation at a point.  Coordinates in F4[l] stay symbolic; GF(2^m)
  // coordinates need the value of l; RatFun coordinates keep l symbolic.
  UniPoly eval(const std::array<UniPoly, 3>& p) const;
  GFElement eval_at(const std::array<GFElement, 3>& p, const GFElement& lambda) const;
  F4 eval_at(const std::array<F4, 3>& p, F4 lambda) const;
  RatFun eval_symbolic(const std::array<RatFun, 3>& p) const;

  std::string str(char var = 'l') const;

 private:
  TriPoly derivative(int axis) const;
  std::map<Mono3, UniPoly> t_;
};

// Substitute a fixed F4 value for l in every coefficient.
TriPoly tri_specialize(const TriPoly& f, F4 lambda);

// Whether two (or three) nonzero homogeneous polynomials have constant gcd
// over F4(l).
// Decided by stripping common variable factors and running a primitive
// pseudo-remainder sequence on the dehomogenizations.
bool tri_coprime(const TriPoly& f, const TriPoly& g);
bool tri_coprime(const TriPoly& f, const TriPoly& g, const TriPoly& h);

// All exponent triples of one total degree, in decreasing lexicographic order
// with X > Y > Z (so position 0 is X^d).  Fixes the column order of the
// linear-system matrices built over these monomials.
std::vector<Mono3> monomials_of_degree(int d);

}  // namespace k3m
