// unipoly.hpp — polynomials in one variable over F4 (the parameter line), with
// parsing/printing, characteristic-2 squarefree part, and evaluation into any
// GF(2^m) through the fixed F4 embedding.
#pragma once

#include <string>

#include "f4.hpp"
#include "gf.hpp"
#include "upoly.hpp"

namespace k3m {

using UniPoly = UPoly<F4>;

inline UniPoly uni_zero() { return UniPoly(); }
inline UniPoly uni_one() { return UniPoly::constant(F4::one()); }
inline UniPoly uni_const(F4 a) { return UniPoly::constant(a); }
inline UniPoly uni_x() { return UniPoly::monomial(F4::one(), 1); }

// Parse an expression in one variable (default name "l") with F4 scalars
// written 0, 1, w.  Grammar: sums of products of powers, with parentheses;
// e.g. "(w+1)*l^2 + w*l + 1".
UniPoly parse_unipoly(const std::string& text, char var = 'l');

// Print with descending exponents, compound coefficients parenthesized,
// e.g. "(w+1)*l^2+w*l+1".  The zero polynomial prints as "0".
std::string to_string(const UniPoly& p, char var = 'l');

// Exact square root of a polynomial all of whose exponents are even
// (raises BAD_INPUT otherwise).  Uses that squaring is bijective on F4.
UniPoly poly_sqrt(const UniPoly& p);

// Product of the distinct irreducible factors (characteristic-2 algorithm:
// split off odd-multiplicity factors via f/gcd(f,f'), strip them from the
// gcd, take the square root of the even part, recurse).
UniPoly squarefree_part(const UniPoly& p);

// Evaluate at a point of GF(2^m), embedding the F4 coefficients.
GFElement eval_at(const UniPoly& p, const GFElement& x);

// Evaluate at an F4 scalar.
F4 eval_at(const UniPoly& p, F4 x);

// All roots in GF(2^m) (brute-force scan; fields here have at most 4096
// elements).
std::vector<GFElement> roots_over(const UniPoly& p, const GFContext& ctx);

}  // namespace k3m
