// plane.cpp — polynomial-coordinate points and the fixed enumeration of the
// projective plane over F4.
#include "k3moduli/plane.hpp"

namespace k3m {

PolyPoint::PolyPoint(UniPoly a, UniPoly b, UniPoly c)
    : x{std::move(a), std::move(b), std::move(c)} {
  if (x[0].is_zero() && x[1].is_zero() && x[2].is_zero())
    raise(ErrorCode::ZERO_INPUT, "polynomial point with all coordinates zero");
  UniPoly g = gcd(gcd(x[0], x[1]), x[2]);
  if (g.deg() > 0)
    for (auto& xi : x) xi = exact_div(xi, g);
  for (const auto& xi : x) {
    if (!xi.is_zero()) {
      F4 s = xi.lead().inverse();
      for (auto& xj : x) xj = xj.scaled(s);
      break;
    }
  }
}

PPoint<RatFun> PolyPoint::as_ratfun() const {
  return PPoint<RatFun>(RatFun::from_poly(x[0]), RatFun::from_poly(x[1]),
                        RatFun::from_poly(x[2]));
}

PolyPoint PolyPoint::from_ratfun(const PPoint<RatFun>& p) {
  UniPoly d = p.x[0].den * p.x[1].den * p.x[2].den;
  std::array<UniPoly, 3> c;
  for (size_t i = 0; i < 3; ++i) {
    RatFun cleared = p.x[i] * RatFun::from_poly(d);
    if (!cleared.is_poly())
      raise(ErrorCode::BAD_INPUT, "clearing denominators left a proper fraction");
    c[i] = cleared.num;  // canonical denominator of a polynomial is exactly 1
  }
  return PolyPoint(c[0], c[1], c[2]);
}

PPoint<GFElement> PolyPoint::at(const GFElement& alpha) const {
  return PPoint<GFElement>(eval_at(x[0], alpha), eval_at(x[1], alpha), eval_at(x[2], alpha));
}

PPoint<F4> PolyPoint::at(F4 alpha) const {
  return PPoint<F4>(eval_at(x[0], alpha), eval_at(x[1], alpha), eval_at(x[2], alpha));
}

std::vector<PPoint<F4>> p2f4_points() {
  std::vector<PPoint<F4>> pts;
  pts.reserve(21);
  for (uint8_t b = 0; b < 4; ++b)
    for (uint8_t c = 0; c < 4; ++c) pts.emplace_back(F4::one(), F4(b), F4(c));
  for (uint8_t c = 0; c < 4; ++c) pts.emplace_back(F4::zero(), F4::one(), F4(c));
  pts.emplace_back(F4::zero(), F4::zero(), F4::one());
  return pts;
}

std::vector<Line<F4>> p2f4_lines() {
  std::vector<Line<F4>> ls;
  ls.reserve(21);
  for (uint8_t b = 0; b < 4; ++b)
    for (uint8_t c = 0; c < 4; ++c) ls.emplace_back(F4::one(), F4(b), F4(c));
  for (uint8_t c = 0; c < 4; ++c) ls.emplace_back(F4::zero(), F4::one(), F4(c));
  ls.emplace_back(F4::zero(), F4::zero(), F4::one());
  return ls;
}

}  // namespace k3m
