// plane.hpp — projective plane geometry over an arbitrary field of
// characteristic 2: points, lines, conics, tangency, and homographies from
// five-point frames.
//
// Points and homographies are kept in a canonical scaling (first nonzero
// coordinate 1), so == is projective equality.  A conic is
// A X^2 + B Y^2 + C Z^2 + D XY + E YZ + F ZX with coefficients (A,..,F);
// it is singular exactly when A E^2 + B F^2 + C D^2 + D E F = 0.  In
// characteristic 2 a line meets a conic doubly exactly when the polar form
// vanishes on the line, which is linear in (D,E,F); both facts are exploited
// throughout.
#pragma once

#include <array>
#include <vector>

#include "errors.hpp"
#include "f4.hpp"
#include "linalg.hpp"
#include "ratfun.hpp"

namespace k3m {

// Derive the constants 0 and 1 of K from any nonzero element (works in every
// field used here, including context-carrying ones).
template <class K>
std::pair<K, K> zero_one_from(const K& nonzero) {
  return {nonzero + nonzero, nonzero * nonzero.inverse()};
}

template <class K>
struct PPoint {
  std::array<K, 3> x;

  PPoint() = default;
  PPoint(K a, K b, K c) : x{a, b, c} { canonicalize(); }

  void canonicalize() {
    for (auto& xi : x) {
      if (!xi.is_zero()) {
        K inv = xi.inverse();
        for (auto& xj : x) xj = xj * inv;
        return;
      }
    }
    raise(ErrorCode::ZERO_INPUT, "projective point with all coordinates zero");
  }

  K first_nonzero() const {
    for (const auto& xi : x)
      if (!xi.is_zero()) return xi;
    raise(ErrorCode::ZERO_INPUT, "zero projective point");
  }

  bool operator==(const PPoint& o) const { return x == o.x; }
  bool operator!=(const PPoint& o) const { return !(*this == o); }
};

template <class K>
bool collinear(const PPoint<K>& p, const PPoint<K>& q, const PPoint<K>& r) {
  return det3(p.x[0], p.x[1], p.x[2], q.x[0], q.x[1], q.x[2], r.x[0], r.x[1], r.x[2]).is_zero();
}

template <class K>
struct Line {
  std::array<K, 3> c;  // c0 X + c1 Y + c2 Z = 0, first nonzero scaled to 1

  Line() = default;
  Line(K a, K b, K cc) : c{a, b, cc} { canonicalize(); }

  void canonicalize() {
    for (auto& ci : c) {
      if (!ci.is_zero()) {
        K inv = ci.inverse();
        for (auto& cj : c) cj = cj * inv;
        return;
      }
    }
    raise(ErrorCode::ZERO_INPUT, "line with all coefficients zero");
  }

  static Line through(const PPoint<K>& p, const PPoint<K>& q) {
    // Cross product; degenerate when p == q.
    K a = p.x[1] * q.x[2] + p.x[2] * q.x[1];
    K b = p.x[2] * q.x[0] + p.x[0] * q.x[2];
    K cc = p.x[0] * q.x[1] + p.x[1] * q.x[0];
    if (a.is_zero() && b.is_zero() && cc.is_zero())
      raise(ErrorCode::ZERO_INPUT, "line through two equal points");
    return Line(a, b, cc);
  }

  bool contains(const PPoint<K>& p) const {
    return (c[0] * p.x[0] + c[1] * p.x[1] + c[2] * p.x[2]).is_zero();
  }

  // Two distinct points spanning the line.
  std::pair<PPoint<K>, PPoint<K>> two_points() const {
    auto [zero, one] = zero_one_from(c[0].is_zero() ? (c[1].is_zero() ? c[2] : c[1]) : c[0]);
    Mat<K> m(1, 3, zero, one);
    m.at(0, 0) = c[0];
    m.at(0, 1) = c[1];
    m.at(0, 2) = c[2];
    auto basis = nullspace(m);
    if (basis.size() != 2)
      raise(ErrorCode::ZERO_INPUT, "line does not span a pencil of points");
    return {PPoint<K>(basis[0][0], basis[0][1], basis[0][2]),
            PPoint<K>(basis[1][0], basis[1][1], basis[1][2])};
  }

  bool operator==(const Line& o) const { return c == o.c; }
  bool operator!=(const Line& o) const { return !(*this == o); }
};

template <class K>
struct Conic {
  std::array<K, 6> c;  // A, B, C, D, E, F

  Conic() = default;
  explicit Conic(std::array<K, 6> coeffs) : c(coeffs) { canonicalize(); }

  void canonicalize() {
    for (auto& ci : c) {
      if (!ci.is_zero()) {
        K inv = ci.inverse();
        for (auto& cj : c) cj = cj * inv;
        return;
      }
    }
    raise(ErrorCode::ZERO_INPUT, "conic with all coefficients zero");
  }

  K eval(const PPoint<K>& p) const {
    const K &x = p.x[0], &y = p.x[1], &z = p.x[2];
    return c[0] * x * x + c[1] * y * y + c[2] * z * z + c[3] * x * y + c[4] * y * z +
           c[5] * z * x;
  }
  bool contains(const PPoint<K>& p) const { return eval(p).is_zero(); }

  // Polar bilinear form; the square terms drop out in characteristic 2.
  K polar(const PPoint<K>& p, const PPoint<K>& q) const {
    const K &x1 = p.x[0], &y1 = p.x[1], &z1 = p.x[2];
    const K &x2 = q.x[0], &y2 = q.x[1], &z2 = q.x[2];
    return c[3] * (x1 * y2 + x2 * y1) + c[4] * (y1 * z2 + y2 * z1) + c[5] * (z1 * x2 + z2 * x1);
  }

  bool is_singular() const {
    const K &A = c[0], &B = c[1], &C = c[2], &D = c[3], &E = c[4], &F = c[5];
    return (A * E * E + B * F * F + C * D * D + D * E * F).is_zero();
  }

  bool operator==(const Conic& o) const { return c == o.c; }
  bool operator!=(const Conic& o) const { return !(*this == o); }
};

// Basis of the linear system of conics through the given points (coefficient
// vectors, not canonicalized).
template <class K>
std::vector<std::array<K, 6>> conic_space(const std::vector<PPoint<K>>& pts) {
  if (pts.empty()) raise(ErrorCode::BAD_INPUT, "conic space needs at least one point");
  auto [zero, one] = zero_one_from(pts[0].first_nonzero());
  Mat<K> m(pts.size(), 6, zero, one);
  for (size_t i = 0; i < pts.size(); ++i) {
    const K &x = pts[i].x[0], &y = pts[i].x[1], &z = pts[i].x[2];
    m.at(i, 0) = x * x;
    m.at(i, 1) = y * y;
    m.at(i, 2) = z * z;
    m.at(i, 3) = x * y;
    m.at(i, 4) = y * z;
    m.at(i, 5) = z * x;
  }
  std::vector<std::array<K, 6>> out;
  for (auto& v : nullspace(m)) out.push_back({v[0], v[1], v[2], v[3], v[4], v[5]});
  return out;
}

// A line is tangent to a nonsingular conic when they meet in one double
// point: the polar form vanishes on the line.  LINE_IN_CONIC if the line lies
// entirely in (a singular) conic.
template <class K>
bool line_conic_tangent(const Line<K>& l, const Conic<K>& q) {
  auto [p, r] = l.two_points();
  K a = q.eval(r), b = q.polar(p, r), cc = q.eval(p);
  if (a.is_zero() && b.is_zero() && cc.is_zero())
    raise(ErrorCode::LINE_IN_CONIC, "tangency query for a line inside the conic");
  return b.is_zero();
}

template <class K>
struct Pgl3 {
  std::array<K, 9> m;  // row-major, first nonzero entry scaled to 1

  Pgl3() = default;
  explicit Pgl3(std::array<K, 9> entries) : m(entries) { canonicalize(); }

  void canonicalize() {
    for (auto& e : m) {
      if (!e.is_zero()) {
        K inv = e.inverse();
        for (auto& f : m) f = f * inv;
        return;
      }
    }
    raise(ErrorCode::ZERO_INPUT, "zero matrix is not a homography");
  }

  K det() const {
    return det3(m[0], m[1], m[2], m[3], m[4], m[5], m[6], m[7], m[8]);
  }

  PPoint<K> apply(const PPoint<K>& p) const {
    return PPoint<K>(m[0] * p.x[0] + m[1] * p.x[1] + m[2] * p.x[2],
                     m[3] * p.x[0] + m[4] * p.x[1] + m[5] * p.x[2],
                     m[6] * p.x[0] + m[7] * p.x[1] + m[8] * p.x[2]);
  }

  friend Pgl3 operator*(const Pgl3& a, const Pgl3& b) {  // apply b first
    std::array<K, 9> r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        r[size_t(3 * i + j)] = a.m[size_t(3 * i)] * b.m[size_t(j)] +
                               a.m[size_t(3 * i + 1)] * b.m[size_t(3 + j)] +
                               a.m[size_t(3 * i + 2)] * b.m[size_t(6 + j)];
    return Pgl3(r);
  }

  Pgl3 inverse() const {
    // Adjugate; characteristic 2 removes the sign pattern.
    const std::array<K, 9>& a = m;
    std::array<K, 9> r = {
        a[4] * a[8] + a[5] * a[7], a[2] * a[7] + a[1] * a[8], a[1] * a[5] + a[2] * a[4],
        a[5] * a[6] + a[3] * a[8], a[0] * a[8] + a[2] * a[6], a[2] * a[3] + a[0] * a[5],
        a[3] * a[7] + a[4] * a[6], a[1] * a[6] + a[0] * a[7], a[0] * a[4] + a[1] * a[3]};
    if (det().is_zero()) raise(ErrorCode::ZERO_INPUT, "inverse of singular homography");
    return Pgl3(r);
  }

  bool operator==(const Pgl3& o) const { return m == o.m; }
  bool operator!=(const Pgl3& o) const { return !(*this == o); }
};

// The homography g with g(src[i]) ~ dst[i] for n >= 4 point pairs, when it is
// unique.  Unknowns are the nine entries of g and n scalars mu_i with
// g . src[i] = mu_i dst[i]; the 3n x (9+n) system must have a one-dimensional
// null space (NO_SOLUTION / NOT_UNIQUE otherwise).  This handles frames whose
// points contain collinear triples, as long as they still pin g down.
template <class K>
Pgl3<K> pgl3_from_frame(const std::vector<PPoint<K>>& src,
                        const std::vector<PPoint<K>>& dst) {
  size_t n = src.size();
  if (n < 4 || dst.size() != n)
    raise(ErrorCode::BAD_INPUT, "frame needs at least four matched point pairs");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (src[i] == src[j] || dst[i] == dst[j])
        raise(ErrorCode::BAD_INPUT, "frame with a repeated point");
  auto [zero, one] = zero_one_from(src[0].first_nonzero());
  Mat<K> m(3 * n, 9 + n, zero, one);
  for (size_t i = 0; i < n; ++i) {
    for (size_t r = 0; r < 3; ++r) {
      // Row for coordinate r of point i: sum_c g[r][c] src[i][c] + mu_i dst[i][r] = 0.
      for (size_t c = 0; c < 3; ++c) m.at(3 * i + r, 3 * r + c) = src[i].x[c];
      m.at(3 * i + r, 9 + i) = dst[i].x[r];  // char 2: sign is irrelevant
    }
  }
  auto basis = nullspace(m);
  if (basis.empty())
    raise(ErrorCode::NO_SOLUTION, "no homography takes the source frame to the target frame");
  if (basis.size() > 1)
    raise(ErrorCode::NOT_UNIQUE, "frame does not determine the homography");
  const auto& v = basis[0];
  for (size_t i = 0; i < n; ++i)
    if (v[9 + i].is_zero())
      raise(ErrorCode::NO_SOLUTION, "frame forces a singular image");
  Pgl3<K> g({v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8]});
  if (g.det().is_zero())
    raise(ErrorCode::NO_SOLUTION, "frame forces a singular homography");
  return g;
}

// ---------------------------------------------------------------------------
// Points with polynomial coordinates (entries in F4[l], kept coprime, leading
// coefficient of the first nonzero coordinate 1).  These store the parametric
// configurations exactly without rational-function blowup.
struct PolyPoint {
  std::array<UniPoly, 3> x;

  PolyPoint() = default;
  PolyPoint(UniPoly a, UniPoly b, UniPoly c);

  PPoint<RatFun> as_ratfun() const;
  static PolyPoint from_ratfun(const PPoint<RatFun>& p);

  PPoint<GFElement> at(const GFElement& alpha) const;  // specialize l -> alpha
  PPoint<F4> at(F4 alpha) const;

  bool operator==(const PolyPoint& o) const { return x == o.x; }
  bool operator!=(const PolyPoint& o) const { return !(*this == o); }
};

// Fixed enumeration of the 21 points and 21 lines of the projective plane
// over F4 (order: [1,b,c] by b then c, then [0,1,c], then [0,0,1]).
std::vector<PPoint<F4>> p2f4_points();
std::vector<Line<F4>> p2f4_lines();

}  // namespace k3m
