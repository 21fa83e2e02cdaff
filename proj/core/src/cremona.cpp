// cremona.cpp — Cremona centers, the quintic system with double points,
// application of the map to symbolic configurations, correspondence
// derivation, and the Neron-Severi action.

#include "k3moduli/cremona.hpp"

#include <algorithm>
#include <map>

namespace k3m {

namespace {

struct WordBounds {
  std::vector<Word> linear, quadratic;
};

bool passes_bounds(const WordBounds& wb, Word c) {
  for (Word l : wb.linear)
    if (weight(c & l) > 2) return false;
  for (Word q : wb.quadratic)
    if (weight(c & q) > 4) return false;
  return true;
}

}  // namespace

bool is_center(const Code21& code, Word c) {
  if (weight(c) != 6) raise(ErrorCode::BAD_WEIGHT, "a center is a weight-6 word");
  auto cls = classify_words(code);
  return passes_bounds({cls.linear, cls.quadratic}, c);
}

std::vector<Word> enumerate_centers(const Code21& code) {
  auto cls = classify_words(code);
  WordBounds wb{cls.linear, cls.quadratic};
  std::vector<Word> centers;
  // All C(21,6) subsets, lexicographic.
  std::array<int, 6> idx;
  auto rec = [&](auto&& self, int pos, int start, Word acc) -> void {
    if (pos == 6) {
      if (passes_bounds(wb, acc)) centers.push_back(acc);
      return;
    }
    for (int v = start; v <= 21 - (6 - pos); ++v) {
      idx[size_t(pos)] = v;
      self(self, pos + 1, v + 1, acc | (Word(1) << v));
    }
  };
  rec(rec, 0, 0, 0);
  return centers;
}

// ---------------------------------------------------------------------------
// The quintic system.

namespace {

const std::vector<Mono3>& quintic_monomials() {
  static const std::vector<Mono3> m = monomials_of_degree(5);
  return m;
}

size_t quintic_index(const Mono3& m) {
  const auto& q5 = quintic_monomials();
  for (size_t i = 0; i < q5.size(); ++i)
    if (q5[i] == m) return i;
  raise(ErrorCode::BAD_INPUT, "not a degree-5 monomial");
}

RatFun lift_poly(const UniPoly& u) { return RatFun::from_poly(u); }

// Monomial value x^a y^b z^c at a point with polynomial coordinates.
RatFun monomial_at(const PolyPoint& p, const Mono3& m) {
  UniPoly v = uni_one();
  for (size_t i = 0; i < 3; ++i)
    for (int k = 0; k < m[size_t(i)]; ++k) v = v * p.x[i];
  return lift_poly(v);
}

}  // namespace

QuinticSystem quintic_system(const PolyConfig& cfg, Word center) {
  if (weight(center) != 6) raise(ErrorCode::BAD_WEIGHT, "a center is a weight-6 word");
  auto labels = indices_of(center);
  std::array<PPoint<RatFun>, 6> pts;
  for (size_t i = 0; i < 6; ++i) pts[i] = cfg[size_t(labels[i] - 1)].as_ratfun();
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = i + 1; j < 6; ++j)
      for (size_t k = j + 1; k < 6; ++k)
        if (collinear(pts[i], pts[j], pts[k]))
          raise(ErrorCode::DEGENERATE_CENTER, "three center points collinear");

  const auto& q5 = quintic_monomials();
  Mat<RatFun> m(18, q5.size(), RatFun::zero(), RatFun::one());
  for (size_t i = 0; i < 6; ++i) {
    const PolyPoint& p = cfg[size_t(labels[i] - 1)];
    // Chart: the first nonzero coordinate stays fixed; with odd degree the
    // Euler relation then makes these three rows equivalent to the vanishing
    // of all three partials at the point.
    size_t chart = p.x[0].is_zero() ? (p.x[1].is_zero() ? 2 : 1) : 0;
    std::array<size_t, 2> affine{};
    for (size_t v = 0, k = 0; v < 3; ++v)
      if (v != chart) affine[k++] = v;
    for (size_t col = 0; col < q5.size(); ++col) {
      const Mono3& mono = q5[col];
      m.at(3 * i, col) = monomial_at(p, mono);
      for (size_t d = 0; d < 2; ++d) {
        size_t v = affine[d];
        if (mono[v] % 2 == 0) continue;  // char 2
        Mono3 dm = mono;
        --dm[v];
        m.at(3 * i + 1 + d, col) = monomial_at(p, dm);
      }
    }
  }

  auto basis = nullspace(m);
  if (basis.size() != 3)
    raise(ErrorCode::DEGENERATE_CENTER,
          "quintic system has dimension " + std::to_string(basis.size()));
  // Canonical basis of the solution space: reduced echelon form over the
  // monomial columns, then reversed so F1 carries the smallest leading
  // monomial in the X > Y > Z order.
  Mat<RatFun> b(3, q5.size(), RatFun::zero(), RatFun::one());
  for (size_t r = 0; r < 3; ++r)
    for (size_t c = 0; c < q5.size(); ++c) b.at(r, c) = basis[r][c];
  rref(b);
  QuinticSystem qs;
  for (size_t i = 0; i < 3; ++i)
    for (size_t c = 0; c < q5.size(); ++c) qs.rows[i].push_back(b.at(2 - i, c));
  return qs;
}

TriPoly QuinticSystem::form(size_t i) const {
  const auto& row = rows.at(i);
  UniPoly den = uni_one();
  for (const RatFun& c : row)
    den = exact_div(den * c.den, gcd(den, c.den));
  std::vector<UniPoly> cleared(row.size());
  UniPoly content = uni_zero();
  for (size_t k = 0; k < row.size(); ++k) {
    cleared[k] = row[k].num * exact_div(den, row[k].den);
    content = gcd(content, cleared[k]);
  }
  const auto& q5 = quintic_monomials();
  TriPoly f;
  F4 scale = F4::zero();
  for (size_t k = 0; k < row.size(); ++k) {
    if (cleared[k].is_zero()) continue;
    UniPoly c = content.deg() >= 0 ? exact_div(cleared[k], content) : cleared[k];
    if (scale == F4::zero()) scale = c.lead().inverse();
    f.add_term(q5[k], c.scaled(scale));
  }
  return f;
}

PolyPoint cremona_image_point(const QuinticSystem& qs, const PolyPoint& p) {
  const auto& q5 = quintic_monomials();
  std::array<RatFun, 3> img;
  for (size_t r = 0; r < 3; ++r) {
    RatFun acc = RatFun::zero();
    for (size_t col = 0; col < q5.size(); ++col) {
      if (qs.rows[r][col].is_zero()) continue;
      acc = acc + qs.rows[r][col] * monomial_at(p, q5[col]);
    }
    img[r] = acc;
  }
  if (img[0].is_zero() && img[1].is_zero() && img[2].is_zero())
    raise(ErrorCode::MAP_UNDEFINED, "point lies on the base locus");
  return PolyPoint::from_ratfun(PPoint<RatFun>(img[0], img[1], img[2]));
}

namespace {

// Exceptional image over center point with label `label`: the conic through
// the other five center points, the 2-dimensional space of quintics in the
// system divisible by it, and the common zero of the two coordinate lines.
PolyPoint exceptional_image(const QuinticSystem& qs, const PolyConfig& cfg,
                            const std::vector<int>& labels, size_t omit) {
  std::vector<PPoint<RatFun>> five;
  for (size_t j = 0; j < 6; ++j)
    if (j != omit) five.push_back(cfg[size_t(labels[j] - 1)].as_ratfun());
  auto conics = conic_space(five);
  if (conics.size() != 1)
    raise(ErrorCode::DEGENERATE_CENTER, "conic through five center points not unique");
  const auto& conic = conics[0];
  static const Mono3 conic_monos[6] = {{2, 0, 0}, {0, 2, 0}, {0, 0, 2},
                                       {1, 1, 0}, {0, 1, 1}, {1, 0, 1}};

  const auto& q5 = quintic_monomials();
  auto c3 = monomials_of_degree(3);
  // Unknowns: a1, a2, a3 (coordinates w.r.t. F1, F2, F3), then the 10 cubic
  // coefficients; rows are the 21 quintic monomials of a1F1+a2F2+a3F3 +
  // conic * cubic = 0.
  Mat<RatFun> m(q5.size(), 3 + c3.size(), RatFun::zero(), RatFun::one());
  for (size_t col = 0; col < 3; ++col)
    for (size_t row = 0; row < q5.size(); ++row) m.at(row, col) = qs.rows[col][row];
  for (size_t j = 0; j < c3.size(); ++j)
    for (size_t t = 0; t < 6; ++t) {
      if (conic[t].is_zero()) continue;
      Mono3 target = {c3[j][0] + conic_monos[t][0], c3[j][1] + conic_monos[t][1],
                      c3[j][2] + conic_monos[t][2]};
      size_t row = quintic_index(target);
      m.at(row, 3 + j) = m.at(row, 3 + j) + conic[t];
    }
  auto basis = nullspace(m);
  if (basis.size() != 2)
    raise(ErrorCode::MAP_UNDEFINED, "exceptional image subspace has dimension " +
                                        std::to_string(basis.size()));
  Mat<RatFun> amat(2, 3, RatFun::zero(), RatFun::one());
  for (size_t r = 0; r < 2; ++r)
    for (size_t c = 0; c < 3; ++c) amat.at(r, c) = basis[r][c];
  auto pt = nullspace(amat);
  if (pt.size() != 1)
    raise(ErrorCode::MAP_UNDEFINED, "exceptional image point not determined");
  return PolyPoint::from_ratfun(PPoint<RatFun>(pt[0][0], pt[0][1], pt[0][2]));
}

}  // namespace

PolyConfig apply_cremona(const PolyConfig& cfg, Word center) {
  QuinticSystem qs = quintic_system(cfg, center);
  auto labels = indices_of(center);
  PolyConfig out;
  size_t k = 0;
  for (int label = 1; label <= 21; ++label)
    if (!(center >> (label - 1) & 1)) out[k++] = cremona_image_point(qs, cfg[size_t(label - 1)]);
  for (size_t i = 0; i < 6; ++i) out[k++] = exceptional_image(qs, cfg, labels, i);
  for (size_t i = 0; i < 21; ++i)
    for (size_t j = i + 1; j < 21; ++j)
      if (out[i] == out[j])
        raise(ErrorCode::MAP_UNDEFINED, "image configuration has a repeated point");
  return out;
}

// ---------------------------------------------------------------------------
// Correspondences.

BiPoly eliminate_parameter(const RatFun& jt, const RatFun& jp) {
  if (jt == jp) {
    BiPoly d;
    d.toggle(1, 0);
    d.toggle(0, 1);
    return d;
  }
  auto linear_pencil = [](const RatFun& f, bool second_variable) {
    // J * den(l) + num(l) as a polynomial in l over F4[J, J'].
    int d = std::max(f.num.deg(), f.den.deg());
    std::vector<BiPoly4> coeffs(size_t(d) + 1);
    for (int i = 0; i <= d; ++i) {
      BiPoly4 c;
      F4 p = f.num.coeff(size_t(i)), q = f.den.coeff(size_t(i));
      if (!(p == F4::zero())) c.add_term(p, 0, 0);
      if (!(q == F4::zero())) c.add_term(q, second_variable ? 0 : 1, second_variable ? 1 : 0);
      coeffs[size_t(i)] = c;
    }
    return UPoly<BiPoly4>(std::move(coeffs));
  };
  BiPoly4 res = sylvester_resultant(linear_pencil(jt, false), linear_pencil(jp, true));
  if (res.is_zero())
    raise(ErrorCode::NO_SOLUTION, "elimination degenerated to the zero polynomial");
  return canonicalize_curve(res.descend_to_f2());
}

Correspondence correspondence_of_center(Family t, Word center) {
  const PolyConfig& cfg = gamma_table(t);
  PolyConfig image = apply_cremona(cfg, center);
  Code21 image_code = configuration_code(image);
  auto cls = classify_words(image_code);

  Family target;
  size_t nl = cls.linear.size(), nq = cls.quadratic.size();
  if (nl == 13 && nq == 28)
    target = Family::A;
  else if (nl == 9 && nq == 66)
    target = Family::B;
  else if (nl == 5 && nq == 120)
    target = Family::C;
  else
    raise(ErrorCode::UNKNOWN_COMPONENT,
          "image word counts (" + std::to_string(nl) + ", " + std::to_string(nq) +
              ") match no family");

  auto sigma = code_isomorphism(image_code, family_code(target));
  if (!sigma)
    raise(ErrorCode::UNKNOWN_COMPONENT, "image code is not isomorphic to the family code");
  Perm inv = sigma->inverse();
  std::array<PPoint<RatFun>, 21> relabeled;
  for (size_t j = 0; j < 21; ++j) relabeled[j] = image[inv(uint8_t(j))].as_ratfun();

  auto rec = recover_lambda(target, relabeled);
  Correspondence out;
  out.source = t;
  out.target = target;
  out.center = center;
  out.lambda_image = rec.lambda;
  out.component = rec.component;
  out.relation = eliminate_parameter(j_function(t), compose(j_function(target), rec.lambda));
  return out;
}

// ---------------------------------------------------------------------------
// Neron-Severi action.

NSMatrix ns_gram() {
  NSMatrix g{};
  for (size_t i = 0; i < 21; ++i) g[i][i] = -2;
  g[21][21] = 2;
  return g;
}

NSMatrix ns_action(Word center) {
  if (weight(center) != 6) raise(ErrorCode::BAD_WEIGHT, "a center is a weight-6 word");
  NSMatrix m{};
  auto labels = indices_of(center);
  for (size_t p = 0; p < 21; ++p) {
    if (!(center >> p & 1)) {
      m[p][p] = 1;  // e'_p -> e_p off the center
      continue;
    }
    // e'_p -> 2h - sum of the six center classes + e_p.
    m[21][p] = 2;
    for (int l : labels) m[size_t(l - 1)][p] -= 1;
    m[p][p] += 1;
  }
  m[21][21] = 5;  // h' -> 5h - 2 * sum of the six center classes
  for (int l : labels) m[size_t(l - 1)][21] = -2;
  return m;
}

bool preserves_gram(const NSMatrix& m) {
  NSMatrix g = ns_gram();
  for (size_t a = 0; a < 22; ++a)
    for (size_t b = 0; b < 22; ++b) {
      long long s = 0;
      for (size_t k = 0; k < 22; ++k) s += (long long)m[k][a] * g[k][k] * m[k][b];
      if (s != g[a][b]) return false;
    }
  return true;
}

}  // namespace k3m
