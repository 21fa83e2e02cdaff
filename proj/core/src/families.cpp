// families.cpp — parametric configuration tables, sextic forms, J-invariants,
// zero-scheme verification, configuration codes, and parameter recovery.

#include "k3moduli/families.hpp"

#include <algorithm>
#include <optional>

namespace k3m {

char family_letter(Family t) {
  switch (t) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::DK: return 'D';
  }
  raise(ErrorCode::BAD_INPUT, "unknown family tag");
}

Family family_from_letter(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::DK;
  }
  raise(ErrorCode::BAD_INPUT, std::string("unknown family letter '") + c + "'");
}

namespace {

PolyPoint pp(const char* a, const char* b, const char* c) {
  return PolyPoint(parse_unipoly(a), parse_unipoly(b), parse_unipoly(c));
}

PolyConfig make_config(const char* const (&rows)[21][3]) {
  PolyConfig cfg;
  for (size_t i = 0; i < 21; ++i) cfg[i] = pp(rows[i][0], rows[i][1], rows[i][2]);
  return cfg;
}

PolyConfig make_config_a() {
  static const char* const rows[21][3] = {
      {"1", "w", "0"},       {"1", "w+1", "0"},   {"l+1", "l+1", "1"},
      {"l+1", "l", "1"},     {"l", "l", "1"},     {"l", "l+1", "1"},
      {"l+1", "1", "1"},     {"1", "l+1", "1"},   {"1", "1", "1"},
      {"0", "l", "1"},       {"0", "1", "1"},     {"0", "1", "0"},
      {"1", "1", "0"},       {"l", "1", "1"},     {"1", "l", "1"},
      {"0", "l+1", "1"},     {"l", "0", "1"},     {"1", "0", "0"},
      {"1", "0", "1"},       {"0", "0", "1"},     {"l+1", "0", "1"}};
  return make_config(rows);
}

PolyConfig make_config_b() {
  static const char* const rows[21][3] = {
      {"l+1", "(w+1)*l+w", "(w+1)*l+w"},
      {"1", "w*l+w", "w"},
      {"l+w+1", "1", "l+1"},
      {"1", "w", "w"},
      {"l", "(w+1)*l", "(w+1)*l+w+1"},
      {"l+w+1", "(w+1)*l+w+1", "(w+1)*l"},
      {"1", "w+1", "w+1"},
      {"l+1", "1", "l"},
      {"1", "w+1", "w"},
      {"1", "w*l+1", "0"},
      {"1", "w+1", "0"},
      {"1", "1", "0"},
      {"l", "0", "l+w+1"},
      {"1", "0", "w"},
      {"1", "0", "1"},
      {"1", "0", "0"},
      {"0", "l", "1"},
      {"0", "1", "w"},
      {"0", "1", "1"},
      {"0", "1", "0"},
      {"0", "0", "1"}};
  return make_config(rows);
}

PolyConfig make_config_c() {
  static const char* const rows[21][3] = {
      {"1", "1", "l"},       {"1", "1", "l+1"},     {"1", "1", "l+w"},
      {"1", "1", "l+w+1"},   {"1", "w+1", "w*l+w"}, {"1", "w+1", "w*l"},
      {"1", "w+1", "w*l+1"}, {"1", "w+1", "w*l+w+1"},
      {"1", "w", "(w+1)*l+w+1"},
      {"1", "w", "(w+1)*l"}, {"1", "w", "(w+1)*l+w"},
      {"1", "w", "(w+1)*l+1"},
      {"1", "0", "1"},       {"1", "0", "0"},       {"1", "0", "w+1"},
      {"1", "0", "w"},       {"0", "1", "1"},       {"0", "1", "0"},
      {"0", "1", "w+1"},     {"0", "1", "w"},       {"0", "0", "1"}};
  return make_config(rows);
}

PolyConfig make_config_dk() {
  PolyConfig cfg;
  auto pts = p2f4_points();
  for (size_t i = 0; i < 21; ++i)
    cfg[i] = PolyPoint(uni_const(pts[i].x[0]), uni_const(pts[i].x[1]), uni_const(pts[i].x[2]));
  return cfg;
}

}  // namespace

const PolyConfig& gamma_table(Family t) {
  static const PolyConfig a = make_config_a();
  static const PolyConfig b = make_config_b();
  static const PolyConfig c = make_config_c();
  static const PolyConfig dk = make_config_dk();
  switch (t) {
    case Family::A: return a;
    case Family::B: return b;
    case Family::C: return c;
    case Family::DK: return dk;
  }
  raise(ErrorCode::BAD_INPUT, "unknown family tag");
}

namespace {

UniPoly up(const char* s) { return parse_unipoly(s); }

// A X^2 + B Y^2 + C Z^2 + D XY + E YZ + F ZX.
TriPoly conic_form(const UniPoly& A, const UniPoly& B, const UniPoly& C,
                   const UniPoly& D, const UniPoly& E, const UniPoly& F) {
  TriPoly t;
  t.add_term({2, 0, 0}, A);
  t.add_term({0, 2, 0}, B);
  t.add_term({0, 0, 2}, C);
  t.add_term({1, 1, 0}, D);
  t.add_term({0, 1, 1}, E);
  t.add_term({1, 0, 1}, F);
  return t;
}

TriPoly xyz() { return TriPoly::term(uni_one(), 1, 1, 1); }

TriPoly sum_of_variables() {
  TriPoly t;
  t.add_term({1, 0, 0}, uni_one());
  t.add_term({0, 1, 0}, uni_one());
  t.add_term({0, 0, 1}, uni_one());
  return t;
}

TriPoly sum_of_cubes() {
  TriPoly t;
  t.add_term({3, 0, 0}, uni_one());
  t.add_term({0, 3, 0}, uni_one());
  t.add_term({0, 0, 3}, uni_one());
  return t;
}

TriPoly make_sextic(Family t) {
  switch (t) {
    case Family::A:
      return xyz() * sum_of_variables() *
             conic_form(up("1"), up("1"), up("l^2+l"), up("1"), up("1"), up("1"));
    case Family::B:
      return xyz() * sum_of_variables() *
             conic_form(up("(w+1)*l+w"), up("w+1"), up("w*l"), up("l+1"),
                        up("(w+1)*l+w"), up("l+1"));
    case Family::C:
      return xyz() * sum_of_cubes() + TriPoly::term(up("l^4+l"), 3, 3, 0);
    case Family::DK:
      return xyz() * sum_of_cubes();
  }
  raise(ErrorCode::BAD_INPUT, "unknown family tag");
}

}  // namespace

const TriPoly& sextic(Family t) {
  static const TriPoly a = make_sextic(Family::A);
  static const TriPoly b = make_sextic(Family::B);
  static const TriPoly c = make_sextic(Family::C);
  static const TriPoly dk = make_sextic(Family::DK);
  switch (t) {
    case Family::A: return a;
    case Family::B: return b;
    case Family::C: return c;
    case Family::DK: return dk;
  }
  raise(ErrorCode::BAD_INPUT, "unknown family tag");
}

const RatFun& j_function(Family t) {
  static const RatFun ja = parse_ratfun("(l^2+l+1)^3/(l^2*(l+1)^2)");
  static const RatFun jb = parse_ratfun("(l+w)^12/(l^3*(l+1)^3*(l+w+1)^3)");
  static const RatFun jc = parse_ratfun("(l^4+l)^3");
  switch (t) {
    case Family::A: return ja;
    case Family::B: return jb;
    case Family::C: return jc;
    case Family::DK: break;
  }
  raise(ErrorCode::BAD_INPUT, "the degenerate family has no J coordinate");
}

GFElement j_invariant_at(Family t, const GFElement& lambda) {
  return j_function(t).eval(lambda);
}

const std::vector<FracLinear>& parameter_group(Family t) {
  const F4 o = F4::zero(), i = F4::one(), w = F4::omega(), wb = F4::omega_bar();
  static const std::vector<FracLinear> ga = {
      {i, o, o, i}, {i, i, o, i}, {o, i, i, o}, {o, i, i, i}, {i, o, i, i}, {i, i, i, o}};
  static const std::vector<FracLinear> gb = {
      {i, o, o, i},  {w, i, o, i},   {o, i, i, i},  {i, wb, i, i},
      {wb, w, i, o}, {o, wb, i, o},  {o, w, i, wb}, {wb, wb, i, wb},
      {wb, o, i, i}, {i, o, i, wb},  {i, i, i, o},  {wb, wb, o, i}};
  static const std::vector<FracLinear> gc = [&] {
    std::vector<FracLinear> g;
    for (uint8_t a = 1; a < 4; ++a)
      for (uint8_t b = 0; b < 4; ++b) g.push_back({F4(a), F4(b), o, i});
    return g;
  }();
  switch (t) {
    case Family::A: return ga;
    case Family::B: return gb;
    case Family::C: return gc;
    case Family::DK: break;
  }
  raise(ErrorCode::BAD_INPUT, "the degenerate family has no parameter group");
}

// ---------------------------------------------------------------------------
// Zero scheme.

int count_partial_zeros(const TriPoly& g, const GFElement& alpha) {
  const GFContext& ctx = alpha.ctx();
  struct SpecPoly {
    std::vector<std::pair<Mono3, GFElement>> terms;
  };
  auto specialize = [&](const TriPoly& f) {
    SpecPoly s;
    for (const auto& [m, u] : f.terms()) {
      GFElement c = eval_at(u, alpha);
      if (!c.is_zero()) s.terms.push_back({m, c});
    }
    return s;
  };
  SpecPoly p[3] = {specialize(g.dX()), specialize(g.dY()), specialize(g.dZ())};
  int dmax = 0;
  for (const auto& s : p)
    for (const auto& [m, c] : s.terms) dmax = std::max({dmax, m[0], m[1], m[2]});

  GFElement zero = GFElement::zero(ctx), one = GFElement::one(ctx);
  std::array<std::vector<GFElement>, 3> pw;
  auto vanish_all = [&](GFElement x, GFElement y, GFElement z) {
    std::array<GFElement, 3> coord = {x, y, z};
    for (size_t i = 0; i < 3; ++i) {
      pw[i].assign(1, one);
      for (int d = 1; d <= dmax; ++d) pw[i].push_back(pw[i].back() * coord[i]);
    }
    for (const auto& s : p) {
      GFElement acc = zero;
      for (const auto& [m, c] : s.terms)
        acc += c * pw[0][size_t(m[0])] * pw[1][size_t(m[1])] * pw[2][size_t(m[2])];
      if (!acc.is_zero()) return false;
    }
    return true;
  };

  int count = 0;
  uint32_t q = ctx.order();
  for (uint32_t y = 0; y < q; ++y)
    for (uint32_t z = 0; z < q; ++z)
      if (vanish_all(one, GFElement(uint16_t(y), ctx), GFElement(uint16_t(z), ctx))) ++count;
  for (uint32_t z = 0; z < q; ++z)
    if (vanish_all(zero, one, GFElement(uint16_t(z), ctx))) ++count;
  if (vanish_all(zero, zero, one)) ++count;
  return count;
}

// A parameter value in GF(2^m) outside F4 whose specialized configuration is
// injective; candidates are odd powers of the generator.
GFElement good_alpha(const GFContext& ctx, const PolyConfig& cfg, unsigned skip) {
  GFElement g(ctx.generator(), ctx);
  unsigned found = 0;
  for (uint64_t e = 3; e < ctx.order() - 1; e += 2) {
    GFElement a = g.pow(e);
    if (a.pow(4) == a) continue;  // inside F4
    std::array<PPoint<GFElement>, 21> spec;
    for (size_t i = 0; i < 21; ++i) spec[i] = cfg[i].at(a);
    if (!configuration_injective(spec)) continue;
    if (found++ == skip) return a;
  }
  raise(ErrorCode::BAD_INPUT, "no usable specialization parameter found");
}

ZeroSchemeReport verify_zero_scheme(const TriPoly& g, const PolyConfig& cfg,
                                    unsigned spec_degree) {
  ZeroSchemeReport r;
  TriPoly gx = g.dX(), gy = g.dY(), gz = g.dZ();

  r.partials_vanish = true;
  for (const auto& p : cfg) {
    if (!gx.eval(p.x).is_zero() || !gy.eval(p.x).is_zero() || !gz.eval(p.x).is_zero()) {
      r.partials_vanish = false;
      break;
    }
  }

  r.points_distinct = true;
  for (size_t i = 0; i < 21 && r.points_distinct; ++i)
    for (size_t j = i + 1; j < 21; ++j)
      if (cfg[i] == cfg[j]) {
        r.points_distinct = false;
        break;
      }

  // No common factor of the three partials means no curve inside the zero
  // scheme, so its dimension is 0; the specialized count pins its length.
  bool coprime = tri_coprime(gx, gy, gz);
  const GFContext& ctx = GFContext::get(spec_degree);
  GFElement alpha = good_alpha(ctx, cfg, 0);
  r.specialized_zero_count = count_partial_zeros(g, alpha);
  r.dimension_zero = coprime && r.specialized_zero_count == 21;

  auto monos = monomials_of_degree(5);
  Mat<RatFun> m(3, monos.size(), RatFun::zero(), RatFun::one());
  const TriPoly* partials[3] = {&gx, &gy, &gz};
  for (size_t row = 0; row < 3; ++row)
    for (size_t col = 0; col < monos.size(); ++col)
      m.at(row, col) = RatFun::from_poly(
          partials[row]->coeff(monos[col][0], monos[col][1], monos[col][2]));
  r.quintic_span_dim = int(rank_of(m));
  return r;
}

// ---------------------------------------------------------------------------
// Configuration codes.

namespace {

// collinear_mask[i][j] (i < j): bit k set when points i, j, k are collinear.
template <class K>
std::array<std::array<uint32_t, 21>, 21> collinear_masks(
    const std::array<PPoint<K>, 21>& cfg) {
  std::array<std::array<uint32_t, 21>, 21> mask{};
  for (size_t i = 0; i < 21; ++i)
    for (size_t j = i + 1; j < 21; ++j)
      for (size_t k = j + 1; k < 21; ++k)
        if (collinear(cfg[i], cfg[j], cfg[k])) {
          mask[i][j] |= uint32_t(1) << k;
          mask[i][k] |= uint32_t(1) << j;
          mask[j][k] |= uint32_t(1) << i;
        }
  return mask;
}

template <class K>
std::array<std::array<K, 6>, 21> conic_rows(const std::array<PPoint<K>, 21>& cfg) {
  std::array<std::array<K, 6>, 21> rows;
  for (size_t i = 0; i < 21; ++i) {
    const K &x = cfg[i].x[0], &y = cfg[i].x[1], &z = cfg[i].x[2];
    rows[i] = {x * x, y * y, z * z, x * y, y * z, z * x};
  }
  return rows;
}

template <class K>
size_t conic_rank(const std::array<std::array<K, 6>, 21>& rows,
                  const std::array<int, 8>& pts, const K& zero, const K& one) {
  Mat<K> m(8, 6, zero, one);
  for (size_t r = 0; r < 8; ++r)
    for (size_t c = 0; c < 6; ++c) m.at(r, c) = rows[size_t(pts[r])][c];
  return rref(m);
}

// Visit all sorted index subsets of {0..20} of the given size.
template <class Fn>
void for_subsets(int size, Fn fn) {
  std::vector<int> idx(static_cast<size_t>(size));
  auto rec = [&](auto&& self, int pos, int start) -> void {
    if (pos == size) {
      fn(idx);
      return;
    }
    for (int v = start; v <= 21 - (size - pos); ++v) {
      idx[size_t(pos)] = v;
      self(self, pos + 1, v + 1);
    }
  };
  rec(rec, 0, 0);
}

bool has_collinear_triple(const std::array<std::array<uint32_t, 21>, 21>& mask,
                          const std::vector<int>& s, uint32_t sbits) {
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (mask[size_t(s[i])][size_t(s[j])] & sbits) return true;
  return false;
}

// Exact scan over one field: weight-5 collinear words plus weight-8 words on
// a conic with no three collinear (such a conic cannot be a line pair, hence
// is nonsingular).
template <class K>
std::vector<Word> scan_words(const std::array<PPoint<K>, 21>& cfg) {
  if (!configuration_injective(cfg))
    raise(ErrorCode::BAD_INPUT, "configuration code needs 21 distinct points");
  auto [zero, one] = zero_one_from(cfg[0].first_nonzero());
  auto mask = collinear_masks(cfg);
  auto rows = conic_rows(cfg);
  std::vector<Word> words;
  for_subsets(5, [&](const std::vector<int>& s) {
    uint32_t need = 0;
    for (size_t k = 2; k < 5; ++k) need |= uint32_t(1) << s[k];
    if ((mask[size_t(s[0])][size_t(s[1])] & need) == need) {
      Word w = 0;
      for (int v : s) w |= Word(1) << v;
      words.push_back(w);
    }
  });
  for_subsets(8, [&](const std::vector<int>& s) {
    uint32_t sbits = 0;
    for (int v : s) sbits |= uint32_t(1) << v;
    if (has_collinear_triple(mask, s, sbits)) return;
    std::array<int, 8> pts;
    std::copy(s.begin(), s.end(), pts.begin());
    if (conic_rank(rows, pts, zero, one) == 5) words.push_back(sbits);
  });
  return words;
}

}  // namespace

Code21 configuration_code(const std::array<PPoint<F4>, 21>& cfg) {
  std::vector<Word> gens = scan_words(cfg);
  gens.push_back(FULL_WORD);
  return Code21::span(gens);
}

Code21 configuration_code(const std::array<PPoint<GFElement>, 21>& cfg) {
  std::vector<Word> gens = scan_words(cfg);
  gens.push_back(FULL_WORD);
  return Code21::span(gens);
}

Code21 configuration_code(const PolyConfig& cfg) {
  std::array<PPoint<RatFun>, 21> sym;
  for (size_t i = 0; i < 21; ++i) sym[i] = cfg[i].as_ratfun();
  if (!configuration_injective(sym))
    raise(ErrorCode::BAD_INPUT, "configuration code needs 21 distinct points");

  // Two specializations for the rank pre-filter.  A candidate whose matrix
  // has full rank at a specialized parameter has full rank symbolically, so
  // only the survivors need the exact test over F4(l).
  const GFContext& ctx = GFContext::get(8);
  GFElement a1 = good_alpha(ctx, cfg, 0), a2 = good_alpha(ctx, cfg, 1);
  std::array<PPoint<GFElement>, 21> s1, s2;
  for (size_t i = 0; i < 21; ++i) {
    s1[i] = cfg[i].at(a1);
    s2[i] = cfg[i].at(a2);
  }
  auto sym_mask = collinear_masks(sym);
  auto rows1 = conic_rows(s1), rows2 = conic_rows(s2);
  auto sym_rows = conic_rows(sym);
  GFElement z1 = GFElement::zero(ctx), o1 = GFElement::one(ctx);
  RatFun zr = RatFun::zero(), orr = RatFun::one();

  std::vector<Word> words;
  for_subsets(5, [&](const std::vector<int>& s) {
    uint32_t need = 0;
    for (size_t k = 2; k < 5; ++k) need |= uint32_t(1) << s[k];
    if ((sym_mask[size_t(s[0])][size_t(s[1])] & need) == need) {
      Word w = 0;
      for (int v : s) w |= Word(1) << v;
      words.push_back(w);
    }
  });
  for_subsets(8, [&](const std::vector<int>& s) {
    uint32_t sbits = 0;
    for (int v : s) sbits |= uint32_t(1) << v;
    if (has_collinear_triple(sym_mask, s, sbits)) return;
    std::array<int, 8> pts;
    std::copy(s.begin(), s.end(), pts.begin());
    if (conic_rank(rows1, pts, z1, o1) == 6) return;
    if (conic_rank(rows2, pts, z1, o1) == 6) return;
    if (conic_rank(sym_rows, pts, zr, orr) == 5) words.push_back(sbits);
  });
  words.push_back(FULL_WORD);
  return Code21::span(words);
}

const Code21& family_code(Family t) {
  static const Code21 a = configuration_code(gamma_table(Family::A));
  static const Code21 b = configuration_code(gamma_table(Family::B));
  static const Code21 c = configuration_code(gamma_table(Family::C));
  static const Code21 dk = configuration_code(gamma_table(Family::DK));
  switch (t) {
    case Family::A: return a;
    case Family::B: return b;
    case Family::C: return c;
    case Family::DK: return dk;
  }
  raise(ErrorCode::BAD_INPUT, "unknown family tag");
}

// ---------------------------------------------------------------------------
// Parameter recovery.

namespace {

struct FrameSpec {
  std::array<std::pair<int, std::array<F4, 3>>, 5> points;  // label, target
  int lambda_slot;                                          // label of the reading point
};

const FrameSpec& frame_of(Family t) {
  const F4 o = F4::zero(), i = F4::one();
  static const FrameSpec fa = {{{{18, {i, o, o}},
                                 {12, {o, i, o}},
                                 {13, {i, i, o}},
                                 {20, {o, o, i}},
                                 {19, {i, o, i}}}},
                               10};
  static const FrameSpec fb = {{{{16, {i, o, o}},
                                 {12, {i, i, o}},
                                 {20, {o, i, o}},
                                 {15, {i, o, i}},
                                 {21, {o, o, i}}}},
                               17};
  static const FrameSpec fc = {{{{21, {o, o, i}},
                                 {17, {o, i, i}},
                                 {18, {o, i, o}},
                                 {13, {i, o, i}},
                                 {14, {i, o, o}}}},
                               1};
  switch (t) {
    case Family::A: return fa;
    case Family::B: return fb;
    case Family::C: return fc;
    case Family::DK: break;
  }
  raise(ErrorCode::BAD_INPUT, "the degenerate family has no recovery frame");
}

std::vector<int> perm_from_swaps(std::initializer_list<std::pair<int, int>> swaps) {
  std::vector<int> im(21);
  for (int i = 0; i < 21; ++i) im[size_t(i)] = i + 1;
  for (auto [a, b] : swaps) std::swap(im[size_t(a - 1)], im[size_t(b - 1)]);
  return im;
}

template <class K>
std::optional<Recovery<K>> try_component(Family fam, const std::array<PPoint<K>, 21>& cfg,
                                         const std::vector<int>& t, Component comp) {
  const FrameSpec& fr = frame_of(fam);
  K sample = cfg[0].first_nonzero();
  auto lift = [&](F4 a) { return lift_scalar(a, sample); };
  K zero = sample + sample;

  std::vector<PPoint<K>> src, dst;
  for (const auto& [label, target] : fr.points) {
    src.push_back(cfg[size_t(t[size_t(label - 1)] - 1)]);
    dst.push_back(PPoint<K>(lift(target[0]), lift(target[1]), lift(target[2])));
  }
  Pgl3<K> g;
  try {
    g = pgl3_from_frame(src, dst);
  } catch (const Error&) {
    return std::nullopt;
  }

  PPoint<K> q = g.apply(cfg[size_t(t[size_t(fr.lambda_slot - 1)] - 1)]);
  K lambda = zero;
  if (fam == Family::C) {
    // Reading point [1, 1, lambda].
    if (q.x[0].is_zero() || !(q.x[1] == q.x[0])) return std::nullopt;
    lambda = q.x[2] * q.x[0].inverse();
  } else {
    // Reading point [0, lambda, 1].
    if (!q.x[0].is_zero() || q.x[2].is_zero()) return std::nullopt;
    lambda = q.x[1] * q.x[2].inverse();
  }

  auto expect = gamma_eval<K>(fam, lambda);
  for (size_t i = 0; i < 21; ++i)
    if (!(g.apply(cfg[size_t(t[i] - 1)]) == expect[i])) return std::nullopt;
  return Recovery<K>{lambda, comp, g};
}

template <class K>
Recovery<K> recover_impl(Family fam, const std::array<PPoint<K>, 21>& cfg) {
  std::vector<int> ident(21);
  for (int i = 0; i < 21; ++i) ident[size_t(i)] = i + 1;
  if (auto r = try_component(fam, cfg, ident, Component::plus)) return *r;
  if (auto r = try_component(fam, cfg, component_swap(fam), Component::minus)) return *r;
  raise(ErrorCode::NOT_IN_STRATUM,
        std::string("configuration is not in the stratum of family ") + family_letter(fam));
}

}  // namespace

const std::vector<int>& component_swap(Family t) {
  static const std::vector<int> sa = perm_from_swaps({{1, 2}});
  static const std::vector<int> sb =
      perm_from_swaps({{2, 5}, {3, 6}, {4, 7}, {10, 13}, {11, 14}, {12, 15}, {20, 21}});
  static const std::vector<int> sc =
      perm_from_swaps({{3, 4}, {5, 9}, {6, 10}, {7, 12}, {8, 11}, {15, 16}, {19, 20}});
  switch (t) {
    case Family::A: return sa;
    case Family::B: return sb;
    case Family::C: return sc;
    case Family::DK: break;
  }
  raise(ErrorCode::BAD_INPUT, "the degenerate family has no component involution");
}

Recovery<GFElement> recover_lambda(Family t, const std::array<PPoint<GFElement>, 21>& cfg) {
  return recover_impl(t, cfg);
}

Recovery<RatFun> recover_lambda(Family t, const std::array<PPoint<RatFun>, 21>& cfg) {
  return recover_impl(t, cfg);
}

}  // namespace k3m
