// groups.cpp — matrix-group generators and closures, parameter-group checks,
// configuration stabilizers, and the component homomorphism on the code
// automorphisms.

#include "k3moduli/groups.hpp"

#include <map>
#include <optional>

#include "k3moduli/autsearch.hpp"
#include "k3moduli/unipoly.hpp"

namespace k3m {

namespace {

Pgl3<F4> f4_mat(const std::array<int, 9>& e) {
  std::array<F4, 9> m;
  for (size_t i = 0; i < 9; ++i) m[i] = F4(uint8_t(e[i]));
  return Pgl3<F4>(m);
}

}  // namespace

std::vector<Pgl3<GFElement>> family_stabilizer_generators(Family t, const GFElement& alpha) {
  const GFContext& ctx = alpha.ctx();
  GFElement zero = GFElement::zero(ctx), one = GFElement::one(ctx);
  auto M = [](std::array<GFElement, 9> e) { return Pgl3<GFElement>(e); };
  std::vector<Pgl3<GFElement>> gens;
  switch (t) {
    case Family::A:
      // Block shape [[A, v], [0, 1]] with A over F2 and v in the additive
      // group generated by 1 and alpha in each slot.
      gens.push_back(M({zero, one, zero, one, zero, zero, zero, zero, one}));
      gens.push_back(M({one, one, zero, zero, one, zero, zero, zero, one}));
      for (GFElement s : {one, alpha}) {
        gens.push_back(M({one, zero, s, zero, one, zero, zero, zero, one}));
        gens.push_back(M({one, zero, zero, zero, one, s, zero, zero, one}));
      }
      return gens;
    case Family::B:
      for (const auto& e : {std::array<int, 9>{0, 2, 0, 3, 1, 0, 1, 1, 1},
                            std::array<int, 9>{0, 0, 3, 1, 1, 1, 2, 0, 1},
                            std::array<int, 9>{1, 0, 0, 3, 1, 0, 2, 0, 1}})
        gens.push_back(lift_pgl3(f4_mat(e), alpha));
      return gens;
    case Family::C: {
      // Determinant-one 2x2 block (a b / c d) with bottom row
      // (a^2 c^2 alpha + e, b^2 d^2 alpha + f, 1).
      auto sl = [&](F4 a4, F4 b4, F4 c4, F4 d4) {
        GFElement a = lift_scalar(a4, alpha), b = lift_scalar(b4, alpha),
                  c = lift_scalar(c4, alpha), d = lift_scalar(d4, alpha);
        return M({a, b, zero, c, d, zero, a * a * c * c * alpha, b * b * d * d * alpha, one});
      };
      gens.push_back(sl(F4::one(), F4::one(), F4::zero(), F4::one()));
      gens.push_back(sl(F4::one(), F4::omega(), F4::zero(), F4::one()));
      gens.push_back(sl(F4::zero(), F4::one(), F4::one(), F4::zero()));
      for (GFElement s : {one, GFElement::from_f4(F4::omega(), ctx)}) {
        gens.push_back(M({one, zero, zero, zero, one, zero, s, zero, one}));
        gens.push_back(M({one, zero, zero, zero, one, zero, zero, s, one}));
      }
      return gens;
    }
    case Family::DK: break;
  }
  raise(ErrorCode::BAD_INPUT, "no stabilizer generators for the degenerate family");
}

Pgl3Group<GFElement> full_stabilizer(const std::array<PPoint<GFElement>, 21>& cfg,
                                     const PermGroup& aut) {
  // A projective frame inside the configuration.
  std::array<size_t, 4> fr{};
  bool found = false;
  for (size_t a = 0; a < 21 && !found; ++a)
    for (size_t b = a + 1; b < 21 && !found; ++b)
      for (size_t c = b + 1; c < 21 && !found; ++c) {
        if (collinear(cfg[a], cfg[b], cfg[c])) continue;
        for (size_t d = c + 1; d < 21 && !found; ++d) {
          if (collinear(cfg[a], cfg[b], cfg[d]) || collinear(cfg[a], cfg[c], cfg[d]) ||
              collinear(cfg[b], cfg[c], cfg[d]))
            continue;
          fr = {a, b, c, d};
          found = true;
        }
      }
  if (!found) raise(ErrorCode::NOT_IN_STRATUM, "configuration contains no projective frame");

  std::vector<PPoint<GFElement>> src;
  for (size_t i : fr) src.push_back(cfg[i]);
  Pgl3Group<GFElement> out;
  for (const Perm& s : aut.elements()) {
    std::vector<PPoint<GFElement>> dst;
    for (size_t i : fr) dst.push_back(cfg[s(uint8_t(i))]);
    Pgl3<GFElement> g;
    try {
      g = pgl3_from_frame(src, dst);
    } catch (const Error&) {
      continue;
    }
    bool ok = true;
    for (size_t i = 0; i < 21 && ok; ++i) ok = g.apply(cfg[i]) == cfg[s(uint8_t(i))];
    if (ok) out.elements.push_back(g);
  }
  out.gens = out.elements;
  return out;
}

GammaReport gamma_group_action(Family t) {
  const std::vector<FracLinear>& gamma = parameter_group(t);
  GammaReport r;
  r.order = gamma.size();

  auto member = [&](const FracLinear& f) {
    for (const auto& g : gamma)
      if (g == f) return true;
    return false;
  };
  r.closed = true;
  for (const auto& f : gamma) {
    if (!member(f.inverse())) r.closed = false;
    for (const auto& g : gamma)
      if (!member(f.after(g))) r.closed = false;
  }

  const RatFun& j = j_function(t);
  r.j_fixed = true;
  for (const auto& f : gamma)
    if (!(compose(j, f.as_ratfun()) == j)) r.j_fixed = false;

  // Freeness on the lambda-line minus the excluded values: for each
  // non-identity substitution the fixed-point polynomial c l^2 + (a+d) l + b
  // must split over GF(2^12) with every root inside F4.
  const GFContext& ctx12 = GFContext::get(12);
  r.free_action = true;
  for (const auto& f : gamma) {
    if (f == FracLinear::identity()) continue;
    UniPoly num = UniPoly::monomial(f.c, 2) + UniPoly::monomial(f.a + f.d, 1) + uni_const(f.b);
    if (num.is_zero()) {
      r.free_action = false;  // the substitution fixes the whole line
      continue;
    }
    if (num.deg() == 0) continue;  // no finite fixed point
    auto roots = roots_over(num, ctx12);
    GFElement one12 = GFElement::one(ctx12);
    std::vector<GFElement> rest;
    for (int i = 0; i <= num.deg(); ++i)
      rest.push_back(lift_scalar(num.coeff(size_t(i)), one12));
    int counted = 0;
    for (const auto& rt : roots) {
      if (!(rt.pow(4) == rt)) r.free_action = false;  // fixed point off F4
      while (rest.size() > 1) {
        // Synthetic division by (l + rt); stop once the root is exhausted.
        std::vector<GFElement> q(rest.size() - 1, GFElement::zero(ctx12));
        q.back() = rest.back();
        for (size_t i = rest.size() - 2; i >= 1; --i) q[i - 1] = rest[i] + rt * q[i];
        if (!(rest[0] + rt * q[0]).is_zero()) break;
        rest = std::move(q);
        ++counted;
      }
    }
    if (counted != num.deg()) r.free_action = false;  // roots outside GF(2^12)
  }

  auto order_of = [](const FracLinear& f) {
    FracLinear p = f;
    size_t n = 1;
    while (!(p == FracLinear::identity())) {
      p = p.after(f);
      ++n;
    }
    return n;
  };
  bool abelian = true, has_order6 = false, affine = true;
  for (const auto& f : gamma) {
    if (order_of(f) == 6) has_order6 = true;
    if (!f.c.is_zero()) affine = false;
    for (const auto& g : gamma)
      if (!(f.after(g) == g.after(f))) abelian = false;
  }
  if (r.order == 6 && !abelian)
    r.structure = "S3";
  else if (r.order == 12 && !has_order6)
    r.structure = affine ? "AGL(1,4)" : "A4";
  else
    r.structure = "order-" + std::to_string(r.order);
  return r;
}

// ---------------------------------------------------------------------------
// Component homomorphism.

namespace {

struct SignTables {
  std::array<PPoint<GFElement>, 21> spec1, spec2;
};

const SignTables& sign_tables(Family t) {
  static std::map<Family, SignTables> cache;
  auto it = cache.find(t);
  if (it != cache.end()) return it->second;
  const GFContext& ctx = GFContext::get(8);
  const PolyConfig& tbl = gamma_table(t);
  GFElement a1 = good_alpha(ctx, tbl, 0), a2 = good_alpha(ctx, tbl, 1);
  SignTables s;
  for (size_t i = 0; i < 21; ++i) {
    s.spec1[i] = tbl[i].at(a1);
    s.spec2[i] = tbl[i].at(a2);
  }
  return cache.emplace(t, std::move(s)).first->second;
}

std::optional<Component> sign_at(Family t, const Perm& sigma,
                                 const std::array<PPoint<GFElement>, 21>& spec) {
  std::array<PPoint<GFElement>, 21> relab;
  for (size_t j = 0; j < 21; ++j) relab[j] = spec[sigma(uint8_t(j))];
  try {
    return recover_lambda(t, relab).component;
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

Component component_sign(Family t, const Perm& sigma) {
  const SignTables& st = sign_tables(t);
  auto c1 = sign_at(t, sigma, st.spec1), c2 = sign_at(t, sigma, st.spec2);
  if (c1 && c2 && *c1 == *c2) return *c1;
  // Exact symbolic fallback for a coincidence at both specializations.
  std::array<PPoint<RatFun>, 21> relab;
  const PolyConfig& tbl = gamma_table(t);
  for (size_t j = 0; j < 21; ++j) relab[j] = tbl[sigma(uint8_t(j))].as_ratfun();
  return recover_lambda(t, relab).component;
}

const PermGroup& component_kernel(Family t) {
  static std::map<Family, PermGroup> cache;
  auto it = cache.find(t);
  if (it != cache.end()) return it->second;
  PermGroup aut = code_automorphisms(family_code(t));
  std::vector<Perm> gens;
  PermGroup h;
  for (const Perm& s : aut.elements()) {
    if (component_sign(t, s) != Component::plus) continue;
    if (h.contains(s)) continue;
    gens.push_back(s);
    h = PermGroup::from_generators(gens);
  }
  return cache.emplace(t, std::move(h)).first->second;
}

}  // namespace k3m
