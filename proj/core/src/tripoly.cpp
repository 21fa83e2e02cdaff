// tripoly.cpp — arithmetic, evaluation and coprimality for trivariate forms
// over F4[l].

#include "k3moduli/tripoly.hpp"

#include <algorithm>

namespace k3m {

TriPoly TriPoly::term(const UniPoly& u, int a, int b, int c) {
  TriPoly p;
  p.add_term({a, b, c}, u);
  return p;
}

TriPoly TriPoly::variable(int axis) {
  Mono3 m = {0, 0, 0};
  m[size_t(axis)] = 1;
  return term(uni_one(), m[0], m[1], m[2]);
}

int TriPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, u] : t_) d = std::max(d, m[0] + m[1] + m[2]);
  return d;
}

bool TriPoly::is_homogeneous() const {
  int d = total_degree();
  for (const auto& [m, u] : t_)
    if (m[0] + m[1] + m[2] != d) return false;
  return true;
}

UniPoly TriPoly::coeff(int a, int b, int c) const {
  auto it = t_.find({a, b, c});
  return it == t_.end() ? uni_zero() : it->second;
}

void TriPoly::add_term(const Mono3& m, const UniPoly& u) {
  if (u.is_zero()) return;
  if (m[0] < 0 || m[1] < 0 || m[2] < 0)
    raise(ErrorCode::BAD_INPUT, "negative exponent in trivariate term");
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, u);
    return;
  }
  it->second += u;
  if (it->second.is_zero()) t_.erase(it);
}

TriPoly operator+(const TriPoly& a, const TriPoly& b) {
  TriPoly r = a;
  for (const auto& [m, u] : b.t_) r.add_term(m, u);
  return r;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
  TriPoly r;
  for (const auto& [ma, ua] : a.t_)
    for (const auto& [mb, ub] : b.t_)
      r.add_term({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ua * ub);
  return r;
}

TriPoly TriPoly::scaled(const UniPoly& u) const {
  TriPoly r;
  for (const auto& [m, c] : t_) r.add_term(m, c * u);
  return r;
}

TriPoly TriPoly::derivative(int axis) const {
  TriPoly r;
  for (const auto& [m, u] : t_) {
    if (m[size_t(axis)] % 2 == 0) continue;  // even exponents die in char 2
    Mono3 n = m;
    --n[size_t(axis)];
    r.add_term(n, u);
  }
  return r;
}

namespace {

// Shared evaluation loop over any commutative ring E, given a coefficient map
// F4[l] -> E and the zero of E.
template <class E, class CoeffEval>
E eval_terms(const std::map<Mono3, UniPoly>& terms, const std::array<E, 3>& p,
             const E& zero, CoeffEval ce) {
  int dmax = 0;
  for (const auto& [m, u] : terms) dmax = std::max({dmax, m[0], m[1], m[2]});
  std::array<std::vector<E>, 3> pw;
  for (size_t i = 0; i < 3; ++i) {
    pw[i].reserve(size_t(dmax) + 1);
    pw[i].push_back(ce(uni_one()));
    for (int d = 1; d <= dmax; ++d) pw[i].push_back(pw[i].back() * p[i]);
  }
  E acc = zero;
  for (const auto& [m, u] : terms)
    acc = acc + ce(u) * pw[0][size_t(m[0])] * pw[1][size_t(m[1])] * pw[2][size_t(m[2])];
  return acc;
}

}  // namespace

UniPoly TriPoly::eval(const std::array<UniPoly, 3>& p) const {
  return eval_terms<UniPoly>(t_, p, uni_zero(), [](const UniPoly& u) { return u; });
}

GFElement TriPoly::eval_at(const std::array<GFElement, 3>& p, const GFElement& lambda) const {
  return eval_terms<GFElement>(
      t_, p, GFElement::zero(lambda.ctx()),
      [&](const UniPoly& u) { return k3m::eval_at(u, lambda); });
}

F4 TriPoly::eval_at(const std::array<F4, 3>& p, F4 lambda) const {
  return eval_terms<F4>(t_, p, F4::zero(),
                        [&](const UniPoly& u) { return k3m::eval_at(u, lambda); });
}

RatFun TriPoly::eval_symbolic(const std::array<RatFun, 3>& p) const {
  return eval_terms<RatFun>(t_, p, RatFun::zero(),
                            [](const UniPoly& u) { return RatFun::from_poly(u); });
}

std::string TriPoly::str(char var) const {
  if (t_.empty()) return "0";
  std::string out;
  // Map order is increasing lex; print the other way so X^a leads.
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [m, u] = *it;
    if (!out.empty()) out += "+";
    std::string cs = to_string(u, var);
    bool compound = cs.find('+') != std::string::npos || cs.find('*') != std::string::npos;
    std::string mono;
    const char* names = "XYZ";
    for (size_t i = 0; i < 3; ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out += compound ? "(" + cs + ")" : cs;
    } else if (cs == "1") {
      out += mono;
    } else {
      out += (compound ? "(" + cs + ")" : cs) + "*" + mono;
    }
  }
  return out;
}

TriPoly tri_specialize(const TriPoly& f, F4 lambda) {
  TriPoly r;
  for (const auto& [m, u] : f.terms()) r.add_term(m, uni_const(eval_at(u, lambda)));
  return r;
}

namespace {

// Bivariate polynomials over the field F4(l), stored Y-inner / X-outer.
using YPoly = UPoly<RatFun>;
using XYPoly = UPoly<YPoly>;

YPoly content_of(const XYPoly& a) {
  YPoly g;
  for (const auto& ci : a.c) g = gcd(g, ci);
  return g;
}

XYPoly divide_content(const XYPoly& a, const YPoly& cont) {
  XYPoly r = a;
  for (auto& ci : r.c) ci = exact_div(ci, cont);
  return r;
}

// Primitive pseudo-remainder sequence; returns a gcd up to units in F4(l).
XYPoly bivar_gcd(XYPoly a, XYPoly b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  YPoly ca = content_of(a), cb = content_of(b), cg = gcd(ca, cb);
  a = divide_content(a, ca);
  b = divide_content(b, cb);
  if (a.deg() < b.deg()) std::swap(a, b);
  while (!b.is_zero()) {
    XYPoly r = prem(a, b);
    if (!r.is_zero()) r = divide_content(r, content_of(r));
    a = std::move(b);
    b = std::move(r);
  }
  return a.scaled(cg);
}

XYPoly dehomogenize(const TriPoly& f) {
  // Z = 1; X outer, Y inner.
  int dx = 0, dy = 0;
  for (const auto& [m, u] : f.terms()) {
    dx = std::max(dx, m[0]);
    dy = std::max(dy, m[1]);
  }
  std::vector<YPoly> rows(size_t(dx) + 1);
  for (auto& row : rows) row.c.assign(size_t(dy) + 1, RatFun::zero());
  for (const auto& [m, u] : f.terms())
    rows[size_t(m[0])].c[size_t(m[1])] += RatFun::from_poly(u);
  for (auto& row : rows) row.trim();
  return XYPoly(std::move(rows));
}

int min_exponent(const TriPoly& f, int axis) {
  int e = -1;
  for (const auto& [m, u] : f.terms())
    e = (e < 0) ? m[size_t(axis)] : std::min(e, m[size_t(axis)]);
  return e;
}

}  // namespace

bool tri_coprime(const TriPoly& f, const TriPoly& g) {
  if (f.is_zero() || g.is_zero()) return false;
  // A common Z factor would be lost by dehomogenizing; X and Y factors are not.
  if (min_exponent(f, 2) > 0 && min_exponent(g, 2) > 0) return false;
  XYPoly h = bivar_gcd(dehomogenize(f), dehomogenize(g));
  return h.deg() == 0 && h.lead().deg() == 0;
}

bool tri_coprime(const TriPoly& f, const TriPoly& g, const TriPoly& h) {
  if (f.is_zero() || g.is_zero() || h.is_zero()) return false;
  if (min_exponent(f, 2) > 0 && min_exponent(g, 2) > 0 && min_exponent(h, 2) > 0) return false;
  XYPoly d = bivar_gcd(bivar_gcd(dehomogenize(f), dehomogenize(g)), dehomogenize(h));
  return d.deg() == 0 && d.lead().deg() == 0;
}

std::vector<Mono3> monomials_of_degree(int d) {
  std::vector<Mono3> out;
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b) out.push_back({a, b, d - a - b});
  return out;
}

}  // namespace k3m
