// bipoly.cpp — arithmetic, gcd, squarefree part and canonicalization for
// sparse bivariate polynomials over F2 and F4.

#include "k3moduli/bipoly.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace k3m {

// ----------------------------------------------------------------- BiPoly --

BiPoly BiPoly::monomial(unsigned a, unsigned b) {
  BiPoly p;
  p.t_.push_back(make_mono(a, b));
  return p;
}

void BiPoly::toggle(unsigned a, unsigned b) {
  Mono2 m = make_mono(a, b);
  auto it = std::lower_bound(t_.begin(), t_.end(), m);
  if (it != t_.end() && *it == m) t_.erase(it);
  else t_.insert(it, m);
}

bool BiPoly::has(unsigned a, unsigned b) const {
  return std::binary_search(t_.begin(), t_.end(), make_mono(a, b));
}

int BiPoly::deg_j() const {
  int d = -1;
  for (Mono2 m : t_) d = std::max(d, int(mono_a(m)));
  return d;
}

int BiPoly::deg_jp() const {
  int d = -1;
  for (Mono2 m : t_) d = std::max(d, int(mono_b(m)));
  return d;
}

Mono2 BiPoly::lead() const {
  if (t_.empty()) raise(ErrorCode::ZERO_INPUT, "leading monomial of zero polynomial");
  Mono2 best = t_[0];
  for (Mono2 m : t_)
    if (mono_less(best, m)) best = m;
  return best;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  r.t_.reserve(a.t_.size() + b.t_.size());
  std::set_symmetric_difference(a.t_.begin(), a.t_.end(), b.t_.begin(), b.t_.end(),
                                std::back_inserter(r.t_));
  return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  std::unordered_set<Mono2> acc;
  for (Mono2 x : a.t_)
    for (Mono2 y : b.t_) {
      Mono2 m = make_mono(mono_a(x) + mono_a(y), mono_b(x) + mono_b(y));
      auto [it, inserted] = acc.insert(m);
      if (!inserted) acc.erase(it);
    }
  BiPoly r;
  r.t_.assign(acc.begin(), acc.end());
  std::sort(r.t_.begin(), r.t_.end());
  return r;
}

BiPoly BiPoly::transposed() const {
  BiPoly r;
  r.t_.reserve(t_.size());
  for (Mono2 m : t_) r.t_.push_back(make_mono(mono_b(m), mono_a(m)));
  std::sort(r.t_.begin(), r.t_.end());
  return r;
}

BiPoly BiPoly::derivative_j() const {
  BiPoly r;
  for (Mono2 m : t_)
    if (mono_a(m) & 1) r.t_.push_back(make_mono(mono_a(m) - 1, mono_b(m)));
  std::sort(r.t_.begin(), r.t_.end());
  return r;
}

BiPoly BiPoly::derivative_jp() const {
  BiPoly r;
  for (Mono2 m : t_)
    if (mono_b(m) & 1) r.t_.push_back(make_mono(mono_a(m), mono_b(m) - 1));
  std::sort(r.t_.begin(), r.t_.end());
  return r;
}

bool BiPoly::divides_into(const BiPoly& divisor, BiPoly* quotient) const {
  // Greedy single-divisor division: in an integral domain with a monomial
  // order, LT(q*g) = LT(q)*LT(g), so if *this is a multiple of divisor the
  // leading terms stay divisible all the way down and the remainder is zero.
  if (divisor.is_zero()) raise(ErrorCode::DIVISION_BY_ZERO, "division by zero polynomial");
  BiPoly r = *this, q;
  Mono2 lg = divisor.lead();
  while (!r.is_zero()) {
    Mono2 lr = r.lead();
    if (mono_a(lr) < mono_a(lg) || mono_b(lr) < mono_b(lg)) return false;
    unsigned qa = mono_a(lr) - mono_a(lg), qb = mono_b(lr) - mono_b(lg);
    q.toggle(qa, qb);
    r = r + divisor * BiPoly::monomial(qa, qb);
  }
  if (quotient) *quotient = q;
  return true;
}

BiPoly exact_div(const BiPoly& a, const BiPoly& b) {
  BiPoly q;
  if (!a.divides_into(b, &q))
    raise(ErrorCode::BAD_INPUT, "inexact bivariate division");
  return q;
}

std::string BiPoly::str() const {
  if (t_.empty()) return "0";
  // Print leading terms first (graded lex).
  std::vector<Mono2> v = t_;
  std::sort(v.begin(), v.end(), [](Mono2 x, Mono2 y) { return mono_less(y, x); });
  std::string out;
  for (Mono2 m : v) {
    if (!out.empty()) out += '+';
    unsigned a = mono_a(m), b = mono_b(m);
    std::string term;
    if (a) {
      term += "J";
      if (a > 1) term += "^" + std::to_string(a);
    }
    if (b) {
      if (!term.empty()) term += "*";
      term += "J'";
      if (b > 1) term += "^" + std::to_string(b);
    }
    if (term.empty()) term = "1";
    out += term;
  }
  return out;
}

BiPoly parse_bipoly(const std::string& text) {
  // Sums of products of powers of J and J'; coefficients 0/1 only.
  BiPoly r;
  size_t i = 0;
  auto skip = [&] { while (i < text.size() && std::isspace(uint8_t(text[i]))) ++i; };
  auto fail = [&](const std::string& why) {
    raise(ErrorCode::BAD_INPUT, "parse error at offset " + std::to_string(i) + ": " + why +
                                    " in '" + text + "'");
  };
  auto number = [&]() -> unsigned {
    skip();
    if (i >= text.size() || !std::isdigit(uint8_t(text[i]))) fail("expected number");
    unsigned n = 0;
    while (i < text.size() && std::isdigit(uint8_t(text[i]))) n = n * 10 + unsigned(text[i++] - '0');
    return n;
  };
  skip();
  while (i < text.size()) {
    unsigned a = 0, b = 0;
    bool zero_term = false, saw_factor = false;
    for (;;) {
      skip();
      if (i < text.size() && text[i] == 'J') {
        ++i;
        bool prime = (i < text.size() && text[i] == '\'');
        if (prime) ++i;
        unsigned e = 1;
        skip();
        if (i < text.size() && text[i] == '^') { ++i; e = number(); }
        (prime ? b : a) += e;
        saw_factor = true;
      } else if (i < text.size() && std::isdigit(uint8_t(text[i]))) {
        unsigned c = number();
        if (c == 0) zero_term = true;
        else if (c != 1) fail("coefficients must be 0 or 1");
        saw_factor = true;
      } else {
        break;
      }
      skip();
      if (i < text.size() && text[i] == '*') { ++i; continue; }
      break;
    }
    if (!saw_factor) fail("expected term");
    if (!zero_term) r.toggle(a, b);
    skip();
    if (i < text.size()) {
      if (text[i] == '+' || text[i] == '-') ++i;
      else fail("expected '+'");
      skip();
      if (i >= text.size()) fail("dangling '+'");
    }
  }
  return r;
}

// ------------------------------------------------------- coefficient views --

UPoly<F2Poly> rows_in_j(const BiPoly& f) {
  std::vector<F2Poly> c(size_t(f.deg_j() + 1));
  for (Mono2 m : f.monos()) c[mono_a(m)].set(mono_b(m));
  return UPoly<F2Poly>(std::move(c));
}

UPoly<F2Poly> rows_in_jp(const BiPoly& f) {
  std::vector<F2Poly> c(size_t(f.deg_jp() + 1));
  for (Mono2 m : f.monos()) c[mono_b(m)].set(mono_a(m));
  return UPoly<F2Poly>(std::move(c));
}

BiPoly from_rows_in_j(const UPoly<F2Poly>& f) {
  BiPoly r;
  for (size_t a = 0; a < f.c.size(); ++a) {
    const F2Poly& p = f.c[a];
    for (int b = 0; b <= p.deg(); ++b)
      if (p.get(unsigned(b))) r.toggle(unsigned(a), unsigned(b));
  }
  return r;
}

BiPoly from_rows_in_jp(const UPoly<F2Poly>& f) {
  BiPoly r;
  for (size_t b = 0; b < f.c.size(); ++b) {
    const F2Poly& p = f.c[b];
    for (int a = 0; a <= p.deg(); ++a)
      if (p.get(unsigned(a))) r.toggle(unsigned(a), unsigned(b));
  }
  return r;
}

// ------------------------------------------------------------------- gcd --

namespace {

F2Poly row_content(const UPoly<F2Poly>& f) {
  F2Poly c;
  for (const F2Poly& x : f.c) c = gcd(c, x);
  return c;
}

UPoly<F2Poly> row_pp(const UPoly<F2Poly>& f) {
  F2Poly c = row_content(f);
  if (c.is_zero() || c.deg() == 0) return f;
  UPoly<F2Poly> r = f;
  for (F2Poly& x : r.c) x = x / c;
  return r;
}

}  // namespace

BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  UPoly<F2Poly> f = rows_in_j(a), g = rows_in_j(b);
  F2Poly c = gcd(row_content(f), row_content(g));
  f = row_pp(f);
  g = row_pp(g);
  if (f.deg() < g.deg()) std::swap(f, g);
  while (!g.is_zero()) {
    UPoly<F2Poly> r = prem(f, g);
    f = g;
    g = row_pp(r);
  }
  f = row_pp(f);
  // Re-attach the content (a polynomial in J' alone).
  UPoly<F2Poly> cc = UPoly<F2Poly>::constant(c);
  return from_rows_in_j(f * cc);
}

// ------------------------------------------------------------- squarefree --

namespace {

BiPoly bipoly_sqrt(const BiPoly& f) {
  BiPoly r;
  for (Mono2 m : f.monos()) {
    if ((mono_a(m) | mono_b(m)) & 1)
      raise(ErrorCode::BAD_INPUT, "square root of non-square bivariate polynomial");
    r.toggle(mono_a(m) / 2, mono_b(m) / 2);
  }
  return r;
}

bool is_constant(const BiPoly& f) { return f.is_zero() || f.is_one(); }

}  // namespace

BiPoly bipoly_squarefree(const BiPoly& f) {
  if (f.is_zero()) raise(ErrorCode::ZERO_INPUT, "squarefree part of zero polynomial");
  if (is_constant(f)) return BiPoly::one();
  BiPoly fj = f.derivative_j(), fp = f.derivative_jp();
  if (fj.is_zero() && fp.is_zero()) {
    // Every exponent is even in both variables: f is a perfect square.
    return bipoly_squarefree(bipoly_sqrt(f));
  }
  BiPoly d = f;
  if (!fj.is_zero()) d = bipoly_gcd(d, fj);
  if (!fp.is_zero()) d = bipoly_gcd(d, fp);
  BiPoly v = exact_div(f, d);  // product of odd-multiplicity irreducibles
  BiPoly w = d;
  for (;;) {
    BiPoly h = bipoly_gcd(w, v);
    if (is_constant(h)) break;
    w = exact_div(w, h);
  }
  if (is_constant(w)) return v;
  return v * bipoly_squarefree(bipoly_sqrt(w));
}

// --------------------------------------------------------- canonical form --

BiPoly canonicalize_curve(const BiPoly& f) {
  if (f.is_zero()) return f;
  // 1. Strip the common monomial factor.
  unsigned mina = ~0u, minb = ~0u;
  for (Mono2 m : f.monos()) {
    mina = std::min(mina, mono_a(m));
    minb = std::min(minb, mono_b(m));
  }
  BiPoly g;
  for (Mono2 m : f.monos()) g.toggle(mono_a(m) - mina, mono_b(m) - minb);
  // 2. Strip single-variable contents (factors in F2[J'] alone, then F2[J]).
  {
    UPoly<F2Poly> rows = rows_in_j(g);
    F2Poly c = row_content(rows);
    if (c.deg() > 0) g = from_rows_in_j(row_pp(rows));
  }
  {
    UPoly<F2Poly> rows = rows_in_jp(g);
    F2Poly c = row_content(rows);
    if (c.deg() > 0) g = from_rows_in_jp(row_pp(rows));
  }
  // 3. Squarefree part.
  if (is_constant(g)) return BiPoly::one();
  return bipoly_squarefree(g);
}

// ---------------------------------------------------------------- BiPoly4 --

BiPoly4 BiPoly4::monomial(F4 c, unsigned a, unsigned b) {
  BiPoly4 p;
  p.add_term(c, a, b);
  return p;
}

BiPoly4 BiPoly4::lift(const BiPoly& f) {
  BiPoly4 r;
  for (Mono2 m : f.monos()) r.add_term(F4::one(), mono_a(m), mono_b(m));
  return r;
}

void BiPoly4::add_term(F4 c, unsigned a, unsigned b) {
  if (c.is_zero()) return;
  Mono2 m = make_mono(a, b);
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Mono2 BiPoly4::lead() const {
  if (t_.empty()) raise(ErrorCode::ZERO_INPUT, "leading monomial of zero polynomial");
  Mono2 best = t_.begin()->first;
  for (const auto& [m, c] : t_)
    if (mono_less(best, m)) best = m;
  return best;
}

F4 BiPoly4::lead_coeff() const { return t_.at(lead()); }

BiPoly4 operator+(const BiPoly4& a, const BiPoly4& b) {
  BiPoly4 r = a;
  for (const auto& [m, c] : b.t_) r.add_term(c, mono_a(m), mono_b(m));
  return r;
}

BiPoly4 operator*(const BiPoly4& a, const BiPoly4& b) {
  BiPoly4 r;
  for (const auto& [x, cx] : a.t_)
    for (const auto& [y, cy] : b.t_)
      r.add_term(cx * cy, mono_a(x) + mono_a(y), mono_b(x) + mono_b(y));
  return r;
}

BiPoly4 BiPoly4::scaled(F4 s) const {
  BiPoly4 r;
  for (const auto& [m, c] : t_) r.add_term(c * s, mono_a(m), mono_b(m));
  return r;
}

BiPoly4 exact_div(const BiPoly4& a, const BiPoly4& b) {
  if (b.is_zero()) raise(ErrorCode::DIVISION_BY_ZERO, "division by zero polynomial");
  BiPoly4 r = a, q;
  Mono2 lg = b.lead();
  F4 lginv = b.lead_coeff().inverse();
  while (!r.is_zero()) {
    Mono2 lr = r.lead();
    if (mono_a(lr) < mono_a(lg) || mono_b(lr) < mono_b(lg))
      raise(ErrorCode::BAD_INPUT, "inexact bivariate division");
    F4 c = r.terms().at(lr) * lginv;
    unsigned qa = mono_a(lr) - mono_a(lg), qb = mono_b(lr) - mono_b(lg);
    q.add_term(c, qa, qb);
    r = r + b * BiPoly4::monomial(c, qa, qb);
  }
  return q;
}

BiPoly BiPoly4::descend_to_f2() const {
  if (is_zero()) return BiPoly();
  // Strip the common monomial factor.
  unsigned mina = ~0u, minb = ~0u;
  for (const auto& [m, c] : t_) {
    mina = std::min(mina, mono_a(m));
    minb = std::min(minb, mono_b(m));
  }
  BiPoly4 g;
  for (const auto& [m, c] : t_) g.add_term(c, mono_a(m) - mina, mono_b(m) - minb);
  // Strip the content in each single variable, computed over F4.
  for (int pass = 0; pass < 2; ++pass) {
    bool in_jp = (pass == 0);  // first strip factors in J' alone, then in J
    // View g as a polynomial in the other variable with UPoly<F4> coefficients.
    std::vector<UPoly<F4>> rows;
    for (const auto& [m, c] : g.terms()) {
      unsigned outer = in_jp ? mono_a(m) : mono_b(m);
      unsigned inner = in_jp ? mono_b(m) : mono_a(m);
      if (rows.size() <= outer) rows.resize(outer + 1);
      std::vector<F4>& rc = rows[outer].c;
      if (rc.size() <= inner) rc.resize(inner + 1);
      rc[inner] = rc[inner] + c;
    }
    UPoly<F4> content;
    for (auto& r : rows) {
      r.trim();
      content = gcd(content, r);
    }
    if (content.deg() > 0) {
      BiPoly4 divisor;
      for (int e = 0; e <= content.deg(); ++e) {
        F4 c = content.coeff(size_t(e));
        if (!c.is_zero())
          divisor.add_term(c, in_jp ? 0 : unsigned(e), in_jp ? unsigned(e) : 0);
      }
      g = exact_div(g, divisor);
    }
  }
  // Find an F4 scalar that lands every coefficient in {0, 1}.
  for (uint8_t sv = 1; sv <= 3; ++sv) {
    F4 s(sv);
    bool ok = true;
    for (const auto& [m, c] : g.terms())
      if ((c * s).v >= 2) { ok = false; break; }
    if (ok) {
      BiPoly r;
      for (const auto& [m, c] : g.terms()) r.toggle(mono_a(m), mono_b(m));
      return r;
    }
  }
  raise(ErrorCode::BAD_INPUT, "bivariate polynomial does not descend to F2: " + str());
}

std::string BiPoly4::str() const {
  if (t_.empty()) return "0";
  std::vector<Mono2> v;
  for (const auto& [m, c] : t_) v.push_back(m);
  std::sort(v.begin(), v.end(), [](Mono2 x, Mono2 y) { return mono_less(y, x); });
  std::string out;
  for (Mono2 m : v) {
    if (!out.empty()) out += '+';
    F4 c = t_.at(m);
    unsigned a = mono_a(m), b = mono_b(m);
    std::string term;
    if (!(c == F4::one()) || (a == 0 && b == 0)) {
      std::string cs = c.str();
      term = cs.find('+') != std::string::npos ? "(" + cs + ")" : cs;
    }
    if (a) {
      if (!term.empty()) term += "*";
      term += "J";
      if (a > 1) term += "^" + std::to_string(a);
    }
    if (b) {
      if (!term.empty()) term += "*";
      term += "J'";
      if (b > 1) term += "^" + std::to_string(b);
    }
    out += term;
  }
  return out;
}

}  // namespace k3m
