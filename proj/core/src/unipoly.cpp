// unipoly.cpp — parser, printer and squarefree machinery for F4[l].

#include "k3moduli/unipoly.hpp"

#include <cctype>

namespace k3m {

namespace {

// Minimal recursive-descent parser.
//   expr   := term (('+').. term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' number)?
//   atom   := '0' | '1' | 'w' | var | '(' expr ')'
struct Parser {
  const std::string& s;
  char var;
  size_t i = 0;

  explicit Parser(const std::string& text, char v) : s(text), var(v) {}

  void skip() {
    while (i < s.size() && std::isspace(uint8_t(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) { ++i; return true; }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) {
    raise(ErrorCode::BAD_INPUT, "parse error at offset " + std::to_string(i) + ": " + why +
                                    " in '" + s + "'");
  }

  UniPoly expr() {
    UniPoly r = term();
    for (;;) {
      skip();
      if (eat('+')) r = r + term();
      else if (eat('-')) r = r + term();  // char 2
      else return r;
    }
  }
  UniPoly term() {
    UniPoly r = factor();
    for (;;) {
      skip();
      if (eat('*')) r = r * factor();
      else return r;
    }
  }
  UniPoly factor() {
    UniPoly a = atom();
    skip();
    if (eat('^')) {
      unsigned e = number();
      if (a.is_zero()) return e == 0 ? uni_one() : uni_zero();
      return a.pow(e);
    }
    return a;
  }
  unsigned number() {
    skip();
    if (i >= s.size() || !std::isdigit(uint8_t(s[i]))) fail("expected exponent");
    unsigned n = 0;
    while (i < s.size() && std::isdigit(uint8_t(s[i]))) n = n * 10 + unsigned(s[i++] - '0');
    return n;
  }
  UniPoly atom() {
    skip();
    if (i >= s.size()) fail("unexpected end of input");
    char c = s[i];
    if (c == '(') {
      ++i;
      UniPoly r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (c == '0') { ++i; return uni_zero(); }
    if (c == '1') { ++i; return uni_one(); }
    if (c == 'w') { ++i; return uni_const(F4::omega()); }
    if (c == var) { ++i; return uni_x(); }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

UniPoly parse_unipoly(const std::string& text, char var) {
  Parser p(text, var);
  UniPoly r = p.expr();
  p.skip();
  if (p.i != text.size()) p.fail("trailing input");
  return r;
}

std::string to_string(const UniPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int e = p.deg(); e >= 0; --e) {
    F4 a = p.coeff(size_t(e));
    if (a.is_zero()) continue;
    if (!out.empty()) out += '+';
    std::string coeff = a.str();
    bool compound = coeff.find('+') != std::string::npos;
    if (e == 0) {
      // A trailing "w+1" re-parses to the same sum, so no parentheses needed.
      out += coeff;
    } else {
      if (a == F4::one()) {
        // coefficient 1 omitted
      } else if (compound) {
        out += '(' + coeff + ")*";
      } else {
        out += coeff + "*";
      }
      out += var;
      if (e > 1) out += '^' + std::to_string(e);
    }
  }
  return out;
}

UniPoly poly_sqrt(const UniPoly& p) {
  if (p.is_zero()) return p;
  std::vector<F4> r(size_t(p.deg() / 2) + 1);
  for (int e = 0; e <= p.deg(); ++e) {
    F4 a = p.coeff(size_t(e));
    if (a.is_zero()) continue;
    if (e & 1) raise(ErrorCode::BAD_INPUT, "square root of polynomial with odd exponent");
    // (c^2)^(1/2) = c, and c -> c^2 is the inverse of squaring on F4.
    r[size_t(e / 2)] = a.square();
  }
  return UniPoly(std::move(r));
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) raise(ErrorCode::ZERO_INPUT, "squarefree part of zero polynomial");
  if (p.deg() == 0) return uni_one();
  UniPoly d = p.derivative();
  if (d.is_zero()) {
    // Every exponent is even: p is a perfect square.
    return squarefree_part(poly_sqrt(p));
  }
  UniPoly g = gcd(p, d);                  // odd factors to multiplicity e-1, even to e
  UniPoly v = exact_div(p, g);            // product of odd-multiplicity irreducibles
  // Strip all odd-multiplicity irreducibles from g; what remains has even
  // exponents throughout and is a perfect square.
  UniPoly w = g;
  for (;;) {
    UniPoly h = gcd(w, v);
    if (h.deg() <= 0) break;
    w = exact_div(w, h);
  }
  if (w.deg() == 0) return v.scaled(v.lead().inverse());
  UniPoly rest = squarefree_part(poly_sqrt(w));
  UniPoly r = v * rest;
  return r.scaled(r.lead().inverse());
}

GFElement eval_at(const UniPoly& p, const GFElement& x) {
  const GFContext& F = x.ctx();
  return p.eval_with<GFElement>(
      x, [&F](const F4& a) { return GFElement::from_f4(a, F); });
}

F4 eval_at(const UniPoly& p, F4 x) { return p.eval(x); }

std::vector<GFElement> roots_over(const UniPoly& p, const GFContext& ctx) {
  std::vector<GFElement> roots;
  if (p.is_zero()) raise(ErrorCode::ZERO_INPUT, "roots of the zero polynomial");
  for (uint32_t i = 0; i < ctx.order(); ++i) {
    GFElement x(uint16_t(i), ctx);
    if (eval_at(p, x).is_zero()) roots.push_back(x);
  }
  return roots;
}

}  // namespace k3m
