// ratfun.cpp — composition, parsing and printing for F4(l).

#include "k3moduli/ratfun.hpp"

namespace k3m {

namespace {

// f(p/q) * q^n for a polynomial f of degree <= n: sum f_i p^i q^(n-i).
UniPoly homogenized_eval(const UniPoly& f, const UniPoly& p, const UniPoly& q, int n) {
  UniPoly acc;
  UniPoly pp = uni_one();
  std::vector<UniPoly> ppow(size_t(n) + 1);
  for (int i = 0; i <= n; ++i) {
    ppow[size_t(i)] = pp;
    if (i < n) pp = pp * p;
  }
  UniPoly qq = uni_one();
  for (int i = n; i >= 0; --i) {
    F4 c = f.coeff(size_t(i));
    if (!c.is_zero()) acc = acc + (ppow[size_t(i)] * qq).scaled(c);
    qq = qq * q;
  }
  return acc;
}

}  // namespace

RatFun compose(const RatFun& f, const RatFun& g) {
  int n = std::max(f.num.deg(), f.den.deg());
  if (n < 0) return RatFun();  // f = 0
  if (n == 0) return f;        // constant
  UniPoly top = homogenized_eval(f.num, g.num, g.den, n);
  UniPoly bot = homogenized_eval(f.den, g.num, g.den, n);
  if (bot.is_zero())
    raise(ErrorCode::POLE, "composition lands entirely in a pole");
  return RatFun(top, bot);
}

std::string RatFun::str(char var) const {
  std::string n = to_string(num, var);
  if (is_poly() && den.coeff(0) == F4::one()) return n;
  std::string d = to_string(den, var);
  bool nsum = n.find('+') != std::string::npos;
  bool dcomp = den.deg() > 0 || d.find('+') != std::string::npos;
  std::string out = nsum ? "(" + n + ")" : n;
  out += '/';
  out += dcomp ? "(" + d + ")" : d;
  return out;
}

RatFun parse_ratfun(const std::string& text, char var) {
  // Split on the last top-level '/'; each side parses as a UniPoly.
  int depth = 0;
  size_t slash = std::string::npos;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if (c == '/' && depth == 0) slash = i;
  }
  if (slash == std::string::npos)
    return RatFun::from_poly(parse_unipoly(text, var));
  UniPoly n = parse_unipoly(text.substr(0, slash), var);
  UniPoly d = parse_unipoly(text.substr(slash + 1), var);
  if (d.is_zero()) raise(ErrorCode::DIVISION_BY_ZERO, "parsed denominator is zero");
  return RatFun(n, d);
}

FracLinear as_frac_linear(const RatFun& f) {
  if (f.num.deg() > 1 || f.den.deg() > 1)
    raise(ErrorCode::BAD_INPUT, "rational function is not fractional-linear: " + f.str());
  F4 a = f.num.coeff(1), b = f.num.coeff(0);
  F4 c = f.den.coeff(1), d = f.den.coeff(0);
  return FracLinear(a, b, c, d);
}

}  // namespace k3m
