#include "invariants/poly_io.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "invariants/scalar_io.hpp"

namespace invariants {

Cyclotomic eval_at(const Poly& p, const std::vector<Cyclotomic>& point) {
  if (point.size() != p.ctx()->nvars())
    throw std::invalid_argument("eval_at: wrong point dimension");
  Cyclotomic acc(0);
  for (const auto& [m, c] : p.terms()) {
    Cyclotomic t = c;
    for (size_t i = 0; i < point.size(); ++i)
      for (int k = 0; k < m.e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

std::vector<Monomial> monomials_of_degree(const RingCtxPtr& ctx, int d) {
  std::vector<Monomial> out;
  Monomial m(ctx->nvars());
  const size_t n = ctx->nvars();
  // Enumerate exponent vectors with total degree d.
  std::function<void(size_t, int)> rec = [&](size_t var, int rest) {
    if (var + 1 == n) {
      m.e[var] = rest;
      out.push_back(m);
      return;
    }
    for (int e = 0; e <= rest; ++e) {
      m.e[var] = e;
      rec(var + 1, rest - e);
    }
  };
  if (n == 0) {
    if (d == 0) out.push_back(m);
    return out;
  }
  rec(0, d);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return ctx->order.cmp(a, b) > 0;  // descending
  });
  return out;
}

namespace {

std::string monomial_str(const Monomial& m, const RingCtx& ctx) {
  std::string out;
  for (size_t i = 0; i < m.e.size(); ++i) {
    if (m.e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ctx.vars[i];
    if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
  }
  return out;
}

// Sign-split a cyclotomic coefficient for printing: rationals print bare
// with their sign extracted; anything else is parenthesized verbatim.
struct CoeffText {
  bool negative = false;
  std::string body;  // magnitude, "" when the coefficient is +-1
};

CoeffText coeff_text(const Cyclotomic& c, bool constant_term) {
  CoeffText t;
  if (c.is_rational()) {
    Rational r = c.as_rational();
    t.negative = r.sign() < 0;
    Rational mag = t.negative ? -r : r;
    t.body = (mag.is_one() && !constant_term) ? "" : mag.str();
  } else {
    t.body = "(" + scalar_to_string(c) + ")";
  }
  return t;
}

}  // namespace

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, Cyclotomic>> terms(p.terms().begin(), p.terms().end());
  const TermOrder& ord = p.ctx()->order;
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return ord.cmp(a.first, b.first) > 0; });
  std::string out;
  for (const auto& [m, c] : terms) {
    bool constant = m.is_constant();
    CoeffText t = coeff_text(c, constant);
    if (out.empty()) {
      if (t.negative) out += "-";
    } else {
      out += t.negative ? " - " : " + ";
    }
    if (!t.body.empty()) {
      out += t.body;
      if (!constant) out += "*";
    }
    if (!constant) out += monomial_str(m, *p.ctx());
  }
  return out;
}

std::string to_string(const RatFunc& f) {
  if (f.is_zero()) return "0";
  if (f.is_polynomial()) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

std::string to_string(const XPoly& f) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<Monomial, RatFunc>> terms(f.terms().begin(), f.terms().end());
  const TermOrder& ord = f.ctx()->order;
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return ord.cmp(a.first, b.first) > 0; });
  std::string out;
  for (const auto& [m, c] : terms) {
    bool constant = m.is_constant();
    bool neg = false;
    std::string body;
    // Pull the sign out of plain rational coefficients; parenthesize the rest.
    if (c.is_polynomial() && c.num().is_constant() && !c.num().is_zero() &&
        c.num().terms().begin()->second.is_rational()) {
      Rational r = c.num().terms().begin()->second.as_rational();
      neg = r.sign() < 0;
      Rational mag = neg ? -r : r;
      body = (mag.is_one() && !constant) ? "" : mag.str();
    } else {
      body = "(" + to_string(c) + ")";
    }
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (!body.empty()) {
      out += body;
      if (!constant) out += "*";
    }
    if (!constant) out += monomial_str(m, *f.ctx());
  }
  return out;
}

namespace {

struct PCursor {
  std::string_view s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial literal: " + what + " at position " +
                                std::to_string(i) + " in \"" + std::string(s) + "\"");
  }
};

int parse_uint(PCursor& c) {
  c.skip_ws();
  size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  if (c.i == start) c.fail("expected integer");
  return std::stoi(std::string(c.s.substr(start, c.i - start)));
}

std::string parse_ident(PCursor& c) {
  c.skip_ws();
  size_t start = c.i;
  if (c.i < c.s.size() &&
      (std::isalpha(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '_')) {
    ++c.i;
    while (c.i < c.s.size() &&
           (std::isalnum(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '_'))
      ++c.i;
  }
  return std::string(c.s.substr(start, c.i - start));
}

// One product of factors: rationals, z-powers, parenthesized scalar sums,
// and variables with optional exponents.
Poly parse_sterm(PCursor& c, const RingCtxPtr& ctx, unsigned m) {
  Cyclotomic coeff(1);
  Monomial mono(ctx->nvars());
  bool any = false;
  while (true) {
    char p = c.peek();
    if (std::isdigit(static_cast<unsigned char>(p))) {
      size_t start = c.i;
      while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
      std::string num(c.s.substr(start, c.i - start));
      if (c.eat('/')) {
        int den = parse_uint(c);
        coeff *= Cyclotomic(Rational::parse(num + "/" + std::to_string(den)));
      } else {
        coeff *= Cyclotomic(Rational::parse(num));
      }
      any = true;
    } else if (p == '(') {
      ++c.i;
      size_t depth = 1, start = c.i;
      while (c.i < c.s.size() && depth > 0) {
        if (c.s[c.i] == '(') ++depth;
        if (c.s[c.i] == ')') --depth;
        ++c.i;
      }
      if (depth != 0) c.fail("unbalanced parenthesis");
      coeff *= parse_scalar(c.s.substr(start, c.i - 1 - start), m);
      any = true;
    } else if (std::isalpha(static_cast<unsigned char>(p)) || p == '_') {
      std::string name = parse_ident(c);
      int e = 1;
      if (c.eat('^')) e = parse_uint(c);
      if (name == "z") {
        coeff *= Cyclotomic::zeta(m, e);
      } else {
        auto it = std::find(ctx->vars.begin(), ctx->vars.end(), name);
        if (it == ctx->vars.end()) c.fail("unknown variable '" + name + "'");
        mono.e[static_cast<size_t>(it - ctx->vars.begin())] += e;
      }
      any = true;
    } else {
      c.fail("expected factor");
    }
    if (!c.eat('*')) break;
  }
  if (!any) c.fail("empty term");
  return Poly::term(ctx, mono, coeff);
}

}  // namespace

Poly parse_poly(std::string_view text, const RingCtxPtr& ctx, unsigned order_m) {
  PCursor c{text};
  Poly acc(ctx);
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    if (c.eat('-'))
      sign = -1;
    else if (c.eat('+'))
      sign = 1;
    else if (!first)
      c.fail("expected '+' or '-'");
    Poly t = parse_sterm(c, ctx, order_m);
    acc += sign > 0 ? t : -t;
    first = false;
  }
  if (first) throw std::invalid_argument("empty polynomial literal");
  return acc;
}

}  // namespace invariants
