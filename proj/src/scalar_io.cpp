#include "invariants/scalar_io.hpp"

#include <cctype>

namespace invariants {

namespace {

struct Cursor {
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
    throw std::invalid_argument("scalar literal: " + what + " at position " +
                                std::to_string(i) + " in \"" + std::string(s) + "\"");
  }
};

long parse_int(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  if (c.i < c.s.size() && (c.s[c.i] == '+' || c.s[c.i] == '-')) ++c.i;
  size_t digits = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  if (c.i == digits) c.fail("expected integer");
  return std::stol(std::string(c.s.substr(start, c.i - start)));
}

Rational parse_rational(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  if (c.i == start) c.fail("expected number");
  std::string num(c.s.substr(start, c.i - start));
  if (c.eat('/')) {
    c.skip_ws();
    size_t dstart = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == dstart) c.fail("expected denominator");
    return Rational::parse(num + "/" + std::string(c.s.substr(dstart, c.i - dstart)));
  }
  return Rational::parse(num);
}

// term := rat ['*' zpow] | zpow ;  zpow := 'z' ['^' int]
Cyclotomic parse_term(Cursor& c, unsigned m) {
  char p = c.peek();
  if (p == 'z') {
    ++c.i;
    long e = 1;
    if (c.eat('^')) e = parse_int(c);
    return Cyclotomic::zeta(m, e);
  }
  Rational r = parse_rational(c);
  if (c.eat('*')) {
    if (c.peek() != 'z') c.fail("expected z after '*'");
    ++c.i;
    long e = 1;
    if (c.eat('^')) e = parse_int(c);
    return Cyclotomic(r) * Cyclotomic::zeta(m, e);
  }
  return Cyclotomic(r);
}

}  // namespace

Cyclotomic parse_scalar(std::string_view text, unsigned order_m) {
  Cursor c{text};
  Cyclotomic acc(Rational(0));
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    if (c.eat('-'))
      sign = -1;
    else if (c.eat('+'))
      sign = 1;
    else if (!first)
      c.fail("expected '+' or '-'");
    Cyclotomic t = parse_term(c, order_m);
    acc = sign > 0 ? acc + t : acc - t;
    first = false;
  }
  if (first) throw std::invalid_argument("empty scalar literal");
  return acc.to_order(order_m);
}

std::string scalar_to_string(const Cyclotomic& value) {
  if (value.is_zero()) return "0";
  std::string out;
  const auto& c = value.coeffs();
  for (size_t e = 0; e < c.size(); ++e) {
    if (c[e].is_zero()) continue;
    Rational a = c[e];
    bool neg = a.sign() < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (neg) a = -a;
    std::string mag = a.str();
    if (e == 0) {
      out += mag;
    } else {
      if (!a.is_one()) out += mag + "*";
      out += "z";
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace invariants
