#include "invariants/rational_function.hpp"

namespace invariants {

RatFunc::RatFunc(Poly num) : num_(std::move(num)) {
  den_ = poly_one(num_.ctx());
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  check_same_ring(num_.ctx(), den_.ctx());
  if (den_.is_zero()) throw DivisionByZero();
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = poly_one(num_.ctx());
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  auto [lm, lc] = den_.leading(den_.ctx()->order);
  if (!lc.is_one()) {
    Cyclotomic inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

bool RatFunc::is_one() const { return den_.is_constant() && num_ == den_; }

RatFunc RatFunc::operator-() const {
  RatFunc r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  check_same_ring(a.ctx(), b.ctx());
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Poly g = poly_gcd(a.den_, b.den_);
  if (g.is_constant()) return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  Poly da = exact_div(a.den_, g);
  Poly db = exact_div(b.den_, g);
  return RatFunc(a.num_ * db + b.num_ * da, a.den_ * db);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  check_same_ring(a.ctx(), b.ctx());
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  // Cross-reduce before multiplying to keep the gcds small.
  Poly g1 = poly_gcd(a.num_, b.den_);
  Poly g2 = poly_gcd(b.num_, a.den_);
  Poly n1 = g1.is_constant() ? a.num_ : exact_div(a.num_, g1);
  Poly d2 = g1.is_constant() ? b.den_ : exact_div(b.den_, g1);
  Poly n2 = g2.is_constant() ? b.num_ : exact_div(b.num_, g2);
  Poly d1 = g2.is_constant() ? a.den_ : exact_div(a.den_, g2);
  return RatFunc(n1 * n2, d1 * d2);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return RatFunc(den_, num_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

std::optional<int> RatFunc::height() const {
  if (is_zero()) return std::nullopt;
  return std::max(*num_.degree(), *den_.degree());
}

XPoly to_xring(const Poly& p, const RingCtxPtr& xring) {
  if (p.ctx()->nvars() != xring->nvars())
    throw std::invalid_argument("x-ring and X-ring dimension mismatch");
  XPoly out(xring);
  for (const auto& [m, c] : p.terms())
    out.add_term(m, RatFunc::constant(p.ctx(), c));
  return out;
}

RatFunc xi_image(const XPoly& f, const RingCtxPtr& xctx) {
  RatFunc acc = RatFunc(Poly(xctx));
  for (const auto& [m, c] : f.terms()) {
    Poly mono = Poly::term(xctx, m, Cyclotomic(1));
    acc += c * RatFunc(std::move(mono));
  }
  return acc;
}

RatFunc substitute(const Poly& p, const std::vector<RatFunc>& values) {
  if (values.size() != p.ctx()->nvars())
    throw std::invalid_argument("substitute: wrong number of values");
  const RingCtxPtr target = values.empty() ? p.ctx() : values.front().ctx();
  RatFunc acc{Poly(target)};
  for (const auto& [m, c] : p.terms()) {
    RatFunc term = RatFunc(Poly::constant(target, c));
    for (size_t i = 0; i < values.size(); ++i)
      for (int k = 0; k < m.e[i]; ++k) term *= values[i];
    acc += term;
  }
  return acc;
}

}  // namespace invariants
