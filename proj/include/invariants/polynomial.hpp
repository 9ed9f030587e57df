#ifndef INVARIANTS_POLYNOMIAL_HPP
#define INVARIANTS_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <vector>

#include "invariants/cyclotomic.hpp"
#include "invariants/monomial.hpp"

namespace invariants {

// Coefficient predicate resolved at instantiation so any field type with an
// is_zero() member works.
template <class F>
bool coeff_is_zero(const F& c) {
  return c.is_zero();
}

/// Multivariate polynomial over a pluggable coefficient field F. Terms are
/// kept in a canonical map with no explicitly stored zero coefficients, so
/// equality is structural. The degree of the zero polynomial is reported as
/// std::nullopt rather than a numeric sentinel.
template <class F>
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(RingCtxPtr ctx) : ctx_(std::move(ctx)) {}

  static MPoly constant(RingCtxPtr ctx, F c) {
    MPoly p(std::move(ctx));
    if (!coeff_is_zero(c)) p.terms_.emplace(Monomial(p.ctx_->nvars()), std::move(c));
    return p;
  }
  static MPoly term(RingCtxPtr ctx, Monomial m, F c) {
    MPoly p(std::move(ctx));
    if (m.nvars() != p.ctx_->nvars()) throw std::invalid_argument("monomial arity mismatch");
    if (!coeff_is_zero(c)) p.terms_.emplace(std::move(m), std::move(c));
    return p;
  }
  static MPoly variable(RingCtxPtr ctx, size_t var, F one_value, int e = 1) {
    Monomial m(ctx->nvars());
    if (var >= ctx->nvars()) throw std::invalid_argument("variable index out of range");
    m.e[var] = e;
    return term(std::move(ctx), std::move(m), std::move(one_value));
  }

  const RingCtxPtr& ctx() const { return ctx_; }
  const std::map<Monomial, F>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
      if (m.degree() != d) return false;
    return true;
  }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
  }
  const F* coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
  }
  int degree_in(size_t var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.e[var]);
    return d;
  }

  std::pair<Monomial, F> leading(const TermOrder& order) const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (order.less(best->first, it->first)) best = it;
    return {best->first, best->second};
  }

  MPoly operator-() const {
    MPoly r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  MPoly& operator+=(const MPoly& o) {
    check_same_ring(ctx_, o.ctx_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    check_same_ring(ctx_, o.ctx_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    check_same_ring(a.ctx_, b.ctx_);
    MPoly r(a.ctx_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        F prod = ca * cb;
        if (!coeff_is_zero(prod)) r.add_term(ma * mb, std::move(prod));
      }
    }
    return r;
  }

  MPoly scaled(const F& c) const {
    MPoly r(ctx_);
    if (coeff_is_zero(c)) return r;
    for (const auto& [m, k] : terms_) {
      F prod = k * c;
      if (!coeff_is_zero(prod)) r.terms_.emplace(m, std::move(prod));
    }
    return r;
  }
  MPoly mul_term(const Monomial& m, const F& c) const {
    MPoly r(ctx_);
    if (coeff_is_zero(c)) return r;
    for (const auto& [mm, k] : terms_) {
      F prod = k * c;
      if (!coeff_is_zero(prod)) r.terms_.emplace(mm * m, std::move(prod));
    }
    return r;
  }
  /// Leading coefficient scaled to one under the given order.
  MPoly monic(const TermOrder& order) const {
    if (terms_.empty()) return *this;
    auto [lm, lc] = leading(order);
    MPoly r(ctx_);
    for (const auto& [m, c] : terms_) {
      F q = c / lc;
      if (!coeff_is_zero(q)) r.terms_.emplace(m, std::move(q));
    }
    return r;
  }

  MPoly pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative polynomial power");
    MPoly base = *this;
    std::optional<MPoly> acc;
    while (k > 0) {
      if (k & 1) acc = acc ? *acc * base : base;
      k >>= 1;
      if (k) base = base * base;
    }
    if (acc) return *acc;
    throw std::invalid_argument("pow(p, 0) needs an explicit unit; use constant()");
  }

  void add_term(const Monomial& m, F c) {
    if (coeff_is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, std::move(c));
    } else {
      it->second += c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    check_same_ring(a.ctx_, b.ctx_);
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  // Deterministic structural order (storage order on terms).
  friend bool operator<(const MPoly& a, const MPoly& b) { return a.terms_ < b.terms_; }

 private:
  RingCtxPtr ctx_;
  std::map<Monomial, F> terms_;
};

template <class F>
inline bool is_zero(const MPoly<F>& p) {
  return p.is_zero();
}

/// Multivariate division: f = sum q_i * basis_i + r with no term of r
/// divisible by any basis leading monomial. Deterministic given the order
/// and the basis sequence.
template <class F>
struct DivisionResult {
  std::vector<MPoly<F>> quotients;
  MPoly<F> remainder;
};

template <class F>
DivisionResult<F> divide(const MPoly<F>& f, const std::vector<MPoly<F>>& basis,
                         const TermOrder& order) {
  for (const auto& b : basis)
    if (b.is_zero()) throw std::invalid_argument("division by zero basis element");
  DivisionResult<F> res;
  res.quotients.assign(basis.size(), MPoly<F>(f.ctx()));
  res.remainder = MPoly<F>(f.ctx());
  std::vector<std::pair<Monomial, F>> leads;
  leads.reserve(basis.size());
  for (const auto& b : basis) leads.push_back(b.leading(order));

  MPoly<F> p = f;
  while (!p.is_zero()) {
    auto [lm, lc] = p.leading(order);
    bool divided = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      if (!leads[i].first.divides(lm)) continue;
      Monomial m = lm / leads[i].first;
      F c = lc / leads[i].second;
      res.quotients[i].add_term(m, c);
      p -= basis[i].mul_term(m, c);
      divided = true;
      break;
    }
    if (!divided) {
      res.remainder.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return res;
}

/// Exact quotient a / b; throws std::domain_error when not divisible.
template <class F>
MPoly<F> exact_div(const MPoly<F>& a, const MPoly<F>& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return MPoly<F>(a.ctx());
  auto res = divide(a, std::vector<MPoly<F>>{b}, a.ctx()->order);
  if (!res.remainder.is_zero()) throw std::domain_error("polynomial division not exact");
  return res.quotients[0];
}

using Poly = MPoly<Cyclotomic>;

inline Poly poly_one(const RingCtxPtr& ctx) { return Poly::constant(ctx, Cyclotomic(1)); }
inline Poly poly_var(const RingCtxPtr& ctx, size_t i, int e = 1) {
  return Poly::variable(ctx, i, Cyclotomic(1), e);
}

/// Evaluate at a point of k^n.
Cyclotomic eval_at(const Poly& p, const std::vector<Cyclotomic>& point);

/// All monomials of total degree exactly d, descending under the ring order.
std::vector<Monomial> monomials_of_degree(const RingCtxPtr& ctx, int d);

}  // namespace invariants

#endif
