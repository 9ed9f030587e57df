#ifndef INVARIANTS_MONOMIAL_HPP
#define INVARIANTS_MONOMIAL_HPP

#include <compare>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace invariants {

/// Exponent vector of fixed length (the ring's variable count).
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(size_t nvars) : e(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

  size_t nvars() const { return e.size(); }
  int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
  bool is_constant() const { return degree() == 0; }

  bool divides(const Monomial& m) const {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.e.size());
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
  }
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.e.size());
    for (size_t i = 0; i < a.e.size(); ++i) {
      r.e[i] = a.e[i] - b.e[i];
      if (r.e[i] < 0) throw std::invalid_argument("monomial division not exact");
    }
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.e.size());
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
  }
  static bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
      if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
  }

  // Storage order for term maps; independent of any term order.
  auto operator<=>(const Monomial&) const = default;
};

/// Total well-order on monomials compatible with multiplication. Graded
/// kinds compare total degree first. The priority permutation lists variable
/// indices from highest to lowest priority.
struct TermOrder {
  enum class Kind { lex, grlex, grevlex };

  Kind kind = Kind::grevlex;
  std::vector<int> priority;  // empty means natural variable order

  static TermOrder lex() { return {Kind::lex, {}}; }
  static TermOrder grlex() { return {Kind::grlex, {}}; }
  static TermOrder grevlex() { return {Kind::grevlex, {}}; }

  // Returns <0, 0, >0 as a is below, equal to, above b.
  int cmp(const Monomial& a, const Monomial& b) const {
    if (kind != Kind::lex) {
      int da = a.degree(), db = b.degree();
      if (da != db) return da < db ? -1 : 1;
    }
    const size_t n = a.e.size();
    auto var = [&](size_t i) { return priority.empty() ? static_cast<int>(i) : priority[i]; };
    if (kind == Kind::grevlex) {
      // Ties broken by the reversed sequence: the monomial with the smaller
      // exponent on the lowest-priority variable is larger.
      for (size_t i = n; i-- > 0;) {
        int va = a.e[var(i)], vb = b.e[var(i)];
        if (va != vb) return va > vb ? -1 : 1;
      }
      return 0;
    }
    for (size_t i = 0; i < n; ++i) {
      int va = a.e[var(i)], vb = b.e[var(i)];
      if (va != vb) return va < vb ? -1 : 1;
    }
    return 0;
  }
  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

  std::string name() const {
    switch (kind) {
      case Kind::lex: return "lex";
      case Kind::grlex: return "grlex";
      case Kind::grevlex: return "grevlex";
    }
    return "?";
  }
  static TermOrder from_name(const std::string& s) {
    if (s == "lex") return lex();
    if (s == "grlex") return grlex();
    if (s == "grevlex") return grevlex();
    throw std::invalid_argument("unknown term order: " + s);
  }

  friend bool operator==(const TermOrder& a, const TermOrder& b) {
    return a.kind == b.kind && a.priority == b.priority;
  }
};

/// Variable names plus the ring's term order. Shared by every polynomial of
/// the ring; mismatching contexts are an error on arithmetic.
struct RingCtx {
  std::vector<std::string> vars;
  TermOrder order;

  size_t nvars() const { return vars.size(); }
  friend bool operator==(const RingCtx& a, const RingCtx& b) {
    return a.vars == b.vars && a.order == b.order;
  }
};

using RingCtxPtr = std::shared_ptr<const RingCtx>;

inline RingCtxPtr make_ring(std::vector<std::string> vars, TermOrder order = TermOrder::grevlex()) {
  return std::make_shared<const RingCtx>(RingCtx{std::move(vars), order});
}

inline void check_same_ring(const RingCtxPtr& a, const RingCtxPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw std::invalid_argument("ring context mismatch");
}

}  // namespace invariants

#endif
