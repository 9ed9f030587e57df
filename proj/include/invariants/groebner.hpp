#ifndef INVARIANTS_GROEBNER_HPP
#define INVARIANTS_GROEBNER_HPP

#include <algorithm>
#include <optional>
#include <set>

#include "invariants/polynomial.hpp"
#include "invariants/rational_function.hpp"

namespace invariants {

template <class F>
MPoly<F> spoly(const MPoly<F>& f, const MPoly<F>& g, const TermOrder& order) {
  auto [lf, cf] = f.leading(order);
  auto [lg, cg] = g.leading(order);
  Monomial l = Monomial::lcm(lf, lg);
  return f.mul_term(l / lf, cg) - g.mul_term(l / lg, cf);
}

/// Buchberger's algorithm with the normal selection strategy and the
/// coprime-lcm and chain criteria. Returns the reduced Groebner basis:
/// minimal, inter-reduced, monic, sorted by leading monomial ascending.
/// Runs single-threaded; the reduced basis is unique for the ideal and
/// order, so recomputation after input shuffling yields an identical set.
template <class F>
std::vector<MPoly<F>> buchberger(const std::vector<MPoly<F>>& gens, const TermOrder& order) {
  std::vector<MPoly<F>> g;
  for (const auto& f : gens) {
    if (f.is_zero()) continue;
    MPoly<F> m = f.monic(order);
    if (std::find(g.begin(), g.end(), m) == g.end()) g.push_back(std::move(m));
  }
  if (g.empty()) throw std::invalid_argument("buchberger: no nonzero generators");

  struct PairKey {
    int deg;
    Monomial lcm;
    size_t i, j;
  };
  auto key_less = [&order](const PairKey& a, const PairKey& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = order.cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::set<PairKey, decltype(key_less)> queue(key_less);
  std::set<std::pair<size_t, size_t>> handled;
  auto push_pairs = [&](size_t j) {
    for (size_t i = 0; i < j; ++i) {
      Monomial l = Monomial::lcm(g[i].leading(order).first, g[j].leading(order).first);
      queue.insert(PairKey{l.degree(), l, i, j});
    }
  };
  for (size_t j = 1; j < g.size(); ++j) push_pairs(j);

  while (!queue.empty()) {
    PairKey p = *queue.begin();
    queue.erase(queue.begin());
    handled.insert({p.i, p.j});
    const Monomial& li = g[p.i].leading(order).first;
    const Monomial& lj = g[p.j].leading(order).first;
    if (Monomial::coprime(li, lj)) continue;  // Buchberger's first criterion
    bool chain = false;  // second criterion
    for (size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!g[k].leading(order).first.divides(p.lcm)) continue;
      auto mk = [&](size_t a, size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (handled.count(mk(p.i, k)) && handled.count(mk(p.j, k))) chain = true;
    }
    if (chain) continue;
    MPoly<F> s = spoly(g[p.i], g[p.j], order);
    MPoly<F> r = divide(s, g, order).remainder;
    if (r.is_zero()) continue;
    g.push_back(r.monic(order));
    push_pairs(g.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial is divisible by the
  // leading monomial of another kept element.
  std::vector<size_t> idx(g.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    int c = order.cmp(g[a].leading(order).first, g[b].leading(order).first);
    return c != 0 ? c < 0 : a < b;
  });
  std::vector<MPoly<F>> minimal;
  for (size_t i : idx) {
    Monomial lm = g[i].leading(order).first;
    bool redundant = false;
    for (const auto& kept : minimal)
      if (kept.leading(order).first.divides(lm)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g[i]);
  }

  // Inter-reduce tails against the other members, then normalize.
  std::vector<MPoly<F>> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MPoly<F>> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    MPoly<F> r = others.empty() ? minimal[i] : divide(minimal[i], others, order).remainder;
    reduced.push_back(r.monic(order));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const MPoly<F>& a, const MPoly<F>& b) {
    return order.cmp(a.leading(order).first, b.leading(order).first) < 0;
  });
  return reduced;
}

/// Specialization for K[X_1..X_n] with K = k(x_1..x_n): coefficient swell
/// makes the generic route impractical, so S-polynomials and reductions run
/// fraction-free over k[x] coefficients with content stripping, and only the
/// final basis is normalized back to monic K-coefficients. The output is the
/// same unique reduced Groebner basis.
std::vector<XPoly> buchberger(const std::vector<XPoly>& gens, const TermOrder& order);

/// Monomials outside the initial ideal of a Groebner basis, ascending under
/// the order; nullopt when infinitely many (the quotient is not
/// finite-dimensional).
template <class F>
std::optional<std::vector<Monomial>> standard_monomials(const std::vector<MPoly<F>>& gb,
                                                        const TermOrder& order) {
  if (gb.empty()) return std::nullopt;
  const size_t n = gb.front().ctx()->nvars();
  std::vector<Monomial> leads;
  for (const auto& f : gb) leads.push_back(f.leading(order).first);
  // Finite iff some pure power of every variable leads the ideal.
  std::vector<int> bound(n, -1);
  for (const auto& lm : leads) {
    int support = -1;
    bool pure = true;
    for (size_t v = 0; v < n; ++v)
      if (lm.e[v] > 0) {
        if (support >= 0) pure = false;
        support = static_cast<int>(v);
      }
    if (lm.degree() == 0) return std::vector<Monomial>{};  // unit ideal
    if (pure && support >= 0) {
      int& b = bound[static_cast<size_t>(support)];
      b = b < 0 ? lm.e[support] : std::min(b, lm.e[support]);
    }
  }
  for (int b : bound)
    if (b < 0) return std::nullopt;

  std::vector<Monomial> out;
  Monomial m(n);
  while (true) {
    bool standard = true;
    for (const auto& lm : leads)
      if (lm.divides(m)) {
        standard = false;
        break;
      }
    if (standard) out.push_back(m);
    // Odometer over the finite box.
    size_t v = 0;
    while (v < n) {
      if (++m.e[v] < bound[v]) break;
      m.e[v] = 0;
      ++v;
    }
    if (v == n) break;
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return order.cmp(a, b) < 0;
  });
  return out;
}

}  // namespace invariants

#endif
