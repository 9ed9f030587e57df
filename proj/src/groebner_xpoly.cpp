#include "invariants/groebner.hpp"
#include "invariants/poly_gcd.hpp"

namespace invariants {

namespace {

// X-polynomial with cleared denominators: coefficients in k[x].
using PPoly = MPoly<Poly>;

Poly coeff_content(const PPoly& f) {
  Poly g(f.terms().begin()->second.ctx());
  for (const auto& [m, c] : f.terms()) {
    g = poly_gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

// The polynomial gcd is monic, so the rational scale must be stripped
// separately or integer growth compounds across reduction steps.
Rational scalar_content(const PPoly& f) {
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : f.terms())
    for (const auto& [mm, cc] : c.terms())
      for (const auto& r : cc.coeffs()) {
        if (r.is_zero()) continue;
        num_gcd = gcd(num_gcd, r.numerator());
        mpz_class d = r.denominator();
        den_lcm = den_lcm / gcd(den_lcm, d) * d;
      }
  if (num_gcd == 0) return Rational(1);
  return Rational(mpq_class(num_gcd, den_lcm));
}

PPoly strip_content(const PPoly& f) {
  if (f.is_zero()) return f;
  Poly g = coeff_content(f);
  Rational s = scalar_content(f);
  Cyclotomic inv_s = Cyclotomic(s).inverse();
  PPoly out(f.ctx());
  if (g.is_constant()) {
    if (s.is_one()) return f;
    for (const auto& [m, c] : f.terms()) out.add_term(m, c.scaled(inv_s));
    return out;
  }
  for (const auto& [m, c] : f.terms()) out.add_term(m, exact_div(c, g).scaled(inv_s));
  return out;
}

PPoly clear_denominators(const XPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("cannot clear the zero polynomial");
  const RingCtxPtr xctx = f.terms().begin()->second.ctx();
  Poly lcm = poly_one(xctx);
  for (const auto& [m, c] : f.terms()) {
    Poly g = poly_gcd(lcm, c.den());
    lcm = lcm * exact_div(c.den(), g);
  }
  PPoly out(f.ctx());
  for (const auto& [m, c] : f.terms())
    out.add_term(m, c.num() * exact_div(lcm, c.den()));
  return strip_content(out);
}

XPoly to_monic_xpoly(const PPoly& f, const TermOrder& order) {
  auto [lm, lc] = f.leading(order);
  XPoly out(f.ctx());
  for (const auto& [m, c] : f.terms()) out.add_term(m, RatFunc(c, lc));
  return out;
}

// Fraction-free reduction: multiplies through by divisor leading
// coefficients instead of dividing. Irreducible terms accumulate in `out`,
// which is rescaled together with the pending part so the result stays a
// k[x]-multiple of the true normal form; the shared content is stripped
// periodically. Returns the primitive normal form of f.
PPoly ff_reduce(PPoly f, const std::vector<PPoly>& basis,
                const std::vector<std::pair<Monomial, Poly>>& leads,
                const TermOrder& order) {
  PPoly out(f.ctx());
  int steps_since_strip = 0;
  auto joint_strip = [&] {
    if (f.is_zero() && out.is_zero()) return;
    Poly g(f.terms().empty() ? out.terms().begin()->second.ctx()
                             : f.terms().begin()->second.ctx());
    bool nontrivial = true;
    for (const auto& [m, c] : f.terms()) {
      g = poly_gcd(g, c);
      if (g.is_constant() && !g.is_zero()) {
        nontrivial = false;
        break;
      }
    }
    if (nontrivial)
      for (const auto& [m, c] : out.terms()) {
        g = poly_gcd(g, c);
        if (g.is_constant() && !g.is_zero()) {
          nontrivial = false;
          break;
        }
      }
    // Joint rational scale across both parts.
    mpz_class num_gcd = 0, den_lcm = 1;
    auto scan = [&](const PPoly& p) {
      for (const auto& [m, c] : p.terms())
        for (const auto& [mm, cc] : c.terms())
          for (const auto& r : cc.coeffs()) {
            if (r.is_zero()) continue;
            num_gcd = gcd(num_gcd, r.numerator());
            mpz_class d = r.denominator();
            den_lcm = den_lcm / gcd(den_lcm, d) * d;
          }
    };
    scan(f);
    scan(out);
    Rational s = num_gcd == 0 ? Rational(1) : Rational(mpq_class(num_gcd, den_lcm));
    if (!nontrivial && s.is_one()) return;
    Cyclotomic inv_s = Cyclotomic(s).inverse();
    PPoly nf(f.ctx()), no(out.ctx());
    for (const auto& [m, c] : f.terms())
      nf.add_term(m, (nontrivial ? exact_div(c, g) : c).scaled(inv_s));
    for (const auto& [m, c] : out.terms())
      no.add_term(m, (nontrivial ? exact_div(c, g) : c).scaled(inv_s));
    f = std::move(nf);
    out = std::move(no);
  };
  while (!f.is_zero()) {
    auto [lm, lc] = f.leading(order);
    bool reduced = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      if (!leads[i].first.divides(lm)) continue;
      Monomial shift = lm / leads[i].first;
      // lc(b) * f - lc(f) * X^shift * b cancels the leading term exactly.
      f = f.scaled(leads[i].second) - basis[i].mul_term(shift, lc);
      if (!out.is_zero()) out = out.scaled(leads[i].second);
      if (++steps_since_strip >= 1) {
        joint_strip();
        steps_since_strip = 0;
      }
      reduced = true;
      break;
    }
    if (!reduced) {
      out.add_term(lm, lc);
      f.add_term(lm, -lc);
    }
  }
  return strip_content(out);
}

}  // namespace

std::vector<XPoly> buchberger(const std::vector<XPoly>& gens, const TermOrder& order) {
  std::vector<PPoly> g;
  for (const auto& f : gens) {
    if (f.is_zero()) continue;
    PPoly p = clear_denominators(f);
    if (std::find(g.begin(), g.end(), p) == g.end()) g.push_back(std::move(p));
  }
  if (g.empty()) throw std::invalid_argument("buchberger: no nonzero generators");

  auto lead_of = [&](const PPoly& p) { return p.leading(order); };
  std::vector<std::pair<Monomial, Poly>> leads;
  for (const auto& p : g) leads.push_back(lead_of(p));

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
      Monomial l = Monomial::lcm(leads[i].first, leads[j].first);
      queue.insert(PairKey{l.degree(), l, i, j});
    }
  };
  for (size_t j = 1; j < g.size(); ++j) push_pairs(j);

  while (!queue.empty()) {
    PairKey p = *queue.begin();
    queue.erase(queue.begin());
    handled.insert({p.i, p.j});
    if (Monomial::coprime(leads[p.i].first, leads[p.j].first)) continue;
    bool chain = false;
    for (size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!leads[k].first.divides(p.lcm)) continue;
      auto mk = [](size_t a, size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (handled.count(mk(p.i, k)) && handled.count(mk(p.j, k))) chain = true;
    }
    if (chain) continue;
    // Fraction-free S-polynomial.
    Monomial si = p.lcm / leads[p.i].first;
    Monomial sj = p.lcm / leads[p.j].first;
    PPoly s = g[p.i].mul_term(si, leads[p.j].second) - g[p.j].mul_term(sj, leads[p.i].second);
    if (s.is_zero()) continue;
    PPoly r = ff_reduce(std::move(s), g, leads, order);
    if (r.is_zero()) continue;
    g.push_back(r);
    leads.push_back(lead_of(g.back()));
    push_pairs(g.size() - 1);
  }

  // Minimal basis.
  std::vector<size_t> idx(g.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    int c = order.cmp(leads[a].first, leads[b].first);
    return c != 0 ? c < 0 : a < b;
  });
  std::vector<PPoly> minimal;
  std::vector<std::pair<Monomial, Poly>> min_leads;
  for (size_t i : idx) {
    bool redundant = false;
    for (const auto& kept : min_leads)
      if (kept.first.divides(leads[i].first)) {
        redundant = true;
        break;
      }
    if (!redundant) {
      minimal.push_back(g[i]);
      min_leads.push_back(leads[i]);
    }
  }

  // Tail reduction, then conversion to monic K-coefficients.
  std::vector<XPoly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<PPoly> others;
    std::vector<std::pair<Monomial, Poly>> other_leads;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) {
        others.push_back(minimal[j]);
        other_leads.push_back(min_leads[j]);
      }
    PPoly r = others.empty() ? minimal[i]
                             : ff_reduce(minimal[i], others, other_leads, order);
    reduced.push_back(to_monic_xpoly(r, order));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const XPoly& a, const XPoly& b) {
    return order.cmp(a.leading(order).first, b.leading(order).first) < 0;
  });
  return reduced;
}

}  // namespace invariants
