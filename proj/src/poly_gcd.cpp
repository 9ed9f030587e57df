#include "invariants/poly_gcd.hpp"

#include <map>
#include <random>

namespace invariants {

namespace {

// Views of p as a univariate polynomial in variable v with polynomial
// coefficients (carried in the same ring context, v-exponent zero).
std::map<int, Poly> as_univariate(const Poly& p, size_t v) {
  std::map<int, Poly> u;
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    int e = rest.e[v];
    rest.e[v] = 0;
    auto it = u.find(e);
    if (it == u.end()) it = u.emplace(e, Poly(p.ctx())).first;
    it->second.add_term(rest, c);
  }
  return u;
}

int deg_in(const Poly& p, size_t v) { return p.degree_in(v); }

Poly lead_coeff_in(const Poly& p, size_t v) {
  int d = deg_in(p, v);
  Poly lc(p.ctx());
  for (const auto& [m, c] : p.terms()) {
    if (m.e[v] != d) continue;
    Monomial rest = m;
    rest.e[v] = 0;
    lc.add_term(rest, c);
  }
  return lc;
}

Poly shift_var(const Poly& p, size_t v, int e) {
  Poly r(p.ctx());
  for (const auto& [m, c] : p.terms()) {
    Monomial mm = m;
    mm.e[v] += e;
    r.add_term(mm, c);
  }
  return r;
}

// Pseudo-remainder: lc(b, v)^(deg a - deg b + 1) * a = q*b + prem.
Poly prem(const Poly& a, const Poly& b, size_t v) {
  Poly r = a;
  const Poly l = lead_coeff_in(b, v);
  const int db = deg_in(b, v);
  int n = deg_in(r, v) - db + 1;
  while (!r.is_zero() && deg_in(r, v) >= db) {
    Poly lr = lead_coeff_in(r, v);
    int shift = deg_in(r, v) - db;
    r = l * r - shift_var(lr * b, v, shift);
    --n;
  }
  for (; n > 0; --n) r = l * r;
  return r;
}

Poly monic_normalize(const Poly& p) {
  if (p.is_zero()) return p;
  return p.monic(p.ctx()->order);
}

Poly content_in(const Poly& p, size_t v) {
  auto u = as_univariate(p, v);
  Poly g(p.ctx());
  for (const auto& [e, coeff] : u) {
    g = poly_gcd(g, coeff);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

// Single-term fast path: gcd with a monomial is the shared monomial part.
Poly monomial_gcd(const Poly& mono, const Poly& other) {
  Monomial g = mono.terms().begin()->first;
  for (const auto& [m, c] : other.terms())
    for (size_t i = 0; i < g.e.size(); ++i) g.e[i] = std::min(g.e[i], m.e[i]);
  return Poly::term(mono.ctx(), g, Cyclotomic(1));
}

using CPoly = std::vector<Cyclotomic>;  // dense univariate over the field

int cdeg(const CPoly& p) {
  int d = static_cast<int>(p.size()) - 1;
  while (d >= 0 && p[static_cast<size_t>(d)].is_zero()) --d;
  return d;
}

// Univariate image of p in v at an integer point for the other variables.
CPoly univariate_image(const Poly& p, size_t v, const std::vector<Cyclotomic>& point) {
  CPoly out(static_cast<size_t>(p.degree_in(v)) + 1, Cyclotomic(0));
  for (const auto& [m, c] : p.terms()) {
    Cyclotomic t = c;
    for (size_t i = 0; i < point.size(); ++i) {
      if (i == v) continue;
      for (int k = 0; k < m.e[i]; ++k) t *= point[i];
    }
    out[static_cast<size_t>(m.e[v])] += t;
  }
  return out;
}

int euclid_gcd_degree(CPoly a, CPoly b) {
  while (true) {
    int db = cdeg(b);
    if (db < 0) return cdeg(a);
    int da = cdeg(a);
    if (da < db) {
      std::swap(a, b);
      continue;
    }
    Cyclotomic inv = b[static_cast<size_t>(db)].inverse();
    for (int k = da; k >= db; --k) {
      Cyclotomic c = a[static_cast<size_t>(k)];
      if (c.is_zero()) continue;
      c *= inv;
      for (int i = 0; i <= db; ++i)
        a[static_cast<size_t>(k - db + i)] -= c * b[static_cast<size_t>(i)];
    }
    std::swap(a, b);
  }
}

// Sound degree bound: when the evaluation keeps both leading v-coefficients
// alive, deg_v(gcd) <= deg(gcd of the evaluated univariates). Returns -1
// when every attempt degenerated.
int probe_gcd_degree(const Poly& a, const Poly& b, size_t v, std::mt19937& rng) {
  const int da = a.degree_in(v), db = b.degree_in(v);
  std::uniform_int_distribution<long> dist(-997, 997);
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<Cyclotomic> point;
    point.reserve(a.ctx()->nvars());
    for (size_t i = 0; i < a.ctx()->nvars(); ++i) point.emplace_back(dist(rng));
    CPoly ua = univariate_image(a, v, point);
    CPoly ub = univariate_image(b, v, point);
    if (cdeg(ua) != da || cdeg(ub) != db) continue;
    return euclid_gcd_degree(std::move(ua), std::move(ub));
  }
  return -1;
}

// ---- Heuristic gcd (evaluate at a large integer, reconstruct base-xi
// digits, verify by trial division) for polynomials with rational
// coefficients. Sound: only returns after both trial divisions succeed.

bool all_rational(const Poly& p) {
  for (const auto& [m, c] : p.terms())
    if (!c.is_rational()) return false;
  return true;
}

// Clears denominators and strips the integer content in one go; the sign is
// normalized away (primitive part with positive content).
Poly integer_normalize(const Poly& p) {
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational r = c.as_rational();
    mpz_class d = r.denominator();
    den_lcm = den_lcm / gcd(den_lcm, d) * d;
  }
  Poly cleared = p.scaled(Cyclotomic(Rational(den_lcm)));
  for (const auto& [m, c] : cleared.terms()) {
    mpz_class n = c.as_rational().numerator();
    num_gcd = gcd(num_gcd, n);
  }
  if (num_gcd > 1)
    cleared = cleared.scaled(Cyclotomic(Rational(mpq_class(mpz_class(1), num_gcd))));
  return cleared;
}

// Integer content (positive) of an integer-coefficient polynomial.
mpz_class icontent(const Poly& p) {
  mpz_class g = 0;
  for (const auto& [m, c] : p.terms()) g = gcd(g, c.as_rational().numerator());
  return abs(g);
}

mpz_class height_of(const Poly& p) {
  mpz_class h = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_class a = abs(c.as_rational().numerator());
    if (a > h) h = a;
  }
  return h;
}

Poly eval_var(const Poly& p, size_t v, const mpz_class& xi) {
  Poly out(p.ctx());
  for (const auto& [m, c] : p.terms()) {
    Monomial mm = m;
    mm.e[v] = 0;
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), xi.get_mpz_t(), static_cast<unsigned long>(m.e[v]));
    out.add_term(mm, c * Cyclotomic(Rational(scale)));
  }
  return out;
}

// Base-xi digit reconstruction with symmetric remainders, coefficient-wise.
Poly reconstruct(Poly gamma, size_t v, const mpz_class& xi) {
  Poly g(gamma.ctx());
  const mpz_class half = xi / 2;
  int e = 0;
  while (!gamma.is_zero()) {
    Poly digit(gamma.ctx());
    for (const auto& [m, c] : gamma.terms()) {
      mpz_class r = c.as_rational().numerator() % xi;
      if (r > half) r -= xi;
      if (r <= -half) r += xi;
      if (r != 0) digit.add_term(m, Cyclotomic(Rational(r)));
    }
    for (const auto& [m, c] : digit.terms()) {
      Monomial mm = m;
      mm.e[v] = e;
      g.add_term(mm, c);
    }
    gamma = (gamma - digit).scaled(Cyclotomic(Rational(mpq_class(mpz_class(1), xi))));
    ++e;
  }
  return g;
}

bool divides_exactly(const Poly& d, const Poly& p) {
  if (d.is_zero()) return p.is_zero();
  try {
    exact_div(p, d);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

// Exact gcd over Z[x_1..x_n]: the integer contents are gcd'd separately at
// every level (they carry the base-xi digits of the level above), evaluation
// reduces the variable count, and candidates are certified by trial
// division of the primitive parts.
std::optional<Poly> heuristic_gcd_z(const Poly& a0, const Poly& b0, int depth = 0) {
  if (a0.is_zero() || b0.is_zero() || depth > 8) return std::nullopt;
  mpz_class ca = icontent(a0), cb = icontent(b0);
  mpz_class c = gcd(ca, cb);
  Poly a = a0.scaled(Cyclotomic(Rational(mpq_class(mpz_class(1), ca))));
  Poly b = b0.scaled(Cyclotomic(Rational(mpq_class(mpz_class(1), cb))));
  const Poly content_part = Poly::constant(a.ctx(), Cyclotomic(Rational(c)));

  int var = -1;
  for (size_t v = a.ctx()->nvars(); v-- > 0;) {
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) {
      var = static_cast<int>(v);
      break;
    }
  }
  if (var < 0) return content_part;  // both constant
  const size_t v = static_cast<size_t>(var);

  mpz_class ha = height_of(a), hb = height_of(b);
  mpz_class xi = 2 * (ha < hb ? ha : hb) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Poly av = eval_var(a, v, xi);
    Poly bv = eval_var(b, v, xi);
    if (auto gamma = heuristic_gcd_z(av, bv, depth + 1)) {
      Poly g = reconstruct(std::move(*gamma), v, xi);
      if (!g.is_zero()) {
        mpz_class gc = icontent(g);
        if (gc > 1) g = g.scaled(Cyclotomic(Rational(mpq_class(mpz_class(1), gc))));
        if (divides_exactly(g, a) && divides_exactly(g, b)) return content_part * g;
      }
    }
    xi = xi * 73794 / 27011 + 17;  // conventional irrational-ish growth
  }
  return std::nullopt;
}

Poly subresultant_gcd(Poly f1, Poly f2, size_t v) {
  if (deg_in(f1, v) < deg_in(f2, v)) std::swap(f1, f2);
  Poly g = poly_one(f1.ctx());
  Poly h = poly_one(f1.ctx());
  while (true) {
    int delta = deg_in(f1, v) - deg_in(f2, v);
    Poly r = prem(f1, f2, v);
    if (r.is_zero()) return f2;
    if (deg_in(r, v) == 0) return r;
    f1 = f2;
    // f2 = r / (g * h^delta), exact in the subresultant PRS.
    Poly denom = g;
    if (delta >= 1) denom = denom * h.pow(delta);
    f2 = exact_div(r, denom);
    g = lead_coeff_in(f1, v);
    if (delta >= 1) h = delta == 1 ? g : exact_div(g.pow(delta), h.pow(delta - 1));
  }
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return monic_normalize(b);
  if (b.is_zero()) return monic_normalize(a);
  check_same_ring(a.ctx(), b.ctx());
  if (a.is_constant() || b.is_constant()) return poly_one(a.ctx());
  if (a == b) return monic_normalize(a);
  if (a.term_count() == 1) return monomial_gcd(a, b);
  if (b.term_count() == 1) return monomial_gcd(b, a);

  // Main variable: present in both operands, smallest univariate degree.
  const size_t n = a.ctx()->nvars();
  int best = -1, best_min = 0;
  for (size_t v = 0; v < n; ++v) {
    int da = deg_in(a, v), db = deg_in(b, v);
    if (da > 0 && db > 0 && (best < 0 || std::min(da, db) < best_min)) {
      best = static_cast<int>(v);
      best_min = std::min(da, db);
    }
  }
  if (best < 0) {
    // No shared variable: strip one one-sided variable via its content.
    for (size_t v = 0; v < n; ++v) {
      if (deg_in(a, v) > 0) return monic_normalize(poly_gcd(content_in(a, v), b));
      if (deg_in(b, v) > 0) return monic_normalize(poly_gcd(a, content_in(b, v)));
    }
    return poly_one(a.ctx());
  }
  const size_t v = static_cast<size_t>(best);

  static thread_local std::mt19937 rng(0x9e3779b9u);

  // Gcds of mutual cofactors are constant exactly when g was maximal; the
  // degree probe proves constancy cheaply.
  auto certified_coprime = [&](const Poly& u, const Poly& w) {
    for (size_t vv = 0; vv < n; ++vv) {
      if (u.degree_in(vv) == 0 || w.degree_in(vv) == 0) continue;
      if (probe_gcd_degree(u, w, vv, rng) != 0) return false;
    }
    return true;
  };

  if (all_rational(a) && all_rational(b)) {
    Poly ia = integer_normalize(a), ib = integer_normalize(b);
    if (auto g0 = heuristic_gcd_z(ia, ib)) {
      Poly g = *g0;
      bool certified = false;
      while (true) {
        Poly qa = exact_div(ia, g);
        Poly qb = exact_div(ib, g);
        if (certified_coprime(qa, qb)) {
          certified = true;
          break;
        }
        if (g.is_constant()) break;  // probes inconclusive; fall through to PRS
        Poly e = poly_gcd(qa, qb);
        if (e.is_constant()) {
          certified = true;
          break;
        }
        g = g * e;
      }
      if (certified) return monic_normalize(g);
    }
  }

  // Evaluation probe: a degree-zero univariate gcd at a good point proves
  // the primitive parts coprime, leaving only the contents.
  const int bound = probe_gcd_degree(a, b, v, rng);
  if (bound == 0)
    return monic_normalize(poly_gcd(content_in(a, v), content_in(b, v)));
  if (bound > 0 && bound == std::min(deg_in(a, v), deg_in(b, v))) {
    // Full-degree bound: the smaller operand may simply divide the larger.
    const Poly& small = deg_in(a, v) <= deg_in(b, v) ? a : b;
    const Poly& large = deg_in(a, v) <= deg_in(b, v) ? b : a;
    try {
      exact_div(large, small);
      return monic_normalize(small);
    } catch (const std::domain_error&) {
    }
  }

  Poly ca = content_in(a, v);
  Poly cb = content_in(b, v);
  Poly pa = exact_div(a, ca);
  Poly pb = exact_div(b, cb);
  Poly c = poly_gcd(ca, cb);
  Poly r = subresultant_gcd(pa, pb, v);
  Poly pp = deg_in(r, v) == 0 ? poly_one(a.ctx()) : exact_div(r, content_in(r, v));
  return monic_normalize(c * pp);
}

}  // namespace invariants
