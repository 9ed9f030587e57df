#include "invariants/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "invariants/qpoly.hpp"

namespace invariants {

unsigned euler_phi(unsigned m) {
  unsigned result = m;
  unsigned n = m;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<unsigned> divisors(unsigned m) {
  std::vector<unsigned> d;
  for (unsigned i = 1; i * i <= m; ++i) {
    if (m % i == 0) {
      d.push_back(i);
      if (i != m / i) d.push_back(m / i);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

namespace {

using qpoly::QPoly;

struct CycloTable {
  unsigned m = 1;
  unsigned phi = 1;
  QPoly phi_poly;                        // Phi_m, monic of degree phi
  std::vector<std::vector<Rational>> zeta_pow;  // x^e mod Phi_m for e in [0, m)
};

QPoly cyclotomic_polynomial(unsigned m, std::map<unsigned, QPoly>& cache) {
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  // x^m - 1 divided by Phi_d for all proper divisors d.
  QPoly p(m + 1);
  p[0] = Rational(-1);
  p[m] = Rational(1);
  for (unsigned d : divisors(m)) {
    if (d == m) continue;
    auto [q, r] = qpoly::divmod(p, cyclotomic_polynomial(d, cache));
    if (!qpoly::is_zero(r)) throw std::logic_error("cyclotomic polynomial division not exact");
    p = std::move(q);
  }
  cache[m] = p;
  return p;
}

const CycloTable& table(unsigned m) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<CycloTable>> tables;
  static std::map<unsigned, QPoly> phi_cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = tables.find(m);
  if (it != tables.end()) return *it->second;
  if (m == 0) throw std::invalid_argument("cyclotomic order must be positive");
  auto t = std::make_unique<CycloTable>();
  t->m = m;
  t->phi = euler_phi(m);
  t->phi_poly = cyclotomic_polynomial(m, phi_cache);
  t->zeta_pow.resize(m);
  for (unsigned e = 0; e < m; ++e) {
    QPoly xe(e + 1);
    xe[e] = Rational(1);
    auto [q, r] = qpoly::divmod(xe, t->phi_poly);
    (void)q;
    r.resize(t->phi);
    t->zeta_pow[e] = std::move(r);
  }
  const CycloTable& ref = *t;
  tables.emplace(m, std::move(t));
  return ref;
}

std::vector<Rational> reduce_mod_phi(unsigned m, QPoly p) {
  const CycloTable& t = table(m);
  if (qpoly::deg(p) >= static_cast<int>(t.phi)) {
    auto [q, r] = qpoly::divmod(p, t.phi_poly);
    (void)q;
    p = std::move(r);
  }
  p.resize(t.phi);
  return p;
}

}  // namespace

Cyclotomic Cyclotomic::zeta(unsigned m, long e) {
  if (m == 0) throw std::invalid_argument("cyclotomic order must be positive");
  long em = e % static_cast<long>(m);
  if (em < 0) em += m;
  const CycloTable& t = table(m);
  return Cyclotomic(m, t.zeta_pow[static_cast<unsigned>(em)]);
}

Cyclotomic Cyclotomic::from_power_coeffs(unsigned m, const std::vector<Rational>& c) {
  QPoly p = c;
  qpoly::trim(p);
  return Cyclotomic(m, reduce_mod_phi(m, std::move(p)));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_one() const {
  if (!coeffs_[0].is_one()) return false;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

Rational Cyclotomic::as_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x = -x;
  return Cyclotomic(order_, std::move(c));
}

Cyclotomic Cyclotomic::to_order(unsigned M) const {
  if (M == order_) return *this;
  if (M % order_ != 0) throw std::invalid_argument("cyclotomic embedding: order must divide target");
  const CycloTable& t = table(M);
  unsigned step = M / order_;
  std::vector<Rational> out(t.phi);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const auto& row = t.zeta_pow[(i * step) % M];
    for (size_t k = 0; k < t.phi; ++k) out[k] += coeffs_[i] * row[k];
  }
  return Cyclotomic(M, std::move(out));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) {
    std::vector<Rational> c(a.coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
    return Cyclotomic(a.order_, std::move(c));
  }
  unsigned M = std::lcm(a.order_, b.order_);
  return a.to_order(M) + b.to_order(M);
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) {
    QPoly pa = a.coeffs_, pb = b.coeffs_;
    qpoly::trim(pa);
    qpoly::trim(pb);
    return Cyclotomic(a.order_, reduce_mod_phi(a.order_, qpoly::mul(pa, pb)));
  }
  unsigned M = std::lcm(a.order_, b.order_);
  return a.to_order(M) * b.to_order(M);
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero();
  const CycloTable& t = table(order_);
  QPoly p = coeffs_;
  qpoly::trim(p);
  auto ext = qpoly::gcd_ext(p, t.phi_poly);
  if (qpoly::deg(ext.g) != 0) throw std::logic_error("cyclotomic inverse: gcd with Phi_m not constant");
  // g is monic constant 1, so u is the inverse mod Phi_m.
  return Cyclotomic(order_, reduce_mod_phi(order_, ext.u));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

Cyclotomic Cyclotomic::galois(unsigned j) const {
  unsigned jm = j % order_;
  if (order_ > 1 && std::gcd(jm, order_) != 1)
    throw std::invalid_argument("galois exponent not coprime to order");
  const CycloTable& t = table(order_);
  std::vector<Rational> out(t.phi);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const auto& row = t.zeta_pow[(i * jm) % order_];
    for (size_t k = 0; k < t.phi; ++k) out[k] += coeffs_[i] * row[k];
  }
  return Cyclotomic(order_, std::move(out));
}

unsigned Cyclotomic::smallest_order() const {
  for (unsigned d : divisors(order_)) {
    bool fixed = true;
    for (unsigned j = 1; j < order_ && fixed; ++j) {
      if (std::gcd(j, order_) != 1) continue;
      if (j % d != 1 % d) continue;
      if (galois(j) != *this) fixed = false;
    }
    if (fixed) return d;
  }
  return order_;
}

Cyclotomic Cyclotomic::reduce_order() const {
  unsigned d = smallest_order();
  if (d == order_) return *this;
  // Solve for coordinates of *this on the embedded power basis of Q(zeta_d).
  unsigned phi_d = euler_phi(d);
  unsigned phi_m = euler_phi(order_);
  std::vector<Cyclotomic> basis;
  basis.reserve(phi_d);
  for (unsigned i = 0; i < phi_d; ++i)
    basis.push_back(Cyclotomic::zeta(d, static_cast<long>(i)).to_order(order_));
  // Gaussian elimination on the phi_m x (phi_d + 1) system over Q.
  std::vector<std::vector<Rational>> aug(phi_m, std::vector<Rational>(phi_d + 1));
  for (unsigned r = 0; r < phi_m; ++r) {
    for (unsigned c = 0; c < phi_d; ++c) aug[r][c] = basis[c].coeffs()[r];
    aug[r][phi_d] = coeffs_[r];
  }
  unsigned row = 0;
  std::vector<int> pivot_col(phi_d, -1);
  for (unsigned col = 0; col < phi_d && row < phi_m; ++col) {
    unsigned sel = row;
    while (sel < phi_m && aug[sel][col].is_zero()) ++sel;
    if (sel == phi_m) continue;
    std::swap(aug[sel], aug[row]);
    Rational inv = aug[row][col].inverse();
    for (unsigned c = col; c <= phi_d; ++c) aug[row][c] *= inv;
    for (unsigned r = 0; r < phi_m; ++r) {
      if (r == row || aug[r][col].is_zero()) continue;
      Rational f = aug[r][col];
      for (unsigned c = col; c <= phi_d; ++c) aug[r][c] -= f * aug[row][c];
    }
    pivot_col[col] = static_cast<int>(row);
    ++row;
  }
  std::vector<Rational> sol(phi_d);
  for (unsigned c = 0; c < phi_d; ++c)
    if (pivot_col[c] >= 0) sol[c] = aug[static_cast<unsigned>(pivot_col[c])][phi_d];
  Cyclotomic out = Cyclotomic::from_power_coeffs(d, sol);
  if (out.to_order(order_) != *this) throw std::logic_error("order reduction failed");
  return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  unsigned M = std::lcm(a.order_, b.order_);
  return a.to_order(M).coeffs_ == b.to_order(M).coeffs_;
}

bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
  unsigned M = std::lcm(a.order_, b.order_);
  const auto ca = a.order_ == M ? a.coeffs_ : a.to_order(M).coeffs_;
  const auto cb = b.order_ == M ? b.coeffs_ : b.to_order(M).coeffs_;
  for (size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] != cb[i]) return ca[i] < cb[i];
  }
  return false;
}

}  // namespace invariants
