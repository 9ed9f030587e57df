#include "invariants/qpoly.hpp"

namespace invariants::qpoly {

void trim(QPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

bool is_zero(const QPoly& p) { return p.empty(); }

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  trim(r);
  return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  trim(r);
  return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly scale(const QPoly& a, const Rational& c) {
  if (c.is_zero()) return {};
  QPoly r = a;
  for (auto& x : r) x *= c;
  return r;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.empty()) throw DivisionByZero();
  QPoly rem = a;
  trim(rem);
  if (deg(rem) < deg(b)) return {{}, rem};
  QPoly quo(rem.size() - b.size() + 1);
  const Rational lead_inv = b.back().inverse();
  for (int k = deg(rem); k >= deg(b); --k) {
    if (rem.size() <= static_cast<size_t>(k) || rem[k].is_zero()) continue;
    Rational c = rem[k] * lead_inv;
    quo[k - deg(b)] = c;
    for (size_t i = 0; i < b.size(); ++i) rem[k - deg(b) + i] -= c * b[i];
  }
  trim(rem);
  trim(quo);
  return {quo, rem};
}

ExtGcd gcd_ext(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  trim(r0);
  trim(r1);
  QPoly u0 = {Rational(1)}, u1 = {};
  QPoly v0 = {}, v1 = {Rational(1)};
  while (!r1.empty()) {
    auto [q, r2] = divmod(r0, r1);
    QPoly u2 = sub(u0, mul(q, u1));
    QPoly v2 = sub(v0, mul(q, v1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (!r0.empty() && !r0.back().is_one()) {
    Rational inv = r0.back().inverse();
    r0 = scale(r0, inv);
    u0 = scale(u0, inv);
    v0 = scale(v0, inv);
  }
  return {r0, u0, v0};
}

}  // namespace invariants::qpoly
