#ifndef INVARIANTS_CYCLOTOMIC_HPP
#define INVARIANTS_CYCLOTOMIC_HPP

#include <vector>

#include "invariants/rational.hpp"

namespace invariants {

unsigned euler_phi(unsigned m);
std::vector<unsigned> divisors(unsigned m);

/// Exact element of the cyclotomic field Q(zeta_m), stored on the power basis
/// 1, zeta, ..., zeta^(phi(m)-1) reduced modulo the m-th cyclotomic
/// polynomial. Representation is canonical, so equality is coefficient-wise
/// after embedding both operands into the compound order lcm(order, order).
/// Values are immutable; all operations are pure.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), coeffs_(1) {}
  Cyclotomic(const Rational& r) : order_(1), coeffs_{r} {}
  Cyclotomic(long n) : order_(1), coeffs_{Rational(n)} {}

  static Cyclotomic zeta(unsigned m, long e);
  // Coefficients w.r.t. powers of zeta_m, any length; reduced mod Phi_m.
  static Cyclotomic from_power_coeffs(unsigned m, const std::vector<Rational>& c);

  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational as_rational() const;  // throws std::domain_error if not rational

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }

  Cyclotomic inverse() const;  // throws DivisionByZero on zero

  // Image under the Galois automorphism zeta_m -> zeta_m^j; gcd(j, m) must
  // be 1.
  Cyclotomic galois(unsigned j) const;
  // Embed into Q(zeta_M); order() must divide M.
  Cyclotomic to_order(unsigned M) const;
  // Smallest m' | order() with the value in Q(zeta_m'), and the value
  // rewritten there. Optional normalization, not applied by arithmetic.
  unsigned smallest_order() const;
  Cyclotomic reduce_order() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }
  // Total order on canonical representatives (for deterministic containers).
  friend bool operator<(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(unsigned m, std::vector<Rational> c) : order_(m), coeffs_(std::move(c)) {}

  unsigned order_;
  std::vector<Rational> coeffs_;  // length euler_phi(order_)
};

inline bool is_zero(const Cyclotomic& c) { return c.is_zero(); }

}  // namespace invariants

#endif
