#ifndef INVARIANTS_RATIONAL_FUNCTION_HPP
#define INVARIANTS_RATIONAL_FUNCTION_HPP

#include "invariants/poly_gcd.hpp"
#include "invariants/polynomial.hpp"

namespace invariants {

/// Quotient of two polynomials over k in the same ring context, reduced to
/// lowest terms with the denominator normalized monic under the ring's term
/// order.
class RatFunc {
 public:
  RatFunc() = default;  // empty shell for containers; not a valid value
  explicit RatFunc(Poly num);
  RatFunc(Poly num, Poly den);

  static RatFunc constant(const RingCtxPtr& ctx, const Cyclotomic& c) {
    return RatFunc(Poly::constant(ctx, c));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const RingCtxPtr& ctx() const { return num_.ctx(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc inverse() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;  // canonical form
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
  friend bool operator<(const RatFunc& a, const RatFunc& b) {
    if (a.num_ != b.num_) return a.num_ < b.num_;
    return a.den_ < b.den_;
  }

  /// max(deg num, deg den) after reduction; nullopt for zero.
  std::optional<int> height() const;

 private:
  void reduce();

  Poly num_, den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

/// Element of K[X_1..X_n]: polynomial in the X-variables whose coefficients
/// are rational functions in the x-variables.
using XPoly = MPoly<RatFunc>;

/// Lift an x-polynomial to the X-ring with the same exponents; coefficients
/// become constant rational functions over the x-ring.
XPoly to_xring(const Poly& p, const RingCtxPtr& xring);

/// The multiplication map: substitute X_j -> x_j, landing in k(V).
RatFunc xi_image(const XPoly& f, const RingCtxPtr& xctx);

/// General substitution of rational functions for the variables.
RatFunc substitute(const Poly& p, const std::vector<RatFunc>& values);

}  // namespace invariants

#endif
