#ifndef INVARIANTS_QPOLY_HPP
#define INVARIANTS_QPOLY_HPP

#include <utility>
#include <vector>

#include "invariants/rational.hpp"

namespace invariants {

// Dense univariate polynomial over Q, coefficients ascending by exponent.
// Normal form has no trailing zero coefficients; the zero polynomial is the
// empty vector. Internal support for cyclotomic arithmetic.
namespace qpoly {

using QPoly = std::vector<Rational>;

void trim(QPoly& p);
int deg(const QPoly& p);  // -1 for the zero polynomial (internal convention)
bool is_zero(const QPoly& p);

QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const Rational& c);

// Quotient and remainder; divisor must be nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);

// Monic gcd g together with u, v such that u*a + v*b = g.
struct ExtGcd {
  QPoly g, u, v;
};
ExtGcd gcd_ext(const QPoly& a, const QPoly& b);

}  // namespace qpoly
}  // namespace invariants

#endif
