#ifndef INVARIANTS_POLY_GCD_HPP
#define INVARIANTS_POLY_GCD_HPP

#include "invariants/polynomial.hpp"

namespace invariants {

/// Monic multivariate gcd over the coefficient field, computed on the
/// recursive univariate representation with content extraction and a
/// subresultant PRS on primitive parts. gcd(0, b) is b normalized monic.
Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace invariants

#endif
