#ifndef INVARIANTS_POLY_IO_HPP
#define INVARIANTS_POLY_IO_HPP

#include <string>
#include <string_view>

#include "invariants/rational_function.hpp"

namespace invariants {

/// Terms print in descending ring order: `c*x1^e1*...*xn^en` with `+`/`-`
/// separators; compound cyclotomic coefficients are parenthesized so the
/// output re-parses unambiguously.
std::string to_string(const Poly& p);
std::string to_string(const RatFunc& f);
std::string to_string(const XPoly& f);

/// Parses the polynomial literal grammar over the ring's variables with
/// scalars in Q(zeta_m); `z` denotes zeta_m.
Poly parse_poly(std::string_view text, const RingCtxPtr& ctx, unsigned order_m);

}  // namespace invariants

#endif
