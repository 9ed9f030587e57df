#ifndef INVARIANTS_SCALAR_IO_HPP
#define INVARIANTS_SCALAR_IO_HPP

#include <string>
#include <string_view>

#include "invariants/cyclotomic.hpp"

namespace invariants {

// Scalar literal grammar: signed sums of terms `c`, `c*z^e`, `z^e`, `z`,
// where c is a rational literal `p/q` or integer and z denotes zeta_m for
// the declared order m. Whitespace insensitive.
Cyclotomic parse_scalar(std::string_view text, unsigned order_m);

std::string scalar_to_string(const Cyclotomic& value);

}  // namespace invariants

#endif
