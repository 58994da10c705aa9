#pragma once

#include <string>
#include <string_view>

#include "lexseg/monomial.hpp"

namespace lexseg {

// Parses "x1*x3^2" (factors joined by '*', optional '^exponent', whitespace
// ignored, repeated variables summed) or a bracketed exponent vector
// "[1,0,2]". Throws parse_error with the byte offset of the first problem,
// including variable indices above n.
Monomial parse_monomial(std::string_view text, int n);

// Canonical form: factors ascending by variable index, '^' only above
// exponent 1, "1" for the unit. parse_monomial(print_monomial(m), n) == m.
std::string print_monomial(const Monomial& m);

} // namespace lexseg
