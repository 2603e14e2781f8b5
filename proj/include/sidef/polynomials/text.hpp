#pragma once

#include <string>
#include <string_view>

#include "sidef/polynomials/poly.hpp"

namespace sidef {

/// Parses comma-separated rationals ascending in degree: "-2,0,4" is 4z^2 - 2.
RPoly parse_poly(std::string_view text);

/// Inverse of parse_poly. The zero polynomial prints as "0".
std::string format_poly(const RPoly& p);

}  // namespace sidef
