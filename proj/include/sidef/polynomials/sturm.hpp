#pragma once

#include <cstddef>
#include <vector>

#include "sidef/polynomials/interval.hpp"
#include "sidef/polynomials/poly.hpp"

namespace sidef {

/// Sturm sequence p, p', -rem(p, p'), ... of a squarefree polynomial.
std::vector<RPoly> sturm_sequence(const RPoly& p);

/// Square-free part p / gcd(p, p').
RPoly squarefree_part(const RPoly& p);

/// Exact number of distinct real roots of p in iv; endpoint roots are
/// counted only when that endpoint is closed.
std::size_t sturm_count(const RPoly& p, const Interval& iv);

/// Rational roots of p (distinct, ascending) found by the rational root test.
std::vector<Rational> rational_roots(const RPoly& p);

}  // namespace sidef
