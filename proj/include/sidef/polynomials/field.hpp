#pragma once

#include <concepts>
#include <string>

#include "sidef/polynomials/rational.hpp"

namespace sidef {

// Scalars the symbolic layer can compute over: Rational, and rational
// functions of a free parameter (RatFunc<Rational>) for identities that must
// hold at symbolic A.
template <class F>
concept Field = requires(const F a, const F b) {
  F(0);
  F(1);
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a == b } -> std::convertible_to<bool>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { to_text(a) } -> std::convertible_to<std::string>;
};

inline std::string to_text(const Rational& r) { return r.str(); }

}  // namespace sidef

namespace sidef::detail {
// Unqualified call so ADL reaches overloads declared after this header.
template <class F>
bool field_zero(const F& x) {
  return is_zero(x);
}
}  // namespace sidef::detail
