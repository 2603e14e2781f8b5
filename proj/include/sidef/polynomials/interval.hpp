#pragma once

#include <optional>
#include <string>

#include "sidef/polynomials/rational.hpp"

namespace sidef {

/// Real interval with rational or infinite endpoints. An absent endpoint
/// means the corresponding infinity (and is never closed).
struct Interval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  bool lo_closed = false;
  bool hi_closed = false;

  static Interval real_line() { return {}; }
  static Interval closed(Rational a, Rational b) { return make(a, true, b, true); }
  static Interval open(Rational a, Rational b) { return make(a, false, b, false); }
  static Interval at_least(Rational a) { return make_lo(a, true); }
  static Interval greater_than(Rational a) { return make_lo(a, false); }
  static Interval at_most(Rational b) { return make_hi(b, true); }
  static Interval less_than(Rational b) { return make_hi(b, false); }
  static Interval make(Rational a, bool a_closed, Rational b, bool b_closed);

  bool contains(const Rational& x) const;
  bool is_bounded() const { return lo.has_value() && hi.has_value(); }
  std::string str() const;

 private:
  static Interval make_lo(Rational a, bool closed);
  static Interval make_hi(Rational b, bool closed);
};

}  // namespace sidef
