#include "sidef/polynomials/interval.hpp"

#include "sidef/errors.hpp"

namespace sidef {

Interval Interval::make(Rational a, bool a_closed, Rational b, bool b_closed) {
  if (b < a || (a == b && !(a_closed && b_closed))) {
    throw ArgumentError("empty interval " + a.str() + ".." + b.str());
  }
  Interval iv;
  iv.lo = std::move(a);
  iv.hi = std::move(b);
  iv.lo_closed = a_closed;
  iv.hi_closed = b_closed;
  return iv;
}

Interval Interval::make_lo(Rational a, bool closed) {
  Interval iv;
  iv.lo = std::move(a);
  iv.lo_closed = closed;
  return iv;
}

Interval Interval::make_hi(Rational b, bool closed) {
  Interval iv;
  iv.hi = std::move(b);
  iv.hi_closed = closed;
  return iv;
}

bool Interval::contains(const Rational& x) const {
  if (lo) {
    if (x < *lo || (x == *lo && !lo_closed)) return false;
  }
  if (hi) {
    if (x > *hi || (x == *hi && !hi_closed)) return false;
  }
  return true;
}

std::string Interval::str() const {
  std::string s = lo ? (lo_closed ? "[" : "(") + lo->str() : "(-inf";
  s += ", ";
  s += hi ? hi->str() + (hi_closed ? "]" : ")") : "inf)";
  return s;
}

}  // namespace sidef
