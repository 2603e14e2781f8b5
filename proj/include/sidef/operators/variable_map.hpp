#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "sidef/polynomials/interval.hpp"
#include "sidef/polynomials/ratfunc.hpp"

namespace sidef {

/// Elementary change of variable t(x); the algebraic variable is z = a*t + b.
enum class BaseMap { identity, square, exp_pos, exp_neg, cosh, sinh };

/// z(x) = a*t(x) + b with (dz/dx)^2 = S(z) rational, so d^2z/dx^2 = S'(z)/2.
template <Field F>
class VariableMap {
 public:
  VariableMap() = default;

  static VariableMap identity() { return VariableMap(BaseMap::identity, F(1), F(0)); }
  static VariableMap square() { return VariableMap(BaseMap::square, F(1), F(0)); }
  static VariableMap exp_pos() { return VariableMap(BaseMap::exp_pos, F(1), F(0)); }
  static VariableMap exp_neg() { return VariableMap(BaseMap::exp_neg, F(1), F(0)); }
  static VariableMap cosh() { return VariableMap(BaseMap::cosh, F(1), F(0)); }
  static VariableMap sinh() { return VariableMap(BaseMap::sinh, F(1), F(0)); }
  /// z = cosh^2(x/2) = (cosh x + 1)/2.
  static VariableMap cosh_sq() { return VariableMap(BaseMap::cosh, F(1) / F(2), F(1) / F(2)); }
  static VariableMap affine_cosh(const F& a, const F& b) { return VariableMap(BaseMap::cosh, a, b); }
  static VariableMap affine(BaseMap base, const F& a, const F& b) { return VariableMap(base, a, b); }

  BaseMap base() const { return base_; }
  const F& a() const { return a_; }
  const F& b() const { return b_; }

  /// (dz/dx)^2 as a rational function of z.
  RatFunc<F> S() const {
    const Poly<F> t = Poly<F>::linear(F(1) / a_, -b_ / a_);  // t as a function of z
    Poly<F> sb;
    switch (base_) {
      case BaseMap::identity: sb = Poly<F>(F(1)); break;
      case BaseMap::square: sb = t * F(4); break;
      case BaseMap::exp_pos:
      case BaseMap::exp_neg: sb = t * t; break;
      case BaseMap::cosh: sb = t * t - Poly<F>(F(1)); break;
      case BaseMap::sinh: sb = t * t + Poly<F>(F(1)); break;
    }
    return RatFunc<F>(sb * (a_ * a_));
  }

  /// dz/dx when it is a rational function of z; nullopt when it is odd in x.
  std::optional<RatFunc<F>> s_rational() const {
    switch (base_) {
      case BaseMap::identity: return RatFunc<F>(a_);
      case BaseMap::exp_pos: return RatFunc<F>(Poly<F>::linear(F(1), -b_));
      case BaseMap::exp_neg: return RatFunc<F>(Poly<F>::linear(F(-1), b_));
      default: return std::nullopt;
    }
  }
  bool has_parity() const { return !s_rational().has_value(); }

  /// The same base kind with z' = c*z + d, i.e. the map c*z(x) + d.
  VariableMap then_affine(const F& c, const F& d) const { return VariableMap(base_, c * a_, c * b_ + d); }

  /// For maps sharing a base kind, (c, d) with other.z = c*this.z + d.
  std::optional<std::pair<F, F>> relation_to(const VariableMap& other) const {
    if (other.base_ != base_) return std::nullopt;
    const F c = other.a_ / a_;
    return std::make_pair(c, other.b_ - c * b_);
  }

  friend bool operator==(const VariableMap& x, const VariableMap& y) {
    return x.base_ == y.base_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  std::string str() const {
    std::string t;
    switch (base_) {
      case BaseMap::identity: t = "x"; break;
      case BaseMap::square: t = "x^2"; break;
      case BaseMap::exp_pos: t = "exp(x)"; break;
      case BaseMap::exp_neg: t = "exp(-x)"; break;
      case BaseMap::cosh: t = "cosh(x)"; break;
      case BaseMap::sinh: t = "sinh(x)"; break;
    }
    std::string out = a_ == F(1) ? t : "(" + to_text(a_) + ")*" + t;
    if (!detail::field_zero(b_)) out += " + (" + to_text(b_) + ")";
    return out;
  }

  /// Range of z(x) over the real line.
  std::optional<Interval> range() const
    requires std::same_as<F, Rational>
  {
    Interval t;
    switch (base_) {
      case BaseMap::identity:
      case BaseMap::sinh: return Interval::real_line();
      case BaseMap::square: t = Interval::at_least(Rational(0)); break;
      case BaseMap::exp_pos:
      case BaseMap::exp_neg: t = Interval::greater_than(Rational(0)); break;
      case BaseMap::cosh: t = Interval::at_least(Rational(1)); break;
    }
    const Rational end = a_ * *t.lo + b_;
    if (a_.sign() > 0) return t.lo_closed ? Interval::at_least(end) : Interval::greater_than(end);
    return t.lo_closed ? Interval::at_most(end) : Interval::less_than(end);
  }

  double t_of(double x) const {
    switch (base_) {
      case BaseMap::identity: return x;
      case BaseMap::square: return x * x;
      case BaseMap::exp_pos: return std::exp(x);
      case BaseMap::exp_neg: return std::exp(-x);
      case BaseMap::cosh: return std::cosh(x);
      case BaseMap::sinh: return std::sinh(x);
    }
    return 0.0;
  }
  double z_of(double x) const
    requires std::same_as<F, Rational>
  {
    return a_.to_double() * t_of(x) + b_.to_double();
  }
  /// dz/dx at x.
  double s_of(double x) const
    requires std::same_as<F, Rational>
  {
    double dt = 0.0;
    switch (base_) {
      case BaseMap::identity: dt = 1.0; break;
      case BaseMap::square: dt = 2.0 * x; break;
      case BaseMap::exp_pos: dt = std::exp(x); break;
      case BaseMap::exp_neg: dt = -std::exp(-x); break;
      case BaseMap::cosh: dt = std::sinh(x); break;
      case BaseMap::sinh: dt = std::cosh(x); break;
    }
    return a_.to_double() * dt;
  }

 private:
  VariableMap(BaseMap base, F a, F b) : base_(base), a_(std::move(a)), b_(std::move(b)) {
    if (detail::field_zero(a_)) throw ArgumentError("variable map with zero scale");
  }

  BaseMap base_ = BaseMap::identity;
  F a_ = F(1);
  F b_ = F(0);
};

}  // namespace sidef
