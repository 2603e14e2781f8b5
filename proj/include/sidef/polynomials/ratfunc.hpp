#pragma once

#include <string>
#include <utility>

#include "sidef/polynomials/poly.hpp"

namespace sidef {

/// Ratio of two polynomials in canonical form: coprime, denominator monic.
/// Canonical form makes structural equality decide functional equality.
template <Field F>
class RatFunc {
 public:
  RatFunc() : num_(), den_(F(1)) {}
  RatFunc(long c) : num_(F(c)), den_(F(1)) {}       // NOLINT(google-explicit-constructor)
  RatFunc(const F& c) : num_(c), den_(F(1)) {}      // NOLINT(google-explicit-constructor)
  RatFunc(Poly<F> p) : num_(std::move(p)), den_(F(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  /// z^k for any integer k.
  static RatFunc power(long k, const F& c = F(1)) {
    if (k >= 0) return RatFunc(Poly<F>::monomial(static_cast<std::size_t>(k), c));
    return RatFunc(Poly<F>(c), Poly<F>::monomial(static_cast<std::size_t>(-k)));
  }
  static RatFunc variable() { return RatFunc(Poly<F>::variable()); }

  const Poly<F>& num() const { return num_; }
  const Poly<F>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Value of a constant function.
  F constant_value() const {
    if (!is_constant()) throw ArgumentError("rational function is not constant");
    return num_.coeff(0);
  }

  RatFunc operator-() const { return RatFunc(-num_, den_, Normalized{}); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    if (a.den_.is_constant() && b.den_.is_constant()) return RatFunc(a.num_ * b.num_, Poly<F>(F(1)), Normalized{});
    // Cross-cancel before multiplying to keep intermediate degrees small.
    const Poly<F> g1 = gcd(a.num_, b.den_);
    const Poly<F> g2 = gcd(b.num_, a.den_);
    return RatFunc((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw ArgumentError("rational function division by zero");
    return a * RatFunc(b.den_, b.num_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  RatFunc derivative() const {
    if (den_.is_constant()) return RatFunc(num_.derivative(), den_, Normalized{});
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  /// Value at a point; throws EvaluationError at a pole.
  F operator()(const F& x) const {
    const F d = den_(x);
    if (sidef::is_zero(d)) throw EvaluationError("rational function evaluated at a pole");
    return num_(x) / d;
  }

  /// f(g(z)) for rational g.
  RatFunc compose(const RatFunc& g) const { return horner(num_, g) / horner(den_, g); }
  /// f(a*z + b).
  RatFunc compose_affine(const F& a, const F& b) const {
    return RatFunc(num_.compose_affine(a, b), den_.compose_affine(a, b));
  }

  std::string str(const std::string& var = "z") const {
    if (den_.is_constant()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
  }

 private:
  struct Normalized {};
  RatFunc(Poly<F> num, Poly<F> den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}

  static RatFunc horner(const Poly<F>& p, const RatFunc& g) {
    RatFunc acc;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * g + RatFunc(*it);
    return acc;
  }

  void normalize() {
    if (den_.is_zero()) throw ArgumentError("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly<F>(F(1));
      return;
    }
    if (!den_.is_constant()) {
      const Poly<F> g = gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = num_ / g;
        den_ = den_ / g;
      }
    }
    const F lead = den_.leading();
    if (!(lead == F(1))) {
      const F inv = F(1) / lead;
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  Poly<F> num_;
  Poly<F> den_;
};

template <Field F>
bool is_zero(const RatFunc<F>& r) {
  return r.is_zero();
}

template <Field F>
std::string to_text(const RatFunc<F>& r) {
  return r.str("A");
}

using RFunc = RatFunc<Rational>;
/// Scalars that are rational functions of a symbolic parameter A.
using Param = RatFunc<Rational>;

/// The symbolic parameter A as an element of Param.
inline Param symbol_A() { return Param::variable(); }

}  // namespace sidef
