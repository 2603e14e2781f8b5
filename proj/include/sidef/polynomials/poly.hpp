#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sidef/errors.hpp"
#include "sidef/polynomials/field.hpp"

namespace sidef {

/// Dense univariate polynomial, coefficients ascending in degree.
/// The zero polynomial has no coefficients and no degree.
template <Field F>
class Poly {
 public:
  Poly() = default;
  Poly(const F& c) {  // NOLINT(google-explicit-constructor)
    if (!detail::field_zero(c)) c_.push_back(c);
  }
  Poly(long c) : Poly(F(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(std::size_t k, const F& c = F(1)) {
    if (detail::field_zero(c)) return Poly();
    std::vector<F> v(k + 1, F(0));
    v[k] = c;
    return Poly(std::move(v));
  }
  static Poly variable() { return monomial(1); }
  /// a*z + b
  static Poly linear(const F& a, const F& b) { return Poly(std::vector<F>{b, a}); }

  bool is_zero() const { return c_.empty(); }
  std::optional<std::size_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  // Degree of a nonzero polynomial.
  std::size_t deg() const {
    if (c_.empty()) throw ArgumentError("degree of the zero polynomial");
    return c_.size() - 1;
  }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<F>& coefficients() const { return c_; }
  F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }
  F leading() const { return c_.empty() ? F(0) : c_.back(); }
  // Lowest index with a nonzero coefficient (multiplicity of the root at 0).
  std::size_t order() const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!detail::field_zero(c_[i])) return i;
    }
    throw ArgumentError("order of the zero polynomial");
  }

  Poly monic() const {
    if (c_.empty()) return *this;
    return *this * (F(1) / c_.back());
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return Poly();
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::field_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(Poly a, const F& s) {
    if (detail::field_zero(s)) return Poly();
    for (auto& c : a.c_) c = c * s;
    return a;
  }
  friend Poly operator*(const F& s, Poly a) { return std::move(a) * s; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Euclidean division over the field: *this = q*d + r with deg r < deg d.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw ArgumentError("polynomial division by zero");
    Poly r = *this;
    if (r.c_.size() < d.c_.size()) return {Poly(), r};
    std::vector<F> q(r.c_.size() - d.c_.size() + 1, F(0));
    const F inv_lead = F(1) / d.c_.back();
    while (!r.c_.empty() && r.c_.size() >= d.c_.size()) {
      const std::size_t shift = r.c_.size() - d.c_.size();
      const F f = r.c_.back() * inv_lead;
      q[shift] = f;
      for (std::size_t j = 0; j < d.c_.size(); ++j) r.c_[shift + j] = r.c_[shift + j] - f * d.c_[j];
      r.c_.pop_back();  // leading term cancels exactly
      r.trim();
    }
    return {Poly(std::move(q)), r};
  }
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }
  bool divides(const Poly& n) const { return (n % *this).is_zero(); }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<F> r(c_.size() - 1, F(0));
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * F(static_cast<long>(i));
    return Poly(std::move(r));
  }

  /// Horner evaluation over the coefficient field.
  F operator()(const F& x) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// p(g(z)) for polynomial g.
  Poly compose(const Poly& g) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + Poly(*it);
    return acc;
  }
  /// p(a*z + b).
  Poly compose_affine(const F& a, const F& b) const { return compose(linear(a, b)); }
  /// z^deg * p(1/z); degree drops when p(0) == 0.
  Poly reversed() const {
    std::vector<F> r(c_.rbegin(), c_.rend());
    return Poly(std::move(r));
  }

  std::string str(const std::string& var = "z") const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (detail::field_zero(c_[i])) continue;
      if (!out.empty()) out += " + ";
      const std::string cs = to_text(c_[i]);
      const bool unit = cs == "1";
      if (i == 0) {
        out += cs;
      } else {
        if (!unit) out += (cs.find_first_of("+-/ ", 1) != std::string::npos ? "(" + cs + ")" : cs) + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && detail::field_zero(c_.back())) c_.pop_back();
  }

  std::vector<F> c_;
};

template <Field F>
bool is_zero(const Poly<F>& p) {
  return p.is_zero();
}

/// Monic greatest common divisor (zero if both inputs are zero).
template <Field F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

template <Field F>
Poly<F> pow(const Poly<F>& p, std::size_t k) {
  Poly<F> r(F(1));
  for (std::size_t i = 0; i < k; ++i) r = r * p;
  return r;
}

using RPoly = Poly<Rational>;

}  // namespace sidef
