#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "sidef/operators/potential.hpp"

namespace sidef {

/// exp(exponent(z)) * prod base_i(z)^exp_i with monic bases, kept sorted and
/// free of zero exponents so that equal gauges compare equal.
template <Field F>
struct Gauge {
  RatFunc<F> exponent;
  std::vector<std::pair<Poly<F>, F>> powers;

  /// d/dz of the logarithm.
  RatFunc<F> log_derivative() const {
    RatFunc<F> out = exponent.derivative();
    for (const auto& [base, e] : powers) out += RatFunc<F>(e) * RatFunc<F>(base.derivative(), base);
    return out;
  }

  void multiply_power(const Poly<F>& base, const F& e) {
    if (detail::field_zero(e)) return;
    if (base.is_constant()) throw ArgumentError("gauge base must be non-constant");
    const Poly<F> m = base.monic();
    for (auto it = powers.begin(); it != powers.end(); ++it) {
      if (it->first == m) {
        it->second = it->second + e;
        if (detail::field_zero(it->second)) powers.erase(it);
        return;
      }
    }
    powers.emplace_back(m, e);
    std::sort(powers.begin(), powers.end(), [](const auto& x, const auto& y) { return key(x.first) < key(y.first); });
  }

  F exponent_of(const Poly<F>& base) const {
    const Poly<F> m = base.monic();
    for (const auto& [b, e] : powers) {
      if (b == m) return e;
    }
    return F(0);
  }

  Gauge inverse() const {
    Gauge out{-exponent, {}};
    for (const auto& [b, e] : powers) out.powers.emplace_back(b, -e);
    return out;
  }

  friend bool operator==(const Gauge& a, const Gauge& b) { return a.exponent == b.exponent && a.powers == b.powers; }

  std::string str(const std::string& var = "z") const {
    std::string out;
    if (!exponent.is_zero()) out = "exp(" + exponent.str(var) + ")";
    for (const auto& [b, e] : powers) {
      if (!out.empty()) out += "*";
      out += "(" + b.str(var) + ")^(" + to_text(e) + ")";
    }
    return out.empty() ? "1" : out;
  }

 private:
  // Deterministic order: by degree, then by coefficient text.
  static std::pair<std::size_t, std::string> key(const Poly<F>& p) { return {p.deg(), p.str()}; }
};

/// psi(x) = gauge(z) * s^parity * body(z) with s = dz/dx and z = map(x).
/// Parity is used only for maps whose s is not rational in z.
template <Field F>
struct GaugedFunction {
  Gauge<F> gauge;
  int parity = 0;
  RatFunc<F> body;
  VariableMap<F> map;

  bool is_zero() const { return body.is_zero(); }

  /// d/dx, keeping the gauge: g s^(p+1) [(G + p S'/(2S)) r + r'], folded back.
  GaugedFunction derivative() const {
    const RatFunc<F> S = map.S();
    RatFunc<F> inner = gauge.log_derivative();
    if (parity == 1) inner += RatFunc<F>(F(1) / F(2)) * S.derivative() / S;
    GaugedFunction out{gauge, parity, inner * body + body.derivative(), map};
    out.raise_parity();
    return out;
  }

  /// Multiplies by a function of z.
  GaugedFunction times(const RatFunc<F>& f) const { return {gauge, parity, body * f, map}; }
  /// Multiplies by f(z) * dz/dx.
  GaugedFunction times_s(const RatFunc<F>& f) const {
    GaugedFunction out{gauge, parity, body * f, map};
    out.raise_parity();
    return out;
  }

  friend GaugedFunction operator-(const GaugedFunction& a, const GaugedFunction& b) {
    if (!(a.gauge == b.gauge) || !(a.map == b.map)) throw ArgumentError("gauged functions with different gauges");
    if (a.is_zero()) return {b.gauge, b.parity, -b.body, b.map};
    if (b.is_zero()) return a;
    if (a.parity != b.parity) throw ArgumentError("gauged functions with different parity");
    return {a.gauge, a.parity, a.body - b.body, a.map};
  }

  /// Moves denominators of the body into gauge powers, preferring existing
  /// bases and then the polynomials in `hints`; any remainder becomes a new base.
  GaugedFunction canonical(const std::vector<Poly<F>>& hints = {}) const {
    GaugedFunction out = *this;
    Poly<F> num = body.num();
    Poly<F> den = body.den();
    std::vector<Poly<F>> candidates;
    for (const auto& [b, e] : gauge.powers) candidates.push_back(b);
    for (const auto& h : hints) {
      if (!h.is_constant()) candidates.push_back(h.monic());
    }
    for (const auto& c : candidates) {
      while (!den.is_constant() && c.divides(den)) {
        den = den / c;
        out.gauge.multiply_power(c, F(-1));
      }
    }
    if (!den.is_constant()) {
      const F lead = den.leading();
      out.gauge.multiply_power(den, F(-1));
      num = num * (F(1) / lead);
      den = Poly<F>(F(1));
    }
    out.body = RatFunc<F>(num, den);
    return out;
  }

  /// The polynomial factor; throws when the body is not a polynomial.
  Poly<F> poly() const {
    if (!body.is_polynomial()) throw InternalConsistencyError("gauged function body is not a polynomial");
    return body.num() * (F(1) / body.den().leading());
  }

  /// Rewrites the function over `target`, which must differ from the gauge
  /// by nonnegative integer powers of the bases only.
  GaugedFunction rebased(const Gauge<F>& target) const {
    if (!(gauge.exponent == target.exponent)) throw InternalConsistencyError("rebase across different exponential parts");
    RatFunc<F> factor(F(1));
    auto apply = [&](const Poly<F>& b, const F& diff) {
      if (detail::field_zero(diff)) return;
      if constexpr (std::same_as<F, Rational>) {
        if (!diff.is_integer() || diff.sign() < 0) {
          throw InternalConsistencyError("rebase needs a nonnegative integer power, got " + diff.str());
        }
        factor = factor * RatFunc<F>(pow(b, diff.numerator().get_ui()));
      } else {
        throw InternalConsistencyError("rebase is only available over rational exponents");
      }
    };
    for (const auto& [b, e] : gauge.powers) apply(b, e - target.exponent_of(b));
    for (const auto& [b, e] : target.powers) {
      if (detail::field_zero(gauge.exponent_of(b))) apply(b, -e);
    }
    return {target, parity, body * factor, map};
  }

  /// log|psi(x)| and the sign of psi(x), assembled in log space.
  std::pair<double, int> log_abs(double x) const
    requires std::same_as<F, Rational>
  {
    const double z = map.z_of(x);
    double lg = gauge.exponent.is_zero() ? 0.0 : eval_double(gauge.exponent, z);
    int sign = 1;
    for (const auto& [b, e] : gauge.powers) {
      const double v = eval_double(b, z);
      if (v < 0 && e.is_integer() && e.numerator() % 2 != 0) sign = -sign;
      lg += e.to_double() * std::log(std::abs(v));
    }
    if (parity == 1) {
      const double s = map.s_of(x);
      if (s < 0) sign = -sign;
      lg += std::log(std::abs(s));
    }
    const double r = eval_double(body, z);
    if (r < 0) sign = -sign;
    lg += std::log(std::abs(r));
    return {lg, r == 0.0 ? 0 : sign};
  }

  double operator()(double x) const
    requires std::same_as<F, Rational>
  {
    const auto [lg, sign] = log_abs(x);
    return sign == 0 ? 0.0 : sign * std::exp(lg);
  }

  std::string str() const {
    std::string out = gauge.str();
    if (parity == 1) out += "*dz/dx";
    return out + "*(" + body.str() + ")  with z = " + map.str();
  }

 private:
  void raise_parity() {
    if (const auto s = map.s_rational()) {
      body = body * (*s);
      parity = 0;
      return;
    }
    if (parity == 0) {
      parity = 1;
    } else {
      body = body * map.S();
      parity = 0;
    }
  }
};

}  // namespace sidef
