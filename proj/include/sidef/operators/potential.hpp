#pragma once

#include <optional>
#include <string>

#include "sidef/operators/variable_map.hpp"

namespace sidef {

/// Floating evaluation of an exact polynomial; for |z| > 1 the reversed
/// polynomial in 1/z is used so that large arguments do not overflow early.
double eval_double(const RPoly& p, double z);
double eval_double(const RFunc& f, double z);

/// U(x) = base(z(x)) + odd_part(z(x)) * dz/dx + shift.
template <Field F>
struct PotentialExpr {
  RatFunc<F> base;
  RatFunc<F> odd_part;
  VariableMap<F> map;
  F shift = F(0);

  /// The same function written over `target`, which must share the base kind.
  std::optional<PotentialExpr> over(const VariableMap<F>& target) const {
    if (map == target) return *this;
    const auto rel = target.relation_to(map);  // map.z = c*target.z + d
    if (!rel) return std::nullopt;
    const auto [c, d] = *rel;
    PotentialExpr out{base.compose_affine(c, d), odd_part.compose_affine(c, d) * RatFunc<F>(c), target, shift};
    return out;
  }

  /// Even part with the shift folded in.
  RatFunc<F> even_total() const { return base + RatFunc<F>(shift); }

  /// this - other when the difference is an exact constant; nullopt otherwise
  /// (including maps of different kinds).
  std::optional<F> constant_offset(const PotentialExpr& other) const {
    const auto o = other.over(map);
    if (!o) return std::nullopt;
    if (!(odd_part == o->odd_part)) return std::nullopt;
    const RatFunc<F> diff = even_total() - o->even_total();
    if (!diff.is_constant()) return std::nullopt;
    return diff.is_zero() ? F(0) : diff.constant_value();
  }

  friend bool operator==(const PotentialExpr& a, const PotentialExpr& b) {
    const auto off = a.constant_offset(b);
    return off && detail::field_zero(*off);
  }

  double operator()(double x) const
    requires std::same_as<F, Rational>
  {
    const double z = map.z_of(x);
    double u = eval_double(base, z) + shift.to_double();
    if (!odd_part.is_zero()) u += eval_double(odd_part, z) * map.s_of(x);
    return u;
  }

  std::string str() const {
    std::string out = base.str("z");
    if (!odd_part.is_zero()) out += " + (" + odd_part.str("z") + ")*dz/dx";
    if (!detail::field_zero(shift)) out += " + (" + to_text(shift) + ")";
    return out + "  with z = " + map.str();
  }
};

}  // namespace sidef
