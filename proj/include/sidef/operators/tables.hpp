#pragma once

#include <string>
#include <vector>

#include "sidef/operators/diffop.hpp"
#include "sidef/operators/variable_map.hpp"

namespace sidef {

/// A canonical algebraic operator together with its change of variable.
template <Field F>
struct AlgebraicRow {
  std::string name;
  DiffOp2<F> op;
  VariableMap<F> map;
};

namespace detail {
template <Field F>
RatFunc<F> poly_rf(std::initializer_list<F> c) {
  return RatFunc<F>(Poly<F>(std::vector<F>(c)));
}
}  // namespace detail

/// Shape-invariant operators P d_zz + Q d_z on the line: rows Ia, Ib, II, III.
template <Field F>
AlgebraicRow<F> table1_row(const std::string& name, const F& A = F(0)) {
  using detail::poly_rf;
  const F h = F(1) / F(2);
  if (name == "Ia") return {name, {poly_rf<F>({F(-1)}), poly_rf<F>({F(0), F(2)}), {}}, VariableMap<F>::identity()};
  if (name == "Ib") {
    return {name, {poly_rf<F>({F(0), F(-4)}), poly_rf<F>({F(-2), F(4)}), {}}, VariableMap<F>::square()};
  }
  if (name == "II") {
    return {name, {poly_rf<F>({F(0), F(0), F(-1)}), poly_rf<F>({F(1), -(F(2) * A + F(3))}), {}},
            VariableMap<F>::exp_pos()};
  }
  if (name == "III") {
    return {name, {poly_rf<F>({F(0), F(1), F(-1)}), poly_rf<F>({F(1) - A, A - F(3) * h}), {}},
            VariableMap<F>::cosh_sq()};
  }
  throw ArgumentError("unknown shape-invariant row " + name);
}

/// Operators preserving span{1, z^2, ..., z^n}: rows Ia, Ib, Ic, IIa, IIb, IIIa, IIIb, IV.
template <Field F>
AlgebraicRow<F> table2_row(const std::string& name, const F& A, const F& q2) {
  using detail::poly_rf;
  const F h = F(1) / F(2);
  const RatFunc<F> zinv = RatFunc<F>::power(-1);
  const RatFunc<F> q2z = RatFunc<F>::power(1, q2);
  if (name == "Ia") {
    // (1 - z)(z + 2 + 2A)
    const Poly<F> P = Poly<F>::linear(F(-1), F(1)) * Poly<F>::linear(F(1), F(2) + F(2) * A);
    const RatFunc<F> Q = q2z + RatFunc<F>(F(2) * A + F(1)) - RatFunc<F>(F(4) * (F(1) + A)) * zinv;
    return {name, {RatFunc<F>(P), Q, {}}, VariableMap<F>::affine_cosh(F(3) * h + A, -A - h)};
  }
  if (name == "Ib") return {name, {poly_rf<F>({F(0), F(1), F(-1)}), q2z - RatFunc<F>(F(1)), {}}, VariableMap<F>::cosh_sq()};
  if (name == "Ic") {
    return {name, {poly_rf<F>({F(-1), F(0), F(-1)}), q2z + RatFunc<F>(F(2)) * zinv, {}}, VariableMap<F>::sinh()};
  }
  if (name == "IIa") {
    return {name,
            {poly_rf<F>({F(-1), F(2), F(-1)}), q2z - RatFunc<F>(F(2)) + RatFunc<F>(F(2)) * zinv, {}},
            VariableMap<F>::affine(BaseMap::exp_pos, -(F(2) * A + F(3)), F(1))};
  }
  if (name == "IIb") return {name, {poly_rf<F>({F(0), F(0), F(-1)}), q2z, {}}, VariableMap<F>::exp_pos()};
  if (name == "IIIa") {
    return {name,
            {poly_rf<F>({F(8), F(-8)}), q2z + RatFunc<F>(F(8)) - RatFunc<F>(F(16)) * zinv, {}},
            VariableMap<F>::affine(BaseMap::square, F(2), F(1))};
  }
  if (name == "IIIb") return {name, {poly_rf<F>({F(0), F(-4)}), q2z + RatFunc<F>(F(1)), {}}, VariableMap<F>::square()};
  if (name == "IV") return {name, {poly_rf<F>({F(-1)}), q2z + RatFunc<F>(F(2)) * zinv, {}}, VariableMap<F>::identity()};
  throw ArgumentError("unknown exceptional-module row " + name);
}

inline const std::vector<std::string>& table1_names() {
  static const std::vector<std::string> names{"Ia", "Ib", "II", "III"};
  return names;
}
inline const std::vector<std::string>& table2_names() {
  static const std::vector<std::string> names{"Ia", "Ib", "Ic", "IIa", "IIb", "IIIa", "IIIb", "IV"};
  return names;
}

}  // namespace sidef
