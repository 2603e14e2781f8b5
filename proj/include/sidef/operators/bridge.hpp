#pragma once

#include <utility>

#include "sidef/operators/diffop.hpp"
#include "sidef/operators/potential.hpp"

namespace sidef {

/// Schrodinger form of T under `map`: the potential and the gauge
/// log-derivative l = (Q - P'/2) / (2P), so that -d_xx + U acting on
/// exp(int l dz) f equals exp(int l dz) T[f].
template <Field F>
std::pair<PotentialExpr<F>, RatFunc<F>> to_schrodinger(const DiffOp2<F>& T, const VariableMap<F>& map) {
  if (!(-T.P == map.S())) {
    throw ArgumentError("to_schrodinger: -P = " + (-T.P).str() + " does not match (dz/dx)^2 = " + map.S().str());
  }
  const RatFunc<F>& P = T.P;
  const RatFunc<F>& Q = T.Q;
  const RatFunc<F> P1 = P.derivative();
  const RatFunc<F> half(F(1) / F(2));
  const RatFunc<F> quarter(F(1) / F(4));
  const RatFunc<F> Qa = Q - half * P1;
  const RatFunc<F> Qb = Q - RatFunc<F>(F(3) / F(2)) * P1;
  const RatFunc<F> U = quarter * P1.derivative() - half * Q.derivative() - quarter * Qa * Qb / P + T.R;
  const RatFunc<F> gauge = Qa / (RatFunc<F>(F(2)) * P);
  return {PotentialExpr<F>{U, RatFunc<F>(), map, F(0)}, gauge};
}

/// Inverse bridge: the operator T with (-d_xx + U) exp(int l dz) f = exp(int l dz) T[f].
template <Field F>
DiffOp2<F> schrodinger_to_algebraic(const PotentialExpr<F>& U, const RatFunc<F>& gauge_logderiv,
                                    const VariableMap<F>& map) {
  const auto Um = U.over(map);
  if (!Um) throw ArgumentError("schrodinger_to_algebraic: potential is not expressible over " + map.str());
  if (!Um->odd_part.is_zero()) {
    throw ArgumentError("schrodinger_to_algebraic: potential with an odd part has no rational gauge form");
  }
  const RatFunc<F> S = map.S();
  const RatFunc<F> S1 = S.derivative();
  const RatFunc<F>& l = gauge_logderiv;
  const RatFunc<F> half(F(1) / F(2));
  DiffOp2<F> T;
  T.P = -S;
  T.Q = -(half * S1 + RatFunc<F>(F(2)) * l * S);
  T.R = Um->even_total() - (l.derivative() * S + half * l * S1 + l * l * S);
  return T;
}

}  // namespace sidef
