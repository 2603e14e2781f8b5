#pragma once

#include <optional>
#include <string>
#include <utility>

#include "sidef/darboux/gauged.hpp"
#include "sidef/polynomials/sturm.hpp"

namespace sidef {

/// phi(x) = gauge(z) * factor(z) with z = map(x), and tau[phi] = energy * phi.
template <Field F>
struct FactorizationData {
  Gauge<F> gauge;
  Poly<F> factor;
  VariableMap<F> map;
  F energy;

  GaugedFunction<F> phi() const { return {gauge, 0, RatFunc<F>(factor), map}; }
  /// d/dz ln phi.
  RatFunc<F> log_derivative_z() const { return gauge.log_derivative() + RatFunc<F>(factor.derivative(), factor); }
};

template <Field F>
struct Eigenstate {
  F energy;
  GaugedFunction<F> psi;

  bool parity_factor() const { return psi.parity == 1; }
  Poly<F> poly() const { return psi.poly(); }
};

/// (ln phi)' = even(z) + odd(z) * dz/dx.
template <Field F>
std::pair<RatFunc<F>, RatFunc<F>> log_derivative(const FactorizationData<F>& fd) {
  const RatFunc<F> l = fd.log_derivative_z();
  if (const auto s = fd.map.s_rational()) return {l * (*s), RatFunc<F>()};
  return {RatFunc<F>(), l};
}

/// U - 2 (ln phi)'' without any precondition checks. Works over any field,
/// so formal (singular or symbolic-parameter) deformations can be compared.
template <Field F>
PotentialExpr<F> deformed_potential(const PotentialExpr<F>& U, const FactorizationData<F>& fd) {
  const auto Um = U.over(fd.map);
  if (!Um) throw ArgumentError("deformed_potential: potential is not expressible over the factorization map");
  const RatFunc<F> S = fd.map.S();
  const RatFunc<F> l = fd.log_derivative_z();
  // (ln phi)'' = S l' + S' l / 2
  const RatFunc<F> second = S * l.derivative() + RatFunc<F>(F(1) / F(2)) * S.derivative() * l;
  PotentialExpr<F> out = *Um;
  out.base = out.base - RatFunc<F>(F(2)) * second;
  return out;
}

/// Checks that neither the factor nor any gauge base vanishes on the range of z.
void require_nodeless(const FactorizationData<Rational>& fd);

/// Backward deformation U - 2 (ln phi)''. Throws NodefulFactorization when phi
/// has a zero on the line and OrderingError when the factorization energy is
/// not strictly below `base_ground` (when given).
PotentialExpr<Rational> backward_deform(const PotentialExpr<Rational>& U, const FactorizationData<Rational>& fd,
                                        const std::optional<Rational>& base_ground = std::nullopt);

/// -psi'' + U psi, keeping the gauge of psi.
template <Field F>
GaugedFunction<F> apply_tau(const PotentialExpr<F>& U, const GaugedFunction<F>& psi) {
  const auto Um = U.over(psi.map);
  if (!Um || !Um->odd_part.is_zero()) throw ArgumentError("apply_tau: potential not expressible over the state map");
  return psi.times(Um->even_total()) - psi.derivative().derivative();
}

/// alpha[psi] = psi' - (ln phi)' psi, keeping the gauge of psi.
template <Field F>
GaugedFunction<F> apply_alpha(const FactorizationData<F>& fd, const GaugedFunction<F>& psi) {
  return psi.derivative() - psi.times_s(fd.log_derivative_z());
}

/// Body of tau[psi] - E psi; the zero function exactly when psi is an eigenstate.
template <Field F>
RatFunc<F> eigen_residual(const PotentialExpr<F>& U, const Eigenstate<F>& st) {
  const auto r = apply_tau(U, st.psi) - st.psi.times(RatFunc<F>(st.energy));
  return r.body;
}

/// The partner state alpha[psi] at the same energy, in canonical gauge form.
template <Field F>
Eigenstate<F> intertwine(const FactorizationData<F>& fd, const Eigenstate<F>& st) {
  const GaugedFunction<F> raw = apply_alpha(fd, st.psi);
  if (raw.is_zero()) throw PreconditionError("intertwine: the state is proportional to phi and is annihilated");
  return {st.energy, raw.canonical({fd.factor})};
}

/// The new ground state 1/phi at the factorization energy.
template <Field F>
Eigenstate<F> inverse_state(const FactorizationData<F>& fd) {
  GaugedFunction<F> g{fd.gauge.inverse(), 0, RatFunc<F>(F(1)), fd.map};
  g.body = RatFunc<F>(Poly<F>(F(1)), fd.factor);
  return {fd.energy, g.canonical({fd.factor})};
}

/// The factorization data of 1/phi (used to undo a backward step).
template <Field F>
FactorizationData<F> inverse_factorization(const FactorizationData<F>& fd) {
  Gauge<F> g = fd.gauge.inverse();
  if (!fd.factor.is_constant()) g.multiply_power(fd.factor, F(-1));
  return {g, Poly<F>(F(1)), fd.map, fd.energy};
}

enum class DarbouxType { forward, backward, isospectral };
std::string to_string(DarbouxType t);

/// Forward when phi is square integrable at both ends of the line, backward
/// when 1/phi is, isospectral otherwise. Decided from exact leading asymptotics.
DarbouxType darboux_type(const FactorizationData<Rational>& fd);

}  // namespace sidef
