#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sidef/polynomials/linalg.hpp"
#include "sidef/polynomials/ratfunc.hpp"

namespace sidef {

/// P d^2/dz^2 + Q d/dz + R with rational-function coefficients.
template <Field F>
struct DiffOp2 {
  RatFunc<F> P;
  RatFunc<F> Q;
  RatFunc<F> R;

  RatFunc<F> operator()(const RatFunc<F>& f) const {
    const RatFunc<F> f1 = f.derivative();
    return P * f1.derivative() + Q * f1 + R * f;
  }
  RatFunc<F> operator()(const Poly<F>& f) const {
    const Poly<F> f1 = f.derivative();
    return P * RatFunc<F>(f1.derivative()) + Q * RatFunc<F>(f1) + R * RatFunc<F>(f);
  }

  friend DiffOp2 operator+(const DiffOp2& a, const DiffOp2& b) { return {a.P + b.P, a.Q + b.Q, a.R + b.R}; }
  friend DiffOp2 operator-(const DiffOp2& a, const DiffOp2& b) { return {a.P - b.P, a.Q - b.Q, a.R - b.R}; }
  friend DiffOp2 operator*(const F& c, const DiffOp2& a) {
    const RatFunc<F> k(c);
    return {k * a.P, k * a.Q, k * a.R};
  }
  friend bool operator==(const DiffOp2&, const DiffOp2&) = default;

  /// The same operator after z = c*u + d, written in u.
  DiffOp2 change_affine(const F& c, const F& d) const {
    const RatFunc<F> inv(F(1) / c);
    return {P.compose_affine(c, d) * inv * inv, Q.compose_affine(c, d) * inv, R.compose_affine(c, d)};
  }

  std::string str(const std::string& var = "z") const {
    return "P=" + P.str(var) + "; Q=" + Q.str(var) + "; R=" + R.str(var);
  }
};

template <Field F>
RatFunc<F> apply_op(const DiffOp2<F>& T, const Poly<F>& f) {
  return T(f);
}

/// c_{lo} z^{lo} + ... as a rational function; `coeffs[i]` multiplies z^(lo+i).
template <Field F>
RatFunc<F> laurent(long lo, const std::vector<F>& coeffs) {
  RatFunc<F> out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!detail::field_zero(coeffs[i])) out += RatFunc<F>::power(lo + static_cast<long>(i), coeffs[i]);
  }
  return out;
}

/// Coordinates of f in `basis`, or nullopt when f is outside the span.
template <Field F>
std::optional<std::vector<F>> coordinates(const std::vector<Poly<F>>& basis, const Poly<F>& f) {
  std::vector<Poly<F>> all = basis;
  all.push_back(f);
  const std::size_t rows = max_length(all);
  const Matrix<F> m = coefficient_matrix(basis, rows);
  std::vector<F> rhs(rows, F(0));
  for (std::size_t i = 0; i < rows; ++i) rhs[i] = f.coeff(i);
  return m.solve(rhs);
}

/// Representation matrix of T on span(basis) (column j = coordinates of
/// T[basis_j]), or nullopt when the span is not invariant.
template <Field F>
std::optional<Matrix<F>> invariance_check(const DiffOp2<F>& T, const std::vector<Poly<F>>& basis) {
  if (!linearly_independent(basis)) throw ArgumentError("invariance_check: basis is linearly dependent");
  Matrix<F> out(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const RatFunc<F> image = T(basis[j]);
    if (!image.is_polynomial()) return std::nullopt;
    const Poly<F> poly = image.num() * (F(1) / image.den().leading());
    const auto coords = coordinates(basis, poly);
    if (!coords) return std::nullopt;
    for (std::size_t i = 0; i < basis.size(); ++i) out(i, j) = (*coords)[i];
  }
  return out;
}

/// The seven generators preserving span{1, z^2, ..., z^n}, in the order
/// T(+2,2), T(+1,2), T(0,2), T(-1,2), T(-2,2), T(0,1), T(0,0).
std::vector<DiffOp2<Rational>> exceptional_generators(long n);

/// span{1, z^2, ..., z^n}.
std::vector<RPoly> exceptional_module(long n);

/// Basis of the operators a d^2 + b d + c, with a, b, c Laurent polynomials
/// supported on degrees [dmin, dmax], that preserve span{1, z^2, ..., z^n}.
/// The basis is returned in reduced row echelon form over the coefficient
/// vector (a_dmin..a_dmax, b_dmin.., c_dmin..).
std::vector<DiffOp2<Rational>> preserver_space(long n, std::pair<long, long> window);

/// Coefficient vector of a Laurent operator on the window used by preserver_space.
/// Throws ArgumentError when a coefficient is not a Laurent polynomial inside the window.
std::vector<Rational> laurent_vector(const DiffOp2<Rational>& T, std::pair<long, long> window);

/// Reduced row echelon basis of the span of the given operators' Laurent vectors.
std::vector<std::vector<Rational>> reduced_span(const std::vector<DiffOp2<Rational>>& ops,
                                                std::pair<long, long> window);

/// Q-hat = P' - Q for deg P <= 2, deg Q <= 1.
template <Field F>
Poly<F> forward_partner(const Poly<F>& P, const Poly<F>& Q) {
  if ((P.degree() && *P.degree() > 2) || (Q.degree() && *Q.degree() > 1)) {
    throw ArgumentError("forward_partner needs deg P <= 2 and deg Q <= 1");
  }
  return P.derivative() - Q;
}

}  // namespace sidef
