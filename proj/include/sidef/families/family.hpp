#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sidef/darboux/darboux.hpp"
#include "sidef/operators/diffop.hpp"
#include "sidef/polynomials/classical.hpp"

namespace sidef {

enum class FamilyKind { ho, morse, pt };
enum class PtSeries { phi4, phi1 };

FamilyKind parse_family_kind(const std::string& s);
std::string to_string(FamilyKind k);
PtSeries parse_pt_series(const std::string& s);
std::string to_string(PtSeries s);

/// Undeformed potentials in their algebraic variables: ho z = x^2,
/// morse y = e^x, pt w = cosh x.
template <Field F>
PotentialExpr<F> base_potential(FamilyKind kind, const F& A) {
  switch (kind) {
    case FamilyKind::ho: return {RatFunc<F>::variable(), {}, VariableMap<F>::square(), F(0)};
    case FamilyKind::morse:
      return {RatFunc<F>::power(-2, F(1) / F(4)) - RatFunc<F>::power(-1, A + F(1) / F(2)), {}, VariableMap<F>::exp_pos(),
              F(0)};
    case FamilyKind::pt: {
      // sech^2(x/2) = 2/(w+1)
      const F c = F(1) / F(2) * (F(1) / F(4) - A * A);
      return {RatFunc<F>(Poly<F>(c), Poly<F>::linear(F(1), F(1))), {}, VariableMap<F>::cosh(), F(0)};
    }
  }
  throw ArgumentError("unknown family");
}

namespace detail {
template <Field F>
Gauge<F> power_gauge(const RatFunc<F>& exponent, const Poly<F>& base, const F& e) {
  Gauge<F> g{exponent, {}};
  g.multiply_power(base, e);
  return g;
}
}  // namespace detail

/// Factorization function of the m-th algebraic deformation (no checks):
/// ho e^(z/2) h_m(z); morse y^(A+1) e^(1/(2y)) r~_m(y) with r~_m the reversal of
/// L_m^(-2(1+m+A))(-z); pt (w+1)^((1/2 +- A)/2) P_m^(-1/2, +-A)(w).
template <Field F>
FactorizationData<F> factorization(FamilyKind kind, const F& A, long m, PtSeries series = PtSeries::phi4) {
  const F half = F(1) / F(2);
  switch (kind) {
    case FamilyKind::ho:
      return {Gauge<F>{RatFunc<F>::power(1, half), {}}, hermite_imag_even_in_square<F>(m), VariableMap<F>::square(),
              F(-1 - 4 * m)};
    case FamilyKind::morse: {
      const Poly<F> r = laguerre_poly<F>(m, F(-2) * (F(1 + m) + A)).compose(Poly<F>::monomial(1, F(-1)));
      const F k = F(m + 1) + A;
      return {detail::power_gauge(RatFunc<F>::power(-1, half), Poly<F>::variable(), k - F(m)), r.reversed(),
              VariableMap<F>::exp_pos(), -(k * k)};
    }
    case FamilyKind::pt: {
      const bool four = series == PtSeries::phi4;
      const F sa = four ? A : -A;
      const F k = four ? A * half + F(1) / F(4) + F(m) : A * half - F(1) / F(4) - F(m);
      return {detail::power_gauge(RatFunc<F>(), Poly<F>::linear(F(1), F(1)), (half + sa) * half),
              jacobi_poly<F>(m, -half, sa), VariableMap<F>::cosh(), -(k * k)};
    }
  }
  throw ArgumentError("unknown family");
}

enum class MorseSeries { phi1, phi2, phi4 };
MorseSeries parse_morse_series(const std::string& s);
std::string to_string(MorseSeries s);

/// The other polynomial-type Morse factorization functions, written as
/// e^(kx) e^(+-e^(-x)/2) L(e^(-x)) and converted to y = e^x:
/// phi1 k = m-A with L_m^(2(A-m))(t); phi2 k = m-1-A with L_(m-1)^(2(1+A-m))(t);
/// phi4 k = m+A with L_(m-1)^(-2(m+A))(-t) and the growing exponential.
template <Field F>
FactorizationData<F> morse_factorization(MorseSeries series, const F& A, long m) {
  const F half = F(1) / F(2);
  F k;
  Poly<F> L;
  F sign = F(-1);
  switch (series) {
    case MorseSeries::phi1:
      k = F(m) - A;
      L = laguerre_poly<F>(m, F(2) * (A - F(m)));
      break;
    case MorseSeries::phi2:
      if (m < 1) throw ArgumentError("morse phi2 needs m >= 1");
      k = F(m - 1) - A;
      L = laguerre_poly<F>(m - 1, F(2) * (F(1 - m) + A));
      break;
    case MorseSeries::phi4:
      if (m < 1) throw ArgumentError("morse phi4 needs m >= 1");
      k = F(m) + A;
      L = laguerre_poly<F>(m - 1, F(-2) * k).compose(Poly<F>::monomial(1, F(-1)));
      sign = F(1);
      break;
  }
  const F deg(static_cast<long>(L.deg()));
  Gauge<F> g{RatFunc<F>::power(-1, sign * half), {}};
  g.multiply_power(Poly<F>::variable(), k - deg);
  return {g, L.reversed(), VariableMap<F>::exp_pos(), -(k * k)};
}

/// Formal eigenstate n of the undeformed potential (a bound state when n is
/// below the bound-state count): ho e^(-x^2/2) H_n(x); morse
/// y^(-A) e^(-1/(2y)) y^n L_n^(2(A-n))(1/y); pt cosh(x/2)^(1/2-A) times
/// P_i^(-1/2,-A)(w) (n = 2i) or sinh(x/2) P_i^(1/2,-A)(w) (n = 2i+1).
template <Field F>
Eigenstate<F> base_state(FamilyKind kind, const F& A, long n) {
  if (n < 0) throw ArgumentError("base_state: negative index");
  const F half = F(1) / F(2);
  switch (kind) {
    case FamilyKind::ho: {
      const Poly<F> H = hermite_poly<F>(n);
      std::vector<F> c;
      for (std::size_t k = static_cast<std::size_t>(n % 2); k <= H.deg(); k += 2) c.push_back(H.coeff(k));
      // H_n(x) = x K(x^2) for odd n, and x = (dz/dx)/2.
      const F scale = n % 2 == 1 ? half : F(1);
      return {F(2 * n + 1), {Gauge<F>{RatFunc<F>::power(1, -half), {}}, static_cast<int>(n % 2),
                              RatFunc<F>(Poly<F>(std::move(c)) * scale), VariableMap<F>::square()}};
    }
    case FamilyKind::morse: {
      const F k = A - F(n);
      const Poly<F> L = laguerre_poly<F>(n, F(2) * k);
      std::vector<F> rev(static_cast<std::size_t>(n) + 1, F(0));
      for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) rev[static_cast<std::size_t>(n) - i] = L.coeff(i);
      return {-(k * k),
              {detail::power_gauge(RatFunc<F>::power(-1, -half), Poly<F>::variable(), -A), 0,
               RatFunc<F>(Poly<F>(std::move(rev))), VariableMap<F>::exp_pos()}};
    }
    case FamilyKind::pt: {
      const long i = n / 2;
      const bool odd = n % 2 == 1;
      const F k = half * A - F(1) / F(4) - half * F(n);
      const F e = (half - A) * half - (odd ? half : F(0));
      return {-(k * k),
              {detail::power_gauge(RatFunc<F>(), Poly<F>::linear(F(1), F(1)), e), odd ? 1 : 0,
               RatFunc<F>(jacobi_poly<F>(i, odd ? half : -half, -A)), VariableMap<F>::cosh()}};
    }
  }
  throw ArgumentError("unknown family");
}

/// The deformed potential of the m-th factorization, formally (no nodelessness
/// or ordering checks), over any coefficient field.
template <Field F>
PotentialExpr<F> formal_deformed_potential(FamilyKind kind, const F& A, long m, PtSeries series = PtSeries::phi4) {
  return deformed_potential(base_potential<F>(kind, A), factorization<F>(kind, A, m, series));
}

/// A validated m-th algebraic deformation.
struct DeformedFamily {
  FamilyKind kind = FamilyKind::ho;
  std::optional<Rational> A;
  long m = 0;
  PtSeries series = PtSeries::phi4;
  PotentialExpr<Rational> base;
  FactorizationData<Rational> fdata;
  PotentialExpr<Rational> potential;
  Rational ground_energy;
  Rational base_ground;

  Rational a_value() const { return A.value_or(Rational(0)); }
  std::string label() const;
};

/// Validates parameters and builds the deformation. Throws ArgumentError on
/// parameter-range violations and NodefulFactorization when phi has a zero
/// (morse with odd m, pt phi1 with m <= A - 1/2).
DeformedFamily make_family(FamilyKind kind, const std::optional<Rational>& A, long m,
                           PtSeries series = PtSeries::phi4);

/// Number of bound states of the undeformed potential; nullopt for ho.
std::optional<long> base_bound_count(FamilyKind kind, const Rational& A);

struct SpectrumList {
  std::vector<Rational> levels;  // ascending
  bool truncated = false;        // fewer bound states than requested
};

/// {ground energy} together with the undeformed bound-state energies, ascending.
SpectrumList energy_spectrum(const DeformedFamily& fam, long count);

/// n = 0: 1/phi; n >= 1: alpha applied to the (n-1)-th undeformed bound state.
Eigenstate<Rational> bound_state(const DeformedFamily& fam, long n);

enum class Sector { even, odd };
std::string to_string(Sector s);
Sector parse_sector(const std::string& s);

/// Sectors that carry a flag for the family (morse has a single sector).
std::vector<Sector> sectors(FamilyKind kind);

struct FlagBasis {
  std::vector<RPoly> basis;         // polynomial factors over the common gauge
  std::vector<Rational> energies;   // eigenvalue of each basis member; ascending multiset on fallback
  DiffOp2<Rational> op;             // gauged deformed operator
  Gauge<Rational> gauge;            // common gauge
  int parity = 0;
  bool monomial_fallback = false;   // a formal base eigenpolynomial dropped degree
  Matrix<Rational> matrix;          // representation of op on span(basis)
  std::vector<Rational> echelon_diagonal;  // diagonal in the degree-echelon basis
};

/// Invariant polynomial module of the gauged deformed operator at level n.
/// Throws InternalConsistencyError when invariance fails.
FlagBasis flag_basis(const DeformedFamily& fam, long n, Sector sector = Sector::even);

/// For span{1, f2, ...} with a degree-2 member: the shift b with
/// span = span{1, (z-b)^2, ..., (z-b)^k}, when such a b exists.
std::optional<Rational> exceptional_shift(const std::vector<RPoly>& basis);

}  // namespace sidef
