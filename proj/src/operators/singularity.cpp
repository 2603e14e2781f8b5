#include "sidef/operators/singularity.hpp"

#include "sidef/polynomials/sturm.hpp"

namespace sidef {

std::string to_string(SingularCase c) {
  switch (c) {
    case SingularCase::i: return "i";
    case SingularCase::ii: return "ii";
    case SingularCase::iii: return "iii";
    case SingularCase::iv: return "iv";
    case SingularCase::v: return "v";
  }
  return "?";
}

namespace {

const Rational kHalf(1, 2);
const Rational kThreeHalves(3, 2);

// Nonsingularity condition at a rational root rho.
std::optional<std::string> condition_at(const RPoly& P, const RFunc& Q, const Rational& rho) {
  const Rational dp = P.derivative()(rho);
  Rational q;
  try {
    q = Q(rho);
  } catch (const EvaluationError&) {
    return "Q has a pole at the root z = " + rho.str();
  }
  if (q == kHalf * dp || q == kThreeHalves * dp) return std::nullopt;
  return "Q(" + rho.str() + ") = " + q.str() + " is neither P'/2 = " + (kHalf * dp).str() +
         " nor 3P'/2 = " + (kThreeHalves * dp).str();
}

// Same condition at an irrational root of the irreducible quadratic P; it
// holds at one conjugate iff it holds at both, decided by exact remainder.
std::optional<std::string> condition_irrational(const RPoly& P, const RFunc& Q) {
  const RPoly monic = P.monic();
  if (!gcd(Q.den(), monic).is_constant()) return "Q has a pole at the roots of P";
  for (const Rational& c : {kHalf, kThreeHalves}) {
    const RFunc diff = Q - RFunc(P.derivative() * c);
    if (monic.divides(diff.num())) return std::nullopt;
  }
  return "Q(rho) differs from P'(rho)/2 and 3P'(rho)/2 at the irrational roots of P";
}

std::size_t poles_in(const RFunc& Q, const Interval& iv) {
  if (Q.den().is_constant()) return 0;
  return sturm_count(Q.den(), iv);
}

// Poles of Q strictly beyond an irrational root of P (above it when `upper`).
std::size_t poles_beyond_irrational(const RPoly& P, const RFunc& Q, Rational lo, Rational hi, bool upper) {
  const RPoly& den = Q.den();
  if (den.is_constant()) return 0;
  const int sign_lo = P(lo).sign();
  while (sturm_count(den, Interval::closed(lo, hi)) > 0) {
    const Rational mid = (lo + hi) * Rational(1, 2);
    if (P(mid).sign() == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return upper ? sturm_count(den, Interval::greater_than(hi)) : sturm_count(den, Interval::less_than(lo));
}

void require_no_poles(SingularityReport& rep, std::size_t poles) {
  if (poles > 0 && rep.nonsingular) {
    rep.nonsingular = false;
    rep.failing_condition = "Q has " + std::to_string(poles) + " pole(s) inside the range of z";
  }
}

void apply_condition(SingularityReport& rep, std::optional<std::string> failure) {
  if (failure) {
    rep.nonsingular = false;
    rep.failing_condition = std::move(failure);
  }
}

}  // namespace

SingularityReport classify_singularity(const RPoly& P_in, const RFunc& Q, const std::optional<Interval>& hint) {
  if (P_in.is_zero()) throw ArgumentError("classify_singularity: P is zero");
  if (P_in.deg() > 2) throw ArgumentError("classify_singularity: deg P exceeds 2");
  SingularityReport rep;
  RPoly P = P_in;
  const Rational p2 = P.coeff(2), p1 = P.coeff(1), p0 = P.coeff(0);
  const Rational disc = p1 * p1 - Rational(4) * p2 * p0;
  const bool nonneg_everywhere = (P.deg() == 0 && p0.sign() > 0) || (P.deg() == 2 && p2.sign() > 0 && disc.sign() <= 0);
  if (nonneg_everywhere) {
    P = -P;
    rep.p_negated = true;
  }
  rep.roots = rational_roots(P);

  if (P.deg() == 0 || (P.deg() == 2 && disc.sign() < 0)) {
    rep.which = SingularCase::i;
    rep.range = Interval::real_line().str();
    require_no_poles(rep, poles_in(Q, Interval::real_line()));
    return rep;
  }

  if (P.deg() == 1) {
    rep.which = SingularCase::iii;
    const Rational rho = -P.coeff(0) / P.coeff(1);
    const Interval range = P.coeff(1).sign() < 0 ? Interval::at_least(rho) : Interval::at_most(rho);
    rep.range = range.str();
    apply_condition(rep, condition_at(P, Q, rho));
    require_no_poles(rep, poles_in(Q, range));
    return rep;
  }

  const Rational q2 = P.coeff(2), q1 = P.coeff(1);
  const Rational vertex = -q1 / (Rational(2) * q2);
  if (disc.is_zero()) {
    rep.which = SingularCase::ii;
    const bool below = hint && hint->hi && !hint->lo;
    const Interval range = below ? Interval::less_than(vertex) : Interval::greater_than(vertex);
    rep.range = range.str();
    require_no_poles(rep, poles_in(Q, range));
    return rep;
  }

  // Two distinct real roots.
  if (q2.sign() > 0 || (hint && hint->is_bounded())) {
    rep.which = SingularCase::v;
    rep.nonsingular = false;
    rep.failing_condition = "z(x) is periodic between the roots of P; the potential has a singularity";
    rep.range = "[rho1, rho2]";
    return rep;
  }
  rep.which = SingularCase::iv;
  const bool lower_end = hint && hint->hi && !hint->lo;
  if (rep.roots.size() == 2) {
    const Rational rho = lower_end ? rep.roots.front() : rep.roots.back();
    const Interval range = lower_end ? Interval::at_most(rho) : Interval::at_least(rho);
    rep.range = range.str();
    apply_condition(rep, condition_at(P, Q, rho));
    require_no_poles(rep, poles_in(Q, range));
    return rep;
  }
  rep.range = lower_end ? "(-inf, rho1]" : "[rho2, inf)";
  apply_condition(rep, condition_irrational(P, Q));
  // Cauchy bound for the roots; the vertex separates them.
  Rational bound(1);
  for (const Rational& c : {q1 / q2, P.coeff(0) / q2}) bound = bound + abs(c);
  const std::size_t poles = lower_end ? poles_beyond_irrational(P, Q, -bound, vertex, false)
                                      : poles_beyond_irrational(P, Q, vertex, bound, true);
  require_no_poles(rep, poles);
  return rep;
}

}  // namespace sidef
