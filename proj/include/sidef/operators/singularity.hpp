#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sidef/polynomials/interval.hpp"
#include "sidef/polynomials/ratfunc.hpp"

namespace sidef {

/// Cases (i)-(v) by number and multiplicity of the real roots of P.
enum class SingularCase { i, ii, iii, iv, v };

std::string to_string(SingularCase c);

struct SingularityReport {
  SingularCase which = SingularCase::i;
  std::vector<Rational> roots;  // rational real roots of P, ascending
  bool nonsingular = true;
  std::optional<std::string> failing_condition;
  std::string range;        // the range of z, printable even with irrational endpoints
  bool p_negated = false;   // P was nonnegative everywhere and has been replaced by -P
};

/// Classifies T = P d_zz + Q d_z (+ R) by the real roots of P (deg P <= 2).
/// When P has two roots and -P >= 0 outside them, `range_hint` selects the
/// end: an interval unbounded below picks (-inf, r1], otherwise [r2, inf).
/// A bounded hint forces the periodic case (v).
SingularityReport classify_singularity(const RPoly& P, const RFunc& Q,
                                       const std::optional<Interval>& range_hint = std::nullopt);

}  // namespace sidef
