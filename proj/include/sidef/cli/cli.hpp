#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sidef/polynomials/interval.hpp"
#include "sidef/polynomials/ratfunc.hpp"

namespace sidef::cli {

enum Exit : int { ok = 0, argument_error = 2, precondition_failure = 3, verification_failure = 4 };

/// Runs one subcommand. `args` excludes the program name.
/// Subcommands: family, spectrum, verify-flag, preservers, classify, deform.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Operator text `P=<poly>;Q=<poly>;Qm1=<r>;Qm2=<r>;R=<poly>;Rm1=<r>;Rm2=<r>`.
/// Polynomials are comma-separated rationals ascending in degree; the m1/m2
/// keys add c z^-1 and c z^-2 to Q or R. Keys may appear in any order, each
/// at most once; P is required.
struct OperatorText {
  RPoly P;
  RFunc Q;
  RFunc R;
};
OperatorText parse_operator(std::string_view text);

/// `lo:hi` with decimal endpoints.
std::pair<double, double> parse_range(std::string_view text);

/// `lo:hi` with rational endpoints; `-inf` / `inf` leave an end open.
Interval parse_interval(std::string_view text);

/// 12 significant digits.
std::string format_double(double x);

}  // namespace sidef::cli
