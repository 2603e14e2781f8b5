#pragma once

#include <vector>

#include "sidef/families/family.hpp"

namespace sidef {

/// Uniform grid x_i = x_lo + i h, i = 0..n_points-1; the end points carry
/// Dirichlet conditions.
struct Grid {
  double x_lo = 0.0;
  double x_hi = 1.0;
  long n_points = 16;

  static Grid make(double lo, double hi, long n);
  double h() const { return (x_hi - x_lo) / static_cast<double>(n_points - 1); }
  double x(long i) const { return x_lo + static_cast<double>(i) * h(); }
  /// Same interval with the spacing halved.
  Grid refined() const { return make(x_lo, x_hi, 2 * n_points - 1); }
  /// The interval widened by `fraction` of its length on each side, same spacing.
  Grid widened(double fraction) const;
};

/// Default grids: ho [-12,12]x6001, morse [-15,60]x15001, pt [-40,40]x8001.
Grid default_grid(FamilyKind kind);

/// -D2 + U on the interior points: diagonal 2/h^2 + U(x_i), off-diagonal -1/h^2.
struct TridiagonalOperator {
  std::vector<double> diagonal;  // interior points 1..n-2
  double off_diagonal = 0.0;
  Grid grid;
};

/// Throws EvaluationError naming the first grid point where U is not finite.
TridiagonalOperator discretize(const PotentialExpr<Rational>& U, const Grid& g);

/// The k smallest eigenvalues, ascending (LAPACK bisection).
std::vector<double> lowest_eigs(const TridiagonalOperator& T, long k);

/// psi on the grid, scaled so that max |psi| = 1 (assembled in log space).
/// Throws EvaluationError when psi is not finite or vanishes on the whole grid.
std::vector<double> sample_state(const Eigenstate<Rational>& psi, const Grid& g);

/// ||(-D2 + U - E) psi|| / ||psi|| over the interior points.
double residual_norm(const PotentialExpr<Rational>& U, const Eigenstate<Rational>& psi, const Grid& g);

/// max over pairs |<psi_i, psi_j>| / (||psi_i|| ||psi_j||), trapezoid rule; 0 for fewer than two states.
double orthogonality_defect(const std::vector<Eigenstate<Rational>>& states, const Grid& g);

}  // namespace sidef
