#include "sidef/numerics/numerics.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "sidef/numerics/kernels.hpp"

namespace sidef {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

Grid Grid::make(double lo, double hi, long n) {
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi)) {
    throw ArgumentError("grid needs finite x_lo < x_hi, got " + fmt(lo) + ":" + fmt(hi));
  }
  if (n < 16) throw ArgumentError("grid needs at least 16 points, got " + std::to_string(n));
  return {lo, hi, n};
}

Grid Grid::widened(double fraction) const {
  const double step = h();
  const long extra = static_cast<long>(std::ceil(fraction * (x_hi - x_lo) / step));
  return make(x_lo - static_cast<double>(extra) * step, x_hi + static_cast<double>(extra) * step,
              n_points + 2 * extra);
}

Grid default_grid(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::ho: return Grid::make(-12, 12, 6001);
    case FamilyKind::morse: return Grid::make(-15, 60, 15001);
    case FamilyKind::pt: return Grid::make(-40, 40, 8001);
  }
  throw ArgumentError("unknown family");
}

TridiagonalOperator discretize(const PotentialExpr<Rational>& U, const Grid& g) {
  const double h = g.h();
  TridiagonalOperator T;
  T.grid = g;
  T.off_diagonal = -1.0 / (h * h);
  T.diagonal.reserve(static_cast<std::size_t>(g.n_points - 2));
  for (long i = 1; i + 1 < g.n_points; ++i) {
    const double x = g.x(i);
    const double u = U(x);
    if (!std::isfinite(u)) throw EvaluationError("potential is not finite at grid point x = " + fmt(x));
    T.diagonal.push_back(2.0 / (h * h) + u);
  }
  return T;
}

std::vector<double> lowest_eigs(const TridiagonalOperator& T, long k) {
  const auto n = static_cast<lapack_int>(T.diagonal.size());
  if (k < 1 || k > n) throw ArgumentError("lowest_eigs: k must be in 1.." + std::to_string(n));
  std::vector<double> d = T.diagonal;
  std::vector<double> e(static_cast<std::size_t>(n > 1 ? n - 1 : 1), T.off_diagonal);
  std::vector<double> w(static_cast<std::size_t>(n));
  std::vector<lapack_int> iblock(static_cast<std::size_t>(n)), isplit(static_cast<std::size_t>(n));
  lapack_int m = 0, nsplit = 0;
  // abstol = 2 * safe minimum: eigenvalues to full relative accuracy.
  const double abstol = 2 * LAPACKE_dlamch('S');
  const lapack_int info = LAPACKE_dstebz('I', 'E', n, 0.0, 0.0, 1, static_cast<lapack_int>(k), abstol, d.data(),
                                         e.data(), &m, &nsplit, w.data(), iblock.data(), isplit.data());
  if (info != 0 || m != k) {
    throw ConvergenceError("tridiagonal bisection failed (info " + std::to_string(info) + ", " + std::to_string(m) +
                           " of " + std::to_string(k) + " eigenvalues)");
  }
  w.resize(static_cast<std::size_t>(k));
  return w;
}

std::vector<double> sample_state(const Eigenstate<Rational>& psi, const Grid& g) {
  const auto n = static_cast<std::size_t>(g.n_points);
  std::vector<double> lg(n), out(n);
  std::vector<int> sg(n);
  double top = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double x = g.x(static_cast<long>(i));
    const auto [l, s] = psi.psi.log_abs(x);
    if (std::isnan(l) || l == std::numeric_limits<double>::infinity()) {
      throw EvaluationError("state is not finite at x = " + fmt(x));
    }
    lg[i] = l;
    sg[i] = s;
    if (s != 0) top = std::max(top, l);
  }
  if (!std::isfinite(top)) throw EvaluationError("state vanishes on the whole grid");
  for (std::size_t i = 0; i < n; ++i) out[i] = sg[i] == 0 ? 0.0 : sg[i] * std::exp(lg[i] - top);
  return out;
}

double residual_norm(const PotentialExpr<Rational>& U, const Eigenstate<Rational>& psi, const Grid& g) {
  const std::vector<double> v = sample_state(psi, g);
  const TridiagonalOperator T = discretize(U, g);
  const std::size_t n = v.size();
  std::vector<double> diag(n, 0.0), r(n, 0.0);
  std::copy(T.diagonal.begin(), T.diagonal.end(), diag.begin() + 1);
  const auto& k = kernels::active();
  k.tridiag_residual(v.data(), diag.data(), T.off_diagonal, psi.energy.to_double(), n, r.data());
  const double num = k.dot(r.data() + 1, r.data() + 1, n - 2);
  const double den = k.dot(v.data() + 1, v.data() + 1, n - 2);
  if (!(den > std::numeric_limits<double>::min())) {
    throw EvaluationError("state underflows on the grid interior; narrow the domain");
  }
  return std::sqrt(num / den);
}

double orthogonality_defect(const std::vector<Eigenstate<Rational>>& states, const Grid& g) {
  if (states.size() < 2) return 0.0;
  const auto& k = kernels::active();
  std::vector<std::vector<double>> v;
  for (const auto& s : states) {
    auto f = sample_state(s, g);
    // Trapezoid weights: halve the end points (h cancels in the ratio).
    f.front() *= std::sqrt(0.5);
    f.back() *= std::sqrt(0.5);
    v.push_back(std::move(f));
  }
  std::vector<double> norms;
  for (const auto& f : v) norms.push_back(std::sqrt(k.dot(f.data(), f.data(), f.size())));
  double worst = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const double ip = k.dot(v[i].data(), v[j].data(), v[i].size());
      worst = std::max(worst, std::abs(ip) / (norms[i] * norms[j]));
    }
  }
  return worst;
}

}  // namespace sidef
