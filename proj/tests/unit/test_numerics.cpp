#include <cmath>
#include <random>

#include "doctest.h"
#include "sidef/numerics/kernels.hpp"
#include "sidef/numerics/numerics.hpp"

using namespace sidef;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

PotentialExpr<Rational> oscillator(long shift = 0) {
  return {RFunc(RPoly({R(shift), R(0), R(1)})), {}, VariableMap<Rational>::identity(), R(0)};
}

Eigenstate<Rational> gaussian() {
  return {R(1), {Gauge<Rational>{RFunc::power(2, R(-1, 2)), {}}, 0, RFunc(R(1)), VariableMap<Rational>::identity()}};
}

// Leading O(h^2) term of the three-point residual: (h^2/12) ||psi''''|| / ||psi||,
// with psi'''' taken from the exact derivative.
double predicted_residual(const Eigenstate<Rational>& st, const Grid& g) {
  GaugedFunction<Rational> d4 = st.psi;
  for (int i = 0; i < 4; ++i) d4 = d4.derivative();
  double num = 0, den = 0;
  for (long i = 1; i + 1 < g.n_points; ++i) {
    const double x = g.x(i);
    num += d4(x) * d4(x);
    den += st.psi(x) * st.psi(x);
  }
  return g.h() * g.h() / 12 * std::sqrt(num / den);
}

}  // namespace

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(Grid::make(1, -1, 100), ArgumentError);
  CHECK_THROWS_AS(Grid::make(-1, 1, 15), ArgumentError);
  const Grid g = Grid::make(-10, 10, 2001);
  CHECK(g.h() == doctest::Approx(0.01));
  CHECK(g.refined().n_points == 4001);
  const Grid w = g.widened(0.25);
  CHECK(w.h() == doctest::Approx(g.h()).epsilon(1e-12));
  CHECK(w.x_hi - w.x_lo == doctest::Approx(30.0).epsilon(1e-9));
}

TEST_CASE("discretize examples") {
  const Grid g = Grid::make(-10, 10, 2001);
  const auto T = discretize(oscillator(), g);
  const auto T2 = discretize(oscillator(-2), g);
  REQUIRE(T.diagonal.size() == 1999);
  const double h = g.h();
  CHECK(T.off_diagonal == doctest::Approx(-1 / (h * h)));
  for (long i : {1L, 500L, 1000L, 1999L}) {
    const double x = g.x(i);
    CHECK(T.diagonal[static_cast<std::size_t>(i - 1)] == doctest::Approx(2 / (h * h) + x * x).epsilon(1e-14));
    CHECK(T2.diagonal[static_cast<std::size_t>(i - 1)] - T.diagonal[static_cast<std::size_t>(i - 1)] ==
          doctest::Approx(-2).epsilon(1e-9));
  }
  const auto ho1 = make_family(FamilyKind::ho, std::nullopt, 1);
  for (double v : discretize(ho1.potential, default_grid(FamilyKind::ho)).diagonal) CHECK(std::isfinite(v));

  // 1/x on a grid through the origin.
  const PotentialExpr<Rational> sing{RFunc::power(-1), {}, VariableMap<Rational>::identity(), R(0)};
  CHECK_THROWS_AS(discretize(sing, Grid::make(-1, 1, 101)), EvaluationError);
}

TEST_CASE("lowest_eigs examples") {
  const Grid g = Grid::make(-10, 10, 4001);
  const auto e = lowest_eigs(discretize(oscillator(), g), 3);
  CHECK(std::abs(e[0] - 1) <= 1e-5);
  CHECK(std::abs(e[1] - 3) <= 1e-5);
  // Second-order shift -(h^2/12) <p^4> with <p^4> = (3/4)(2n^2 + 2n + 1).
  const double h2 = g.h() * g.h();
  for (int n = 0; n < 3; ++n) {
    const double shift = -h2 / 12 * 0.75 * (2 * n * n + 2 * n + 1);
    CHECK(std::abs(e[static_cast<std::size_t>(n)] - (2 * n + 1) - shift) <= 1e-8);
  }
  CHECK(std::abs(lowest_eigs(discretize(oscillator(-2), g), 1)[0] + 1) <= 1e-5);

  const auto ho1 = make_family(FamilyKind::ho, std::nullopt, 1);
  const auto e1 = lowest_eigs(discretize(ho1.potential, Grid::make(-12, 12, 6001)), 5);
  const std::vector<double> want{-5, 1, 3, 5, 7};
  for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(e1[i] - want[i]) <= 1e-4);

  CHECK_THROWS_AS(lowest_eigs(discretize(oscillator(), g), 0), ArgumentError);
}

TEST_CASE("constant shift moves every eigenvalue by the constant") {
  const Grid g = Grid::make(-8, 8, 1601);
  const auto a = lowest_eigs(discretize(oscillator(), g), 6);
  const auto b = lowest_eigs(discretize(oscillator(-7), g), 6);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(b[i] - a[i] == doctest::Approx(-7).epsilon(1e-10));
}

TEST_CASE("residuals follow the leading truncation term") {
  const Grid g = Grid::make(-8, 8, 4001);
  const double r0 = residual_norm(oscillator(), gaussian(), g);
  CHECK(r0 / predicted_residual(gaussian(), g) == doctest::Approx(1).epsilon(0.01));
  CHECK(r0 < 5e-6);

  const auto ho1 = make_family(FamilyKind::ho, std::nullopt, 1);
  const auto g0 = bound_state(ho1, 0);
  const double r1 = residual_norm(ho1.potential, g0, g);
  CHECK(r1 / predicted_residual(g0, g) == doctest::Approx(1).epsilon(0.01));

  const auto pt = make_family(FamilyKind::pt, R(4), 1);
  const auto s0 = bound_state(pt, 1);
  const Grid gp = Grid::make(-30, 30, 8001);
  const double r2 = residual_norm(pt.potential, s0, gp);
  CHECK(r2 / predicted_residual(s0, gp) == doctest::Approx(1).epsilon(0.01));

  // A wrong energy leaves an O(1) residual.
  Eigenstate<Rational> wrong = g0;
  wrong.energy = R(-4);
  CHECK(residual_norm(ho1.potential, wrong, g) > 0.5);
}

TEST_CASE("residuals converge at second order") {
  for (const auto kind : {FamilyKind::ho, FamilyKind::morse, FamilyKind::pt}) {
    const std::optional<Rational> A = kind == FamilyKind::ho ? std::nullopt : std::optional<Rational>(R(5, 2));
    const auto fam = make_family(kind, A, 2);
    const Grid g = default_grid(kind);
    for (long n = 0; n < 3; ++n) {
      const auto st = bound_state(fam, n);
      const double ratio = residual_norm(fam.potential, st, g) / residual_norm(fam.potential, st, g.refined());
      CHECK(ratio >= 3);
      CHECK(ratio <= 5);
    }
  }
}

TEST_CASE("states are sampled in log space") {
  // e^(-x^2/2) on [-60, 60] spans exp(-1800) and still has a finite residual.
  CHECK(std::isfinite(residual_norm(oscillator(), gaussian(), Grid::make(-60, 60, 12001))));
  // Morse ground state 1/phi carries exp(-e^(-x)/2), far below the double range at x = -15.
  const auto mo = make_family(FamilyKind::morse, R(5, 2), 2);
  const auto v = sample_state(bound_state(mo, 0), default_grid(FamilyKind::morse));
  CHECK(v.front() == 0.0);
  double top = 0;
  for (double x : v) top = std::max(top, std::abs(x));
  CHECK(top == 1.0);

  const Eigenstate<Rational> zero{R(1), {Gauge<Rational>{RFunc(), {}}, 0, RFunc(), VariableMap<Rational>::identity()}};
  CHECK_THROWS_AS(residual_norm(oscillator(), zero, Grid::make(-5, 5, 101)), EvaluationError);
}

TEST_CASE("orthogonality_defect examples") {
  const Grid g = Grid::make(-10, 10, 4001);
  std::vector<Eigenstate<Rational>> osc;
  for (long n = 0; n < 3; ++n) osc.push_back(base_state<Rational>(FamilyKind::ho, R(0), n));
  CHECK(orthogonality_defect(osc, g) <= 1e-8);

  const auto ho1 = make_family(FamilyKind::ho, std::nullopt, 1);
  std::vector<Eigenstate<Rational>> dh;
  for (long n = 0; n < 4; ++n) dh.push_back(bound_state(ho1, n));
  CHECK(orthogonality_defect(dh, g) <= 1e-6);

  CHECK(orthogonality_defect({osc[0]}, g) == 0.0);
  CHECK(orthogonality_defect({osc[0], osc[0]}, g) == doctest::Approx(1.0));
}

TEST_CASE("domain extension leaves bound levels in place") {
  struct Case {
    FamilyKind kind;
    std::optional<Rational> A;
    long m;
    long levels;
    double tol;
  };
  for (const auto& c : {Case{FamilyKind::ho, std::nullopt, 1, 5, 1e-4}, Case{FamilyKind::morse, R(5, 2), 2, 4, 1e-3},
                        Case{FamilyKind::pt, R(4), 1, 4, 1e-3}}) {
    const auto fam = make_family(c.kind, c.A, c.m);
    const Grid g = default_grid(c.kind);
    const auto a = lowest_eigs(discretize(fam.potential, g), c.levels);
    const auto b = lowest_eigs(discretize(fam.potential, g.widened(0.125)), c.levels);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < c.tol);
  }
}

TEST_CASE("kernel variants agree bit for bit with the scalar reference") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-3, 3);
  const auto& ref = kernels::table(kernels::Isa::scalar);
  for (const auto isa : kernels::available()) {
    const auto& k = kernels::table(isa);
    CAPTURE(kernels::to_string(isa));
    for (std::size_t n : {3UL, 4UL, 5UL, 7UL, 8UL, 9UL, 31UL, 1000UL, 1003UL}) {
      std::vector<double> a(n), b(n), d(n), r1(n, 0.0), r2(n, 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        a[i] = u(rng);
        b[i] = u(rng);
        d[i] = u(rng) * 1e4;
      }
      ref.tridiag_residual(a.data(), d.data(), -2.5e3, 0.75, n, r1.data());
      k.tridiag_residual(a.data(), d.data(), -2.5e3, 0.75, n, r2.data());
      CHECK(r1 == r2);
      CHECK(ref.dot(a.data(), b.data(), n) == k.dot(a.data(), b.data(), n));
    }
  }
  CHECK(kernels::available().front() == kernels::Isa::scalar);
}

TEST_CASE("kernel reference values") {
  const auto& k = kernels::table(kernels::Isa::scalar);
  const std::vector<double> a{1, 2, 3, 4, 5}, b{5, 4, 3, 2, 1};
  CHECK(k.dot(a.data(), b.data(), 5) == 35.0);
  const std::vector<double> psi{1, 2, 4, 8}, diag{0, 10, 20, 0};
  std::vector<double> out(4, -1.0);
  k.tridiag_residual(psi.data(), diag.data(), -1.0, 1.0, 4, out.data());
  CHECK(out == std::vector<double>{-1, 9 * 2 - 5, 19 * 4 - 10, -1});
}
