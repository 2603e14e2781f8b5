#include <cmath>

#include "doctest.h"
#include "sidef/families/family.hpp"

using namespace sidef;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }
RFunc Z(long k, Rational c = R(1)) { return RFunc::power(k, c); }
RPoly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return RPoly(std::move(v));
}

// p(x^2) as a polynomial in x.
RPoly in_x(const RPoly& p) { return p.compose(RPoly::monomial(2)); }

// a and b agree up to a nonzero constant factor.
bool proportional(const RPoly& a, const RPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a * b.leading() == b * a.leading();
}

struct Case {
  FamilyKind kind;
  Rational A;
  long m;
  PtSeries series = PtSeries::phi4;
};

std::vector<Case> intertwining_cases() {
  std::vector<Case> out;
  for (long m = 0; m <= 3; ++m) {
    out.push_back({FamilyKind::ho, R(0), m});
    out.push_back({FamilyKind::morse, R(5, 2), m});
    out.push_back({FamilyKind::pt, R(4), m});
    out.push_back({FamilyKind::pt, R(7, 3), m, PtSeries::phi1});
  }
  return out;
}

}  // namespace

TEST_CASE("log_derivative examples") {
  // phi = e^(x^2/2): (ln phi)' = x = (1/2) * dz/dx with z = x^2.
  const auto ho0 = factorization<Rational>(FamilyKind::ho, R(0), 0);
  const auto [e0, o0] = log_derivative(ho0);
  CHECK(e0.is_zero());
  CHECK(o0 == RFunc(R(1, 2)));

  // phi = e^(x^2/2)(4x^2+2): (ln phi)' = x + 8x/(4x^2+2) = 2x (1/2 + 4/(4z+2)).
  const auto ho1 = factorization<Rational>(FamilyKind::ho, R(0), 1);
  CHECK(ho1.factor == P({2, 4}));
  const auto [e1, o1] = log_derivative(ho1);
  CHECK(e1.is_zero());
  CHECK(o1 == RFunc(R(1, 2)) + RFunc(P({4}), P({2, 4})));

  // Morse m=2 in y = e^x: (m+1+A) - e^(-x)/2 - e^(-x) r'(e^(-x))/r(e^(-x)), with
  // r = L_2^(-2(3+A))(-t). This is minus sigma' for sigma = -ln phi.
  for (const Rational& A : {R(5, 2), R(1, 3), R(4)}) {
    const auto fd = factorization<Rational>(FamilyKind::morse, A, 2);
    const Rational a = R(-2) * (R(3) + A);
    // L_2^a(t) = (a+1)(a+2)/2 - (a+2) t + t^2/2, evaluated at -t.
    const RPoly r({(a + R(1)) * (a + R(2)) / R(2), a + R(2), R(1, 2)});
    const RFunc t = Z(-1);
    const RFunc expected = RFunc(R(3) + A) - RFunc(R(1, 2)) * t -
                           t * RFunc(r.derivative()).compose(t) / RFunc(r).compose(t);
    const auto [e, o] = log_derivative(fd);
    CHECK(o.is_zero());
    CHECK(e == expected);
  }
}

TEST_CASE("factorization functions and base states are exact eigenfunctions") {
  for (const auto kind : {FamilyKind::ho, FamilyKind::morse, FamilyKind::pt}) {
    for (const Rational& A : {R(5, 2), R(4), R(7, 3)}) {
      const auto U = base_potential<Rational>(kind, A);
      for (long m = 0; m <= 4; ++m) {
        const auto fd = factorization<Rational>(kind, A, m);
        CHECK(eigen_residual(U, Eigenstate<Rational>{fd.energy, fd.phi()}).is_zero());
        if (kind == FamilyKind::pt) {
          const auto f1 = factorization<Rational>(kind, A, m, PtSeries::phi1);
          CHECK(eigen_residual(U, Eigenstate<Rational>{f1.energy, f1.phi()}).is_zero());
        }
      }
      for (long n = 0; n <= 7; ++n) {
        const auto st = base_state<Rational>(kind, A, n);
        CHECK(eigen_residual(U, st).is_zero());
      }
    }
  }
}

TEST_CASE("base energies") {
  CHECK(base_state<Rational>(FamilyKind::ho, R(0), 3).energy == R(7));
  CHECK(base_state<Rational>(FamilyKind::morse, R(5, 2), 1).energy == R(-9, 4));
  for (long n = 0; n < 4; ++n) {
    const Rational k = R(7, 2) - R(n);
    CHECK(base_state<Rational>(FamilyKind::pt, R(4), n).energy == -(k * k) / R(4));
  }
  CHECK(factorization<Rational>(FamilyKind::morse, R(5, 2), 2).energy == R(-121, 4));
  CHECK(factorization<Rational>(FamilyKind::pt, R(4), 1).energy == R(-169, 16));
  CHECK(factorization<Rational>(FamilyKind::ho, R(0), 3).energy == R(-13));
}

TEST_CASE("other Morse factorization functions are exact eigenfunctions") {
  for (const Rational& A : {R(1, 2), R(5, 2), R(3)}) {
    const auto U = base_potential<Rational>(FamilyKind::morse, A);
    for (long m = 1; m <= 4; ++m) {
      for (const auto s : {MorseSeries::phi1, MorseSeries::phi2, MorseSeries::phi4}) {
        const auto fd = morse_factorization<Rational>(s, A, m);
        CHECK(eigen_residual(U, Eigenstate<Rational>{fd.energy, fd.phi()}).is_zero());
      }
    }
  }
}

TEST_CASE("backward_deform examples") {
  const auto U = base_potential<Rational>(FamilyKind::ho, R(0));
  const auto d0 = backward_deform(U, factorization<Rational>(FamilyKind::ho, R(0), 0), R(1));
  CHECK(d0.base == RFunc(P({-2, 1})));

  // x^2 - 2 - (8 - 16x^2)/(2x^2+1)^2 with z = x^2.
  const auto d1 = backward_deform(U, factorization<Rational>(FamilyKind::ho, R(0), 1), R(1));
  CHECK(d1.base == RFunc(P({-2, 1})) - RFunc(P({8, -16}), P({1, 2}) * P({1, 2})));

  // pt A=4, m=1: -(1/4)(9/2)(11/2) sech^2(x/2) - 2 (ln q)'' with q = (11 cosh x - 9)/4.
  const auto fd = factorization<Rational>(FamilyKind::pt, R(4), 1);
  CHECK(fd.factor == RPoly({R(-9, 4), R(11, 4)}));
  const auto Upt = base_potential<Rational>(FamilyKind::pt, R(4));
  const auto d = backward_deform(Upt, fd, base_state<Rational>(FamilyKind::pt, R(4), 0).energy);
  for (double x : {-7.0, -2.5, -0.3, 0.0, 0.8, 3.1, 9.0}) {
    const double c = std::cosh(x), sh = std::sinh(x), q = (11 * c - 9) / 4;
    const double lnq2 = (11.0 / 4) * c / q - (121.0 / 16) * sh * sh / (q * q);
    const double sech = 1 / std::cosh(x / 2);
    const double oracle = -0.25 * 4.5 * 5.5 * sech * sech - 2 * lnq2;
    CHECK(d(x) == doctest::Approx(oracle).epsilon(1e-12));
  }
}

TEST_CASE("backward_deform preconditions") {
  const auto U = base_potential<Rational>(FamilyKind::ho, R(0));
  CHECK_THROWS_AS(backward_deform(U, factorization<Rational>(FamilyKind::ho, R(0), 1), R(-7)), OrderingError);

  // Morse parity gate: nodeful exactly for odd m.
  const Rational A(5, 2);
  const auto Um = base_potential<Rational>(FamilyKind::morse, A);
  for (long m = 0; m <= 6; ++m) {
    const auto fd = factorization<Rational>(FamilyKind::morse, A, m);
    if (m % 2 == 1) {
      CHECK_THROWS_AS(backward_deform(Um, fd), NodefulFactorization);
    } else {
      CHECK_NOTHROW(backward_deform(Um, fd));
    }
  }
}

TEST_CASE("intertwine examples") {
  const auto fd = factorization<Rational>(FamilyKind::ho, R(0), 0);
  const auto psi0 = base_state<Rational>(FamilyKind::ho, R(0), 0);
  const auto out = intertwine(fd, psi0);
  CHECK(out.energy == R(1));
  // (d/dx - x) e^(-x^2/2) = -2x e^(-x^2/2).
  for (double x : {-1.5, -0.2, 0.7, 2.0}) {
    CHECK(out.psi(x) == doctest::Approx(-2 * x * std::exp(-x * x / 2)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(intertwine(inverse_factorization(fd), Eigenstate<Rational>{R(-1), inverse_state(fd).psi}),
                  PreconditionError);
}

TEST_CASE("intertwining identity on monomials") {
  for (const auto& c : intertwining_cases()) {
    const auto U = base_potential<Rational>(c.kind, c.A);
    const auto fd = factorization<Rational>(c.kind, c.A, c.m, c.series);
    const auto Uhat = deformed_potential(U, fd);
    const auto g = base_state<Rational>(c.kind, c.A, 0).psi.gauge;
    const int parities = fd.map.has_parity() ? 2 : 1;
    for (int p = 0; p < parities; ++p) {
      for (std::size_t k = 0; k <= 6; ++k) {
        const GaugedFunction<Rational> f{g, p, RFunc(RPoly::monomial(k)), fd.map};
        const auto lhs = apply_alpha(fd, apply_tau(U, f));
        const auto rhs = apply_tau(Uhat, apply_alpha(fd, f));
        CHECK((lhs - rhs).is_zero());
      }
    }
  }
}

TEST_CASE("intertwine preserves energy and gives eigenstates of the deformed potential") {
  for (const auto& c : intertwining_cases()) {
    if (c.kind == FamilyKind::morse && c.m % 2 == 1) continue;
    const auto U = base_potential<Rational>(c.kind, c.A);
    const auto fd = factorization<Rational>(c.kind, c.A, c.m, c.series);
    const auto Uhat = deformed_potential(U, fd);
    for (long n = 0; n <= 4; ++n) {
      const auto st = base_state<Rational>(c.kind, c.A, n);
      // phi1 at level m is the formal state 2m itself.
      if (apply_alpha(fd, st.psi).is_zero()) {
        CHECK((c.series == PtSeries::phi1 && n == 2 * c.m));
        continue;
      }
      const auto out = intertwine(fd, st);
      CHECK(out.energy == st.energy);
      CHECK(eigen_residual(Uhat, out).is_zero());
    }
    CHECK(eigen_residual(Uhat, inverse_state(fd)).is_zero());
  }
}

TEST_CASE("printed oscillator partner polynomials") {
  // psi_j = e^(-x^2/2) p_j(x) / H_2m(ix) with
  // p_j = 2(j-1) h H_(j-2) - 2x h H_(j-1) - h' H_(j-1), h(x) = (-1)^m H_2m(ix).
  for (long m = 1; m <= 3; ++m) {
    const auto fd = factorization<Rational>(FamilyKind::ho, R(0), m);
    const RPoly h = in_x(fd.factor);
    Gauge<Rational> target{Z(1, R(-1, 2)), {}};
    target.multiply_power(fd.factor, R(-1));
    for (long j = 1; j <= 6; ++j) {
      const auto st = intertwine(fd, base_state<Rational>(FamilyKind::ho, R(0), j - 1));
      const auto g = st.psi.rebased(target);
      RPoly ours = in_x(g.poly());
      if (g.parity == 1) ours = ours * P({0, 2});
      const RPoly Hm1 = hermite_poly<Rational>(j - 1);
      const RPoly Hm2 = j >= 2 ? hermite_poly<Rational>(j - 2) : RPoly();
      const RPoly printed = h * Hm2 * R(2 * (j - 1)) - P({0, 2}) * h * Hm1 - h.derivative() * Hm1;
      CHECK(proportional(ours, printed));
    }
  }
}

TEST_CASE("printed Poschl-Teller partner polynomials") {
  // alpha[psi_2j] = cosh(x/2)^(1/2-A) sinh x / ((w+1) q_m) * s_j with
  // s_j = (w+1)(p_j' q_m - q_m' p_j) - A q_m p_j.
  const RPoly w1 = P({1, 1});
  for (const Rational& A : {R(4), R(7, 3), R(11, 2)}) {
    for (long m = 0; m <= 3; ++m) {
      const auto fd = factorization<Rational>(FamilyKind::pt, A, m);
      const RPoly q = fd.factor;
      Gauge<Rational> target{RFunc(), {}};
      target.multiply_power(w1, (R(1, 2) - A) / R(2) - R(1));
      if (!q.is_constant()) target.multiply_power(q, R(-1));
      for (long j = 0; j <= 4; ++j) {
        const auto base = base_state<Rational>(FamilyKind::pt, A, 2 * j);
        // For integer A the formal state 2(m+A) is proportional to phi.
        if (apply_alpha(fd, base.psi).is_zero()) {
          CHECK((A.is_integer() && R(j) == R(m) + A));
          continue;
        }
        const auto st = intertwine(fd, base);
        const auto g = st.psi.rebased(target);
        CHECK(g.parity == 1);
        const RPoly p = jacobi_poly<Rational>(j, R(-1, 2), -A);
        const RPoly s = w1 * (p.derivative() * q - q.derivative() * p) - q * p * A;
        CHECK(proportional(g.poly(), s));
      }
    }
  }
}

TEST_CASE("darboux_type examples") {
  const FactorizationData<Rational> back{Gauge<Rational>{Z(1, R(1, 2)), {}}, P({1, 2}), VariableMap<Rational>::square(),
                                         R(-5)};
  CHECK(darboux_type(back) == DarbouxType::backward);
  const FactorizationData<Rational> fwd{Gauge<Rational>{Z(1, R(-1, 2)), {}}, P({1}), VariableMap<Rational>::square(),
                                        R(1)};
  CHECK(darboux_type(fwd) == DarbouxType::forward);
  // Morse phi1 with A = 1/2, m = 2.
  CHECK(darboux_type(morse_factorization<Rational>(MorseSeries::phi1, R(1, 2), 2)) == DarbouxType::isospectral);
  CHECK(darboux_type(morse_factorization<Rational>(MorseSeries::phi2, R(1, 2), 3)) == DarbouxType::isospectral);

  // |x|^(-1/2) decay with no exponential part.
  const FactorizationData<Rational> border{Gauge<Rational>{RFunc(), {}}, P({1}),
                                           VariableMap<Rational>::identity(), R(0)};
  Gauge<Rational> gb{RFunc(), {}};
  gb.multiply_power(P({1, 0, 1}), R(-1, 4));
  CHECK_THROWS_AS(darboux_type(FactorizationData<Rational>{gb, P({1}), VariableMap<Rational>::identity(), R(0)}),
                  Undecidable);
  CHECK(darboux_type(border) == DarbouxType::isospectral);
}

TEST_CASE("constructor factorizations are backward and their inverses forward") {
  for (long m = 0; m <= 4; ++m) {
    for (const auto kind : {FamilyKind::ho, FamilyKind::morse, FamilyKind::pt}) {
      if (kind == FamilyKind::morse && m % 2 == 1) continue;
      const auto fd = factorization<Rational>(kind, R(5, 2), m);
      CHECK(darboux_type(fd) == DarbouxType::backward);
      CHECK(darboux_type(inverse_factorization(fd)) == DarbouxType::forward);
    }
    const auto f1 = factorization<Rational>(FamilyKind::pt, R(5, 2), m + 3, PtSeries::phi1);
    CHECK(darboux_type(f1) == DarbouxType::backward);
  }
  for (const auto kind : {FamilyKind::ho, FamilyKind::morse, FamilyKind::pt}) {
    const auto g = base_state<Rational>(kind, R(5, 2), 0);
    const FactorizationData<Rational> fd{g.psi.gauge, g.poly(), g.psi.map, g.energy};
    CHECK(darboux_type(fd) == DarbouxType::forward);
  }
}
