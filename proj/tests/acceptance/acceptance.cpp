// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sidef/cli/cli.hpp"
#include "sidef/darboux/darboux.hpp"
#include "sidef/families/family.hpp"
#include "sidef/numerics/numerics.hpp"
#include "sidef/operators/bridge.hpp"
#include "sidef/operators/diffop.hpp"
#include "sidef/operators/tables.hpp"

using namespace sidef;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Rational R(long n, long d = 1) { return Rational(n, d); }

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

// 1. Preserver space.
Outcome preservers() {
  Outcome o;
  const auto t0 = Clock::now();
  for (long n = 4; n <= 8; ++n) {
    const auto space = preserver_space(n, {-2, 4});
    if (space.size() != 7) o.fail("n=" + std::to_string(n) + " dimension " + std::to_string(space.size()));
    if (reduced_span(space, {-2, 4}) != reduced_span(exceptional_generators(n), {-2, 4})) {
      o.fail("n=" + std::to_string(n) + " basis differs from the generators");
    }
  }
  const double s = seconds_since(t0);
  if (s > 10) o.fail("runtime " + sci(s) + " s");
  if (o.pass) o.detail = "dimension 7 for n=4..8, reduced bases equal, " + sci(s) + " s";
  return o;
}

// 2. Shape-invariant rows reduce to the base potentials up to the ground level.
Outcome table1() {
  Outcome o;
  const Param A = symbol_A();
  const Param h(R(1, 2));
  struct Row {
    std::string name;
    PotentialExpr<Param> target;
    Param shift;
  };
  const std::vector<Row> rows{
      {"Ia", {RatFunc<Param>(Poly<Param>::monomial(2)), {}, VariableMap<Param>::identity(), Param(0)}, Param(-1)},
      {"Ib", base_potential<Param>(FamilyKind::ho, A), Param(-1)},
      {"II", base_potential<Param>(FamilyKind::morse, A), (A + Param(1)) * (A + Param(1))},
      {"III", base_potential<Param>(FamilyKind::pt, A), Param(R(1, 4)) * (A - h) * (A - h)},
  };
  std::string offsets;
  for (const auto& r : rows) {
    const auto row = table1_row<Param>(r.name, A);
    const auto [U, l] = to_schrodinger(row.op, row.map);
    const auto off = U.constant_offset(r.target);
    if (!off) {
      o.fail(r.name + ": not the listed potential plus a constant");
      continue;
    }
    if (!(*off == r.shift)) o.fail(r.name + ": offset " + off->str());
    offsets += (offsets.empty() ? "" : ", ") + r.name + " " + off->str("A");
  }
  if (o.pass) o.detail = "exact up to the ground level: " + offsets;
  return o;
}

// 3. Exceptional rows against the deformed potentials.
Outcome identities() {
  Outcome o;
  const Param A = symbol_A();
  const auto iiia = table2_row<Rational>("IIIa", R(0), R(4));
  const auto off3 = to_schrodinger(iiia.op, iiia.map).first.constant_offset(
      formal_deformed_potential<Rational>(FamilyKind::ho, R(0), 1));
  if (!off3 || !(*off3 == R(5))) o.fail("IIIa offset is not 5");

  const auto ia = table2_row<Param>("Ia", A, A + Param(R(3, 2)));
  const auto off1 =
      to_schrodinger(ia.op, ia.map).first.constant_offset(formal_deformed_potential<Param>(FamilyKind::pt, A, 1));
  const Param c1 = Param(R(5, 4)) + A * Param(R(1, 2));
  if (!off1 || !(*off1 == c1 * c1)) o.fail("Ia offset is not (5/4+A/2)^2");

  const auto iia = table2_row<Param>("IIa", A, Param(2) * A + Param(3));
  const auto off2 = to_schrodinger(iia.op, iia.map).first.constant_offset(
      formal_deformed_potential<Param>(FamilyKind::morse, A, 1));
  const Param c2 = Param(2) + A;
  if (!off2 || !(*off2 == c2 * c2)) o.fail("IIa offset is not (2+A)^2");
  if (o.pass) o.detail = "IIIa +5, Ia +(5/4+A/2)^2, IIa +(2+A)^2 at symbolic A";
  return o;
}

struct Inst {
  FamilyKind kind;
  std::optional<Rational> A;
};

const std::vector<Inst>& instances() {
  static const std::vector<Inst> v{{FamilyKind::ho, std::nullopt}, {FamilyKind::morse, R(5, 2)},
                                   {FamilyKind::pt, R(4)}, {FamilyKind::pt, R(13, 4)}};
  return v;
}

// 4. Flags: invariance, analytic spectrum, nesting, m = 1 exceptional shape.
Outcome flags() {
  Outcome o;
  long count = 0;
  for (const auto& in : instances()) {
    for (long m = 0; m <= 4; ++m) {
      if (in.kind == FamilyKind::morse && m % 2 == 1) continue;
      const auto fam = make_family(in.kind, in.A, m);
      for (const auto sec : sectors(in.kind)) {
        std::vector<RPoly> prev;
        for (long n = m; n <= 10; ++n) {
          const std::string where = fam.label() + " " + to_string(sec) + " n=" + std::to_string(n);
          FlagBasis fb;
          try {
            fb = flag_basis(fam, n, sec);
          } catch (const InternalConsistencyError& e) {
            o.fail(where + ": " + e.what());
            continue;
          }
          ++count;
          auto spec = fb.echelon_diagonal;
          std::sort(spec.begin(), spec.end());
          auto want = fb.energies;
          std::sort(want.begin(), want.end());
          if (spec != want) o.fail(where + ": spectrum differs from the analytic energies");
          if (!prev.empty() && !span_contains(fb.basis, prev)) o.fail(where + ": not nested");
          prev = fb.basis;
          if (m == 1 && sec == Sector::even && n >= 2) {
            const auto b = exceptional_shift(fb.basis);
            if (!b) {
              o.fail(where + ": no affine shift to span{1, z^2, ...}");
              continue;
            }
            std::vector<RPoly> shifted;
            for (const auto& p : fb.basis) shifted.push_back(p.compose_affine(R(1), *b));
            const auto target = exceptional_module(n + 1);
            if (!span_contains(shifted, target) || !span_contains(target, shifted)) {
              o.fail(where + ": shifted basis is not span{1, z^2, ...}");
            }
          }
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(count) + " flags invariant with analytic spectra and nested";
  return o;
}

// 5. Morse parity gate.
Outcome morse_parity() {
  Outcome o;
  try {
    make_family(FamilyKind::morse, R(5, 2), 1);
    o.fail("m=1 was accepted");
  } catch (const NodefulFactorization&) {
  }
  try {
    make_family(FamilyKind::morse, R(5, 2), 2);
  } catch (const std::exception& e) {
    o.fail(std::string("m=2 rejected: ") + e.what());
  }
  if (o.pass) o.detail = "m=1 NodefulFactorization, m=2 constructed";
  return o;
}

// 6. Finite-difference spectra.
Outcome spectra() {
  Outcome o;
  struct Case {
    FamilyKind kind;
    std::optional<Rational> A;
    long m;
    std::vector<double> want;
    std::vector<double> tol;
  };
  const std::vector<Case> cases{
      {FamilyKind::ho, std::nullopt, 1, {-5, 1, 3, 5, 7}, {1e-4, 1e-4, 1e-4, 1e-4, 1e-4}},
      {FamilyKind::morse, R(5, 2), 2, {-30.25, -6.25, -2.25, -0.25}, {1e-3, 1e-3, 1e-3, 5e-3}},
      {FamilyKind::pt, R(4), 1, {-10.5625, -3.0625, -1.5625, -0.5625}, {1e-3, 1e-3, 1e-3, 1e-3}},
  };
  std::string summary;
  for (const auto& c : cases) {
    const auto t0 = Clock::now();
    const auto fam = make_family(c.kind, c.A, c.m);
    const auto e = lowest_eigs(discretize(fam.potential, default_grid(c.kind)), static_cast<long>(c.want.size()));
    const double s = seconds_since(t0);
    double worst = 0;
    for (std::size_t i = 0; i < c.want.size(); ++i) {
      const double err = std::abs(e[i] - c.want[i]);
      worst = std::max(worst, err);
      if (!(err <= c.tol[i])) o.fail(fam.label() + " level " + std::to_string(i) + " error " + sci(err));
    }
    if (s > 30) o.fail(fam.label() + " took " + sci(s) + " s");
    summary += (summary.empty() ? "" : "; ") + to_string(c.kind) + " max err " + sci(worst);
  }
  if (o.pass) o.detail = summary;
  return o;
}

// 7. Grid residuals of the closed-form bound states.
Outcome residuals() {
  Outcome o;
  double worst = 0, lo_ratio = 1e300, hi_ratio = 0;
  std::string worst_at;
  for (const auto& in : instances()) {
    for (long m = 0; m <= 3; ++m) {
      if (in.kind == FamilyKind::morse && m % 2 == 1) continue;
      const auto fam = make_family(in.kind, in.A, m);
      const Grid g = default_grid(in.kind);
      const auto bound = base_bound_count(in.kind, fam.a_value());
      const long levels = bound ? std::min<long>(4, *bound + 1) : 4;
      for (long n = 0; n < levels; ++n) {
        const auto st = bound_state(fam, n);
        const double r = residual_norm(fam.potential, st, g);
        const double ratio = r / residual_norm(fam.potential, st, g.refined());
        if (r > worst) {
          worst = r;
          worst_at = fam.label() + " level " + std::to_string(n);
        }
        lo_ratio = std::min(lo_ratio, ratio);
        hi_ratio = std::max(hi_ratio, ratio);
      }
    }
  }
  const std::string stats =
      "max residual " + sci(worst) + " (" + worst_at + "), halving ratio " + sci(lo_ratio) + ".." + sci(hi_ratio);
  if (worst > 1e-4) o.fail(stats + "; bound 1e-4");
  if (lo_ratio < 3 || hi_ratio > 5) o.fail(stats + "; ratio outside [3, 5]");
  if (o.pass) o.detail = stats;
  return o;
}

// 8. Intertwining identity on monomials.
Outcome intertwining() {
  Outcome o;
  struct Case {
    FamilyKind kind;
    Rational A;
    PtSeries series;
  };
  const std::vector<Case> cases{{FamilyKind::ho, R(0), PtSeries::phi4},
                                {FamilyKind::morse, R(5, 2), PtSeries::phi4},
                                {FamilyKind::pt, R(4), PtSeries::phi4},
                                {FamilyKind::pt, R(7, 3), PtSeries::phi1}};
  long checked = 0;
  for (const auto& c : cases) {
    for (long m = 0; m <= 3; ++m) {
      const auto U = base_potential<Rational>(c.kind, c.A);
      const auto fd = factorization<Rational>(c.kind, c.A, m, c.series);
      const auto Uhat = deformed_potential(U, fd);
      const auto g = base_state<Rational>(c.kind, c.A, 0).psi.gauge;
      const int parities = fd.map.has_parity() ? 2 : 1;
      for (int p = 0; p < parities; ++p) {
        for (std::size_t k = 0; k <= 6; ++k) {
          const GaugedFunction<Rational> f{g, p, RFunc(RPoly::monomial(k)), fd.map};
          ++checked;
          if (!(apply_alpha(fd, apply_tau(U, f)) - apply_tau(Uhat, apply_alpha(fd, f))).is_zero()) {
            o.fail(to_string(c.kind) + " m=" + std::to_string(m) + " z^" + std::to_string(k));
          }
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " exact checks, all zero";
  return o;
}

// 9. Darboux trichotomy.
Outcome trichotomy() {
  Outcome o;
  for (long m = 0; m <= 4; ++m) {
    for (const auto kind : {FamilyKind::ho, FamilyKind::morse, FamilyKind::pt}) {
      if (kind == FamilyKind::morse && m % 2 == 1) continue;
      if (darboux_type(factorization<Rational>(kind, R(5, 2), m)) != DarbouxType::backward) {
        o.fail(to_string(kind) + " m=" + std::to_string(m) + " constructor is not backward");
      }
    }
    if (darboux_type(factorization<Rational>(FamilyKind::pt, R(5, 2), m + 3, PtSeries::phi1)) !=
        DarbouxType::backward) {
      o.fail("pt phi1 m=" + std::to_string(m + 3) + " is not backward");
    }
  }
  for (const auto kind : {FamilyKind::ho, FamilyKind::morse, FamilyKind::pt}) {
    const auto g = base_state<Rational>(kind, R(5, 2), 0);
    const FactorizationData<Rational> fd{g.psi.gauge, g.poly(), g.psi.map, g.energy};
    if (darboux_type(fd) != DarbouxType::forward) o.fail(to_string(kind) + " ground state is not forward");
  }
  struct Iso {
    MorseSeries s;
    Rational A;
    long m;
  };
  std::string kinds;
  for (const auto& c : {Iso{MorseSeries::phi1, R(1, 2), 2}, Iso{MorseSeries::phi2, R(1, 2), 3},
                        Iso{MorseSeries::phi4, R(1, 2), 2}}) {
    const auto t = darboux_type(morse_factorization<Rational>(c.s, c.A, c.m));
    kinds += (kinds.empty() ? "" : ", ") + to_string(c.s) + " " + to_string(t);
    if (t != DarbouxType::isospectral) o.fail("morse " + to_string(c.s) + " classified " + to_string(t));
  }
  if (!o.pass) o.detail += " (morse: " + kinds + ")";
  if (o.pass) o.detail = "constructors backward, ground states forward, morse " + kinds;
  return o;
}

// 10. Figure data through the command line.
Outcome figures() {
  Outcome o;
  struct Fig {
    std::string kind;
    std::string A;
    std::vector<long> ms;
  };
  std::vector<double> at_zero;
  long rows = 0;
  for (const auto& f : {Fig{"ho", "", {0, 1, 2, 3}}, Fig{"morse", "5/2", {0, 2, 4}}, Fig{"pt", "4", {0, 1, 2, 3}}}) {
    for (long m : f.ms) {
      std::vector<std::string> args{"family", "--kind", f.kind, "--m", std::to_string(m), "--samples", "601"};
      if (!f.A.empty()) {
        args.push_back("--A");
        args.push_back(f.A);
      }
      std::ostringstream out, err;
      if (cli::dispatch(args, out, err) != 0) {
        o.fail(f.kind + " m=" + std::to_string(m) + ": " + err.str());
        continue;
      }
      std::istringstream is(out.str());
      std::string line;
      std::getline(is, line);
      if (line != "x,U") o.fail("bad csv header");
      while (std::getline(is, line)) {
        ++rows;
        const auto comma = line.find(',');
        const double x = std::strtod(line.substr(0, comma).c_str(), nullptr);
        const double u = std::strtod(line.substr(comma + 1).c_str(), nullptr);
        if (!std::isfinite(x) || !std::isfinite(u)) o.fail(f.kind + " non-finite value: " + line);
        if (f.kind == "ho" && x == 0.0) at_zero.push_back(u);
      }
    }
  }
  if (at_zero.size() != 4) {
    o.fail("x = 0 not sampled for every ho curve");
  } else {
    for (std::size_t i = 1; i < 4; ++i) {
      if (!(at_zero[i] < at_zero[i - 1])) o.fail("U_ho(0) does not decrease at m=" + std::to_string(i));
    }
  }
  if (o.pass) {
    std::ostringstream d;
    d << "U_ho(0) for m=0..3:";
    for (double u : at_zero) d << ' ' << cli::format_double(u);
    d << "; " << rows << " finite rows";
    o.detail = d.str();
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{preservers, table1,       identities,   flags,
                                                       morse_parity, spectra,   residuals,    intertwining,
                                                       trichotomy,   figures};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failed;
    std::cout << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail << "  ["
              << sci(seconds_since(t0)) << " s]" << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria pass"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
