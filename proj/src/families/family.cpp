#include "sidef/families/family.hpp"

#include <algorithm>
#include <map>

#include "sidef/operators/bridge.hpp"

namespace sidef {

FamilyKind parse_family_kind(const std::string& s) {
  if (s == "ho") return FamilyKind::ho;
  if (s == "morse") return FamilyKind::morse;
  if (s == "pt") return FamilyKind::pt;
  throw ArgumentError("unknown family '" + s + "' (expected ho, morse or pt)");
}

std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::ho: return "ho";
    case FamilyKind::morse: return "morse";
    case FamilyKind::pt: return "pt";
  }
  return "?";
}

PtSeries parse_pt_series(const std::string& s) {
  if (s == "phi4") return PtSeries::phi4;
  if (s == "phi1") return PtSeries::phi1;
  throw ArgumentError("unknown series '" + s + "' (expected phi4 or phi1)");
}

std::string to_string(PtSeries s) { return s == PtSeries::phi4 ? "phi4" : "phi1"; }

MorseSeries parse_morse_series(const std::string& s) {
  if (s == "phi1") return MorseSeries::phi1;
  if (s == "phi2") return MorseSeries::phi2;
  if (s == "phi4") return MorseSeries::phi4;
  throw ArgumentError("unknown morse series '" + s + "' (expected phi1, phi2 or phi4)");
}

std::string to_string(MorseSeries s) {
  switch (s) {
    case MorseSeries::phi1: return "phi1";
    case MorseSeries::phi2: return "phi2";
    case MorseSeries::phi4: return "phi4";
  }
  return "?";
}

Sector parse_sector(const std::string& s) {
  if (s == "even") return Sector::even;
  if (s == "odd") return Sector::odd;
  throw ArgumentError("unknown sector '" + s + "' (expected even or odd)");
}

std::string to_string(Sector s) { return s == Sector::even ? "even" : "odd"; }

std::string DeformedFamily::label() const {
  std::string out = to_string(kind);
  if (A) out += " A=" + A->str();
  out += " m=" + std::to_string(m);
  if (kind == FamilyKind::pt) out += " " + to_string(series);
  return out;
}

std::optional<long> base_bound_count(FamilyKind kind, const Rational& A) {
  // Number of integers n >= 0 with n < bound.
  auto below = [](const Rational& bound) -> long {
    if (bound.sign() <= 0) return 0;
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), bound.numerator().get_mpz_t(), bound.denominator().get_mpz_t());
    return q.get_si();
  };
  switch (kind) {
    case FamilyKind::ho: return std::nullopt;
    case FamilyKind::morse: return below(A);
    case FamilyKind::pt: return below(A - Rational(1, 2));
  }
  return std::nullopt;
}

DeformedFamily make_family(FamilyKind kind, const std::optional<Rational>& A, long m, PtSeries series) {
  if (m < 0) throw ArgumentError("m must be a non-negative integer");
  DeformedFamily fam;
  fam.kind = kind;
  fam.m = m;
  fam.series = series;
  switch (kind) {
    case FamilyKind::ho:
      if (A) throw ArgumentError("ho takes no parameter A");
      break;
    case FamilyKind::morse:
      if (!A) throw ArgumentError("morse needs A");
      if (A->sign() <= 0) throw ArgumentError("morse needs A > 0, got " + A->str());
      break;
    case FamilyKind::pt:
      if (!A) throw ArgumentError("pt needs A");
      if (!(*A > Rational(1, 2))) throw ArgumentError("pt needs A > 1/2, got " + A->str());
      if (series == PtSeries::phi1 && !(Rational(m) > *A - Rational(1, 2))) {
        throw NodefulFactorization("pt phi1 needs m > A - 1/2, got m=" + std::to_string(m) + " A=" + A->str());
      }
      break;
  }
  fam.A = A;
  const Rational a = fam.a_value();
  fam.base = base_potential<Rational>(kind, a);
  fam.fdata = factorization<Rational>(kind, a, m, series);
  fam.base_ground = base_state<Rational>(kind, a, 0).energy;
  fam.potential = backward_deform(fam.base, fam.fdata, fam.base_ground);
  fam.ground_energy = fam.fdata.energy;
  return fam;
}

SpectrumList energy_spectrum(const DeformedFamily& fam, long count) {
  if (count < 1) throw ArgumentError("count must be at least 1");
  SpectrumList out;
  out.levels.push_back(fam.ground_energy);
  const auto bound = base_bound_count(fam.kind, fam.a_value());
  for (long n = 0; static_cast<long>(out.levels.size()) < count; ++n) {
    if (bound && n >= *bound) {
      out.truncated = true;
      break;
    }
    out.levels.push_back(base_state<Rational>(fam.kind, fam.a_value(), n).energy);
  }
  std::sort(out.levels.begin(), out.levels.end());
  return out;
}

Eigenstate<Rational> bound_state(const DeformedFamily& fam, long n) {
  if (n < 0) throw ArgumentError("bound state index must be non-negative");
  if (n == 0) return inverse_state(fam.fdata);
  const auto bound = base_bound_count(fam.kind, fam.a_value());
  if (bound && n > *bound) {
    throw ArgumentError("bound state index " + std::to_string(n) + " exceeds the " + std::to_string(*bound + 1) +
                        " bound states of " + fam.label());
  }
  return intertwine(fam.fdata, base_state<Rational>(fam.kind, fam.a_value(), n - 1));
}

std::vector<Sector> sectors(FamilyKind kind) {
  if (kind == FamilyKind::morse) return {Sector::even};
  return {Sector::even, Sector::odd};
}

namespace {

struct Element {
  GaugedFunction<Rational> psi;
  std::optional<Rational> energy;
  bool annihilated = false;
};

// Base-state indices whose alpha images fill the sector, and whether the
// sector also holds the new ground state 1/phi.
struct SectorPlan {
  bool ground = false;
  std::vector<long> indices;
};

SectorPlan plan_for(FamilyKind kind, long n, Sector sector) {
  SectorPlan plan;
  if (kind == FamilyKind::morse) {
    plan.ground = true;
    for (long j = 0; j <= n; ++j) plan.indices.push_back(j);
    return plan;
  }
  // ho: the ground state is even in x; pt: x -> -x parity of the states.
  if (sector == Sector::even) {
    plan.ground = true;
    for (long k = 0; k < n; ++k) plan.indices.push_back(2 * k + 1);
  } else {
    for (long k = 0; k <= n; ++k) plan.indices.push_back(2 * k);
  }
  return plan;
}

// Degree of the polynomial part of base state `index` in its variable.
long expected_degree(FamilyKind kind, long index) {
  if (kind == FamilyKind::morse) return index;
  return index / 2;
}

Gauge<Rational> common_gauge(const std::vector<Element>& elems) {
  Gauge<Rational> out{elems.front().psi.gauge.exponent, {}};
  std::map<std::string, std::pair<RPoly, Rational>> mins;
  for (const auto& e : elems) {
    if (!(e.psi.gauge.exponent == out.exponent)) {
      throw InternalConsistencyError("flag elements with different exponential gauges");
    }
    for (const auto& [b, x] : e.psi.gauge.powers) {
      const auto it = mins.find(b.str());
      if (it == mins.end()) {
        mins.emplace(b.str(), std::make_pair(b, x));
      } else if (x < it->second.second) {
        it->second.second = x;
      }
    }
  }
  for (const auto& [key, be] : mins) {
    Rational lo = be.second;
    // A base missing from some element counts as exponent 0 there.
    for (const auto& e : elems) lo = std::min(lo, e.psi.gauge.exponent_of(be.first));
    out.multiply_power(be.first, lo);
  }
  return out;
}

}  // namespace

FlagBasis flag_basis(const DeformedFamily& fam, long n, Sector sector) {
  if (n < fam.m) {
    throw ArgumentError("flag level n=" + std::to_string(n) + " must be at least m=" + std::to_string(fam.m));
  }
  if (fam.kind == FamilyKind::morse && sector != Sector::even) {
    throw ArgumentError("morse has a single sector (even)");
  }
  const Rational a = fam.a_value();
  const SectorPlan plan = plan_for(fam.kind, n, sector);

  std::vector<Element> elems;
  bool fallback = false;
  for (long idx : plan.indices) {
    const auto st = base_state<Rational>(fam.kind, a, idx);
    if (static_cast<long>(st.poly().deg()) != expected_degree(fam.kind, idx) ||
        apply_alpha(fam.fdata, st.psi).is_zero()) {
      fallback = true;
      break;
    }
    elems.push_back({intertwine(fam.fdata, st).psi, st.energy});
  }
  if (fallback) {
    // The gauged base module spanned by monomials is invariant in any case.
    // When phi itself lies in that module one image vanishes, so one more
    // monomial keeps the dimension.
    elems.clear();
    const int parity = plan.indices.empty() ? 0 : static_cast<int>(plan.indices.front() % 2);
    const auto g = base_state<Rational>(fam.kind, a, plan.indices.empty() ? 0 : plan.indices.front()).psi;
    // The gauged base operator is triangular on monomials with the formal
    // energies on its diagonal; alpha removes the factorization energy.
    const long step = fam.kind == FamilyKind::morse ? 1 : 2;
    const long first = plan.indices.empty() ? 0 : plan.indices.front();
    for (std::size_t k = 0; k <= plan.indices.size(); ++k) {
      const GaugedFunction<Rational> f{g.gauge, fam.fdata.map.has_parity() ? parity : 0,
                                       RFunc(RPoly::monomial(k)), fam.fdata.map};
      const auto img = apply_alpha(fam.fdata, f);
      const Rational e = base_state<Rational>(fam.kind, a, first + step * static_cast<long>(k)).energy;
      if (img.is_zero()) {
        elems.push_back({f, e, true});
      } else {
        elems.push_back({img.canonical({fam.fdata.factor}), e});
      }
    }
  }
  if (plan.ground) {
    const auto g = inverse_state(fam.fdata);
    elems.insert(elems.begin(), {g.psi, g.energy});
  }

  FlagBasis out;
  out.monomial_fallback = fallback;
  std::vector<Element> live;
  for (const auto& e : elems) {
    if (!e.annihilated) live.push_back(e);
  }
  out.gauge = common_gauge(live);
  out.parity = live.front().psi.parity;
  const std::size_t size = plan.indices.size() + (plan.ground ? 1 : 0);
  bool dropped = false;
  for (const auto& e : elems) {
    if (out.basis.size() == size) break;
    out.energies.push_back(*e.energy);
    if (e.annihilated) {
      dropped = true;
      continue;
    }
    if (e.psi.parity != out.parity) throw InternalConsistencyError("flag elements with different parity");
    RPoly p = e.psi.rebased(out.gauge).poly();
    if (fallback) {
      auto trial = out.basis;
      trial.push_back(p);
      if (!linearly_independent(trial)) {
        dropped = true;
        continue;
      }
    }
    out.basis.push_back(std::move(p));
  }
  if (dropped) {
    const auto it = std::find(out.energies.begin(), out.energies.end(), fam.fdata.energy);
    if (it == out.energies.end()) throw InternalConsistencyError("annihilated image away from the factorization energy");
    out.energies.erase(it);
  }
  if (fallback) std::sort(out.energies.begin(), out.energies.end());
  if (out.basis.size() != size) throw InternalConsistencyError("flag of " + fam.label() + " lost dimension");

  const VariableMap<Rational>& map = fam.fdata.map;
  RFunc l = out.gauge.log_derivative();
  if (out.parity == 1) l += RFunc(Rational(1, 2)) * map.S().derivative() / map.S();
  out.op = schrodinger_to_algebraic(fam.potential, l, map);

  const auto mat = invariance_check(out.op, out.basis);
  if (!mat) throw InternalConsistencyError("flag of " + fam.label() + " at n=" + std::to_string(n) + " is not invariant");
  out.matrix = *mat;
  const auto ech = degree_echelon(out.basis);
  const auto emat = invariance_check(out.op, ech);
  if (!emat) throw InternalConsistencyError("echelon flag basis is not invariant");
  for (std::size_t i = 0; i < ech.size(); ++i) out.echelon_diagonal.push_back((*emat)(i, i));
  return out;
}

std::optional<Rational> exceptional_shift(const std::vector<RPoly>& basis) {
  const auto ech = degree_echelon(basis);
  if (ech.size() < 2 || ech[0].deg() != 0 || ech[1].deg() != 2) return std::nullopt;
  const RPoly& f = ech[1];
  const Rational b = -f.coeff(1) / (Rational(2) * f.coeff(2));
  // Every member must have a critical point at b, and the span must be
  // span{1, (z-b)^2, ..., (z-b)^k} (dimensions agree when degrees are 0, 2, 3, ...).
  for (std::size_t i = 0; i < ech.size(); ++i) {
    if (!ech[i].derivative()(b).is_zero()) return std::nullopt;
    if (ech[i].deg() != (i == 0 ? 0 : i + 1)) return std::nullopt;
  }
  return b;
}

}  // namespace sidef
