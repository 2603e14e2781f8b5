#include "sidef/darboux/darboux.hpp"

#include <vector>

namespace sidef {

std::string to_string(DarbouxType t) {
  switch (t) {
    case DarbouxType::forward: return "forward";
    case DarbouxType::backward: return "backward";
    case DarbouxType::isospectral: return "isospectral";
  }
  return "?";
}

void require_nodeless(const FactorizationData<Rational>& fd) {
  const auto range = fd.map.range();
  if (!range) throw ArgumentError("nodeless check needs a map with a rational range");
  if (!fd.factor.is_constant() && sturm_count(fd.factor, *range) > 0) {
    throw NodefulFactorization("factor " + fd.factor.str() + " has " + std::to_string(sturm_count(fd.factor, *range)) +
                               " root(s) in the range " + range->str() + " of z = " + fd.map.str());
  }
  for (const auto& [b, e] : fd.gauge.powers) {
    if (sturm_count(b, *range) > 0) {
      throw NodefulFactorization("gauge factor " + b.str() + " vanishes in the range " + range->str());
    }
  }
}

PotentialExpr<Rational> backward_deform(const PotentialExpr<Rational>& U, const FactorizationData<Rational>& fd,
                                        const std::optional<Rational>& base_ground) {
  require_nodeless(fd);
  if (base_ground && !(fd.energy < *base_ground)) {
    throw OrderingError("factorization energy " + fd.energy.str() + " is not below the base ground level " +
                        base_ground->str());
  }
  return deformed_potential(U, fd);
}

namespace {

// z along one end of the line: z ~ c B^k (infinite end) or z - point ~ c / B
// (finite end), with B = |x| for polynomial maps and exp|x| otherwise.
struct End {
  bool finite = false;
  Rational point;
  Rational c;
  long k = 1;
  bool exp_scale = false;
  const char* name = "";
};

std::vector<End> ends_of(const VariableMap<Rational>& map) {
  const Rational a = map.a(), b = map.b();
  const Rational half(1, 2);
  switch (map.base()) {
    case BaseMap::identity: return {{false, {}, a, 1, false, "x -> +inf"}, {false, {}, -a, 1, false, "x -> -inf"}};
    case BaseMap::square: return {{false, {}, a, 2, false, "x -> +inf"}, {false, {}, a, 2, false, "x -> -inf"}};
    case BaseMap::cosh:
      return {{false, {}, a * half, 1, true, "x -> +inf"}, {false, {}, a * half, 1, true, "x -> -inf"}};
    case BaseMap::sinh:
      return {{false, {}, a * half, 1, true, "x -> +inf"}, {false, {}, -a * half, 1, true, "x -> -inf"}};
    case BaseMap::exp_pos: return {{false, {}, a, 1, true, "x -> +inf"}, {true, b, a, -1, true, "x -> -inf"}};
    case BaseMap::exp_neg: return {{true, b, a, -1, true, "x -> +inf"}, {false, {}, a, 1, true, "x -> -inf"}};
  }
  return {};
}

// Multiplicity of the root `point` in p, and p / (z - point)^mult evaluated there.
std::pair<long, Rational> order_at(RPoly p, const Rational& point) {
  const RPoly lin = RPoly::linear(Rational(1), -point);
  long mult = 0;
  while (!p.is_zero() && p(point).is_zero()) {
    p = p / lin;
    ++mult;
  }
  return {mult, p(point)};
}

int sign_of_power(const Rational& c, long d) { return (c.sign() < 0 && d % 2 != 0) ? -1 : 1; }

struct Asymptotics {
  int super = 0;       // sign of a dominating exp(+-B^q) term, 0 if none
  Rational power;      // phi ~ B^power otherwise
};

Asymptotics asymptotics(const FactorizationData<Rational>& fd, const End& end) {
  Asymptotics out;
  const RFunc& E = fd.gauge.exponent;
  if (!end.finite) {
    if (!E.is_zero()) {
      const long d = static_cast<long>(E.num().deg()) - static_cast<long>(E.den().deg());
      if (d > 0) {
        const Rational L = E.num().leading() / E.den().leading();
        out.super = L.sign() * sign_of_power(end.c, d);
      }
    }
    Rational deg(static_cast<long>(fd.factor.deg()));
    for (const auto& [b, e] : fd.gauge.powers) deg = deg + e * Rational(static_cast<long>(b.deg()));
    out.power = deg * Rational(end.k);
    return out;
  }
  if (!E.is_zero()) {
    const auto [on, vn] = order_at(E.num(), end.point);
    const auto [od, vd] = order_at(E.den(), end.point);
    const long q = od - on;
    if (q > 0) out.super = (vn / vd).sign() * sign_of_power(end.c, q);
  }
  Rational ord(order_at(fd.factor, end.point).first);
  for (const auto& [b, e] : fd.gauge.powers) ord = ord + e * Rational(order_at(b, end.point).first);
  out.power = -ord;
  return out;
}

// Square integrability of phi^(+1) or phi^(-1) at one end.
bool square_integrable(Asymptotics a, bool inverse, const End& end) {
  if (inverse) {
    a.super = -a.super;
    a.power = -a.power;
  }
  if (a.super != 0) return a.super < 0;
  if (end.exp_scale) return a.power.sign() < 0;
  const Rational twice = a.power * Rational(2);
  if (twice == Rational(-1)) {
    throw Undecidable(std::string("borderline algebraic decay |x|^(-1/2) at ") + end.name);
  }
  return twice < Rational(-1);
}

}  // namespace

DarbouxType darboux_type(const FactorizationData<Rational>& fd) {
  bool phi_l2 = true, inv_l2 = true;
  for (const auto& end : ends_of(fd.map)) {
    const Asymptotics a = asymptotics(fd, end);
    phi_l2 = square_integrable(a, false, end) && phi_l2;
    inv_l2 = square_integrable(a, true, end) && inv_l2;
  }
  if (phi_l2) return DarbouxType::forward;
  if (inv_l2) return DarbouxType::backward;
  return DarbouxType::isospectral;
}

}  // namespace sidef
