#include "sidef/operators/potential.hpp"

#include <cmath>
#include <vector>

namespace sidef {

namespace {

std::vector<double> to_doubles(const RPoly& p) {
  std::vector<double> c;
  c.reserve(p.coefficients().size());
  for (const auto& r : p.coefficients()) c.push_back(r.to_double());
  return c;
}

double horner(const std::vector<double>& c, double z) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

// p(z) / z^deg evaluated through the reversed coefficients at 1/z.
double reversed_horner(const std::vector<double>& c, double inv) {
  double acc = 0.0;
  for (double x : c) acc = acc * inv + x;
  return acc;
}

}  // namespace

double eval_double(const RPoly& p, double z) {
  if (p.is_zero()) return 0.0;
  const auto c = to_doubles(p);
  if (std::abs(z) <= 1.0) return horner(c, z);
  return std::pow(z, static_cast<double>(p.deg())) * reversed_horner(c, 1.0 / z);
}

double eval_double(const RFunc& f, double z) {
  if (f.is_zero()) return 0.0;
  const auto n = to_doubles(f.num());
  const auto d = to_doubles(f.den());
  if (std::abs(z) <= 1.0) return horner(n, z) / horner(d, z);
  const double ratio = reversed_horner(n, 1.0 / z) / reversed_horner(d, 1.0 / z);
  const long k = static_cast<long>(f.num().deg()) - static_cast<long>(f.den().deg());
  return k == 0 ? ratio : std::pow(z, static_cast<double>(k)) * ratio;
}

}  // namespace sidef
