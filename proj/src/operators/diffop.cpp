#include "sidef/operators/diffop.hpp"

#include <map>
#include <set>

namespace sidef {

namespace {

RFunc mono(long k, long c = 1) { return RFunc::power(k, Rational(c)); }

DiffOp2<Rational> from_vector(const std::vector<Rational>& v, long dmin, std::size_t width) {
  auto part = [&](std::size_t which) {
    return laurent<Rational>(dmin, std::vector<Rational>(v.begin() + static_cast<long>(which * width),
                                                         v.begin() + static_cast<long>((which + 1) * width)));
  };
  return {part(0), part(1), part(2)};
}

std::vector<std::vector<Rational>> rref_rows(std::vector<std::vector<Rational>> rows, std::size_t cols) {
  if (rows.empty()) return rows;
  Matrix<Rational> m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  const std::size_t rank = m.rref().size();
  std::vector<std::vector<Rational>> out(rank, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out[i][j] = m(i, j);
  }
  return out;
}

}  // namespace

std::vector<DiffOp2<Rational>> exceptional_generators(long n) {
  if (n < 2) throw ArgumentError("exceptional_generators needs n >= 2");
  return {
      {mono(4), mono(3, 2 * (1 - n)), mono(2, n * (n - 1))},
      {mono(3), mono(2, -(n - 1)), RFunc()},
      {mono(2), RFunc(), RFunc()},
      {mono(1), mono(0, -1), RFunc()},
      {mono(0), mono(-1, -2), RFunc()},
      {RFunc(), mono(1), RFunc()},
      {RFunc(), RFunc(), mono(0)},
  };
}

std::vector<RPoly> exceptional_module(long n) {
  std::vector<RPoly> out{RPoly(Rational(1))};
  for (long k = 2; k <= n; ++k) out.push_back(RPoly::monomial(static_cast<std::size_t>(k)));
  return out;
}

std::vector<Rational> laurent_vector(const DiffOp2<Rational>& T, std::pair<long, long> window) {
  const auto [dmin, dmax] = window;
  const std::size_t width = static_cast<std::size_t>(dmax - dmin + 1);
  std::vector<Rational> v(3 * width, Rational(0));
  const RFunc* parts[] = {&T.P, &T.Q, &T.R};
  for (std::size_t which = 0; which < 3; ++which) {
    const RFunc& f = *parts[which];
    if (f.is_zero()) continue;
    const std::size_t shift = f.den().deg();
    if (!(f.den() == RPoly::monomial(shift))) throw ArgumentError("operator coefficient is not a Laurent polynomial");
    for (std::size_t i = 0; i < f.num().coefficients().size(); ++i) {
      if (f.num().coeff(i).is_zero()) continue;
      const long d = static_cast<long>(i) - static_cast<long>(shift);
      if (d < dmin || d > dmax) throw ArgumentError("operator coefficient outside the Laurent window");
      v[which * width + static_cast<std::size_t>(d - dmin)] = f.num().coeff(i);
    }
  }
  return v;
}

std::vector<std::vector<Rational>> reduced_span(const std::vector<DiffOp2<Rational>>& ops,
                                                std::pair<long, long> window) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& op : ops) rows.push_back(laurent_vector(op, window));
  return rref_rows(std::move(rows), 3 * static_cast<std::size_t>(window.second - window.first + 1));
}

std::vector<DiffOp2<Rational>> preserver_space(long n, std::pair<long, long> window) {
  if (n < 3) throw ArgumentError("preserver_space needs n >= 3");
  const auto [dmin, dmax] = window;
  if (dmin > dmax) throw ArgumentError("preserver_space: empty coefficient window");
  const std::size_t width = static_cast<std::size_t>(dmax - dmin + 1);
  const std::size_t unknowns = 3 * width;

  std::set<long> module{0};
  for (long k = 2; k <= n; ++k) module.insert(k);

  // One row per (basis exponent k, output power e) with e outside the module.
  std::map<std::pair<long, long>, std::vector<Rational>> rows;
  auto add = [&](long k, long e, std::size_t col, const Rational& c) {
    if (c.is_zero() || module.count(e)) return;
    auto [it, fresh] = rows.try_emplace({k, e}, std::vector<Rational>(unknowns, Rational(0)));
    it->second[col] += c;
  };
  for (long k : module) {
    for (long d = dmin; d <= dmax; ++d) {
      const std::size_t i = static_cast<std::size_t>(d - dmin);
      add(k, d + k - 2, i, Rational(k * (k - 1)));
      add(k, d + k - 1, width + i, Rational(k));
      add(k, d + k, 2 * width + i, Rational(1));
    }
  }
  Matrix<Rational> m(rows.size(), unknowns);
  std::size_t r = 0;
  for (const auto& [key, row] : rows) {
    for (std::size_t j = 0; j < unknowns; ++j) m(r, j) = row[j];
    ++r;
  }
  const auto null = rref_rows(m.nullspace(), unknowns);
  std::vector<DiffOp2<Rational>> out;
  for (const auto& v : null) out.push_back(from_vector(v, dmin, width));
  return out;
}

}  // namespace sidef
