#include "sidef/polynomials/sturm.hpp"

#include <algorithm>
#include <optional>

namespace sidef {

namespace {

int sign_at(const RPoly& p, const Rational& x) { return p(x).sign(); }

// Sign of p as z -> +inf (dir = +1) or -inf (dir = -1).
int sign_at_infinity(const RPoly& p, int dir) {
  const int lead = p.leading().sign();
  if (dir > 0 || p.deg() % 2 == 0) return lead;
  return -lead;
}

std::size_t sign_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t variations(const std::vector<RPoly>& seq, const std::optional<Rational>& x, int inf_dir) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& q : seq) signs.push_back(x ? sign_at(q, *x) : sign_at_infinity(q, inf_dir));
  return sign_changes(signs);
}

}  // namespace

RPoly squarefree_part(const RPoly& p) {
  if (p.is_constant()) return p;
  const RPoly g = gcd(p, p.derivative());
  return g.is_constant() ? p : p / g;
}

std::vector<RPoly> sturm_sequence(const RPoly& p) {
  std::vector<RPoly> seq{p};
  if (p.is_constant()) return seq;
  seq.push_back(p.derivative());
  while (!seq.back().is_constant()) {
    RPoly r = -(seq[seq.size() - 2] % seq.back());
    if (r.is_zero()) break;
    seq.push_back(std::move(r));
  }
  return seq;
}

std::size_t sturm_count(const RPoly& p, const Interval& iv) {
  if (p.is_zero()) throw ArgumentError("sturm_count of the zero polynomial");
  RPoly q = squarefree_part(p);
  if (q.is_constant()) return 0;

  std::size_t endpoint_roots = 0;
  // Strip rational endpoint roots so the open-interval count is clean.
  for (const auto* end : {&iv.lo, &iv.hi}) {
    if (!end->has_value()) continue;
    const Rational& a = **end;
    if (q(a).is_zero()) {
      q = q / RPoly::linear(Rational(1), -a);
      const bool closed = (end == &iv.lo) ? iv.lo_closed : iv.hi_closed;
      if (closed) ++endpoint_roots;
    }
  }
  if (iv.lo && iv.hi && *iv.lo == *iv.hi) return endpoint_roots > 0 ? 1 : 0;
  if (q.is_constant()) return endpoint_roots;

  const auto seq = sturm_sequence(q);
  const std::size_t v_lo = variations(seq, iv.lo, -1);
  const std::size_t v_hi = variations(seq, iv.hi, +1);
  return (v_lo - v_hi) + endpoint_roots;
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rational> rational_roots(const RPoly& p) {
  if (p.is_zero()) throw ArgumentError("rational_roots of the zero polynomial");
  std::vector<Rational> roots;
  RPoly q = squarefree_part(p);
  if (q.is_constant()) return roots;
  if (q.coeff(0).is_zero()) {
    roots.emplace_back(0);
    q = q / RPoly::variable();
  }
  if (!q.is_constant()) {
    // Clear denominators to get integer coefficients.
    mpz_class l = 1;
    for (const auto& c : q.coefficients()) l = lcm(l, c.denominator());
    const mpz_class a0 = (q.coeff(0) * Rational(l, 1)).numerator();
    const mpz_class an = (q.leading() * Rational(l, 1)).numerator();
    for (const auto& num : positive_divisors(a0)) {
      for (const auto& den : positive_divisors(an)) {
        for (int s : {1, -1}) {
          const Rational cand(s * num, den);
          if (q(cand).is_zero() && std::find(roots.begin(), roots.end(), cand) == roots.end()) {
            roots.push_back(cand);
          }
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace sidef
