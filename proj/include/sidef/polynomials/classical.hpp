#pragma once

#include <atomic>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sidef/polynomials/ratfunc.hpp"

namespace sidef {

enum class ClassicalFamily { hermite, laguerre, jacobi };

/// Coefficient-bit budget for classical polynomial generation (default 1e6 bits).
std::size_t coefficient_bit_budget();
void set_coefficient_bit_budget(std::size_t bits);

inline std::size_t coefficient_bits(const Rational& r) { return r.bits(); }
template <Field F>
std::size_t coefficient_bits(const RatFunc<F>& r) {
  std::size_t b = 0;
  for (const auto& c : r.num().coefficients()) b += coefficient_bits(c);
  for (const auto& c : r.den().coefficients()) b += coefficient_bits(c);
  return b;
}

namespace detail {

template <Field F>
void check_budget(const Poly<F>& p, long degree) {
  const std::size_t budget = coefficient_bit_budget();
  for (const auto& c : p.coefficients()) {
    if (coefficient_bits(c) > budget) {
      throw ResourceError("classical polynomial of degree " + std::to_string(degree) +
                          " exceeds the coefficient bit budget");
    }
  }
}

template <Field F>
Poly<F> hermite(long n) {
  Poly<F> prev(F(1));
  if (n == 0) return prev;
  Poly<F> cur = Poly<F>::monomial(1, F(2));
  const Poly<F> two_z = cur;
  for (long k = 1; k < n; ++k) {
    Poly<F> next = two_z * cur - prev * F(2 * k);
    prev = std::move(cur);
    cur = std::move(next);
    check_budget(cur, n);
  }
  return cur;
}

template <Field F>
Poly<F> laguerre(long n, const F& a) {
  Poly<F> prev(F(1));
  if (n == 0) return prev;
  Poly<F> cur = Poly<F>::linear(F(-1), F(1) + a);
  for (long k = 1; k < n; ++k) {
    // (k+1) L_{k+1} = (2k+1+a-z) L_k - (k+a) L_{k-1}
    Poly<F> next = (Poly<F>::linear(F(-1), F(2 * k + 1) + a) * cur - prev * (F(k) + a)) * (F(1) / F(k + 1));
    prev = std::move(cur);
    cur = std::move(next);
    check_budget(cur, n);
  }
  return cur;
}

// sum_k binom(n+a, n-k) binom(n+b, k) ((z-1)/2)^k ((z+1)/2)^(n-k); valid for
// every (a, b), used where the three-term recurrence divides by zero.
template <Field F>
Poly<F> jacobi_explicit(long n, const F& a, const F& b) {
  auto binom = [](const F& top, long k) {
    F r(1);
    for (long i = 0; i < k; ++i) r = r * (top - F(i)) / F(i + 1);
    return r;
  };
  const Poly<F> zm = Poly<F>::linear(F(1) / F(2), F(-1) / F(2));
  const Poly<F> zp = Poly<F>::linear(F(1) / F(2), F(1) / F(2));
  Poly<F> out;
  for (long k = 0; k <= n; ++k) {
    const F c = binom(F(n) + a, n - k) * binom(F(n) + b, k);
    if (is_zero(c)) continue;
    out += pow(zm, static_cast<std::size_t>(k)) * pow(zp, static_cast<std::size_t>(n - k)) * c;
  }
  return out;
}

template <Field F>
Poly<F> jacobi(long n, const F& a, const F& b) {
  Poly<F> prev(F(1));
  if (n == 0) return prev;
  const F ab = a + b;
  Poly<F> cur = Poly<F>::linear((ab + F(2)) / F(2), (a + F(1)) - (ab + F(2)) / F(2));
  for (long k = 2; k <= n; ++k) {
    const F s = F(2 * k) + ab;
    const F denom = F(2 * k) * (F(k) + ab) * (s - F(2));
    if (is_zero(denom)) return jacobi_explicit(n, a, b);
    const F c1 = (s - F(1)) * s * (s - F(2));
    const F c0 = (s - F(1)) * (a * a - b * b);
    const F c2 = F(2) * (F(k - 1) + a) * (F(k - 1) + b) * s;
    Poly<F> next = (Poly<F>::linear(c1, c0) * cur - prev * c2) * (F(1) / denom);
    prev = std::move(cur);
    cur = std::move(next);
    check_budget(cur, n);
  }
  return cur;
}

}  // namespace detail

/// Degree-`degree` member of a classical family with conventional
/// normalization: H_n leading 2^n, L_n^a leading (-1)^n/n!,
/// P_n^(a,b)(1) = binom(n+a, n). Laguerre takes {a}, Jacobi takes {a, b}.
template <Field F>
Poly<F> classical_poly(ClassicalFamily family, long degree, std::span<const F> params) {
  if (degree < 0) throw ArgumentError("classical_poly: negative degree");
  switch (family) {
    case ClassicalFamily::hermite:
      if (!params.empty()) throw ArgumentError("hermite takes no parameters");
      return detail::hermite<F>(degree);
    case ClassicalFamily::laguerre:
      if (params.size() != 1) throw ArgumentError("laguerre takes exactly one parameter");
      return detail::laguerre<F>(degree, params[0]);
    case ClassicalFamily::jacobi:
      if (params.size() != 2) throw ArgumentError("jacobi takes exactly two parameters");
      return detail::jacobi<F>(degree, params[0], params[1]);
  }
  throw ArgumentError("unknown classical family");
}

template <Field F>
Poly<F> hermite_poly(long n) {
  return classical_poly<F>(ClassicalFamily::hermite, n, {});
}
template <Field F>
Poly<F> laguerre_poly(long n, const F& a) {
  const F p[] = {a};
  return classical_poly<F>(ClassicalFamily::laguerre, n, p);
}
template <Field F>
Poly<F> jacobi_poly(long n, const F& a, const F& b) {
  const F p[] = {a, b};
  return classical_poly<F>(ClassicalFamily::jacobi, n, p);
}

/// h_m(x) = (-1)^m H_{2m}(ix) as a real polynomial in x. All coefficients are
/// positive, so h_m has no real zeros.
RPoly hermite_imag_even(long m);

/// The same polynomial written in z = x^2.
template <Field F>
Poly<F> hermite_imag_even_in_square(long m) {
  const Poly<F> h = hermite_poly<F>(2 * m);
  std::vector<F> out;
  for (std::size_t k = 0; k <= h.deg(); k += 2) {
    // i^k = (-1)^(k/2)
    const bool flip = ((k / 2) + static_cast<std::size_t>(m)) % 2 == 1;
    out.push_back(flip ? -h.coeff(k) : h.coeff(k));
  }
  return Poly<F>(std::move(out));
}

}  // namespace sidef
