#include "sidef/polynomials/classical.hpp"

namespace sidef {

namespace {
std::atomic<std::size_t> g_bit_budget{1'000'000};
}

std::size_t coefficient_bit_budget() { return g_bit_budget.load(std::memory_order_relaxed); }
void set_coefficient_bit_budget(std::size_t bits) { g_bit_budget.store(bits, std::memory_order_relaxed); }

RPoly hermite_imag_even(long m) {
  if (m < 0) throw ArgumentError("hermite_imag_even: negative m");
  const RPoly in_square = hermite_imag_even_in_square<Rational>(m);
  std::vector<Rational> out(2 * in_square.deg() + 1, Rational(0));
  for (std::size_t k = 0; k <= in_square.deg(); ++k) out[2 * k] = in_square.coeff(k);
  return RPoly(std::move(out));
}

}  // namespace sidef
