#include "sidef/numerics/kernels.hpp"

#include <cstdlib>

#include "sidef/errors.hpp"

namespace sidef::kernels {

namespace {

void residual_scalar(const double* psi, const double* diag, double off, double energy, std::size_t n, double* out) {
  for (std::size_t i = 1; i + 1 < n; ++i) out[i] = (diag[i] - energy) * psi[i] + off * (psi[i - 1] + psi[i + 1]);
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (std::size_t j = 0; j < 4; ++j) acc[j] = acc[j] + a[i + j] * b[i + j];
  }
  for (std::size_t j = 0; i < n; ++i, ++j) acc[j] = acc[j] + a[i] * b[i];
  return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

const KernelTable kScalar{Isa::scalar, residual_scalar, dot_scalar};

}  // namespace

std::string to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "?";
}

std::vector<Isa> available() {
  std::vector<Isa> out{Isa::scalar};
  if (detail::avx2_table() && detail::cpu_has_avx2()) out.push_back(Isa::avx2);
  if (detail::neon_table()) out.push_back(Isa::neon);
  return out;
}

const KernelTable& table(Isa isa) {
  for (Isa a : available()) {
    if (a != isa) continue;
    if (isa == Isa::avx2) return *detail::avx2_table();
    if (isa == Isa::neon) return *detail::neon_table();
    return kScalar;
  }
  throw ArgumentError("kernel variant " + to_string(isa) + " is not available on this machine");
}

const KernelTable& active() {
  static const KernelTable* chosen = [] {
    if (const char* env = std::getenv("SIDEF_ISA")) {
      for (Isa a : available()) {
        if (to_string(a) == env) return &table(a);
      }
    }
    return &table(available().back());
  }();
  return *chosen;
}

}  // namespace sidef::kernels
