#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace sidef::kernels {

enum class Isa { scalar, avx2, neon };
std::string to_string(Isa isa);

/// Function table of one instruction-set variant. All variants use the same
/// operation order (four interleaved partial sums, no FMA), so results agree
/// bit for bit.
struct KernelTable {
  Isa isa;
  /// out[i] = (diag[i] - energy) * psi[i] + off * (psi[i-1] + psi[i+1]) for
  /// 1 <= i <= n-2; out[0] and out[n-1] are left untouched.
  void (*tridiag_residual)(const double* psi, const double* diag, double off, double energy, std::size_t n,
                           double* out);
  /// sum_i a[i] * b[i] accumulated into four lanes by i mod 4.
  double (*dot)(const double* a, const double* b, std::size_t n);
};

/// Variants usable on this machine, scalar first.
std::vector<Isa> available();
const KernelTable& table(Isa isa);
/// The widest available variant, or the one named by SIDEF_ISA when set.
const KernelTable& active();

namespace detail {
const KernelTable* avx2_table();  // nullptr when not compiled in
const KernelTable* neon_table();
bool cpu_has_avx2();
}  // namespace detail

}  // namespace sidef::kernels
