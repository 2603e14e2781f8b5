#include "sidef/numerics/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace sidef::kernels {

namespace {

__attribute__((target("avx2"))) void residual_avx2(const double* psi, const double* diag, double off, double energy,
                                                    std::size_t n, double* out) {
  if (n < 3) return;
  const __m256d e = _mm256_set1_pd(energy);
  const __m256d o = _mm256_set1_pd(off);
  std::size_t i = 1;
  for (; i + 4 < n; i += 4) {
    const __m256d c = _mm256_loadu_pd(psi + i);
    const __m256d l = _mm256_loadu_pd(psi + i - 1);
    const __m256d r = _mm256_loadu_pd(psi + i + 1);
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(diag + i), e);
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_mul_pd(d, c), _mm256_mul_pd(o, _mm256_add_pd(l, r))));
  }
  for (; i + 1 < n; ++i) out[i] = (diag[i] - energy) * psi[i] + off * (psi[i - 1] + psi[i + 1]);
}

__attribute__((target("avx2"))) double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  for (std::size_t j = 0; i < n; ++i, ++j) lanes[j] = lanes[j] + a[i] * b[i];
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

const KernelTable kAvx2{Isa::avx2, residual_avx2, dot_avx2};

}  // namespace

namespace detail {
const KernelTable* avx2_table() { return &kAvx2; }
bool cpu_has_avx2() { return __builtin_cpu_supports("avx2"); }
}  // namespace detail

}  // namespace sidef::kernels

#else

namespace sidef::kernels::detail {
const KernelTable* avx2_table() { return nullptr; }
bool cpu_has_avx2() { return false; }
}  // namespace sidef::kernels::detail

#endif
