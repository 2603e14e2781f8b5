#include "sidef/numerics/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)
#include <arm_neon.h>

namespace sidef::kernels {

namespace {

void residual_neon(const double* psi, const double* diag, double off, double energy, std::size_t n, double* out) {
  if (n < 3) return;
  const float64x2_t e = vdupq_n_f64(energy);
  const float64x2_t o = vdupq_n_f64(off);
  std::size_t i = 1;
  for (; i + 2 < n; i += 2) {
    const float64x2_t c = vld1q_f64(psi + i);
    const float64x2_t lr = vaddq_f64(vld1q_f64(psi + i - 1), vld1q_f64(psi + i + 1));
    const float64x2_t d = vsubq_f64(vld1q_f64(diag + i), e);
    vst1q_f64(out + i, vaddq_f64(vmulq_f64(d, c), vmulq_f64(o, lr)));
  }
  for (; i + 1 < n; ++i) out[i] = (diag[i] - energy) * psi[i] + off * (psi[i - 1] + psi[i + 1]);
}

double dot_neon(const double* a, const double* b, std::size_t n) {
  // Lanes {0,1} and {2,3} of the four partial sums.
  float64x2_t lo = vdupq_n_f64(0.0), hi = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    lo = vaddq_f64(lo, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    hi = vaddq_f64(hi, vmulq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2)));
  }
  double lanes[4] = {vgetq_lane_f64(lo, 0), vgetq_lane_f64(lo, 1), vgetq_lane_f64(hi, 0), vgetq_lane_f64(hi, 1)};
  for (std::size_t j = 0; i < n; ++i, ++j) lanes[j] = lanes[j] + a[i] * b[i];
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

const KernelTable kNeon{Isa::neon, residual_neon, dot_neon};

}  // namespace

namespace detail {
const KernelTable* neon_table() { return &kNeon; }
}  // namespace detail

}  // namespace sidef::kernels

#else

namespace sidef::kernels::detail {
const KernelTable* neon_table() { return nullptr; }
}  // namespace sidef::kernels::detail

#endif
