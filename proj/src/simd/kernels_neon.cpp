#include <arm_neon.h>

#include "kaonbell/simd/kernels.hpp"

namespace kaonbell::simd::neon {

std::uint64_t count_below(std::span<const std::uint64_t> draws, std::uint64_t threshold) {
  const uint64x2_t limit = vdupq_n_u64(threshold);
  const std::size_t n = draws.size();
  const std::uint64_t* data = draws.data();
  std::size_t i = 0;

  // Masks are all-ones (-1) per hit; subtracting them counts up.
  uint64x2_t acc0 = vdupq_n_u64(0);
  uint64x2_t acc1 = vdupq_n_u64(0);
  for (; i + 4 <= n; i += 4) {
    acc0 = vsubq_u64(acc0, vcltq_u64(vld1q_u64(data + i), limit));
    acc1 = vsubq_u64(acc1, vcltq_u64(vld1q_u64(data + i + 2), limit));
  }
  std::uint64_t count = vaddvq_u64(vaddq_u64(acc0, acc1));
  for (; i < n; ++i) {
    count += data[i] < threshold ? 1u : 0u;
  }
  return count;
}

void rotated_real_part(std::span<const double> cos_a, std::span<const double> sin_a, double re,
                       double im, double offset, std::span<double> out) {
  const float64x2_t vre = vdupq_n_f64(re);
  const float64x2_t vim = vdupq_n_f64(im);
  const float64x2_t voff = vdupq_n_f64(offset);
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t a = vmulq_f64(vld1q_f64(cos_a.data() + i), vre);
    const float64x2_t b = vmulq_f64(vld1q_f64(sin_a.data() + i), vim);
    vst1q_f64(out.data() + i, vsubq_f64(vsubq_f64(a, b), voff));
  }
  for (; i < n; ++i) {
    const double a = cos_a[i] * re;
    const double b = sin_a[i] * im;
    out[i] = (a - b) - offset;
  }
}

}  // namespace kaonbell::simd::neon
