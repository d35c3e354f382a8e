// Compiled with -mavx2 only; callers reach it through the runtime dispatch.

#include <immintrin.h>

#include "kaonbell/simd/kernels.hpp"

namespace kaonbell::simd::avx2 {

std::uint64_t count_below(std::span<const std::uint64_t> draws, std::uint64_t threshold) {
  // AVX2 has only a signed 64-bit compare; flipping the sign bit of both
  // operands turns it into the unsigned one.
  const __m256i bias = _mm256_set1_epi64x(static_cast<long long>(0x8000000000000000ull));
  const __m256i limit = _mm256_xor_si256(_mm256_set1_epi64x(static_cast<long long>(threshold)), bias);

  const std::size_t n = draws.size();
  const std::uint64_t* data = draws.data();
  std::size_t i = 0;

  // Each lane of acc counts down by one (mask = -1) per hit.
  __m256i acc0 = _mm256_setzero_si256();
  __m256i acc1 = _mm256_setzero_si256();
  for (; i + 8 <= n; i += 8) {
    const __m256i v0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
    const __m256i v1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i + 4));
    acc0 = _mm256_add_epi64(acc0, _mm256_cmpgt_epi64(limit, _mm256_xor_si256(v0, bias)));
    acc1 = _mm256_add_epi64(acc1, _mm256_cmpgt_epi64(limit, _mm256_xor_si256(v1, bias)));
  }
  for (; i + 4 <= n; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
    acc0 = _mm256_add_epi64(acc0, _mm256_cmpgt_epi64(limit, _mm256_xor_si256(v, bias)));
  }

  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), _mm256_add_epi64(acc0, acc1));
  std::uint64_t count = 0 - (lanes[0] + lanes[1] + lanes[2] + lanes[3]);

  for (; i < n; ++i) {
    count += data[i] < threshold ? 1u : 0u;
  }
  return count;
}

void rotated_real_part(std::span<const double> cos_a, std::span<const double> sin_a, double re,
                       double im, double offset, std::span<double> out) {
  const __m256d vre = _mm256_set1_pd(re);
  const __m256d vim = _mm256_set1_pd(im);
  const __m256d voff = _mm256_set1_pd(offset);
  const std::size_t n = out.size();
  std::size_t i = 0;
  // No FMA: keeps rounding identical to the scalar reference.
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_mul_pd(_mm256_loadu_pd(cos_a.data() + i), vre);
    const __m256d b = _mm256_mul_pd(_mm256_loadu_pd(sin_a.data() + i), vim);
    _mm256_storeu_pd(out.data() + i, _mm256_sub_pd(_mm256_sub_pd(a, b), voff));
  }
  for (; i < n; ++i) {
    const double a = cos_a[i] * re;
    const double b = sin_a[i] * im;
    out[i] = (a - b) - offset;
  }
}

}  // namespace kaonbell::simd::avx2
