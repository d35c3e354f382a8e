#include "kaonbell/simd/kernels.hpp"

namespace kaonbell::simd::scalar {

std::uint64_t count_below(std::span<const std::uint64_t> draws, std::uint64_t threshold) {
  std::uint64_t count = 0;
  for (const std::uint64_t d : draws) {
    count += d < threshold ? 1u : 0u;
  }
  return count;
}

void rotated_real_part(std::span<const double> cos_a, std::span<const double> sin_a, double re,
                       double im, double offset, std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double a = cos_a[i] * re;
    const double b = sin_a[i] * im;
    out[i] = (a - b) - offset;
  }
}

}  // namespace kaonbell::simd::scalar
